#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nf/gain.hpp"

namespace nf {

enum class RateChoice { Primary, Alternative };
enum class BoundaryPolicy { Error, Clamp };

struct Rates {
  std::vector<double> up, down;
};

// Voltage-based jump rates: population k jumps up at rate
//   N F'(F^{-1}(x_k)) (-F^{-1}(x_k) + sum_j w_kj x_j)_+
// and down with the negative part. The alternative choice splits the same
// net drift as up = N F' (sum w x), down = N F' F^{-1}(x) (clipped at 0),
// so both rates can be active at once.
Rates jump_rates(std::span<const double> x, std::span<const double> weights,
                 const GainFunction& gain, double n_pop);
Rates jump_rates_alternative(std::span<const double> x,
                             std::span<const double> weights,
                             const GainFunction& gain, double n_pop);

// Drift of the infinite-population limit; equals (up - down)/N bit-for-bit.
void generator_drift(std::span<const double> x, std::span<const double> weights,
                     const GainFunction& gain, std::span<double> out);

// Bracket-rate integrand F'(F^{-1}(x_k)) |-F^{-1}(x_k) + sum w x|; the
// predictable quadratic variation of the chain accumulates this over N.
void bracket_rate(std::span<const double> x, std::span<const double> weights,
                  const GainFunction& gain, std::span<double> out);

struct N0Check {
  bool ok = false;
  std::vector<int> offenders;
};

// Whether jumps out of [1/N, 1-1/N] have rate zero for this N, in the worst
// case over the other coordinates.
N0Check check_n0(std::span<const double> weights, int p, const GainFunction& gain,
                 std::int64_t n_pop);

struct PathRecord {
  std::vector<double> times;
  // indexed [output_time][population]
  std::vector<std::vector<double>> states;
  std::vector<std::vector<double>> drift_integrals;
  std::vector<std::vector<double>> martingales;
  std::vector<std::vector<double>> brackets;
  std::uint64_t jump_count = 0;
  bool clamped = false;               // a boundary clamp zeroed a live rate
  std::vector<double> jump_times;     // only when requested
};

struct SimulateOptions {
  RateChoice rates = RateChoice::Primary;
  BoundaryPolicy boundary = BoundaryPolicy::Error;
  bool record_jump_times = false;
};

// Exact event-driven simulation. x0 is snapped to the lattice {1/N,...,
// 1-1/N}; the path is recorded cadlag on the uniform output grid and the
// drift integral / bracket are accumulated exactly between jumps.
PathRecord simulate_chain(std::span<const double> x0,
                          std::span<const double> weights,
                          const GainFunction& gain, std::int64_t n_pop, double t_end,
                          int output_points, std::uint64_t seed,
                          std::uint64_t stream, const SimulateOptions& opts = {});

}  // namespace nf
