#include "nf/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "nf/rng.hpp"

namespace nf {

namespace {

void check_shapes(std::size_t p, std::span<const double> weights) {
  if (weights.size() != p * p)
    throw std::invalid_argument("chain: weights must be P x P row-major");
}

// drive_k = -F^{-1}(x_k) + sum_j w_kj x_j
void drives(std::span<const double> x, std::span<const double> weights,
            const GainFunction& gain, std::vector<double>& out) {
  std::size_t p = x.size();
  out.resize(p);
  for (std::size_t k = 0; k < p; ++k) {
    double s = 0.0;
    const double* row = weights.data() + k * p;
    for (std::size_t j = 0; j < p; ++j) s += row[j] * x[j];
    out[k] = -gain.inverse(x[k]) + s;
  }
}

}  // namespace

Rates jump_rates(std::span<const double> x, std::span<const double> weights,
                 const GainFunction& gain, double n_pop) {
  std::size_t p = x.size();
  check_shapes(p, weights);
  std::vector<double> d;
  drives(x, weights, gain, d);
  Rates r;
  r.up.resize(p);
  r.down.resize(p);
  for (std::size_t k = 0; k < p; ++k) {
    double g = gain.deriv1(gain.inverse(x[k]));
    r.up[k] = n_pop * g * std::max(d[k], 0.0);
    r.down[k] = n_pop * g * std::max(-d[k], 0.0);
  }
  return r;
}

Rates jump_rates_alternative(std::span<const double> x,
                             std::span<const double> weights,
                             const GainFunction& gain, double n_pop) {
  std::size_t p = x.size();
  check_shapes(p, weights);
  Rates r;
  r.up.resize(p);
  r.down.resize(p);
  for (std::size_t k = 0; k < p; ++k) {
    double u = gain.inverse(x[k]);
    double g = gain.deriv1(u);
    double input = 0.0;
    const double* row = weights.data() + k * p;
    for (std::size_t j = 0; j < p; ++j) input += row[j] * x[j];
    r.up[k] = n_pop * g * input;
    r.down[k] = n_pop * g * std::max(u, 0.0);
  }
  return r;
}

void generator_drift(std::span<const double> x, std::span<const double> weights,
                     const GainFunction& gain, std::span<double> out) {
  std::size_t p = x.size();
  check_shapes(p, weights);
  std::vector<double> d;
  drives(x, weights, gain, d);
  for (std::size_t k = 0; k < p; ++k) {
    double g = gain.deriv1(gain.inverse(x[k]));
    out[k] = g * std::max(d[k], 0.0) - g * std::max(-d[k], 0.0);
  }
}

void bracket_rate(std::span<const double> x, std::span<const double> weights,
                  const GainFunction& gain, std::span<double> out) {
  std::size_t p = x.size();
  check_shapes(p, weights);
  std::vector<double> d;
  drives(x, weights, gain, d);
  for (std::size_t k = 0; k < p; ++k) {
    double g = gain.deriv1(gain.inverse(x[k]));
    out[k] = g * std::abs(d[k]);
  }
}

N0Check check_n0(std::span<const double> weights, int p, const GainFunction& gain,
                 std::int64_t n_pop) {
  check_shapes(std::size_t(p), weights);
  if (n_pop < 2) {
    N0Check bad;
    for (int k = 0; k < p; ++k) bad.offenders.push_back(k);
    return bad;
  }
  N0Check res;
  res.ok = true;
  double hi = 1.0 - 1.0 / double(n_pop);
  double lo = 1.0 / double(n_pop);
  double inv_hi = gain.inverse(hi);
  double inv_lo = gain.inverse(lo);
  for (int k = 0; k < p; ++k) {
    double row_sum = 0.0;
    for (int j = 0; j < p; ++j) row_sum += weights[std::size_t(k) * p + j];
    // worst case up-rate at x_k = 1 - 1/N: all inputs at 1 - 1/N
    bool up_ok = -inv_hi + row_sum * hi <= 0.0;
    // worst case down-rate at x_k = 1/N: all inputs at 1/N
    bool down_ok = -inv_lo + row_sum * lo >= 0.0;
    if (!(up_ok && down_ok)) {
      res.ok = false;
      res.offenders.push_back(k);
    }
  }
  return res;
}

PathRecord simulate_chain(std::span<const double> x0,
                          std::span<const double> weights,
                          const GainFunction& gain, std::int64_t n_pop, double t_end,
                          int output_points, std::uint64_t seed,
                          std::uint64_t stream, const SimulateOptions& opts) {
  const std::size_t p = x0.size();
  check_shapes(p, weights);
  if (n_pop < 2) throw std::invalid_argument("simulate_chain: N must be >= 2");
  if (output_points < 1) throw std::invalid_argument("simulate_chain: output_points >= 1");

  N0Check n0 = check_n0(weights, int(p), gain, n_pop);
  if (!n0.ok && opts.boundary == BoundaryPolicy::Error)
    throw std::runtime_error(
        "simulate_chain: boundary rates do not vanish at this N (first offender k=" +
        std::to_string(n0.offenders.front()) + "); increase N or enable clamp mode");

  const double invn = 1.0 / double(n_pop);
  std::vector<std::int64_t> counts(p);
  std::vector<double> x(p), u(p), g(p), input(p), drive(p);
  for (std::size_t k = 0; k < p; ++k) {
    auto c = std::int64_t(std::llround(x0[k] * double(n_pop)));
    if (c < 1 || c > n_pop - 1)
      throw std::invalid_argument("simulate_chain: initial state outside open lattice");
    counts[k] = c;
    x[k] = double(c) * invn;
  }
  for (std::size_t k = 0; k < p; ++k) {
    u[k] = gain.inverse(x[k]);
    g[k] = gain.deriv1(u[k]);
    double s = 0.0;
    const double* row = weights.data() + k * p;
    for (std::size_t j = 0; j < p; ++j) s += row[j] * x[j];
    input[k] = s;
    drive[k] = -u[k] + s;
  }

  std::vector<double> up(p), down(p);
  bool clamped_any = false;
  auto refresh_rates = [&]() {
    for (std::size_t k = 0; k < p; ++k) {
      if (opts.rates == RateChoice::Primary) {
        up[k] = double(n_pop) * g[k] * std::max(drive[k], 0.0);
        down[k] = double(n_pop) * g[k] * std::max(-drive[k], 0.0);
      } else {
        up[k] = double(n_pop) * g[k] * input[k];
        down[k] = double(n_pop) * g[k] * std::max(u[k], 0.0);
      }
      if (opts.boundary == BoundaryPolicy::Clamp) {
        if (counts[k] == n_pop - 1 && up[k] > 0.0) {
          up[k] = 0.0;
          clamped_any = true;
        }
        if (counts[k] == 1 && down[k] > 0.0) {
          down[k] = 0.0;
          clamped_any = true;
        }
      }
    }
  };
  refresh_rates();

  PathRecord rec;
  rec.times.resize(std::size_t(output_points) + 1);
  for (int i = 0; i <= output_points; ++i)
    rec.times[std::size_t(i)] = t_end * double(i) / double(output_points);
  rec.states.reserve(rec.times.size());
  rec.drift_integrals.reserve(rec.times.size());
  rec.martingales.reserve(rec.times.size());
  rec.brackets.reserve(rec.times.size());

  std::vector<double> x_init(x), drift_acc(p, 0.0), bracket_acc(p, 0.0);
  double acc_time = 0.0;

  // advance the exact between-jump integrals to time tau
  auto advance_to = [&](double tau) {
    double dt = tau - acc_time;
    if (dt <= 0.0) return;
    for (std::size_t k = 0; k < p; ++k) {
      drift_acc[k] += (up[k] - down[k]) * invn * dt;
      bracket_acc[k] += (up[k] + down[k]) * invn * invn * dt;
    }
    acc_time = tau;
  };
  auto record_at = [&](double tau) {
    advance_to(tau);
    rec.states.push_back(x);
    rec.drift_integrals.push_back(drift_acc);
    std::vector<double> m(p), b(p);
    for (std::size_t k = 0; k < p; ++k) m[k] = x[k] - x_init[k] - drift_acc[k];
    rec.martingales.push_back(std::move(m));
    rec.brackets.push_back(bracket_acc);
  };

  Rng rng(seed, stream);
  double t = 0.0;
  std::size_t oi = 0;
  for (;;) {
    double total = 0.0;
    for (std::size_t k = 0; k < p; ++k) total += up[k] + down[k];
    double t_next = std::numeric_limits<double>::infinity();
    if (total > 0.0) t_next = t + rng.exponential(total);

    while (oi < rec.times.size() && rec.times[oi] <= t_next) {
      record_at(rec.times[oi]);
      ++oi;
    }
    if (t_next > t_end || oi >= rec.times.size()) break;

    advance_to(t_next);
    // choose the event proportionally to its rate
    double target = rng.u01() * total;
    std::size_t idx = 2 * p - 1;
    if (p <= 64) {
      double acc = 0.0;
      for (std::size_t i = 0; i < 2 * p; ++i) {
        double rate = (i < p) ? up[i] : down[i - p];
        acc += rate;
        if (target <= acc && rate > 0.0) {
          idx = i;
          break;
        }
      }
    } else {
      // prefix sums + binary search (rates all change per jump anyway)
      static thread_local std::vector<double> prefix;
      prefix.resize(2 * p);
      double acc = 0.0;
      for (std::size_t i = 0; i < 2 * p; ++i) {
        acc += (i < p) ? up[i] : down[i - p];
        prefix[i] = acc;
      }
      idx = std::size_t(std::lower_bound(prefix.begin(), prefix.end(), target) -
                        prefix.begin());
      if (idx >= 2 * p) idx = 2 * p - 1;
    }
    std::size_t k = idx < p ? idx : idx - p;
    std::int64_t delta = idx < p ? 1 : -1;

    counts[k] += delta;
    if (counts[k] <= 0 || counts[k] >= n_pop)
      throw std::runtime_error("simulate_chain: path reached the lattice boundary");
    double dx = double(delta) * invn;
    x[k] = double(counts[k]) * invn;
    u[k] = gain.inverse(x[k]);
    g[k] = gain.deriv1(u[k]);
    for (std::size_t j = 0; j < p; ++j) input[j] += weights[j * p + k] * dx;
    for (std::size_t j = 0; j < p; ++j) drive[j] = -u[j] + input[j];
    refresh_rates();

    t = t_next;
    ++rec.jump_count;
    if (opts.record_jump_times) rec.jump_times.push_back(t);
  }
  rec.clamped = clamped_any;
  return rec;
}

}  // namespace nf
