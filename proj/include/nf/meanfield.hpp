#pragma once

#include <span>
#include <vector>

#include "nf/gain.hpp"

namespace nf {

struct MeanFieldPath {
  std::vector<double> times;
  std::vector<std::vector<double>> states;  // [output_time][population]
  double dt = 0.0;                          // step actually used
};

// Classical RK4 integration of x' = F'(F^{-1}(x)) (-F^{-1}(x) + W x),
// recorded on a uniform output grid. dt <= 0 selects T/1e4. Aborts if any
// stage leaves (0,1)^P.
MeanFieldPath integrate_meanfield(std::span<const double> x0,
                                  std::span<const double> weights,
                                  const GainFunction& gain, double t_end,
                                  double dt, int output_points);

}  // namespace nf
