#include "nf/meanfield.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nf/chain.hpp"

namespace nf {

MeanFieldPath integrate_meanfield(std::span<const double> x0,
                                  std::span<const double> weights,
                                  const GainFunction& gain, double t_end,
                                  double dt, int output_points) {
  const std::size_t p = x0.size();
  if (weights.size() != p * p)
    throw std::invalid_argument("meanfield: weights must be P x P");
  if (output_points < 1) throw std::invalid_argument("meanfield: output_points >= 1");
  if (dt <= 0.0) dt = t_end / 1e4;

  double interval = t_end / output_points;
  int steps_per_interval = std::max(1, int(std::ceil(interval / dt - 1e-12)));
  double h = interval / steps_per_interval;

  MeanFieldPath path;
  path.dt = h;
  path.times.resize(std::size_t(output_points) + 1);
  for (int i = 0; i <= output_points; ++i)
    path.times[std::size_t(i)] = t_end * double(i) / output_points;

  std::vector<double> x(x0.begin(), x0.end());
  for (double v : x)
    if (!(v > 0.0 && v < 1.0))
      throw std::invalid_argument("meanfield: initial state must be interior");

  std::vector<double> k1(p), k2(p), k3(p), k4(p), tmp(p);
  auto deriv = [&](const std::vector<double>& s, std::vector<double>& out) {
    for (double v : s)
      if (!(v > 0.0 && v < 1.0))
        throw std::runtime_error("meanfield: state left (0,1) at dt=" +
                                 std::to_string(h));
    generator_drift(s, weights, gain, out);
  };

  path.states.push_back(x);
  for (int i = 0; i < output_points; ++i) {
    for (int s = 0; s < steps_per_interval; ++s) {
      deriv(x, k1);
      for (std::size_t j = 0; j < p; ++j) tmp[j] = x[j] + 0.5 * h * k1[j];
      deriv(tmp, k2);
      for (std::size_t j = 0; j < p; ++j) tmp[j] = x[j] + 0.5 * h * k2[j];
      deriv(tmp, k3);
      for (std::size_t j = 0; j < p; ++j) tmp[j] = x[j] + h * k3[j];
      deriv(tmp, k4);
      for (std::size_t j = 0; j < p; ++j)
        x[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
    path.states.push_back(x);
  }
  return path;
}

}  // namespace nf
