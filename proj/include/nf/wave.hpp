#pragma once

#include <string>
#include <vector>

#include "nf/gain.hpp"
#include "nf/kernel.hpp"

namespace nf {

// Traveling wave profile u_hat on a uniform grid over [-L, L], together with
// the solved speed. The profile connects a1 (left) to a2 (right), is
// monotone nondecreasing, and is pinned by u_hat(0) = a. Outside the grid
// evaluation clamps to the levels with zero derivative.
//
// The speed is stored with its true sign. For the logistic gain the
// increasing front moves right (c > 0) when the resting state dominates
// (kappa > 1/2) and left otherwise; modules that require strictly positive
// speed must check wave speed > 0 themselves.
struct WaveProfile {
  double L = 0.0;
  double h = 0.0;
  std::vector<double> values;  // nodes x_k = -L + k h, k = 0..2K
  std::vector<double> slopes;  // nodal du/dx (central differences)
  double speed = 0.0;
  double residual_norm = 0.0;  // sup-norm of the discrete wave equation residual
  double a1 = 0.0, a = 0.0, a2 = 0.0;

  int node_count() const { return int(values.size()); }
  double node(int k) const { return -L + k * h; }

  // u^TW_t(x) = u_hat(x - c t) and its space/time derivatives
  double at(double t, double x) const;
  double dx(double t, double x) const;
  double dt(double t, double x) const { return -speed * dx(t, x); }

  double profile_value(double xi) const;  // u_hat(xi)
  double profile_slope(double xi) const;

  double slope_l2_sq() const;   // int u_hat_x^2 (trapezoid)
  double slope2_l2_sq() const;  // int u_hat_xx^2 (trapezoid on 2nd differences)
};

struct WaveSolveOptions {
  double tol = 1e-8;
  int max_iter = 60;
  int max_line_search = 25;
};

// Newton solve of the discrete profile equations
//   -c D u_k + u_k - (w * F(u))_k = 0 on interior nodes, u(+-L) = a2/a1,
//   u(0) = a,
// with the convolution evaluated by exact kernel integrals over cells
// centered at the nodes. Requires the kernel tail mass beyond L to be below
// 1e-10 and 1/h integral so that the grid hits 0 and +-L exactly.
WaveProfile solve_profile(const GainFunction& gain, const SynapticKernel& kernel,
                          int L, double h, const WaveSolveOptions& opts = {});

void write_profile_csv(const WaveProfile& p, const std::string& path);
WaveProfile read_profile_csv(const std::string& path);

}  // namespace nf
