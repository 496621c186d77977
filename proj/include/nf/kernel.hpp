#pragma once

#include <string>

namespace nf {

enum class KernelFamily { Exponential, Gaussian };

KernelFamily kernel_family_from_string(const std::string& s);

// Homogeneous synaptic kernel with unit mass. Both families come with exact
// antiderivatives, so cell weights and tail masses carry no quadrature error.
class SynapticKernel {
 public:
  SynapticKernel(KernelFamily family, double sigma);

  double value(double x) const;                  // w(x)
  double cdf(double x) const;                    // int_{-inf}^x w
  double tail(double x) const;                   // int_x^inf w, any x
  double cell_integral(double lo, double hi) const;  // int_lo^hi w

  // Tail-domination constant: int_x^inf w <= C_w w(x) for all x >= 0.
  double tail_constant() const { return tail_constant_; }
  double deriv_l1_norm() const { return deriv_l1_; }  // ||w_x||_1

  KernelFamily family() const { return family_; }
  double sigma() const { return sigma_; }

  // Largest tail(x)/w(x) seen on a scan grid over [0, 10 sigma]; used to
  // confirm the stored constant dominates.
  double scan_tail_ratio(int points = 2000) const;

 private:
  KernelFamily family_;
  double sigma_;
  double tail_constant_;
  double deriv_l1_;
};

}  // namespace nf
