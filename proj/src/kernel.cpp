#include "nf/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nf {

KernelFamily kernel_family_from_string(const std::string& s) {
  if (s == "exponential") return KernelFamily::Exponential;
  if (s == "gaussian") return KernelFamily::Gaussian;
  throw std::invalid_argument("unknown kernel family: " + s);
}

SynapticKernel::SynapticKernel(KernelFamily family, double sigma)
    : family_(family), sigma_(sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("kernel: sigma must be positive");
  if (family_ == KernelFamily::Exponential) {
    // tail(x)/w(x) = sigma for all x >= 0
    tail_constant_ = sigma_;
    deriv_l1_ = 1.0 / sigma_;
  } else {
    // Gaussian Mills ratio is maximal at 0: tail(0)/w(0) = sigma sqrt(pi/2)
    tail_constant_ = sigma_ * std::sqrt(std::numbers::pi / 2.0);
    deriv_l1_ = std::sqrt(2.0 / std::numbers::pi) / sigma_;
  }
  double scanned = scan_tail_ratio();
  if (scanned > tail_constant_ * (1.0 + 1e-12))
    throw std::logic_error("kernel: scanned tail ratio exceeds stored constant");
}

double SynapticKernel::value(double x) const {
  if (family_ == KernelFamily::Exponential)
    return std::exp(-std::abs(x) / sigma_) / (2.0 * sigma_);
  double z = x / sigma_;
  return std::exp(-0.5 * z * z) / (sigma_ * std::sqrt(2.0 * std::numbers::pi));
}

double SynapticKernel::cdf(double x) const {
  if (family_ == KernelFamily::Exponential) {
    if (x <= 0.0) return 0.5 * std::exp(x / sigma_);
    return 1.0 - 0.5 * std::exp(-x / sigma_);
  }
  return 0.5 * std::erfc(-x / (sigma_ * std::sqrt(2.0)));
}

double SynapticKernel::tail(double x) const {
  if (family_ == KernelFamily::Exponential) {
    if (x >= 0.0) return 0.5 * std::exp(-x / sigma_);
    return 1.0 - 0.5 * std::exp(x / sigma_);
  }
  return 0.5 * std::erfc(x / (sigma_ * std::sqrt(2.0)));
}

double SynapticKernel::cell_integral(double lo, double hi) const {
  if (lo > hi) throw std::invalid_argument("cell_integral: lo > hi");
  // difference of tails is better conditioned far out than difference of cdfs
  if (lo >= 0.0) return tail(lo) - tail(hi);
  if (hi <= 0.0) return cdf(hi) - cdf(lo);
  return cdf(hi) - cdf(lo);
}

double SynapticKernel::scan_tail_ratio(int points) const {
  double best = 0.0;
  for (int i = 0; i <= points; ++i) {
    double x = 10.0 * sigma_ * double(i) / points;
    double w = value(x);
    if (w <= 0.0) continue;
    best = std::max(best, tail(x) / w);
  }
  return best;
}

}  // namespace nf
