#include "nf/gain.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace nf {

namespace {

double logistic(double z) {
  // split to avoid overflow in exp for large |z|
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace

double GainFunction::value(double x) const {
  return logistic(gamma_ * (x - kappa_));
}

double GainFunction::deriv1(double x) const {
  double s = value(x);
  return gamma_ * s * (1.0 - s);
}

double GainFunction::deriv2(double x) const {
  double s = value(x);
  return gamma_ * gamma_ * s * (1.0 - s) * (1.0 - 2.0 * s);
}

double GainFunction::deriv3(double x) const {
  double s = value(x);
  return gamma_ * gamma_ * gamma_ * s * (1.0 - s) * (1.0 - 6.0 * s + 6.0 * s * s);
}

double GainFunction::inverse(double y) const {
  if (!(y > 0.0 && y < 1.0))
    throw std::domain_error("gain inverse: argument " + std::to_string(y) +
                            " outside (0,1); activity touched the lattice boundary");
  return kappa_ + std::log(y / (1.0 - y)) / gamma_;
}

GainFunction::GainFunction(double gamma, double kappa)
    : gamma_(gamma), kappa_(kappa) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gain: gamma must be positive");
  if (!(kappa > 0.0 && kappa < 1.0))
    throw std::invalid_argument("gain: kappa must lie in (0,1)");

  // Sign-change scan of F(x) - x at 1e4 points, then bisection to 1e-12.
  constexpr int kScan = 10000;
  auto g = [this](double x) { return value(x) - x; };
  std::vector<double> roots;
  double xp = 0.0;
  double gp = g(xp);  // g(0) = F(0) > 0
  for (int i = 1; i <= kScan; ++i) {
    double x = double(i) / kScan;
    double gx = g(x);
    if (gx == 0.0) {
      roots.push_back(x);
    } else if ((gx > 0.0) != (gp > 0.0) && gp != 0.0) {
      double lo = xp, hi = x;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        double gm = g(mid);
        if (gm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((gm > 0.0) == (gp > 0.0))
          lo = mid;
        else
          hi = mid;
      }
      roots.push_back(0.5 * (lo + hi));
    }
    xp = x;
    gp = gx;
  }

  if (roots.size() != 3)
    throw std::invalid_argument(
        "gain: F(x)-x has " + std::to_string(roots.size()) +
        " roots on (0,1), need exactly 3 (gamma=" + std::to_string(gamma) +
        ", kappa=" + std::to_string(kappa) + ")");

  fp_.a1 = roots[0];
  fp_.a = roots[1];
  fp_.a2 = roots[2];
  fp_.slope_a1 = deriv1(fp_.a1);
  fp_.slope_a = deriv1(fp_.a);
  fp_.slope_a2 = deriv1(fp_.a2);
  if (!(fp_.slope_a1 < 1.0 && fp_.slope_a2 < 1.0 && fp_.slope_a > 1.0))
    throw std::invalid_argument(
        "gain: fixed-point slope conditions violated (F'(a1)=" +
        std::to_string(fp_.slope_a1) + ", F'(a)=" + std::to_string(fp_.slope_a) +
        ", F'(a2)=" + std::to_string(fp_.slope_a2) + ")");
}

}  // namespace nf
