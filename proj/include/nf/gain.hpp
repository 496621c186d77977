#pragma once

#include <stdexcept>

namespace nf {

struct FixedPoints {
  double a1 = 0.0;  // stable, F'(a1) < 1
  double a = 0.0;   // unstable, F'(a) > 1
  double a2 = 0.0;  // stable, F'(a2) < 1
  double slope_a1 = 0.0;
  double slope_a = 0.0;
  double slope_a2 = 0.0;
};

// Logistic gain F(x) = 1 / (1 + exp(-gamma (x - kappa))). The constructor
// verifies the bistability structure: F(x) - x must change sign exactly
// three times on (0,1), with slopes < 1 at the outer roots and > 1 at the
// middle one. Parameters failing the scan are rejected.
class GainFunction {
 public:
  GainFunction(double gamma, double kappa);

  double value(double x) const;
  double deriv1(double x) const;
  double deriv2(double x) const;
  double deriv3(double x) const;

  // Inverse of the sigmoid; only defined strictly inside (0,1).
  double inverse(double y) const;

  double gamma() const { return gamma_; }
  double kappa() const { return kappa_; }
  const FixedPoints& fixed_points() const { return fp_; }

 private:
  double gamma_;
  double kappa_;
  FixedPoints fp_;
};

}  // namespace nf
