#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace nf {

double mean(std::span<const double> xs);
double variance(std::span<const double> xs);  // unbiased
double stderr_of_mean(std::span<const double> xs);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;  // jackknife (leave-one-point-out) standard error
};

// Least squares of y against x; jackknife over the fit points.
SlopeFit fit_line(std::span<const double> x, std::span<const double> y);
SlopeFit fit_loglog(std::span<const double> x, std::span<const double> y);

double normal_cdf(double x);  // standard normal

// Kolmogorov-Smirnov against N(mu, sigma^2). Returns the asymptotic p-value
// with the Stephens small-sample correction. Samples need not be sorted.
struct KsResult {
  double statistic = 0.0;
  double p_value = 0.0;
};
KsResult ks_test_normal(std::span<const double> xs, double mu, double sigma);

// Survival function of the Kolmogorov distribution.
double kolmogorov_q(double lambda);

// Composite Simpson over uniformly spaced samples (n odd => exact rule;
// even n falls back to trapezoid on the last interval).
double simpson_uniform(std::span<const double> f, double h);

}  // namespace nf
