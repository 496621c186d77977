#include "nf/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nf {

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of empty sample");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / double(xs.size());
}

double variance(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("variance needs >= 2 samples");
  double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return s / double(xs.size() - 1);
}

double stderr_of_mean(std::span<const double> xs) {
  return std::sqrt(variance(xs) / double(xs.size()));
}

static SlopeFit ls_fit(std::span<const double> x, std::span<const double> y) {
  std::size_t n = x.size();
  double mx = mean(x), my = mean(y);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  SlopeFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  return f;
}

SlopeFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 3)
    throw std::invalid_argument("fit_line needs >= 3 matching points");
  SlopeFit full = ls_fit(x, y);
  std::size_t n = x.size();
  std::vector<double> xs(n - 1), ys(n - 1), slopes(n);
  for (std::size_t leave = 0; leave < n; ++leave) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == leave) continue;
      xs[j] = x[i];
      ys[j] = y[i];
      ++j;
    }
    slopes[leave] = ls_fit(xs, ys).slope;
  }
  double sbar = mean(slopes);
  double acc = 0.0;
  for (double s : slopes) acc += (s - sbar) * (s - sbar);
  full.slope_se = std::sqrt(double(n - 1) / double(n) * acc);
  return full;
}

SlopeFit fit_loglog(std::span<const double> x, std::span<const double> y) {
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0)
      throw std::invalid_argument("fit_loglog requires positive data");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  return fit_line(lx, ly);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double kolmogorov_q(double lambda) {
  if (lambda <= 0.0) return 1.0;
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += (j % 2 == 1 ? term : -term);
    if (term < 1e-16) break;
  }
  return std::min(1.0, std::max(0.0, 2.0 * sum));
}

KsResult ks_test_normal(std::span<const double> xs, double mu, double sigma) {
  if (xs.size() < 5) throw std::invalid_argument("ks_test_normal: sample too small");
  std::vector<double> s(xs.begin(), xs.end());
  std::sort(s.begin(), s.end());
  double n = double(s.size());
  double d = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    double f = normal_cdf((s[i] - mu) / sigma);
    d = std::max(d, std::abs(f - double(i + 1) / n));
    d = std::max(d, std::abs(f - double(i) / n));
  }
  KsResult r;
  r.statistic = d;
  double lambda = d * (std::sqrt(n) + 0.12 + 0.11 / std::sqrt(n));
  r.p_value = kolmogorov_q(lambda);
  return r;
}

double simpson_uniform(std::span<const double> f, double h) {
  std::size_t n = f.size();
  if (n < 2) return 0.0;
  double total = 0.0;
  std::size_t last = n - 1;
  std::size_t pairs = last / 2;
  for (std::size_t p = 0; p < pairs; ++p) {
    std::size_t i = 2 * p;
    total += h / 3.0 * (f[i] + 4.0 * f[i + 1] + f[i + 2]);
  }
  if (last % 2 == 1) total += 0.5 * h * (f[last - 1] + f[last]);
  return total;
}

}  // namespace nf
