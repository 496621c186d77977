#include "nf/weights.hpp"

#include <stdexcept>
#include <string>

namespace nf {

WeightMatrix::WeightMatrix(const SynapticKernel& kernel, int m, int L, int dim_cap)
    : m_(m), L_(L), n_(2 * m * L) {
  if (m < 1 || L < 1) throw std::invalid_argument("weights: need m >= 1, L >= 1");
  if (n_ > dim_cap)
    throw std::invalid_argument("weights: dimension 2mL = " + std::to_string(n_) +
                                " exceeds cap " + std::to_string(dim_cap));
  conv_row_.resize(2 * n_ - 1);
  for (int i = 0; i < 2 * n_ - 1; ++i) {
    int d = n_ - 1 - i;  // row index difference k - l
    conv_row_[i] = kernel.cell_integral(double(d - 1) / m_, double(d) / m_);
  }
  bplus_.resize(n_);
  bminus_.resize(n_);
  for (int r = 0; r < n_; ++r) {
    double x = node(r);
    bplus_[r] = kernel.cdf(x - L_);
    bminus_[r] = kernel.tail(x + L_);
  }
}

double WeightMatrix::row_sum(int row) const {
  double s = bplus_[row] + bminus_[row];
  for (int l = 0; l < n_; ++l) s += at(row, l);
  return s;
}

void WeightMatrix::apply(std::span<const double> f, std::span<double> out) const {
  if (int(f.size()) != n_ || int(out.size()) != n_)
    throw std::invalid_argument("weights apply: size mismatch");
  const double* base = conv_row_.data();
  for (int k = 0; k < n_; ++k) {
    const double* r = base + (n_ - 1 - k);
    double s = 0.0;
    for (int l = 0; l < n_; ++l) s += r[l] * f[l];
    out[k] = s;
  }
}

std::vector<double> uniform_coupling(int p) {
  return std::vector<double>(std::size_t(p) * p, 1.0 / p);
}

std::vector<double> self_coupling(int p) {
  std::vector<double> w(std::size_t(p) * p, 0.0);
  for (int i = 0; i < p; ++i) w[std::size_t(i) * p + i] = 1.0;
  return w;
}

}  // namespace nf
