#pragma once

#include <cstddef>
#include <vector>

namespace nf {

// Symmetric positive definite matrix stored by its lower band:
// entry (i, j) with i-bw <= j <= i lives at data[i*(bw+1) + (j-i+bw)].
struct BandedMatrix {
  std::size_t n = 0;
  std::size_t bw = 0;
  std::vector<double> data;

  BandedMatrix() = default;
  BandedMatrix(std::size_t n_, std::size_t bw_)
      : n(n_), bw(bw_), data(n_ * (bw_ + 1), 0.0) {}

  double& at(std::size_t i, std::size_t j) { return data[i * (bw + 1) + (j - i + bw)]; }
  double at(std::size_t i, std::size_t j) const { return data[i * (bw + 1) + (j - i + bw)]; }
  bool in_band(std::size_t i, std::size_t j) const {
    return j <= i && j + bw >= i;
  }
  double get(std::size_t i, std::size_t j) const;  // full symmetric lookup
};

// Cholesky factor (lower banded) of a banded SPD matrix. Throws on a
// non-positive pivot.
BandedMatrix banded_cholesky(const BandedMatrix& c);

// y = L x for a lower-banded factor
void banded_lower_apply(const BandedMatrix& l, const double* x, double* y);

}  // namespace nf
