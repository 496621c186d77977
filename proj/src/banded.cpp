#include "nf/banded.hpp"

#include <cmath>
#include <stdexcept>

namespace nf {

double BandedMatrix::get(std::size_t i, std::size_t j) const {
  if (j > i) std::swap(i, j);
  if (!in_band(i, j)) return 0.0;
  return at(i, j);
}

BandedMatrix banded_cholesky(const BandedMatrix& c) {
  BandedMatrix l(c.n, c.bw);
  for (std::size_t i = 0; i < c.n; ++i) {
    std::size_t jlo = i > c.bw ? i - c.bw : 0;
    for (std::size_t j = jlo; j <= i; ++j) {
      double s = c.at(i, j);
      std::size_t klo = j > c.bw ? j - c.bw : 0;
      if (i > c.bw && i - c.bw > klo) klo = i - c.bw;
      for (std::size_t k = klo; k < j; ++k) s -= l.at(i, k) * l.at(j, k);
      if (i == j) {
        if (s <= 0.0) throw std::runtime_error("banded_cholesky: non-positive pivot");
        l.at(i, i) = std::sqrt(s);
      } else {
        l.at(i, j) = s / l.at(j, j);
      }
    }
  }
  return l;
}

void banded_lower_apply(const BandedMatrix& l, const double* x, double* y) {
  for (std::size_t i = 0; i < l.n; ++i) {
    std::size_t jlo = i > l.bw ? i - l.bw : 0;
    double s = 0.0;
    for (std::size_t j = jlo; j <= i; ++j) s += l.at(i, j) * x[j];
    y[i] = s;
  }
}

}  // namespace nf
