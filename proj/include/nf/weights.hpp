#pragma once

#include <span>
#include <vector>

#include "nf/kernel.hpp"

namespace nf {

// Discretized kernel weights for populations at nodes k/m,
// k = -mL, ..., mL-1, with cell l covering [l/m, (l+1)/m):
//   w_{kl}   = int_{l/m}^{(l+1)/m} w(k/m - y) dy
//   w^+_k    = int_{L}^{inf}  w(k/m - y) dy
//   w^-_k    = int_{-inf}^{-L} w(k/m - y) dy
// Every row partitions the kernel's unit mass. The interior block is
// Toeplitz, so only one row of cell integrals is stored.
class WeightMatrix {
 public:
  WeightMatrix(const SynapticKernel& kernel, int m, int L, int dim_cap = 65536);

  int m() const { return m_; }
  int L() const { return L_; }
  int size() const { return n_; }                    // 2 m L populations
  double node(int row) const { return double(row - m_ * L_) / m_; }

  double at(int row, int col) const { return conv_row_[n_ - 1 - row + col]; }
  double boundary_plus(int row) const { return bplus_[row]; }
  double boundary_minus(int row) const { return bminus_[row]; }

  double row_sum(int row) const;

  // out[k] = sum_l w_{kl} f[l]
  void apply(std::span<const double> f, std::span<double> out) const;

 private:
  int m_, L_, n_;
  std::vector<double> conv_row_;  // length 2n-1; at(k,l) = conv_row_[n-1-k+l]
  std::vector<double> bplus_, bminus_;
};

// P x P coupling matrices for non-spatial chains.
std::vector<double> uniform_coupling(int p);  // all entries 1/P
std::vector<double> self_coupling(int p);     // identity

}  // namespace nf
