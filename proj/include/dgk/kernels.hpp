#pragma once

#include <vector>

#include "dgk/matrix_forms.hpp"
#include "dgk/structure.hpp"

namespace dgk {

// Left/right zero-eigenspace bases of the random-walk Laplacian and the
// asymptotic projection they generate.
//
// gamma (n x k): column i is 1 on H_i, 0 off R_i, and solves an absorbing
// linear system on the common part. gamma_bar (k x n): row i is the
// stationary distribution of the walk restricted to cabal B_i, zero
// elsewhere. projection = gamma * gamma_bar.
template <typename T>
struct KernelBases {
  Matrix<T> gamma;
  Matrix<T> gamma_bar;
  Matrix<T> projection;
};

// Values on the common part C solve (I - S_CC) x = S_{C,H_i} 1, one
// factorization shared across all k right-hand sides. The spectral radius
// of S_CC is < 1, so the system is nonsingular for valid inputs.
template <typename T>
Matrix<T> right_kernel_basis(const MatrixForm<T>& rw_laplacian,
                             const ReachDecomposition& dec) {
  const Matrix<T> s = stochastic_from_laplacian(rw_laplacian.data);
  const std::size_t n = s.rows();
  const int k = dec.k();

  std::vector<int> reach_of_exclusive(n, -1);
  for (int i = 0; i < k; ++i)
    for (int v : dec.reaches[i].exclusive) reach_of_exclusive[v] = i;
  std::vector<std::size_t> common;  // C = V \ union of H_i
  for (std::size_t v = 0; v < n; ++v)
    if (reach_of_exclusive[v] == -1) common.push_back(v);

  Matrix<T> gamma(n, k);
  for (std::size_t v = 0; v < n; ++v)
    if (reach_of_exclusive[v] >= 0)
      gamma(v, reach_of_exclusive[v]) = scalar_traits<T>::one();

  if (!common.empty()) {
    const std::size_t m = common.size();
    Matrix<T> a(m, m);  // I - S_CC
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        a(r, c) = -s(common[r], common[c]);
        if (r == c) a(r, c) += scalar_traits<T>::one();
      }
    Matrix<T> rhs(m, k);  // column i: S_{C,H_i} 1
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t j = 0; j < n; ++j)
        if (reach_of_exclusive[j] >= 0)
          rhs(r, reach_of_exclusive[j]) += s(common[r], j);
    Matrix<T> x = solve(std::move(a), std::move(rhs));
    for (std::size_t r = 0; r < m; ++r)
      for (int i = 0; i < k; ++i) gamma(common[r], i) = x(r, i);
  }
  return gamma;
}

// Per reach: the unique stationary distribution of S_BB found by a direct
// linear solve (one stationarity equation replaced by the normalization;
// power iteration would not converge for periodic cabals).
template <typename T>
Matrix<T> left_kernel_basis(const MatrixForm<T>& stochastic,
                            const ReachDecomposition& dec) {
  const Matrix<T>& s = stochastic.data;
  const std::size_t n = s.rows();
  const int k = dec.k();
  Matrix<T> gamma_bar(k, n);

  for (int i = 0; i < k; ++i) {
    const std::vector<int>& cabal = dec.reaches[i].cabal;
    const std::size_t m = cabal.size();
    // Rows 0..m-2: (S_BB^T - I) x = 0; last row: sum = 1.
    Matrix<T> a(m, m), rhs(m, 1);
    for (std::size_t r = 0; r + 1 < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        a(r, c) = s(cabal[c], cabal[r]);
        if (r == c) a(r, c) -= scalar_traits<T>::one();
      }
    for (std::size_t c = 0; c < m; ++c) a(m - 1, c) = scalar_traits<T>::one();
    rhs(m - 1, 0) = scalar_traits<T>::one();
    Matrix<T> x = solve(std::move(a), std::move(rhs));
    for (std::size_t c = 0; c < m; ++c) gamma_bar(i, cabal[c]) = x(c, 0);
  }
  return gamma_bar;
}

// Basis of the left kernel of the combinatorial Laplacian D - DS: rows
// gamma_bar_i scaled entrywise by 1/D_vv on their support.
template <typename T>
Matrix<T> left_kernel_combinatorial(const Matrix<T>& gamma_bar,
                                    const MatrixForm<T>& in_degree) {
  Matrix<T> out = gamma_bar;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t v = 0; v < out.cols(); ++v) {
      if (scalar_traits<T>::is_zero(out(i, v))) continue;
      const T& d = in_degree.data(v, v);
      if (scalar_traits<T>::is_zero(d))
        throw ZeroDegree("zero in-degree on support vertex " + std::to_string(v));
      out(i, v) = out(i, v) / d;
    }
  return out;
}

template <typename T>
Matrix<T> projection(const Matrix<T>& gamma, const Matrix<T>& gamma_bar) {
  if (gamma.cols() != gamma_bar.rows() || gamma.rows() != gamma_bar.cols())
    throw DimensionMismatch("kernel basis shapes");
  return gamma * gamma_bar;
}

template <typename T>
KernelBases<T> kernel_bases(const MatrixForm<T>& stochastic,
                            const ReachDecomposition& dec) {
  MatrixForm<T> lap{MatrixKind::rw_laplacian,
                    Matrix<T>::identity(stochastic.data.rows()) - stochastic.data,
                    stochastic.dangling};
  KernelBases<T> b;
  b.gamma = right_kernel_basis(lap, dec);
  b.gamma_bar = left_kernel_basis(stochastic, dec);
  b.projection = projection(b.gamma, b.gamma_bar);
  return b;
}

// Float-only eigenvalue diagnostic: multiplicity of 0 should equal k and
// every other eigenvalue should have positive real part.
struct SpectrumReport {
  int expected_multiplicity = 0;
  int zero_multiplicity = 0;
  double min_nonzero_real_part = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

SpectrumReport spectrum_check(const MatrixForm<double>& rw_laplacian, int k,
                              double tol = 1e-8);

}  // namespace dgk
