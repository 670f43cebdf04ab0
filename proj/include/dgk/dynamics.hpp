#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dgk/kernels.hpp"
#include "dgk/matrix_forms.hpp"

namespace dgk {

// Row probability vector. Validation is explicit so intermediate exact
// arithmetic stays cheap.
template <typename T>
void check_measure(const std::vector<T>& p) {
  T sum = scalar_traits<T>::zero();
  for (const T& x : p) {
    if constexpr (scalar_traits<T>::exact) {
      if (sgn(x) < 0) throw Error("negative measure entry");
    } else {
      if (x < -1e-12) throw Error("negative measure entry");
    }
    sum += x;
  }
  if constexpr (scalar_traits<T>::exact) {
    if (sum != 1) throw Error("measure does not sum to 1");
  } else {
    if (std::abs(sum - 1.0) > 1e-12) throw Error("measure does not sum to 1");
  }
}

// p <- p S  (walker step; probability is conserved).
template <typename T>
std::vector<T> diffusion_step(const std::vector<T>& p, const Matrix<T>& s) {
  return row_times(p, s);
}

// x <- S x  (each vertex averages the opinions it listens to).
template <typename T>
std::vector<T> consensus_step(const std::vector<T>& x, const Matrix<T>& s) {
  return times_column(s, x);
}

// (1/l) sum_{i<l} p0 S^i; converges to p0 * projection even when cabals
// are periodic.
template <typename T>
std::vector<T> cesaro_average(const std::vector<T>& p0, const Matrix<T>& s,
                              long steps) {
  if (steps < 1) throw Error("cesaro_average needs at least one step");
  std::vector<T> p = p0, acc = p0;
  for (long i = 1; i < steps; ++i) {
    p = row_times(p, s);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += p[j];
  }
  T inv = scalar_traits<T>::fraction(1, steps);
  for (T& x : acc) x *= inv;
  return acc;
}

template <typename T>
std::vector<T> diffusion_limit(const std::vector<T>& p0,
                               const KernelBases<T>& bases) {
  return row_times(p0, bases.projection);
}

template <typename T>
std::vector<T> consensus_limit(const std::vector<T>& x0,
                               const KernelBases<T>& bases) {
  return times_column(bases.projection, x0);
}

// Probability of absorption into each cabal for a walker starting at v:
// (gamma_1(v), ..., gamma_k(v)).
template <typename T>
std::vector<T> absorption_probabilities(int v, const KernelBases<T>& bases) {
  if (v < 0 || static_cast<std::size_t>(v) >= bases.gamma.rows())
    throw DimensionMismatch("vertex index out of range");
  std::vector<T> out(bases.gamma.cols());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = bases.gamma(v, i);
  return out;
}

// e^{A} by scaling and squaring with a truncated Taylor series. The tail
// after K terms is bounded by term_K * r / (1 - r) with r = ||A||/(K+1),
// and each squaring at most doubles the accumulated error (all factors
// have infinity norm <= e^{||A||} <= e^{1/2} after scaling).
Matrix<double> matrix_exponential(const Matrix<double>& a, double tol = 1e-13);

// e^{-Lt}, row-stochastic within tol for a valid rw Laplacian.
Matrix<double> heat_kernel(const MatrixForm<double>& rw_laplacian, double t,
                           double tol = 1e-12);

// Deterministic random walk sampler. mt19937_64 output is specified by
// the standard, so trajectories reproduce across platforms from the seed.
std::vector<int> sample_walk(const Matrix<double>& s, int start,
                             std::uint64_t seed, int max_steps);

struct TrajectorySample {
  double time;  // step count in discrete mode
  std::vector<double> state;
};

}  // namespace dgk
