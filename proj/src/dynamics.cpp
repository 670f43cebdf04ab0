#include "dgk/dynamics.hpp"

#include <cmath>

namespace dgk {
namespace {

double inf_norm(const Matrix<double>& a) {
  double m = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
    m = std::max(m, s);
  }
  return m;
}

}  // namespace

Matrix<double> matrix_exponential(const Matrix<double>& a, double tol) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("matrix_exponential needs square");
  const double norm = inf_norm(a);

  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  // Error doubles per squaring; leave slack for roundoff.
  double base_tol = tol / std::ldexp(4.0, squarings);
  if (base_tol < 1e-16) base_tol = 1e-16;

  Matrix<double> scaled = a.scaled(scale);
  const double snorm = norm * scale;

  Matrix<double> sum = Matrix<double>::identity(n);
  Matrix<double> term = Matrix<double>::identity(n);
  double term_bound = 1.0;
  bool converged = false;
  for (int k = 1; k <= 200; ++k) {
    term = term * scaled;
    term = term.scaled(1.0 / k);
    sum = sum + term;
    term_bound *= snorm / k;
    double ratio = snorm / (k + 1);
    if (ratio < 1.0 && term_bound * ratio / (1.0 - ratio) < base_tol) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw ToleranceUnreachable("matrix exponential series did not converge");

  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

Matrix<double> heat_kernel(const MatrixForm<double>& rw_laplacian, double t,
                           double tol) {
  if (t < 0) throw Error("heat kernel needs t >= 0");
  if (rw_laplacian.kind != MatrixKind::rw_laplacian &&
      rw_laplacian.kind != MatrixKind::rw_laplacian_teleport)
    throw Error("heat kernel needs a random-walk Laplacian");
  return matrix_exponential(rw_laplacian.data.scaled(-t), tol);
}

std::vector<int> sample_walk(const Matrix<double>& s, int start,
                             std::uint64_t seed, int max_steps) {
  if (start < 0 || static_cast<std::size_t>(start) >= s.rows())
    throw DimensionMismatch("start vertex out of range");
  std::mt19937_64 rng(seed);
  // Uniform in [0,1) built from raw engine output; distributions from
  // <random> are not portable across standard libraries.
  auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<int> path{start};
  int v = start;
  for (int step = 0; step < max_steps; ++step) {
    double u = uniform();
    double acc = 0;
    int next = static_cast<int>(s.cols()) - 1;
    for (std::size_t j = 0; j < s.cols(); ++j) {
      acc += s(v, j);
      if (u < acc) {
        next = static_cast<int>(j);
        break;
      }
    }
    v = next;
    path.push_back(v);
  }
  return path;
}

}  // namespace dgk
