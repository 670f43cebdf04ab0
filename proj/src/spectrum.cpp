#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "dgk/kernels.hpp"

namespace dgk {

SpectrumReport spectrum_check(const MatrixForm<double>& rw_laplacian, int k,
                              double tol) {
  const auto& lap = rw_laplacian.data;
  const int n = static_cast<int>(lap.rows());
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = lap(i, j);

  SpectrumReport rep;
  rep.expected_multiplicity = k;

  Eigen::EigenSolver<Eigen::MatrixXd> es(a, /*computeEigenvectors=*/false);
  const auto& ev = es.eigenvalues();
  rep.min_nonzero_real_part = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    if (std::abs(ev(i)) < tol) {
      ++rep.zero_multiplicity;
    } else {
      rep.min_nonzero_real_part =
          std::min(rep.min_nonzero_real_part, ev(i).real());
      if (ev(i).real() <= -tol)
        rep.violations.push_back("eigenvalue with non-positive real part: " +
                                 std::to_string(ev(i).real()));
    }
  }

  if (rep.zero_multiplicity != k)
    rep.violations.push_back(
        "zero eigenvalue multiplicity " + std::to_string(rep.zero_multiplicity) +
        ", expected " + std::to_string(k));

  // Geometric multiplicity via rank; should also equal k (trivial Jordan
  // blocks at zero), cross-checked with rank of lap^2.
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  lu.setThreshold(tol);
  int nullity = n - static_cast<int>(lu.rank());
  Eigen::FullPivLU<Eigen::MatrixXd> lu2(a * a);
  lu2.setThreshold(tol);
  int nullity2 = n - static_cast<int>(lu2.rank());
  if (nullity != k)
    rep.violations.push_back("kernel dimension " + std::to_string(nullity) +
                             ", expected " + std::to_string(k));
  if (nullity2 != nullity)
    rep.violations.push_back("nontrivial Jordan block at eigenvalue 0");
  return rep;
}

}  // namespace dgk
