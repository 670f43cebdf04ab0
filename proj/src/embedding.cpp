#include "dgk/embedding.hpp"

#include <cmath>

#include "dgk/dynamics.hpp"
#include "dgk/kernels.hpp"
#include "dgk/matrix_forms.hpp"
#include "dgk/structure.hpp"

namespace dgk {
namespace {

// Boolean reachability closure (Floyd-Warshall on the pattern).
std::vector<std::vector<bool>> reachability(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  auto reach = adj;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

}  // namespace

Digraph transitive_closure(const Digraph& g) {
  const int n = g.n();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) adj[e.src][e.dst] = true;
  auto reach = reachability(adj);
  std::vector<Digraph::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (reach[i][j]) edges.push_back({i, j, Rational(1)});
  return Digraph(g.vertex_ids(), std::move(edges));
}

ClosureReport closure_check(const Digraph& g, double eps) {
  const std::size_t n = static_cast<std::size_t>(g.n());
  auto lap = build_matrix<double>(g, MatrixKind::rw_laplacian);
  Matrix<double> st = heat_kernel(lap, 1.0, eps / 10);

  ClosureReport rep;
  rep.max_row_sum_residual = 0;
  rep.min_entry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    rep.max_row_sum_residual =
        std::max(rep.max_row_sum_residual, std::abs(st.row_sum(i) - 1.0));
    for (std::size_t j = 0; j < n; ++j)
      rep.min_entry = std::min(rep.min_entry, st(i, j));
  }
  rep.is_row_stochastic = rep.max_row_sum_residual <= eps;
  rep.is_nonnegative = rep.min_entry >= -eps;

  // Walk digraph: i -> j iff S[i][j] > 0 (walker direction, self-loop
  // patches included). e^{-L} = e^{-1} e^{S} fills exactly the
  // reflexive-transitive closure of that pattern.
  auto s = build_matrix<double>(g, MatrixKind::stochastic);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    adj[i][i] = true;
    for (std::size_t j = 0; j < n; ++j)
      if (s.data(i, j) > 0) adj[i][j] = true;
  }
  auto reach = reachability(adj);
  rep.closure_consistent = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((st(i, j) > eps) != reach[i][j]) rep.closure_consistent = false;
  return rep;
}

bool kernel_equality_check(const Digraph& g, double tol, double* distance) {
  ReachDecomposition dec = reach_decomposition(g);
  auto s = build_matrix<double>(g, MatrixKind::stochastic);
  KernelBases<double> bases = kernel_bases(s, dec);

  auto lap = build_matrix<double>(g, MatrixKind::rw_laplacian);
  MatrixForm<double> s_tilde{MatrixKind::stochastic, heat_kernel(lap, 1.0),
                             s.dangling};
  // The reach structure of G~ equals that of G, so the same decomposition
  // drives the solves with S replaced by e^{-L}.
  KernelBases<double> bases_tilde = kernel_bases(s_tilde, dec);

  double d = inf_norm_diff(bases.projection, bases_tilde.projection);
  if (distance) *distance = d;
  return d < tol;
}

}  // namespace dgk
