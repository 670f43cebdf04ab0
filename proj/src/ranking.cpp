#include "dgk/ranking.hpp"

#include <cmath>

namespace dgk {

Digraph extend_graph(const Digraph& g, const Rational& alpha) {
  if (sgn(alpha) <= 0) throw BadAlpha("alpha must be positive");
  const int n = g.n();
  auto s = build_matrix<Rational>(g, MatrixKind::stochastic);

  std::vector<std::string> ids;
  ids.reserve(2 * n);
  for (int v = 0; v < n; ++v) ids.push_back("b_" + g.vertex_ids()[v]);
  for (int v = 0; v < n; ++v) ids.push_back(g.vertex_ids()[v]);

  std::vector<Digraph::Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, n + v, alpha});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sgn(s.data(i, j)) > 0) edges.push_back({n + j, n + i, s.data(i, j)});
  return Digraph(std::move(ids), std::move(edges));
}

std::pair<std::vector<double>, int> pagerank_power(const Matrix<double>& s,
                                                   double beta, double tol,
                                                   int max_iter) {
  if (!(beta > 0 && beta < 1)) throw BadAlpha("beta must lie in (0,1)");
  const std::size_t n = s.rows();
  std::vector<double> p(n, 1.0 / static_cast<double>(n));
  const double teleport = (1.0 - beta) / static_cast<double>(n);
  for (int iter = 1; iter <= max_iter; ++iter) {
    std::vector<double> next = row_times(p, s);
    double change = 0;
    for (std::size_t j = 0; j < n; ++j) {
      next[j] = beta * next[j] + teleport;
      change += std::abs(next[j] - p[j]);
    }
    p = std::move(next);
    if (change < tol) return {p, iter};
  }
  throw MaxIterExceeded("pagerank power iteration did not converge in " +
                        std::to_string(max_iter) + " iterations");
}

}  // namespace dgk
