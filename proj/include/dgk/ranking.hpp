#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dgk/dynamics.hpp"
#include "dgk/kernels.hpp"
#include "dgk/matrix_forms.hpp"
#include "dgk/structure.hpp"

namespace dgk {

// I = (1^T / n) * projection; positive exactly on cabal vertices.
template <typename T>
std::vector<T> influence_vector(const KernelBases<T>& bases) {
  const std::size_t n = bases.projection.rows();
  std::vector<T> ones(n, scalar_traits<T>::fraction(1, static_cast<long>(n)));
  return row_times(ones, bases.projection);
}

// E_alpha[G]: one new leader b_v with edge b_v -> v of weight alpha per
// vertex. Built over the *stochasticized* graph (edge weights replaced by
// S entries, dangling rows patched with self loops) so that the extended
// rw Laplacian has the block form [[0,0],[-a/(1+a) I, I - S/(1+a)]].
// Vertices are ordered b_1..b_n, 1..n.
Digraph extend_graph(const Digraph& g, const Rational& alpha);

// One linear solve for y (alpha I + L) = (alpha/n) 1^T.
template <typename T>
std::vector<T> pagerank_resolvent(const MatrixForm<T>& rw_laplacian,
                                  const T& alpha) {
  if constexpr (scalar_traits<T>::exact) {
    if (sgn(alpha) <= 0) throw BadAlpha("alpha must be positive");
  } else {
    if (!(alpha > 0)) throw BadAlpha("alpha must be positive");
  }
  const std::size_t n = rw_laplacian.data.rows();
  Matrix<T> a = rw_laplacian.data;
  for (std::size_t i = 0; i < n; ++i) a(i, i) += alpha;
  std::vector<T> rhs(n, alpha * scalar_traits<T>::fraction(1, static_cast<long>(n)));
  return solve_left(a, rhs);
}

// Iterates p <- beta p S + (1-beta)/n 1^T from the uniform measure until
// the l1 change drops below tol. The all-ones matrix J is never formed.
std::pair<std::vector<double>, int> pagerank_power(const Matrix<double>& s,
                                                   double beta, double tol,
                                                   int max_iter = 10000);

// Pagerank through the extended graph: p(v) = 2 I~(b_v) - 1/n. Agrees
// with the resolvent route exactly in rational mode.
template <typename T>
std::vector<T> pagerank_via_extension(const Digraph& g, const Rational& alpha) {
  const long n = g.n();
  Digraph ext = extend_graph(g, alpha);
  ReachDecomposition dec = reach_decomposition(ext);
  auto s = build_matrix<T>(ext, MatrixKind::stochastic);
  KernelBases<T> bases = kernel_bases(s, dec);
  std::vector<T> infl = influence_vector(bases);
  std::vector<T> pr(n);
  for (long v = 0; v < n; ++v) {
    int bv = ext.index_of("b_" + g.vertex_ids()[v]);
    pr[v] = infl[bv] + infl[bv] - scalar_traits<T>::fraction(1, n);
  }
  return pr;
}

// Diagnostics for the relation between the pageranks with and without
// teleporting. L is the set of in-degree-0 vertices: exactly the rows the
// two dangling policies patch differently.
template <typename T>
struct TeleportReport {
  std::vector<int> leaders;
  std::vector<T> pagerank;           // self-loop policy
  std::vector<T> pagerank_teleport;  // uniform policy
  T pi, pi_t;
  T beta;
  // max |lhs - rhs| over the componentwise Proposition identities and the
  // scalar closed form for pi_t.
  T leader_residual, rest_residual, corollary_residual;
  bool identities_hold;
};

template <typename T>
TeleportReport<T> teleport_relation_check(const Digraph& g, const T& beta) {
  const long n = g.n();
  TeleportReport<T> rep;
  rep.beta = beta;
  T alpha = scalar_traits<T>::one() / beta - scalar_traits<T>::one();
  auto lap = build_matrix<T>(g, MatrixKind::rw_laplacian);
  auto lap_t = build_matrix<T>(g, MatrixKind::rw_laplacian_teleport);
  rep.pagerank = pagerank_resolvent(lap, alpha);
  rep.pagerank_teleport = pagerank_resolvent(lap_t, alpha);

  std::vector<bool> is_leader(n, false);
  for (int v = 0; v < n; ++v)
    if (g.predecessors()[v].empty()) {
      rep.leaders.push_back(v);
      is_leader[v] = true;
    }
  rep.pi = scalar_traits<T>::zero();
  rep.pi_t = scalar_traits<T>::zero();
  for (int v : rep.leaders) {
    rep.pi += rep.pagerank[v];
    rep.pi_t += rep.pagerank_teleport[v];
  }

  T leader_factor = beta * rep.pi_t + (scalar_traits<T>::one() - beta);
  T rest_factor = beta / (scalar_traits<T>::one() - beta) * rep.pi_t +
                  scalar_traits<T>::one();
  rep.leader_residual = scalar_traits<T>::zero();
  rep.rest_residual = scalar_traits<T>::zero();
  for (int v = 0; v < n; ++v) {
    T diff = rep.pagerank_teleport[v] -
             (is_leader[v] ? leader_factor : rest_factor) * rep.pagerank[v];
    if constexpr (scalar_traits<T>::exact) {
      diff = abs(diff);
    } else {
      diff = std::abs(diff);
    }
    T& slot = is_leader[v] ? rep.leader_residual : rep.rest_residual;
    if (diff > slot) slot = diff;
  }
  T closed_form = (scalar_traits<T>::one() - beta) * rep.pi /
                  (scalar_traits<T>::one() - beta * rep.pi);
  rep.corollary_residual = rep.pi_t - closed_form;
  if constexpr (scalar_traits<T>::exact) {
    rep.corollary_residual = abs(rep.corollary_residual);
    rep.identities_hold = sgn(rep.leader_residual) == 0 &&
                          sgn(rep.rest_residual) == 0 &&
                          sgn(rep.corollary_residual) == 0;
  } else {
    rep.corollary_residual = std::abs(rep.corollary_residual);
    rep.identities_hold = rep.leader_residual < 1e-10 &&
                          rep.rest_residual < 1e-10 &&
                          rep.corollary_residual < 1e-10;
  }
  return rep;
}

}  // namespace dgk
