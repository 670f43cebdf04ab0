#pragma once

#include <optional>
#include <string>

#include "dgk/digraph.hpp"
#include "dgk/matrix.hpp"

namespace dgk {

enum class MatrixKind {
  adjacency,            // Q
  in_degree,            // D
  stochastic,           // S  (dangling rows get a self loop)
  stochastic_teleport,  // S_t (dangling rows become uniform)
  combinatorial,        // L = D - Q, zero rows allowed
  rw_laplacian,         // I - S
  rw_laplacian_teleport  // I - S_t
};

enum class DanglingPolicy { none, self_loop, uniform };

template <typename T>
struct MatrixForm {
  MatrixKind kind;
  Matrix<T> data;
  DanglingPolicy dangling = DanglingPolicy::none;
};

inline const char* kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::adjacency: return "adjacency";
    case MatrixKind::in_degree: return "in_degree";
    case MatrixKind::stochastic: return "stochastic";
    case MatrixKind::stochastic_teleport: return "stochastic_teleport";
    case MatrixKind::combinatorial: return "combinatorial";
    case MatrixKind::rw_laplacian: return "rw_laplacian";
    case MatrixKind::rw_laplacian_teleport: return "rw_laplacian_teleport";
  }
  return "?";
}

namespace detail {

// Q[i][j] = w_{ji} for an edge j -> i: rows index edge heads. The random
// walk steps i -> j with probability S[i][j], i.e. against the direction
// of information flow. This is the one non-standard convention in the
// project and everything downstream depends on it.
template <typename T>
Matrix<T> raw_adjacency(const Digraph& g) {
  Matrix<T> q(g.n(), g.n());
  for (const auto& e : g.edges())
    q(e.dst, e.src) = scalar_traits<T>::from_rational(e.weight);
  return q;
}

// Patches all-zero rows in place; never touches nonzero rows.
template <typename T>
void apply_dangling(Matrix<T>& q, DanglingPolicy policy) {
  const std::size_t n = q.rows();
  for (std::size_t i = 0; i < n; ++i) {
    bool zero_row = true;
    for (std::size_t j = 0; j < n && zero_row; ++j)
      zero_row = scalar_traits<T>::is_zero(q(i, j));
    if (!zero_row) continue;
    switch (policy) {
      case DanglingPolicy::self_loop:
        q(i, i) = scalar_traits<T>::one();
        break;
      case DanglingPolicy::uniform:
        for (std::size_t j = 0; j < n; ++j)
          q(i, j) = scalar_traits<T>::fraction(1, static_cast<long>(n));
        break;
      case DanglingPolicy::none:
        throw DanglingVertex("vertex " + std::to_string(i) +
                             " has in-degree 0 and no dangling policy");
    }
  }
}

template <typename T>
Matrix<T> normalize_rows(Matrix<T> q) {
  for (std::size_t i = 0; i < q.rows(); ++i) {
    T s = q.row_sum(i);
    if (scalar_traits<T>::is_zero(s))
      throw DanglingVertex("vertex " + std::to_string(i) +
                           " has zero in-degree row");
    for (std::size_t j = 0; j < q.cols(); ++j) q(i, j) = q(i, j) / s;
  }
  return q;
}

}  // namespace detail

// Builds any of the matrix forms. For the stochastic/Laplacian family the
// dangling policy follows the kind (plain -> self_loop, teleport ->
// uniform); passing the other policy explicitly is rejected.
template <typename T>
MatrixForm<T> build_matrix(const Digraph& g, MatrixKind kind,
                           std::optional<DanglingPolicy> policy = std::nullopt) {
  const std::size_t n = static_cast<std::size_t>(g.n());
  Matrix<T> q = detail::raw_adjacency<T>(g);

  auto stochastic_policy = [&](DanglingPolicy implied) {
    if (policy && *policy != implied)
      throw Error(std::string("dangling policy conflicts with kind ") +
                  kind_name(kind));
    return implied;
  };

  switch (kind) {
    case MatrixKind::adjacency:
      return {kind, std::move(q), DanglingPolicy::none};
    case MatrixKind::in_degree: {
      DanglingPolicy p = policy.value_or(DanglingPolicy::none);
      detail::apply_dangling(q, p);
      Matrix<T> d(n, n);
      for (std::size_t i = 0; i < n; ++i) d(i, i) = q.row_sum(i);
      return {kind, std::move(d), p};
    }
    case MatrixKind::combinatorial: {
      // L = D - Q from the raw adjacency; an in-degree-0 vertex simply
      // yields a zero row of L.
      Matrix<T> l(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        l(i, i) = q.row_sum(i);
        for (std::size_t j = 0; j < n; ++j) l(i, j) -= q(i, j);
      }
      return {kind, std::move(l), DanglingPolicy::none};
    }
    case MatrixKind::stochastic:
    case MatrixKind::rw_laplacian: {
      DanglingPolicy p = stochastic_policy(DanglingPolicy::self_loop);
      detail::apply_dangling(q, p);
      Matrix<T> s = detail::normalize_rows(std::move(q));
      if (kind == MatrixKind::stochastic) return {kind, std::move(s), p};
      return {kind, Matrix<T>::identity(n) - s, p};
    }
    case MatrixKind::stochastic_teleport:
    case MatrixKind::rw_laplacian_teleport: {
      DanglingPolicy p = stochastic_policy(DanglingPolicy::uniform);
      detail::apply_dangling(q, p);
      Matrix<T> s = detail::normalize_rows(std::move(q));
      if (kind == MatrixKind::stochastic_teleport) return {kind, std::move(s), p};
      return {kind, Matrix<T>::identity(n) - s, p};
    }
  }
  throw Error("unknown matrix kind");
}

// Recovers S = I - rw_laplacian.
template <typename T>
Matrix<T> stochastic_from_laplacian(const Matrix<T>& lap) {
  return Matrix<T>::identity(lap.rows()) - lap;
}

}  // namespace dgk
