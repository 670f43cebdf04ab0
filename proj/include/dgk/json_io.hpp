#pragma once

#include <json.hpp>

#include "dgk/kernels.hpp"
#include "dgk/matrix.hpp"
#include "dgk/ranking.hpp"
#include "dgk/structure.hpp"

namespace dgk {

// Exact rationals serialize as "p/q" strings; doubles as JSON numbers.
inline nlohmann::json to_json(const Rational& x) { return to_string(x); }
inline nlohmann::json to_json(double x) { return x; }

template <typename T>
nlohmann::json to_json(const std::vector<T>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const T& x : v) a.push_back(to_json(x));
  return a;
}

template <typename T>
nlohmann::json to_json(const Matrix<T>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

inline nlohmann::json labels_json(const Digraph& g, const std::vector<int>& vs) {
  nlohmann::json a = nlohmann::json::array();
  for (int v : vs) a.push_back(g.vertex_ids()[v]);
  return a;
}

inline nlohmann::json to_json(const ReachDecomposition& dec, const Digraph& g) {
  nlohmann::json reaches = nlohmann::json::array();
  for (const Reach& r : dec.reaches)
    reaches.push_back({{"vertices", labels_json(g, r.vertices)},
                       {"cabal", labels_json(g, r.cabal)},
                       {"exclusive", labels_json(g, r.exclusive)},
                       {"common", labels_json(g, r.common)}});
  return {{"reaches", reaches}, {"k", dec.k()}};
}

template <typename T>
nlohmann::json to_json(const KernelBases<T>& b) {
  return {{"gamma", to_json(b.gamma)},
          {"gamma_bar", to_json(b.gamma_bar)},
          {"projection", to_json(b.projection)}};
}

template <typename T>
nlohmann::json to_json(const TeleportReport<T>& r, const Digraph& g) {
  return {{"leaders", labels_json(g, r.leaders)},
          {"pagerank", to_json(r.pagerank)},
          {"pagerank_teleport", to_json(r.pagerank_teleport)},
          {"pi", to_json(r.pi)},
          {"pi_t", to_json(r.pi_t)},
          {"beta", to_json(r.beta)},
          {"leader_residual", to_json(r.leader_residual)},
          {"rest_residual", to_json(r.rest_residual)},
          {"corollary_residual", to_json(r.corollary_residual)},
          {"identities_hold", r.identities_hold}};
}

}  // namespace dgk
