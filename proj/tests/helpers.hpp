#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dgk/digraph.hpp"
#include "dgk/matrix.hpp"
#include "dgk/scalar.hpp"

namespace dgk::testing {

inline const char* kG7EdgeList =
    "1 2\n1 6\n3 4\n4 5\n5 3\n3 7\n6 7\n7 6\n";

inline Digraph g7() { return Digraph::parse(kG7EdgeList); }

inline Rational frac(long p, long q) { return make_rational(p, q); }

// Seeded weakly connected random digraph: a random-orientation spanning
// tree plus extra edges, weights in {1, 1/2, 2, 1/3, 3}.
inline Digraph random_digraph(std::mt19937_64& rng, int n) {
  std::set<std::pair<int, int>> pairs;
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
  };
  for (int v = 1; v < n; ++v) {
    int u = pick(0, v - 1);
    if (rng() % 2)
      pairs.insert({u, v});
    else
      pairs.insert({v, u});
  }
  int extra = pick(0, 2 * n);
  for (int i = 0; i < extra; ++i) {
    int a = pick(0, n - 1), b = pick(0, n - 1);
    pairs.insert({a, b});
  }
  const Rational weights[] = {Rational(1), frac(1, 2), Rational(2), frac(1, 3),
                              Rational(3)};
  std::vector<std::string> ids;
  for (int v = 0; v < n; ++v) ids.push_back(std::to_string(v + 1));
  std::vector<Digraph::Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({a, b, weights[rng() % 5]});
  return Digraph(std::move(ids), std::move(edges));
}

// Reach decomposition by brute force: reachability closure for every
// vertex, maximal sets, then the definitions verbatim.
struct BruteReach {
  std::vector<std::vector<int>> reaches, cabals, exclusives, commons;
};

inline BruteReach brute_force_reaches(const Digraph& g) {
  const int n = g.n();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) reach[v][v] = true;
  for (const auto& e : g.edges()) reach[e.src][e.dst] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (reach[i][k])
        for (int j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;

  auto subset = [&](int a, int b) {  // R(a) subseteq R(b)
    for (int j = 0; j < n; ++j)
      if (reach[a][j] && !reach[b][j]) return false;
    return true;
  };

  BruteReach out;
  std::vector<std::vector<int>> seen_sets;
  for (int v = 0; v < n; ++v) {
    bool maximal = true;
    for (int u = 0; u < n && maximal; ++u)
      if (subset(v, u) && !subset(u, v)) maximal = false;
    if (!maximal) continue;
    std::vector<int> rset;
    for (int j = 0; j < n; ++j)
      if (reach[v][j]) rset.push_back(j);
    if (std::find(seen_sets.begin(), seen_sets.end(), rset) != seen_sets.end())
      continue;
    seen_sets.push_back(rset);
    out.reaches.push_back(rset);
  }
  std::sort(out.reaches.begin(), out.reaches.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  const int k = static_cast<int>(out.reaches.size());
  for (int i = 0; i < k; ++i) {
    std::vector<int> excl, common, cabal;
    for (int v : out.reaches[i]) {
      bool shared = false;
      for (int j = 0; j < k && !shared; ++j)
        shared = j != i && std::binary_search(out.reaches[j].begin(),
                                              out.reaches[j].end(), v);
      (shared ? common : excl).push_back(v);
    }
    // roots: vertices whose reachable set is the whole reach
    for (int v : out.reaches[i]) {
      std::vector<int> rv;
      for (int j = 0; j < g.n(); ++j)
        if (reach[v][j]) rv.push_back(j);
      if (rv == out.reaches[i]) cabal.push_back(v);
    }
    out.exclusives.push_back(excl);
    out.commons.push_back(common);
    out.cabals.push_back(cabal);
  }
  return out;
}

inline double l1_diff(const std::vector<double>& a,
                      const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

}  // namespace dgk::testing
