#pragma once

#include <vector>

#include "dgk/digraph.hpp"

namespace dgk {

struct SccResult {
  std::vector<int> scc_of;               // vertex -> component id
  std::vector<std::vector<int>> members;  // component id -> sorted vertices
  Digraph condensation;                   // one vertex per component
};

SccResult strong_components(const Digraph& g);

struct Reach {
  std::vector<int> vertices;   // R_i, sorted
  std::vector<int> cabal;      // B_i
  std::vector<int> exclusive;  // H_i
  std::vector<int> common;     // C_i = R_i \ H_i
};

struct ReachDecomposition {
  std::vector<Reach> reaches;  // sorted by smallest contained vertex
  std::vector<int> scc_of;
  Digraph condensation;
  int k() const { return static_cast<int>(reaches.size()); }
};

// Requires a weakly connected graph; throws WeaklyDisconnected otherwise.
ReachDecomposition reach_decomposition(const Digraph& g);

// gcd of directed cycle lengths inside the cabal; 1 iff S_BB is primitive.
int cabal_period(const Digraph& g, const std::vector<int>& cabal);

}  // namespace dgk
