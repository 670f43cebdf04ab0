#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dgk/error.hpp"
#include "dgk/scalar.hpp"

namespace dgk {

enum class GraphFormat { edge_list, dot_subset };

// Weighted directed graph. Edges point in the direction of information
// flow: an edge j -> i means j influences i; the random walk moves the
// other way. Weights are kept exact and converted to double only when a
// float-mode matrix is built.
class Digraph {
 public:
  struct Edge {
    int src;
    int dst;
    Rational weight;
  };

  Digraph() = default;
  // Vertex order is taken as given (no re-sorting); used for derived
  // graphs such as extensions and condensations.
  Digraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges);

  static Digraph parse(std::string_view text,
                       GraphFormat format = GraphFormat::edge_list);

  int n() const { return static_cast<int>(vertex_ids_.size()); }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // -1 when the label is unknown.
  int index_of(const std::string& label) const;

  // Out-neighbours in information direction (src -> dst).
  const std::vector<std::vector<int>>& successors() const { return succ_; }
  const std::vector<std::vector<int>>& predecessors() const { return pred_; }

  bool has_edge(int src, int dst) const;

  std::string to_edge_list() const;

 private:
  void build_adjacency();

  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> succ_, pred_;
};

bool weakly_connected(const Digraph& g);

// Weak components as vertex index sets (used by the CLI --per-component).
std::vector<std::vector<int>> weak_components(const Digraph& g);

// Induced subgraph on the given vertex indices (kept in the given order).
Digraph induced_subgraph(const Digraph& g, const std::vector<int>& vertices);

}  // namespace dgk
