#include "dgk/structure.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "dgk/error.hpp"

namespace dgk {
namespace {

// Iterative Tarjan. Components come out in reverse topological order of
// the condensation; we renumber so that ids follow the smallest vertex.
struct TarjanState {
  const Digraph& g;
  std::vector<int> index, lowlink, scc_of;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  int next_index = 0, next_scc = 0;

  explicit TarjanState(const Digraph& graph)
      : g(graph),
        index(graph.n(), -1),
        lowlink(graph.n(), 0),
        scc_of(graph.n(), -1),
        on_stack(graph.n(), false) {}

  void run(int root) {
    struct Frame {
      int v;
      size_t child;
    };
    std::vector<Frame> frames{{root, 0}};
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& succ = g.successors()[f.v];
      if (f.child < succ.size()) {
        int w = succ[f.child++];
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        if (lowlink[f.v] == index[f.v]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            scc_of[w] = next_scc;
          } while (w != f.v);
          ++next_scc;
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
      }
    }
  }
};

std::vector<int> bfs_reachable(const std::vector<std::vector<int>>& succ,
                               const std::vector<int>& sources) {
  std::vector<bool> seen(succ.size(), false);
  std::queue<int> q;
  for (int s : sources) {
    seen[s] = true;
    q.push(s);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : succ[v])
      if (!seen[w]) {
        seen[w] = true;
        q.push(w);
      }
  }
  std::vector<int> out;
  for (size_t v = 0; v < succ.size(); ++v)
    if (seen[v]) out.push_back(static_cast<int>(v));
  return out;
}

}  // namespace

SccResult strong_components(const Digraph& g) {
  TarjanState st(g);
  for (int v = 0; v < g.n(); ++v)
    if (st.index[v] == -1) st.run(v);

  // Renumber components by their smallest vertex for determinism.
  int c = st.next_scc;
  std::vector<int> smallest(c, g.n());
  for (int v = 0; v < g.n(); ++v)
    smallest[st.scc_of[v]] = std::min(smallest[st.scc_of[v]], v);
  std::vector<int> order(c);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return smallest[a] < smallest[b]; });
  std::vector<int> renumber(c);
  for (int i = 0; i < c; ++i) renumber[order[i]] = i;

  SccResult res;
  res.scc_of.resize(g.n());
  res.members.resize(c);
  for (int v = 0; v < g.n(); ++v) {
    res.scc_of[v] = renumber[st.scc_of[v]];
    res.members[res.scc_of[v]].push_back(v);
  }

  std::vector<std::string> ids(c);
  for (int i = 0; i < c; ++i) ids[i] = "scc" + std::to_string(i);
  std::set<std::pair<int, int>> seen;
  std::vector<Digraph::Edge> edges;
  for (const auto& e : g.edges()) {
    int a = res.scc_of[e.src], b = res.scc_of[e.dst];
    if (a != b && seen.insert({a, b}).second)
      edges.push_back({a, b, Rational(1)});
  }
  res.condensation = Digraph(std::move(ids), std::move(edges));
  return res;
}

ReachDecomposition reach_decomposition(const Digraph& g) {
  if (!weakly_connected(g))
    throw WeaklyDisconnected("graph is not weakly connected");
  SccResult scc = strong_components(g);
  const int c = scc.condensation.n();

  std::vector<int> cabal_sccs;
  for (int s = 0; s < c; ++s)
    if (scc.condensation.predecessors()[s].empty()) cabal_sccs.push_back(s);

  ReachDecomposition dec;
  dec.scc_of = scc.scc_of;

  // reach_id[v][i] marks membership of v in reach i.
  std::vector<std::vector<bool>> in_reach;
  for (int s : cabal_sccs) {
    std::vector<int> reach_sccs = bfs_reachable(scc.condensation.successors(), {s});
    Reach r;
    std::vector<bool> member(g.n(), false);
    for (int rs : reach_sccs)
      for (int v : scc.members[rs]) {
        r.vertices.push_back(v);
        member[v] = true;
      }
    std::sort(r.vertices.begin(), r.vertices.end());
    r.cabal = scc.members[s];
    in_reach.push_back(std::move(member));
    dec.reaches.push_back(std::move(r));
  }

  const int k = static_cast<int>(dec.reaches.size());
  for (int i = 0; i < k; ++i) {
    Reach& r = dec.reaches[i];
    for (int v : r.vertices) {
      bool shared = false;
      for (int j = 0; j < k && !shared; ++j)
        shared = (j != i) && in_reach[j][v];
      (shared ? r.common : r.exclusive).push_back(v);
    }
  }

  std::sort(dec.reaches.begin(), dec.reaches.end(),
            [](const Reach& a, const Reach& b) {
              return a.vertices.front() < b.vertices.front();
            });
  dec.condensation = std::move(scc.condensation);
  return dec;
}

int cabal_period(const Digraph& g, const std::vector<int>& cabal) {
  Digraph sub = induced_subgraph(g, cabal);
  const int m = sub.n();
  // Strong connectivity check: everything reachable from vertex 0 both ways.
  if (static_cast<int>(bfs_reachable(sub.successors(), {0}).size()) != m ||
      static_cast<int>(bfs_reachable(sub.predecessors(), {0}).size()) != m)
    throw NotStronglyConnected("cabal does not induce a strong component");

  // Period = gcd over edges u->v of level(u) + 1 - level(v), BFS levels.
  std::vector<int> level(m, -1);
  std::queue<int> q;
  level[0] = 0;
  q.push(0);
  int period = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : sub.successors()[v]) {
      if (level[w] == -1) {
        level[w] = level[v] + 1;
        q.push(w);
      }
      period = std::gcd(period, std::abs(level[v] + 1 - level[w]));
    }
  }
  return period == 0 ? 1 : period;
}

}  // namespace dgk
