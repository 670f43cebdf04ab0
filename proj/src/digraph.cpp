#include "dgk/digraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace dgk {
namespace {

bool is_integer_label(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

struct RawEdge {
  std::string src, dst;
  Rational weight;
  int line;
};

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<RawEdge> parse_edge_list(std::string_view text) {
  std::vector<RawEdge> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(strip_comment(line));
    std::string src, dst, w, extra;
    if (!(ls >> src)) continue;  // blank line
    if (!(ls >> dst))
      throw ParseError("line " + std::to_string(lineno) + ": missing target");
    Rational weight(1);
    if (ls >> w) {
      try {
        weight = parse_rational(w);
      } catch (const ParseError&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad weight '" +
                         w + "'");
      }
      if (ls >> extra)
        throw ParseError("line " + std::to_string(lineno) +
                         ": trailing token '" + extra + "'");
    }
    out.push_back({src, dst, weight, lineno});
  }
  return out;
}

// Minimal DOT subset: optional "digraph name {", lines of the form
// a -> b [weight=W]; and a closing brace. Quoted labels supported.
std::vector<RawEdge> parse_dot(std::string_view text) {
  std::vector<RawEdge> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  auto unquote = [](std::string s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
      return s.substr(1, s.size() - 2);
    return s;
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(strip_comment(line));
    if (t.empty() || t == "}" || t.rfind("digraph", 0) == 0 || t == "{")
      continue;
    auto arrow = t.find("->");
    if (arrow == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected '->'");
    std::string src = trim(t.substr(0, arrow));
    std::string rest = trim(t.substr(arrow + 2));
    Rational weight(1);
    auto br = rest.find('[');
    if (br != std::string::npos) {
      auto close = rest.find(']', br);
      if (close == std::string::npos)
        throw ParseError("line " + std::to_string(lineno) + ": unclosed '['");
      std::string attrs = rest.substr(br + 1, close - br - 1);
      rest = trim(rest.substr(0, br));
      auto eq = attrs.find("weight=");
      if (eq != std::string::npos) {
        std::string w = trim(attrs.substr(eq + 7));
        auto end = w.find_first_of(",; \t");
        if (end != std::string::npos) w = w.substr(0, end);
        weight = parse_rational(unquote(w));
      }
    }
    if (!rest.empty() && rest.back() == ';') rest = trim(rest.substr(0, rest.size() - 1));
    std::string dst = rest;
    if (src.empty() || dst.empty())
      throw ParseError("line " + std::to_string(lineno) + ": bad edge");
    out.push_back({unquote(src), unquote(dst), weight, lineno});
  }
  return out;
}

}  // namespace

Digraph::Digraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges)
    : vertex_ids_(std::move(vertex_ids)), edges_(std::move(edges)) {
  std::set<std::string> seen(vertex_ids_.begin(), vertex_ids_.end());
  if (seen.size() != vertex_ids_.size())
    throw ParseError("duplicate vertex ids");
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : edges_) {
    if (e.src < 0 || e.src >= n() || e.dst < 0 || e.dst >= n())
      throw ParseError("edge index out of range");
    if (sgn(e.weight) <= 0) throw BadWeight("non-positive edge weight");
    if (!pairs.insert({e.src, e.dst}).second)
      throw DuplicateEdge("duplicate edge " + vertex_ids_[e.src] + " -> " +
                          vertex_ids_[e.dst]);
  }
  build_adjacency();
}

Digraph Digraph::parse(std::string_view text, GraphFormat format) {
  std::vector<RawEdge> raw = format == GraphFormat::edge_list
                                 ? parse_edge_list(text)
                                 : parse_dot(text);
  std::set<std::string> labels;
  for (const auto& e : raw) {
    labels.insert(e.src);
    labels.insert(e.dst);
  }
  std::vector<std::string> ids(labels.begin(), labels.end());
  bool all_numeric =
      !ids.empty() && std::all_of(ids.begin(), ids.end(), is_integer_label);
  if (all_numeric) {
    std::sort(ids.begin(), ids.end(), [](const std::string& a, const std::string& b) {
      long la = std::stol(a), lb = std::stol(b);
      return la != lb ? la < lb : a < b;
    });
  }  // else: already lexicographic from the std::set
  std::map<std::string, int> index;
  for (size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);

  std::vector<Edge> edges;
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : raw) {
    if (sgn(e.weight) <= 0)
      throw BadWeight("line " + std::to_string(e.line) +
                      ": weight must be positive");
    int s = index[e.src], d = index[e.dst];
    if (!pairs.insert({s, d}).second)
      throw DuplicateEdge("line " + std::to_string(e.line) +
                          ": duplicate edge " + e.src + " -> " + e.dst);
    edges.push_back({s, d, e.weight});
  }
  return Digraph(std::move(ids), std::move(edges));
}

int Digraph::index_of(const std::string& label) const {
  for (int i = 0; i < n(); ++i)
    if (vertex_ids_[i] == label) return i;
  return -1;
}

bool Digraph::has_edge(int src, int dst) const {
  for (int v : succ_[src])
    if (v == dst) return true;
  return false;
}

std::string Digraph::to_edge_list() const {
  std::ostringstream out;
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  for (const auto& e : sorted) {
    out << vertex_ids_[e.src] << ' ' << vertex_ids_[e.dst];
    if (e.weight != 1) out << ' ' << to_string(e.weight);
    out << '\n';
  }
  return out.str();
}

void Digraph::build_adjacency() {
  succ_.assign(n(), {});
  pred_.assign(n(), {});
  for (const auto& e : edges_) {
    succ_[e.src].push_back(e.dst);
    pred_[e.dst].push_back(e.src);
  }
  for (auto& v : succ_) std::sort(v.begin(), v.end());
  for (auto& v : pred_) std::sort(v.begin(), v.end());
}

std::vector<std::vector<int>> weak_components(const Digraph& g) {
  std::vector<int> comp(g.n(), -1);
  int c = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& nbrs : {g.successors()[v], g.predecessors()[v]})
        for (int u : nbrs)
          if (comp[u] == -1) {
            comp[u] = c;
            stack.push_back(u);
          }
    }
    ++c;
  }
  std::vector<std::vector<int>> out(c);
  for (int v = 0; v < g.n(); ++v) out[comp[v]].push_back(v);
  return out;
}

bool weakly_connected(const Digraph& g) {
  return g.n() == 0 || weak_components(g).size() == 1;
}

Digraph induced_subgraph(const Digraph& g, const std::vector<int>& vertices) {
  std::vector<int> to_local(g.n(), -1);
  std::vector<std::string> ids;
  for (size_t i = 0; i < vertices.size(); ++i) {
    to_local[vertices[i]] = static_cast<int>(i);
    ids.push_back(g.vertex_ids()[vertices[i]]);
  }
  std::vector<Digraph::Edge> edges;
  for (const auto& e : g.edges())
    if (to_local[e.src] >= 0 && to_local[e.dst] >= 0)
      edges.push_back({to_local[e.src], to_local[e.dst], e.weight});
  return Digraph(std::move(ids), std::move(edges));
}

}  // namespace dgk
