#include <doctest.h>

#include <numeric>

#include "dgk/structure.hpp"
#include "helpers.hpp"

using namespace dgk;

namespace {

std::vector<int> labels_to_indices(const Digraph& g,
                                   std::initializer_list<const char*> labels) {
  std::vector<int> out;
  for (const char* l : labels) out.push_back(g.index_of(l));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("strong_components: g7") {
  Digraph g = testing::g7();
  SccResult scc = strong_components(g);
  CHECK(scc.condensation.n() == 4);
  CHECK(scc.members.size() == 4);
  // {1},{2},{3,4,5},{6,7}
  CHECK(scc.scc_of[2] == scc.scc_of[3]);
  CHECK(scc.scc_of[3] == scc.scc_of[4]);
  CHECK(scc.scc_of[5] == scc.scc_of[6]);
  CHECK(scc.scc_of[0] != scc.scc_of[1]);
  CHECK(scc.scc_of[0] != scc.scc_of[5]);
  // condensation is acyclic: every SCC of it is a singleton
  SccResult cc = strong_components(scc.condensation);
  CHECK(cc.condensation.n() == scc.condensation.n());
}

TEST_CASE("strong_components: 2-cycle and path") {
  SccResult two = strong_components(Digraph::parse("a b\nb a\n"));
  CHECK(two.members.size() == 1);
  SccResult path = strong_components(Digraph::parse("a b\n"));
  CHECK(path.members.size() == 2);
  CHECK(path.condensation.edges().size() == 1);
}

TEST_CASE("reach_decomposition: g7 matches the figure") {
  Digraph g = testing::g7();
  ReachDecomposition dec = reach_decomposition(g);
  REQUIRE(dec.k() == 2);
  CHECK(dec.reaches[0].vertices == labels_to_indices(g, {"1", "2", "6", "7"}));
  CHECK(dec.reaches[1].vertices ==
        labels_to_indices(g, {"3", "4", "5", "6", "7"}));
  CHECK(dec.reaches[0].cabal == labels_to_indices(g, {"1"}));
  CHECK(dec.reaches[0].exclusive == labels_to_indices(g, {"1", "2"}));
  CHECK(dec.reaches[0].common == labels_to_indices(g, {"6", "7"}));
  CHECK(dec.reaches[1].cabal == labels_to_indices(g, {"3", "4", "5"}));
  CHECK(dec.reaches[1].exclusive == labels_to_indices(g, {"3", "4", "5"}));
  CHECK(dec.reaches[1].common == labels_to_indices(g, {"6", "7"}));
}

TEST_CASE("reach_decomposition: path and two-root star") {
  Digraph path = Digraph::parse("a b\nb c\n");
  ReachDecomposition d1 = reach_decomposition(path);
  REQUIRE(d1.k() == 1);
  CHECK(d1.reaches[0].cabal == std::vector<int>{0});
  CHECK(d1.reaches[0].exclusive == std::vector<int>{0, 1, 2});
  CHECK(d1.reaches[0].common.empty());

  Digraph star = Digraph::parse("a c\nb c\n");
  ReachDecomposition d2 = reach_decomposition(star);
  REQUIRE(d2.k() == 2);
  CHECK(d2.reaches[0].exclusive == labels_to_indices(star, {"a"}));
  CHECK(d2.reaches[1].exclusive == labels_to_indices(star, {"b"}));
  CHECK(d2.reaches[0].common == labels_to_indices(star, {"c"}));
  CHECK(d2.reaches[1].common == labels_to_indices(star, {"c"}));
}

TEST_CASE("reach_decomposition: weakly disconnected input is an error") {
  CHECK_THROWS_AS(reach_decomposition(Digraph::parse("a b\nc d\n")),
                  WeaklyDisconnected);
}

TEST_CASE("cabal_period") {
  Digraph g = testing::g7();
  ReachDecomposition dec = reach_decomposition(g);
  CHECK(cabal_period(g, dec.reaches[1].cabal) == 3);  // 3-cycle
  CHECK(cabal_period(Digraph::parse("a a\n"), {0}) == 1);
  CHECK(cabal_period(Digraph::parse("a b\nb a\n"), {0, 1}) == 2);
  CHECK_THROWS_AS(cabal_period(Digraph::parse("a b\n"), {0, 1}),
                  NotStronglyConnected);
}

TEST_CASE("reach_decomposition agrees with the brute-force oracle") {
  std::mt19937_64 rng(12345);
  int tested = 0;
  while (tested < 200) {
    Digraph g = testing::random_digraph(rng, 2 + static_cast<int>(rng() % 9));
    if (!weakly_connected(g)) continue;
    ++tested;
    ReachDecomposition dec = reach_decomposition(g);
    testing::BruteReach oracle = testing::brute_force_reaches(g);
    REQUIRE(dec.k() == static_cast<int>(oracle.reaches.size()));
    std::vector<bool> covered(g.n(), false);
    std::size_t excl_total = 0;
    std::set<int> common_union;
    for (int i = 0; i < dec.k(); ++i) {
      CHECK(dec.reaches[i].vertices == oracle.reaches[i]);
      CHECK(dec.reaches[i].cabal == oracle.cabals[i]);
      CHECK(dec.reaches[i].exclusive == oracle.exclusives[i]);
      CHECK(dec.reaches[i].common == oracle.commons[i]);
      for (int v : dec.reaches[i].vertices) covered[v] = true;
      excl_total += dec.reaches[i].exclusive.size();
      common_union.insert(dec.reaches[i].common.begin(),
                          dec.reaches[i].common.end());
      // no edge from complement of H_i into H_i, same for B_i
      for (const auto& e : g.edges()) {
        auto in = [&](const std::vector<int>& set, int v) {
          return std::binary_search(set.begin(), set.end(), v);
        };
        if (in(dec.reaches[i].exclusive, e.dst))
          CHECK(in(dec.reaches[i].exclusive, e.src));
        if (in(dec.reaches[i].cabal, e.dst))
          CHECK(in(dec.reaches[i].cabal, e.src));
      }
    }
    // every vertex lies in some reach; |H| partition + common cover V
    CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));
    CHECK(excl_total + common_union.size() == static_cast<std::size_t>(g.n()));
  }
}
