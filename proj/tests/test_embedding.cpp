#include <doctest.h>

#include "dgk/embedding.hpp"
#include "helpers.hpp"

using namespace dgk;

TEST_CASE("transitive_closure: path, g7, 2-cycle") {
  Digraph path = Digraph::parse("a b\nb c\n");
  Digraph cl = transitive_closure(path);
  CHECK(cl.has_edge(0, 1));
  CHECK(cl.has_edge(1, 2));
  CHECK(cl.has_edge(0, 2));
  CHECK(cl.edges().size() == 3);

  Digraph g7cl = transitive_closure(testing::g7());
  CHECK(g7cl.has_edge(0, 6));  // 1 ~> 7 via 6
  CHECK(g7cl.has_edge(2, 5));  // 3 ~> 6 via 7
  CHECK_FALSE(g7cl.has_edge(1, 0));

  Digraph cyc = transitive_closure(Digraph::parse("a b\nb a\n"));
  CHECK(cyc.has_edge(0, 0));
  CHECK(cyc.has_edge(1, 1));
  CHECK(cyc.edges().size() == 4);
}

TEST_CASE("closure_check: fixtures pass all three properties") {
  CHECK(closure_check(testing::g7()).ok());
  CHECK(closure_check(Digraph({"a"}, {})).ok());
  CHECK(closure_check(Digraph::parse("a b\nb a\n")).ok());
}

TEST_CASE("closure_check: pattern on seeded random graphs") {
  std::mt19937_64 rng(777);
  int tested = 0;
  while (tested < 60) {
    Digraph g = testing::random_digraph(rng, 2 + static_cast<int>(rng() % 7));
    if (!weakly_connected(g)) continue;
    ++tested;
    ClosureReport rep = closure_check(g);
    CHECK(rep.is_row_stochastic);
    CHECK(rep.is_nonnegative);
    CHECK(rep.closure_consistent);
  }
}

TEST_CASE("kernel_equality_check: projections of L and I - e^{-L} agree") {
  double d = 0;
  CHECK(kernel_equality_check(testing::g7(), 1e-8, &d));
  CHECK(d < 1e-8);
  CHECK(kernel_equality_check(Digraph::parse("a b\nb a\n"), 1e-8));
  CHECK(kernel_equality_check(Digraph({"a"}, {}), 1e-8));
}
