#include <doctest.h>

#include "dgk/kernels.hpp"
#include "helpers.hpp"

using namespace dgk;
using dgk::testing::frac;

namespace {

KernelBases<Rational> g7_bases() {
  Digraph g = testing::g7();
  auto s = build_matrix<Rational>(g, MatrixKind::stochastic);
  return kernel_bases(s, reach_decomposition(g));
}

}  // namespace

TEST_CASE("right kernel basis: g7 printed vectors") {
  KernelBases<Rational> b = g7_bases();
  REQUIRE(b.gamma.rows() == 7);
  REQUIRE(b.gamma.cols() == 2);
  std::vector<Rational> g1{1, 1, 0, 0, 0, frac(2, 3), frac(1, 3)};
  std::vector<Rational> g2{0, 0, 1, 1, 1, frac(1, 3), frac(2, 3)};
  for (int v = 0; v < 7; ++v) {
    CHECK(b.gamma(v, 0) == g1[v]);
    CHECK(b.gamma(v, 1) == g2[v]);
  }
}

TEST_CASE("left kernel basis: g7 printed vectors") {
  KernelBases<Rational> b = g7_bases();
  std::vector<Rational> gb1{1, 0, 0, 0, 0, 0, 0};
  std::vector<Rational> gb2{0, 0, frac(1, 3), frac(1, 3), frac(1, 3), 0, 0};
  for (int v = 0; v < 7; ++v) {
    CHECK(b.gamma_bar(0, v) == gb1[v]);
    CHECK(b.gamma_bar(1, v) == gb2[v]);
  }
}

TEST_CASE("right kernel: single reach path has gamma = 1") {
  Digraph g = Digraph::parse("a b\nb c\n");
  auto s = build_matrix<Rational>(g, MatrixKind::stochastic);
  auto b = kernel_bases(s, reach_decomposition(g));
  REQUIRE(b.gamma.cols() == 1);
  for (int v = 0; v < 3; ++v) CHECK(b.gamma(v, 0) == 1);
}

TEST_CASE("right kernel: two-root star solves the 1x1 common system") {
  Digraph g = Digraph::parse("a c\nb c\n");
  auto s = build_matrix<Rational>(g, MatrixKind::stochastic);
  auto b = kernel_bases(s, reach_decomposition(g));
  CHECK(b.gamma(0, 0) == 1);
  CHECK(b.gamma(1, 0) == 0);
  CHECK(b.gamma(2, 0) == frac(1, 2));
  CHECK(b.gamma(0, 1) == 0);
  CHECK(b.gamma(1, 1) == 1);
  CHECK(b.gamma(2, 1) == frac(1, 2));
}

TEST_CASE("left kernel: 2-cycle and weighted self-loop cycle") {
  {
    Digraph g = Digraph::parse("a b\nb a\n");
    auto s = build_matrix<Rational>(g, MatrixKind::stochastic);
    auto gb = left_kernel_basis(s, reach_decomposition(g));
    CHECK(gb(0, 0) == frac(1, 2));
    CHECK(gb(0, 1) == frac(1, 2));
  }
  {
    // S_a = (1/2,1/2), S_b = (1,0) -> stationary (2/3,1/3)
    Digraph g = Digraph::parse("a b\nb a\na a\n");
    auto s = build_matrix<Rational>(g, MatrixKind::stochastic);
    auto gb = left_kernel_basis(s, reach_decomposition(g));
    CHECK(gb(0, 0) == frac(2, 3));
    CHECK(gb(0, 1) == frac(1, 3));
  }
}

TEST_CASE("left kernel of the combinatorial Laplacian") {
  Digraph g = testing::g7();
  auto d = build_matrix<Rational>(g, MatrixKind::in_degree,
                                  DanglingPolicy::self_loop);
  KernelBases<Rational> b = g7_bases();
  auto rows = left_kernel_combinatorial(b.gamma_bar, d);
  // all g7 cabal in-degrees are 1, so nothing changes
  CHECK(rows == b.gamma_bar);
  // and each row annihilates L = D - Q... via D(I-S)
  auto l = build_matrix<Rational>(g, MatrixKind::rw_laplacian);
  Matrix<Rational> dl = d.data * l.data;  // D - DS
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    auto res = row_times(rows.row(i), dl);
    for (const auto& x : res) CHECK(x == 0);
  }

  // scaling: doubling D halves the rows
  MatrixForm<Rational> d2{MatrixKind::in_degree, d.data.scaled(Rational(2)),
                          d.dangling};
  auto halved = left_kernel_combinatorial(b.gamma_bar, d2);
  for (std::size_t v = 0; v < 7; ++v)
    CHECK(halved(0, v) * 2 == b.gamma_bar(0, v));

  MatrixForm<Rational> dzero{MatrixKind::in_degree, Matrix<Rational>(7, 7),
                             DanglingPolicy::none};
  CHECK_THROWS_AS(left_kernel_combinatorial(b.gamma_bar, dzero), ZeroDegree);
}

TEST_CASE("projection: g7 row 6 and the printed 1/63 matrix") {
  KernelBases<Rational> b = g7_bases();
  std::vector<Rational> row6{frac(2, 3), 0, frac(1, 9), frac(1, 9), frac(1, 9),
                             0, 0};
  for (int j = 0; j < 7; ++j) CHECK(b.projection(5, j) == row6[j]);
  // (1/7) * projection equals the printed 1/63-scaled integer matrix
  int printed[7][7] = {{9, 0, 0, 0, 0, 0, 0}, {9, 0, 0, 0, 0, 0, 0},
                       {0, 0, 3, 3, 3, 0, 0}, {0, 0, 3, 3, 3, 0, 0},
                       {0, 0, 3, 3, 3, 0, 0}, {6, 0, 1, 1, 1, 0, 0},
                       {3, 0, 2, 2, 2, 0, 0}};
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      CHECK(b.projection(i, j) * frac(1, 7) == frac(printed[i][j], 63));
}

TEST_CASE("projection: identity on a graph of self-loops") {
  Digraph g({"a", "b"}, {{0, 0, Rational(1)}, {1, 1, Rational(1)}});
  // not weakly connected as a whole; decompose per component by hand
  Digraph a = induced_subgraph(g, {0});
  auto s = build_matrix<Rational>(a, MatrixKind::stochastic);
  auto b = kernel_bases(s, reach_decomposition(a));
  CHECK(b.projection == Matrix<Rational>::identity(1));
}

TEST_CASE("kernel invariants on seeded random graphs (exact)") {
  std::mt19937_64 rng(99);
  int tested = 0;
  while (tested < 60) {
    Digraph g = testing::random_digraph(rng, 2 + static_cast<int>(rng() % 7));
    if (!weakly_connected(g)) continue;
    ++tested;
    ReachDecomposition dec = reach_decomposition(g);
    auto s = build_matrix<Rational>(g, MatrixKind::stochastic);
    auto lap = build_matrix<Rational>(g, MatrixKind::rw_laplacian);
    KernelBases<Rational> b = kernel_bases(s, dec);
    const int n = g.n(), k = dec.k();

    // biorthogonality
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        std::vector<Rational> col(n);
        for (int v = 0; v < n; ++v) col[v] = b.gamma(v, j);
        CHECK(dot(b.gamma_bar.row(i), col) == (i == j ? 1 : 0));
      }

    // sum of gammas is the ones vector; measures sum to 1
    for (int v = 0; v < n; ++v) {
      Rational s1 = 0;
      for (int i = 0; i < k; ++i) s1 += b.gamma(v, i);
      CHECK(s1 == 1);
    }
    for (int i = 0; i < k; ++i) {
      Rational s1 = 0;
      for (int v = 0; v < n; ++v) {
        CHECK(sgn(b.gamma_bar(i, v)) >= 0);
        s1 += b.gamma_bar(i, v);
      }
      CHECK(s1 == 1);
    }

    // L Pi = Pi L = 0, S Pi = Pi S = Pi, Pi^2 = Pi, residuals exact
    Matrix<Rational> zero(n, n);
    CHECK(lap.data * b.projection == zero);
    CHECK(b.projection * lap.data == zero);
    CHECK(s.data * b.projection == b.projection);
    CHECK(b.projection * s.data == b.projection);
    CHECK(b.projection * b.projection == b.projection);
    for (int i = 0; i < n; ++i) CHECK(b.projection.row_sum(i) == 1);

    // gamma columns lie in the exact nullspace and span it: rank(L) = n-k
    CHECK(rank(lap.data) == static_cast<std::size_t>(n - k));

    // entries on the common part lie strictly in (0,1)
    for (int i = 0; i < k; ++i)
      for (int v : dec.reaches[i].common) {
        CHECK(sgn(b.gamma(v, i)) > 0);
        CHECK(b.gamma(v, i) < 1);
      }
  }
}

TEST_CASE("spectrum_check: g7, 2-cycle, single vertex") {
  {
    auto lap = build_matrix<double>(testing::g7(), MatrixKind::rw_laplacian);
    SpectrumReport rep = spectrum_check(lap, 2);
    CHECK(rep.ok());
    CHECK(rep.zero_multiplicity == 2);
    CHECK(rep.min_nonzero_real_part > 0);
  }
  {
    auto lap = build_matrix<double>(Digraph::parse("a b\nb a\n"),
                                    MatrixKind::rw_laplacian);
    SpectrumReport rep = spectrum_check(lap, 1);
    CHECK(rep.ok());
    // eigenvalues {0, 2}
    CHECK(rep.min_nonzero_real_part == doctest::Approx(2.0));
  }
  {
    auto lap = build_matrix<double>(Digraph({"a"}, {}), MatrixKind::rw_laplacian);
    SpectrumReport rep = spectrum_check(lap, 1);
    CHECK(rep.ok());
    CHECK(rep.zero_multiplicity == 1);
  }
}
