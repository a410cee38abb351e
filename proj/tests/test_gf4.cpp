#include <catch2/catch_amalgamated.hpp>

#include "diwidth/enumerate.hpp"
#include "diwidth/families.hpp"
#include "diwidth/gf4.hpp"
#include "support/oracles.hpp"

using namespace diwidth;

TEST_CASE("gf4 field axioms") {
  const Gf4 elems[4] = {Gf4::zero(), Gf4::one(), Gf4::a(), Gf4::a2()};

  REQUIRE(Gf4::one() + Gf4::a() + Gf4::a2() == Gf4::zero());
  REQUIRE(Gf4::a() * Gf4::a() * Gf4::a() == Gf4::one());

  REQUIRE(gf4_add(Gf4::one(), Gf4::a()) == Gf4::a2());
  REQUIRE(gf4_mul(Gf4::a(), Gf4::a2()) == Gf4::one());
  REQUIRE(gf4_mul(Gf4::a2(), Gf4::a2()) == Gf4::a());

  for (Gf4 x : elems) {
    REQUIRE(gf4_add(x, Gf4::zero()) == x);
    REQUIRE(gf4_add(x, x) == Gf4::zero());
    REQUIRE(gf4_mul(x, Gf4::one()) == x);
    REQUIRE(gf4_mul(x, Gf4::zero()) == Gf4::zero());
    for (Gf4 y : elems) {
      REQUIRE(gf4_add(x, y) == gf4_add(y, x));
      REQUIRE(gf4_mul(x, y) == gf4_mul(y, x));
      for (Gf4 z : elems) {
        REQUIRE(gf4_add(gf4_add(x, y), z) == gf4_add(x, gf4_add(y, z)));
        REQUIRE(gf4_mul(gf4_mul(x, y), z) == gf4_mul(x, gf4_mul(y, z)));
        REQUIRE(gf4_mul(x, gf4_add(y, z)) == gf4_add(gf4_mul(x, y), gf4_mul(x, z)));
      }
    }
    if (!x.is_zero()) REQUIRE(x * x.inverse() == Gf4::one());
  }
}

TEST_CASE("gf4 rank") {
  SECTION("identity and zero") {
    Gf4Matrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = Gf4::one();
    REQUIRE(gf4_rank(id) == 3);
    REQUIRE(gf4_rank(Gf4Matrix(2, 5)) == 0);
    REQUIRE(gf4_rank(Gf4Matrix(0, 0)) == 0);
  }
  SECTION("proportional rows collapse") {
    // second row is a times the first
    Gf4Matrix m(2, 2);
    m.at(0, 0) = Gf4::one();
    m.at(0, 1) = Gf4::a();
    m.at(1, 0) = Gf4::a();
    m.at(1, 1) = Gf4::a2();
    REQUIRE(oracles::brute_force_rank_gf4(m) == 1);
    REQUIRE(gf4_rank(m) == 1);
  }
  SECTION("invariant under row scaling and permutation") {
    oracles::SplitMix rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      int r = 1 + static_cast<int>(rng.next() % 4);
      int c = 1 + static_cast<int>(rng.next() % 4);
      Gf4Matrix m(r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Gf4(static_cast<std::uint8_t>(rng.next() % 4));
      int base = gf4_rank(m);
      Gf4Matrix scaled = m;
      Gf4 factor = Gf4(static_cast<std::uint8_t>(1 + rng.next() % 3));
      int row = static_cast<int>(rng.next() % r);
      for (int j = 0; j < c; ++j) scaled.at(row, j) *= factor;
      REQUIRE(gf4_rank(scaled) == base);
      Gf4Matrix swapped = m;
      int r2 = static_cast<int>(rng.next() % r);
      for (int j = 0; j < c; ++j) std::swap(swapped.at(row, j), swapped.at(r2, j));
      REQUIRE(gf4_rank(swapped) == base);
    }
  }
  SECTION("matches brute-force independent-row oracle up to 4x4") {
    oracles::SplitMix rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      int r = 1 + static_cast<int>(rng.next() % 4);
      int c = 1 + static_cast<int>(rng.next() % 4);
      Gf4Matrix m(r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Gf4(static_cast<std::uint8_t>(rng.next() % 4));
      REQUIRE(gf4_rank(m) == oracles::brute_force_rank_gf4(m));
    }
  }
}

TEST_CASE("gf4 cut matrices") {
  SECTION("four entry cases") {
    Gf4Matrix both = cut_matrix_gf4(bidirectional_complete(2), 0b01, 0b10);
    REQUIRE(both.at(0, 0) == Gf4::one());
    Gf4Matrix fwd = cut_matrix_gf4(directed_path(2), 0b01, 0b10);
    REQUIRE(fwd.at(0, 0) == Gf4::a());
    Gf4Matrix bwd = cut_matrix_gf4(directed_path(2), 0b10, 0b01);
    REQUIRE(bwd.at(0, 0) == Gf4::a2());
    Gf4Matrix none = cut_matrix_gf4(Digraph(3), 0b011, 0b100);
    for (int i = 0; i < 2; ++i) REQUIRE(none.at(i, 0) == Gf4::zero());
  }
  SECTION("overlap is rejected") {
    REQUIRE_THROWS_AS(cut_matrix_gf4(directed_path(3), 0b011, 0b110), input_error);
    REQUIRE_THROWS_AS(cut_matrix_gf2(UndirectedGraph(2, {{0, 1}}), 0b01, 0b01), input_error);
  }
}

TEST_CASE("gf2 cut matrices and rank") {
  UndirectedGraph k2(2, {{0, 1}});
  REQUIRE(gf2_rank(cut_matrix_gf2(k2, 0b01, 0b10)) == 1);

  UndirectedGraph k22(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  REQUIRE(gf2_rank(cut_matrix_gf2(k22, 0b0011, 0b1100)) == 1);

  UndirectedGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Gf2Matrix cut = cut_matrix_gf2(c4, 0b0011, 0b1100);
  REQUIRE(oracles::brute_force_rank_gf2(cut) == 2);
  REQUIRE(gf2_rank(cut) == 2);
}

TEST_CASE("gf2 vs gf4 cut ranks on small digraphs") {
  // For every digraph with n <= 5 and every split, the GF(2) rank of the
  // underlying cut never exceeds the GF(4) rank of the directed cut.
  long bumps = 0;
  auto check = [&](const Digraph& g) {
    UndirectedGraph u = underlying_undirected(g);
    const VertexMask all = g.vertex_mask();
    for (VertexMask s = 1; s < all; ++s) {
      int r2 = gf2_rank(cut_matrix_gf2(u, s, all & ~s));
      int r4 = gf4_rank(cut_matrix_gf4(g, s, all & ~s));
      if (r2 > r4) ++bumps;
    }
  };
  for (int n = 2; n <= 4; ++n) oracles::for_each_labeled_digraph(n, check);
  enumerate_digraphs(5, true, check);
  REQUIRE(bumps == 0);
}

TEST_CASE("bioriented cuts agree entrywise with the undirected cut") {
  UndirectedGraph u(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}});
  Digraph b = complete_biorientation(u);
  const VertexMask all = u.vertex_mask();
  for (VertexMask s = 1; s < all; ++s) {
    Gf4Matrix m4 = cut_matrix_gf4(b, s, all & ~s);
    Gf2Matrix m2 = cut_matrix_gf2(u, s, all & ~s);
    for (int i = 0; i < m4.rows(); ++i)
      for (int j = 0; j < m4.cols(); ++j) {
        REQUIRE((m4.at(i, j) == Gf4::zero() || m4.at(i, j) == Gf4::one()));
        REQUIRE((m4.at(i, j) == Gf4::one()) == m2.get(i, j));
      }
    REQUIRE(gf4_rank(m4) == gf2_rank(m2));
  }
}
