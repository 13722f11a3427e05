#include "test_main.hpp"

#include <random>

#include "ghom/chain.hpp"

using namespace ghom;

namespace {
constexpr Vertex a = 1, b = 2, c = 3;
Chain1 ch(Vertex x, Vertex y, Vertex z, std::int64_t k = 1) { return Chain1(Simplex1{x, y, z}, k); }
}  // namespace

TEST_CASE("reduce modulo degenerate simplices") {
  CHECK(reduce_mod_degenerate(ch(a, a, a)).is_zero());
  CHECK(reduce_mod_degenerate(ch(a, a, b, 2) - ch(a, a, a)) == ch(a, a, b, 2));
  CHECK(reduce_mod_degenerate(Chain1{}).is_zero());
  Chain2 d(Simplex2{{a, a, a}, {b, b, b}, {a, a, a}});
  CHECK(reduce_mod_degenerate(d).is_zero());
}

TEST_CASE("first boundary identities") {
  CHECK(boundary_2(Simplex2{{b, c, c}, {b, b, b}, {a, a, a}}) == ch(a, b, c) - ch(a, b, b) - ch(b, c, c));
  CHECK(boundary_2(Simplex2{{b, b, c}, {a, b, b}, {a, a, a}}) == ch(a, b, c) - ch(a, a, b) - ch(b, b, c));
  CHECK(boundary_2(Simplex2{{b, b, c}, {b, b, b}, {a, a, a}}) == ch(a, b, c) - ch(a, b, b) - ch(b, b, c));
  Chain2 sum;
  sum.add(Simplex2{{b, b, c}, {b, b, b}, {a, a, a}}, 1);
  sum.add(Simplex2{{b, b, b}, {a, b, b}, {a, a, a}}, 1);
  sum.add(Simplex2{{c, c, c}, {c, b, b}, {b, b, b}}, 1);
  CHECK(boundary_2(sum) == ch(a, b, c) - ch(a, a, b) - ch(b, c, c));
  CHECK(boundary_2(Simplex2{{c, c, c}, {c, c, c}, {c, c, c}}).is_zero());
}

TEST_CASE("second boundary identities") {
  CHECK(boundary_2(Simplex2{{a, a, a}, {a, b, b}, {a, b, c}}) == ch(a, b, c) + ch(c, b, a));
  CHECK(boundary_2(Simplex2{{a, a, a}, {a, a, a}, {a, b, a}}) == ch(a, b, a));
  CHECK(boundary_2(Simplex2{{a, b, b}, {a, a, b}, {a, a, b}}) == ch(a, a, b) - ch(a, b, b));
}

TEST_CASE("first differential") {
  CHECK(boundary_1(Simplex1{a, b, a}).is_zero());
  Chain0 e = boundary_1(Simplex1{a, a, b});
  CHECK(e.coefficient(b) == 1);
  CHECK(e.coefficient(a) == -1);
  CHECK(e.size() == 2);
}

TEST_CASE("boundary of boundary vanishes and degenerates map to zero") {
  for (const Graph& g : {graphs::cycle(4), graphs::complete(3), graphs::path(3),
                         Graph(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}})}) {
    for (const Simplex2& s : enumerate_simplices_2(g)) {
      Chain1 d = boundary_2(s);
      CHECK(boundary_1(d).is_zero());
      if (is_degenerate(s)) CHECK(d.is_zero());
    }
  }
}

TEST_CASE("matrices") {
  ChainComplex one = build_matrices(Graph(1));
  CHECK(one.d1.cols() == 0);
  CHECK(one.d2.cols() == 0);

  ChainComplex edge = build_matrices(graphs::path(2));
  CHECK(edge.d1.cols() == 6);
  for (std::size_t col = 0; col < edge.d1.cols(); ++col) {
    const auto& v = edge.d1.column(col);
    CHECK((v.empty() || v.size() == 2));
    for (const auto& [r, x] : v) CHECK((x == 1 || x == -1));
  }

  ChainComplex c4 = build_matrices(graphs::cycle(4));
  CHECK(c4.d1.cols() == 32);
  CHECK(c4.d1.multiply(c4.d2).is_zero());
  for (std::size_t col = 0; col < c4.d2.cols(); ++col)
    for (const auto& [r, x] : c4.d2.column(col)) CHECK((x >= -2 && x <= 2));
  CHECK_THROWS_AS(build_matrices(graphs::complete(4), 1000), EnumerationBudgetExceeded);

  std::string dump = dump_coordinates(IntMatrix::from_rows({{0, 2}, {-1, 0}}));
  CHECK(dump == "2 2 2\n1 0 -1\n0 1 2\n");
}

TEST_CASE("boundary is linear") {
  Graph g(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
  auto all = enumerate_simplices_2(g);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Chain2 x, y;
    for (int i = 0; i < 4; ++i) {
      x.add(all[rng() % all.size()], static_cast<std::int64_t>(rng() % 7) - 3);
      y.add(all[rng() % all.size()], static_cast<std::int64_t>(rng() % 7) - 3);
    }
    CHECK(boundary_2(x + y) == boundary_2(x) + boundary_2(y));
    CHECK(boundary_2(3 * x) == 3 * boundary_2(x));
  }
}

TEST_CASE("basis coordinates") {
  Simplex1Basis basis(graphs::path(2));
  CHECK(basis.size() == 6);
  CHECK(basis.index(Simplex1{1, 1, 1}) == Simplex1Basis::npos);
  Chain1 x = ch(1, 1, 2, 3) - ch(2, 1, 2);
  auto v = basis.coordinates(x);
  CHECK(basis.chain(to_big(v)) == x);
  CHECK_THROWS(basis.coordinates(ch(1, 3, 3)));
  CHECK(to_string(x) == "3(112) - (212)");
}
