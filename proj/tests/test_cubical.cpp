#include "test_main.hpp"

#include <set>

#include "ghom/cubical.hpp"

using namespace ghom;

namespace {

// Every map {0..8} -> V checked cell by cell against king adjacency.
std::vector<Simplex2> brute_force(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Simplex2> out;
  std::array<Vertex, 9> c{};
  long total = 1;
  for (int i = 0; i < 9; ++i) total *= n;
  for (long code = 0; code < total; ++code) {
    long x = code;
    for (int i = 8; i >= 0; --i) {
      c[i] = static_cast<Vertex>(x % n + 1);
      x /= n;
    }
    bool ok = true;
    for (int p = 0; p < 9 && ok; ++p)
      for (int q = 0; q < 9 && ok; ++q) {
        int dr = std::abs(p / 3 - q / 3), dc = std::abs(p % 3 - q % 3);
        if (std::max(dr, dc) <= 1 && !g.related(c[p], c[q])) ok = false;
      }
    if (ok) out.emplace_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("1-simplex enumeration") {
  auto one = enumerate_simplices_1(Graph(1));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Simplex1{1, 1, 1});
  CHECK(enumerate_simplices_1(graphs::path(2)).size() == 8);
  auto c4 = enumerate_simplices_1(graphs::cycle(4));
  CHECK(c4.size() == 36);
  CHECK(std::is_sorted(c4.begin(), c4.end()));
}

TEST_CASE("2-simplex enumeration") {
  auto one = enumerate_simplices_2(Graph(1));
  REQUIRE(one.size() == 1);
  CHECK(is_degenerate(one[0]));
  CHECK(enumerate_simplices_2(graphs::path(2)).size() == 512);
  CHECK_THROWS_AS(enumerate_simplices_2(graphs::complete(4), 1000), EnumerationBudgetExceeded);
  CHECK(count_simplices_2(graphs::complete(4)) == 262144);
}

TEST_CASE("backtracking agrees with brute force on tiny graphs") {
  std::vector<Graph> graphs_{Graph(1), Graph(2), graphs::path(2), Graph(3), graphs::path(3),
                             graphs::complete(3), Graph(3, {{1, 3}})};
  for (const Graph& g : graphs_) {
    auto bt = enumerate_simplices_2(g);
    auto bf = brute_force(g);
    CHECK(bt == bf);
    CHECK(count_simplices_2(g) == bt.size());
  }
}

TEST_CASE("boundary rings cover every matrix") {
  for (const Graph& g : {graphs::cycle(4), graphs::cycle(5), graphs::complete(4),
                         Graph(5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}})}) {
    auto all = enumerate_simplices_2(g);
    std::set<std::array<Vertex, 8>> rings;
    for (const auto& s : all) {
      auto c = s.cells();
      rings.insert({c[0], c[1], c[2], c[3], c[5], c[6], c[7], c[8]});
    }
    std::uint64_t total = 0, visits = 0;
    for_each_boundary_ring(g, kDefaultSimplexBudget, [&](const Simplex2& rep, std::uint64_t centres) {
      CHECK(is_valid(g, rep));
      auto c = rep.cells();
      CHECK(rings.count({c[0], c[1], c[2], c[3], c[5], c[6], c[7], c[8]}) == 1);
      total += centres;
      ++visits;
    });
    CHECK(total == all.size());
    CHECK(visits == rings.size());
  }
  CHECK_THROWS_AS(for_each_boundary_ring(graphs::complete(4), 1000, [](const Simplex2&, std::uint64_t) {}),
                  EnumerationBudgetExceeded);
}

TEST_CASE("degeneracy") {
  CHECK(is_degenerate(Simplex1{1, 1, 1}));
  CHECK_FALSE(is_degenerate(Simplex1{1, 1, 2}));
  CHECK_FALSE(is_degenerate(Simplex1{1, 2, 1}));
  CHECK(is_degenerate(Simplex2{{1, 2, 1}, {1, 2, 1}, {1, 2, 1}}));
  CHECK(is_degenerate(Simplex2{{1, 1, 1}, {2, 2, 2}, {1, 1, 1}}));
  CHECK_FALSE(is_degenerate(Simplex2{{1, 1, 1}, {1, 1, 1}, {1, 2, 1}}));
}

TEST_CASE("faces follow the matrix convention") {
  // a=1, b=2, c=3 on the path 1-2-3.
  Simplex2 s{{2, 3, 3}, {2, 2, 2}, {1, 1, 1}};
  CHECK(face(s, FaceIndex(1, 0)) == Simplex1{1, 2, 2});  // left column, upward
  CHECK(face(s, FaceIndex(1, 1)) == Simplex1{1, 2, 3});  // right column, upward
  CHECK(face(s, FaceIndex(2, 0)) == Simplex1{1, 1, 1});  // bottom row
  CHECK(face(s, FaceIndex(2, 1)) == Simplex1{2, 3, 3});  // top row
  CHECK(FaceIndex(1, 0).sign() == -1);
  CHECK(FaceIndex(1, 1).sign() == 1);
  CHECK(FaceIndex(2, 0).sign() == 1);
  CHECK(FaceIndex(2, 1).sign() == -1);
  CHECK_THROWS(FaceIndex(3, 0));
  CHECK_THROWS(FaceIndex(1, 2));
  Simplex2 k{{5, 5, 5}, {5, 5, 5}, {5, 5, 5}};
  for (int j = 1; j <= 2; ++j)
    for (int kk = 0; kk <= 1; ++kk) CHECK(face(k, FaceIndex(j, kk)) == Simplex1{5, 5, 5});
}

TEST_CASE("rotations") {
  Simplex2 s{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  auto r = rotations(s);
  CHECK(r[0] == s);
  CHECK(r[1] == Simplex2{{3, 6, 9}, {2, 5, 8}, {1, 4, 7}});
  CHECK(r[2] == Simplex2{{9, 8, 7}, {6, 5, 4}, {3, 2, 1}});
  CHECK(r[3] == Simplex2{{7, 4, 1}, {8, 5, 2}, {9, 6, 3}});
  Simplex2 k{{2, 2, 2}, {2, 2, 2}, {2, 2, 2}};
  for (const auto& x : rotations(k)) CHECK(x == k);

  Graph c4 = graphs::cycle(4);
  Simplex2 w{{1, 2, 2}, {1, 1, 2}, {4, 1, 1}};
  REQUIRE(is_valid(c4, w));
  auto rw = rotations(w);
  std::set<Simplex2> distinct(rw.begin(), rw.end());
  CHECK(distinct.size() == 4);
  for (const auto& x : rw) CHECK(is_valid(c4, x));
}

TEST_CASE("validity closure under faces and rotations") {
  for (const Graph& g : {graphs::cycle(4), graphs::complete(3), graphs::path(3)}) {
    for (const auto& s : enumerate_simplices_2(g)) {
      for (int j = 1; j <= 2; ++j)
        for (int k = 0; k <= 1; ++k) CHECK(is_valid(g, face(s, FaceIndex(j, k))));
      for (const auto& r : rotations(s)) CHECK(is_valid(g, r));
    }
  }
}

TEST_CASE("printing") {
  CHECK(to_string(Simplex1{1, 2, 3}) == "(123)");
  CHECK(to_string(Simplex1{1, 12, 3}) == "(1,12,3)");
  CHECK(to_string(Simplex2{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == "[1 2 3]\n[4 5 6]\n[7 8 9]");
}
