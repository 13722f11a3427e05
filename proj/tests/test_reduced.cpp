#include "test_main.hpp"

#include "ghom/errors.hpp"
#include "ghom/reduced.hpp"
#include "support.hpp"

using namespace ghom;

TEST_CASE("edge vectors") {
  CHECK(to_edge_vector(parse_walk("121")).is_zero());
  OrientedEdgeVector sq = to_edge_vector(parse_walk("12341"));
  CHECK(sq.coefficient({1, 2}) == 1);
  CHECK(sq.coefficient({2, 3}) == 1);
  CHECK(sq.coefficient({3, 4}) == 1);
  CHECK(sq.coefficient({1, 4}) == -1);
  CHECK(sq.terms().size() == 4);
  CHECK(to_edge_vector(parse_walk("12341").reversed()) == -sq);
  CHECK(to_string(sq) == "+e1,2 -e1,4 +e2,3 +e3,4");
  CHECK(to_edge_vector(parse_walk("12341").chain()) == sq);
  OrientedEdgeVector path = to_edge_vector(Chain1(Simplex1{1, 2, 3}));
  CHECK(path.coefficient({1, 2}) == 1);
  CHECK(path.coefficient({2, 3}) == 1);
  CHECK(path.terms().size() == 2);
}

TEST_CASE("triviality") {
  Graph k4 = graphs::complete(4);
  ReducedModel m(k4, true);
  for (const auto& t : k4.triangles())
    CHECK(m.is_trivial(to_edge_vector(PerfectCycle({t[0], t[1], t[2]}))));
  CHECK(m.is_trivial(to_edge_vector(parse_walk("12341"))));
  auto cert = m.certificate(to_edge_vector(parse_walk("12341")));
  REQUIRE(cert);
  OrientedEdgeVector rebuilt;
  for (const auto& [i, k] : *cert) {
    const auto& t = m.triangles()[i];
    OrientedEdgeVector tv = to_edge_vector(PerfectCycle({t[0], t[1], t[2]}));
    for (const auto& [e, x] : tv.terms()) rebuilt.add(e, x * static_cast<std::int64_t>(k));
  }
  CHECK(rebuilt == to_edge_vector(parse_walk("12341")));

  CHECK_FALSE(is_trivial_reduced(graphs::cycle(4), to_edge_vector(parse_walk("12341"))));
  CHECK_THROWS_AS(is_trivial_reduced(graphs::cycle(4), to_edge_vector(parse_walk("1231"))), NotInCycleSpace);
  OrientedEdgeVector open;
  open.add_step(1, 2);
  CHECK_THROWS_AS(m.is_trivial(open), NotInCycleSpace);

  Graph fx = testing_support::two_nets_graph();
  CHECK(is_trivial_reduced(fx, to_edge_vector(parse_walk("13576421"))));
  CHECK(is_trivial_reduced(fx, to_edge_vector(parse_walk("16571"))));
  CHECK_FALSE(is_trivial_reduced(fx, to_edge_vector(parse_walk("12345678"))));
}

TEST_CASE("reduced homology") {
  CHECK(h1_reduced(graphs::cycle(4)) == HomologyGroup{1, {}});
  CHECK(h1_reduced(graphs::complete(4)) == HomologyGroup{0, {}});
  Graph two(8, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}, {6, 7}, {7, 8}, {8, 5}});
  CHECK(h1_reduced(two) == HomologyGroup{2, {}});
  CHECK(h1_reduced(Graph(1)) == HomologyGroup{0, {}});
  CHECK(h1_reduced(graphs::complete(3)) == HomologyGroup{0, {}});
}

TEST_CASE("cycle space rank") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = testing_support::random_graph(n, 0.4, rng);
    ReducedModel m(g);
    CHECK(m.cycle_rank() + static_cast<std::size_t>(g.vertex_count()) ==
          g.edge_count() + static_cast<std::size_t>(g.component_count()));
  }
}

TEST_CASE("agrees with the definitional engine on small graphs") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 3 + static_cast<int>(rng() % 3);
    Graph g = testing_support::random_graph(n, 0.5, rng);
    DefinitionalComplex cx(g, 10'000'000);
    ReducedModel m(g);
    CHECK(cx.h1() == m.h1());
    for (int k = 0; k < 5; ++k) {
      Chain1 c = testing_support::random_cycle(g, rng);
      CHECK(cx.is_trivial(c) == m.is_trivial(to_edge_vector(c)));
    }
  }
}
