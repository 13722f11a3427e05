// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "ghom/chain.hpp"
#include "ghom/compare.hpp"
#include "ghom/cycle_rewrite.hpp"
#include "ghom/homology.hpp"
#include "ghom/net_basis.hpp"
#include "ghom/reduced.hpp"
#include "ghom/report.hpp"
#include "support.hpp"

using namespace ghom;
using namespace testing_support;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string graph_text(const Graph& g) {
  std::string s = "n=" + std::to_string(g.vertex_count()) + " E={";
  for (std::size_t i = 0; i < g.edges().size(); ++i) s += (i ? " " : "") + to_string(g.edges()[i]);
  return s + "}";
}

CircleForm identity_form(const Graph& g) {
  std::vector<Vertex> rim(static_cast<std::size_t>(g.vertex_count()));
  std::iota(rim.begin(), rim.end(), 1);
  return to_circle_form(g, rim);
}

struct Fixture {
  std::string name;
  Graph graph;
};

// C4..C8, K4, K5, the two-net graph and 20 seeded Hamiltonian graphs.
std::vector<Fixture> fixture_set() {
  std::vector<Fixture> out;
  for (int n = 4; n <= 8; ++n) out.push_back({"C" + std::to_string(n), graphs::cycle(n)});
  out.push_back({"K4", graphs::complete(4)});
  out.push_back({"K5", graphs::complete(5)});
  out.push_back({"two-net", two_nets_graph()});
  for (const auto& cg : random_corpus(7, 20, 2024)) out.push_back({"seeded#" + std::to_string(cg.id), cg.graph});
  return out;
}

Outcome criterion1() {
  Outcome o;
  double worst = 0;
  for (int n = 4; n <= 8; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    HomologyGroup h = h1_definitional(graphs::cycle(n));
    double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    o.require(h == HomologyGroup{1, {}}, "C" + std::to_string(n) + " gave " + to_string(h));
    o.require(dt < 60, "C" + std::to_string(n) + " took " + std::to_string(dt) + " s");
  }
  std::ostringstream d;
  d << "H1(C_n) = Z for n = 4..8, slowest " << worst << " s";
  o.detail = d.str();
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Vertex a = 1, b = 2, c = 3;
  auto ch = [](Vertex x, Vertex y, Vertex z) { return Chain1(Simplex1{x, y, z}); };
  for (const Graph& g : {graphs::path(3), graphs::complete(3)}) {
    std::string gname = g.adjacent(a, c) ? "3-clique" : "path";
    Simplex2 s1{{b, c, c}, {b, b, b}, {a, a, a}};
    Simplex2 s2{{b, b, c}, {a, b, b}, {a, a, a}};
    Chain2 s3;
    s3.add(Simplex2{{b, b, c}, {b, b, b}, {a, a, a}}, 1);
    s3.add(Simplex2{{b, b, b}, {a, b, b}, {a, a, a}}, 1);
    s3.add(Simplex2{{c, c, c}, {c, b, b}, {b, b, b}}, 1);
    for (const Simplex2& s : {s1, s2}) o.require(is_valid(g, s), gname + ": invalid simplex");
    for (const auto& [s, _] : s3.terms()) o.require(is_valid(g, s), gname + ": invalid simplex");
    o.require(boundary_2(s1) == ch(a, b, c) - ch(a, b, b) - ch(b, c, c), gname + ": identity 1");
    o.require(boundary_2(s2) == ch(a, b, c) - ch(a, a, b) - ch(b, b, c), gname + ": identity 2");
    o.require(boundary_2(s3) == ch(a, b, c) - ch(a, a, b) - ch(b, c, c), gname + ": identity 3");

    DefinitionalComplex cx(g);
    o.require(cx.is_trivial(ch(a, b, c) + ch(c, b, a)), gname + ": (abc)+(cba)");
    o.require(cx.is_trivial(ch(a, b, a)), gname + ": (aba)");
    o.require(cx.is_trivial(ch(a, a, b) - ch(a, b, b)), gname + ": (aab)-(abb)");
  }
  o.detail = "three boundary identities and three memberships on the path and the 3-clique";
  return o;
}

Outcome criterion3() {
  Outcome o;
  CycleCatalog cat(identity_form(two_nets_graph()), 0);
  const ReducedModel& m = cat.model();
  o.require(m.is_trivial(to_edge_vector(PerfectCycle({1, 3, 5, 7, 6, 4, 2, 1}))), "13576421 not trivial");
  o.require(m.is_trivial(to_edge_vector(PerfectCycle({1, 6, 5, 7, 1}))), "16571 not trivial");
  o.require(is_trivial_definitional(two_nets_graph(), PerfectCycle({1, 3, 5, 7, 6, 4, 2, 1}).chain()),
            "13576421 not trivial definitionally");
  o.require(is_trivial_definitional(two_nets_graph(), PerfectCycle({1, 6, 5, 7, 1}).chain()),
            "16571 not trivial definitionally");
  o.require(edge_connected(cat, Edge(1, 3), Edge(5, 7)).has_value(), "{1,3} ~ {5,7} missing");
  o.require(edge_connected(cat, Edge(5, 7), Edge(1, 6)).has_value(), "{5,7} ~ {1,6} missing");
  o.require(!edge_connected(cat, Edge(1, 3), Edge(1, 6)).has_value(), "{1,3} ~ {1,6} found");
  std::vector<Net> ns = nets(cat);
  auto as_net = [](std::vector<std::pair<int, int>> xs) {
    Net n;
    for (auto [p, q] : xs) n.edges.emplace_back(p, q);
    std::sort(n.edges.begin(), n.edges.end());
    return n;
  };
  std::vector<Net> expected{as_net({{1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}}),
                            as_net({{1, 6}, {1, 7}, {2, 4}, {3, 5}, {4, 6}, {5, 7}})};
  std::sort(expected.begin(), expected.end());
  o.require(ns == expected, "nets differ from G1, G2 (found " + std::to_string(ns.size()) + ")");
  o.detail = "witness cycles trivial, edge-connectedness as stated, nets exactly G1 and G2";
  return o;
}

Outcome criterion4() {
  Outcome o;
  constexpr std::uint64_t budget = 20'000'000;
  std::size_t small = 0, random = 0;
  auto compare = [&](const Graph& g) {
    HomologyGroup d = h1_definitional(g, budget), r = h1_reduced(g);
    o.require(d == r, "definitional " + to_string(d) + " vs reduced " + to_string(r) + " on " + graph_text(g));
  };
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : connected_graphs_up_to_iso(n)) {
      compare(g);
      ++small;
    }
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    compare(random_graph(6, 0.5, rng));
    ++random;
  }
  o.require(small == 31, "expected 31 connected graphs up to isomorphism, got " + std::to_string(small));
  o.detail = std::to_string(small) + " connected graphs on <= 5 vertices and " + std::to_string(random) +
             " random graphs on 6 vertices agree";
  return o;
}

Outcome criterion5() {
  Outcome o;
  Options opt;
  opt.count = 500;
  opt.nmax = 7;
  opt.seed = 42;
  opt.max_simplices = 300'000;
  Report r = run_corpus(opt);
  const CorpusSummary& s = *r.corpus;
  o.require(s.graphs == 500, "corpus size " + std::to_string(s.graphs));
  o.require(s.torsion_graphs == 0, std::to_string(s.torsion_graphs) + " graphs with torsion");
  o.require(s.engine_agreements == s.definitional_checked, "engine disagreement in spot checks");
  for (const std::string& d : r.discrepancies) o.require(false, d);
  o.detail = std::to_string(s.graphs) + " Hamiltonian graphs (n <= 7, seed 42) torsion-free; " +
             std::to_string(s.definitional_checked) + " definitional spot checks agree";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t agree = 0, total = 0;
  for (const Fixture& f : fixture_set()) {
    CycleCatalog cat(identity_form(f.graph), 0);
    H1Basis b = h1_basis(cat);
    std::size_t rank = h1_reduced(f.graph).rank;
    ++total;
    bool ok = b.rank_claim == rank;
    agree += ok;
    bool required = f.name[0] == 'C' || f.name[0] == 'K';
    if (!ok) {
      std::string msg = f.name + ": basis claims " + std::to_string(b.rank_claim) + ", reduced rank " +
                        std::to_string(rank) + " (" + graph_text(f.graph) + ")";
      if (required)
        o.require(false, msg);
      else
        o.notes.push_back("recorded mismatch " + msg);
    }
  }
  o.detail = std::to_string(agree) + "/" + std::to_string(total) + " fixtures agree; C_n and K_n required";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t checked = 0;
  for (const Fixture& f : fixture_set()) {
    CircleForm cf = identity_form(f.graph);
    ReducedModel model(cf.graph());
    for (const Edge& e : diagonal_edges(cf)) {
      ++checked;
      o.require(type_relations_check(cf, model, e), f.name + " chord " + to_string(e));
    }
  }
  o.detail = "type relations hold on " + std::to_string(checked) + " chords";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t acyclic = 0, cyclic = 0;
  for (const Fixture& f : fixture_set()) {
    CycleCatalog cat(identity_form(f.graph), 0);
    for (const Net& net : nets(cat)) {
      Subgraph s = net_subgraph(cat, net);
      SpanningSet ss = spanning_set(s, cat.chords());
      CardinalityReport rep = cardinality_check(s, ss, cat.chords());
      if (rep.skipped) continue;
      if (rep.rim_acyclic) {
        ++acyclic;
        o.require(rep.match, f.name + ": formula " + std::to_string(rep.formula) + " vs actual " +
                                 std::to_string(rep.actual) + " with acyclic rim part");
      } else {
        ++cyclic;
      }
    }
  }
  CycleCatalog k4(identity_form(graphs::complete(4)), 0);
  std::vector<Net> ns = nets(k4);
  o.require(ns.size() == 1, "K4 should have one net");
  if (ns.size() == 1) {
    Subgraph s = net_subgraph(k4, ns[0]);
    CardinalityReport rep = cardinality_check(s, spanning_set(s, k4.chords()), k4.chords());
    o.require(rep.formula == -1 && rep.actual == 0 && !rep.match && !rep.note.empty(),
              "K4 counter-instance not documented");
    o.detail = std::to_string(acyclic) + " nets with acyclic rim part match; K4 documented: formula " +
               std::to_string(rep.formula) + " vs actual " + std::to_string(rep.actual) + " (" + rep.note + "); " +
               std::to_string(cyclic) + " nets with cyclic rim part";
  }
  return o;
}

// Closed walk of edge steps: a random excursion followed by a shortest path home.
std::vector<Vertex> random_closed_walk(const Graph& g, std::mt19937_64& rng) {
  Vertex start = static_cast<Vertex>(1 + rng() % g.vertex_count());
  std::vector<Vertex> walk{start};
  int steps = 2 + static_cast<int>(rng() % 6);
  for (int i = 0; i < steps; ++i) {
    const auto& nb = g.neighbors(walk.back());
    if (nb.empty()) break;
    walk.push_back(nb[rng() % nb.size()]);
  }
  std::vector<Vertex> prev(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  std::deque<Vertex> q{walk.back()};
  prev[walk.back()] = walk.back();
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    for (Vertex w : g.neighbors(u))
      if (!prev[w]) {
        prev[w] = u;
        q.push_back(w);
      }
  }
  std::vector<Vertex> back;
  for (Vertex v = start; v != walk.back(); v = prev[v]) back.push_back(v);
  std::reverse(back.begin(), back.end());
  walk.insert(walk.end(), back.begin(), back.end());
  return walk;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(99);
  int done = 0, attempts = 0;
  while (done < 100 && attempts < 10000) {
    ++attempts;
    int n = 3 + static_cast<int>(rng() % 3);
    Graph g = random_graph(n, 0.6, rng);
    if (!g.is_connected() || g.edge_count() == 0) continue;
    Chain1 input = random_cycle(g, rng, 2);
    std::int64_t k = static_cast<std::int64_t>(rng() % 3) + 1;
    input += k * walk_chain(random_closed_walk(g, rng));
    input = reduce_mod_degenerate(input);
    Chain1 rest = input;
    for (const PerfectCycle& p : normalize_to_perfect(g, input)) rest -= p.chain();
    rest = reduce_mod_degenerate(rest);
    o.require(rest.is_zero() || is_trivial_definitional(g, rest),
              "normalization residue not trivial on " + graph_text(g) + ": " + to_string(input));
    ++done;
  }
  o.require(done == 100, "only " + std::to_string(done) + " cycles generated");
  o.detail = std::to_string(done) + " random 1-cycles on graphs with n <= 5";
  return o;
}

Outcome criterion10() {
  Outcome o;
  GraphDocument two{two_nets_graph(), std::nullopt};
  std::vector<std::pair<std::string, std::function<Report(unsigned)>>> runs{
      {"h1 definitional", [&](unsigned) { Options x; x.method = "definitional"; return run_h1(two, x); }},
      {"h1 reduced", [&](unsigned) { Options x; x.strict = true; return run_h1(two, x); }},
      {"h1 basis", [&](unsigned) { Options x; x.method = "basis"; return run_h1(two, x); }},
      {"check-trivial", [&](unsigned) { return run_check_trivial(two, "13576421", Options{}); }},
      {"corpus", [&](unsigned threads) {
         Options x;
         x.count = 60;
         x.seed = 7;
         x.max_simplices = 300'000;
         x.threads = threads;
         return run_corpus(x);
       }}};
  for (auto& [name, run] : runs) {
    std::string a = render_json(run(1)), b = render_json(run(1)), c = render_json(run(3));
    o.require(a == b, name + ": repeated runs differ");
    o.require(a == c, name + ": thread count changes the report");
    o.require(render_text(parse_report_json(a)) == render_text(run(1)), name + ": text rendering differs");
  }
  o.detail = "repeated runs of h1 (three methods), check-trivial and corpus give identical reports";
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},  {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}};
  int failed = 0;
  for (auto& [id, run] : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    std::printf("criterion %2d %s: %s (%.1f s)\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), seconds_since(t0));
    for (const std::string& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
