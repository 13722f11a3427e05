#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ghom/cycle_rewrite.hpp"
#include "ghom/graph.hpp"
#include "ghom/homology.hpp"
#include "ghom/reduced.hpp"

namespace ghom {

// 0 means no length bound.
std::size_t default_cycle_cap(int vertex_count);
inline constexpr std::size_t kDefaultMaxCycles = 2'000'000;

struct TypedCycle {
  Edge chord;
  int type;
  PerfectCycle walk;
};

// For a chord {r, s}, r < s:
//   1: r s (s+1) ... n 1 ... (r-1) r
//   2: r s (s-1) ... (r+1) r
//   3: s r (r-1) ... 1 n ... (s+1) s
//   4: s r (r+1) ... (s-1) s
// Throws std::invalid_argument for a rim edge, a non-edge or a bad type.
TypedCycle typed_cycle(const CircleForm& cf, const Edge& chord, int type);

// 1 2 ... n 1 in circle-form labels.
PerfectCycle hamiltonian_cycle(const CircleForm& cf);

// Checks type2 = type1 - H, type3 = -type1, type4 = H - type1, each up to the
// triangle lattice.
bool type_relations_check(const CircleForm& cf, const ReducedModel& model, const Edge& chord);
bool type_relations_check(const CircleForm& cf, const Edge& chord);

// Vertex-simple cycles of a circle form using at least two chords, each with
// its triviality verdict from the reduced model. Cycles are stored starting at
// their smallest vertex with the second vertex below the last.
class CycleCatalog {
 public:
  struct Entry {
    PerfectCycle walk;
    std::vector<Edge> edges;   // sorted
    std::vector<Edge> chords;  // sorted, at least two
    bool trivial;
  };

  // cap bounds the cycle length (0: unbounded). Throws
  // EnumerationBudgetExceeded when more than max_cycles cycles would be kept.
  CycleCatalog(const CircleForm& cf, std::size_t cap, std::size_t max_cycles = kDefaultMaxCycles);

  const CircleForm& circle_form() const { return cf_; }
  const ReducedModel& model() const { return model_; }
  const std::set<Edge>& chords() const { return chords_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t cap() const { return cap_; }

  // Trivial entries through both chords.
  std::vector<std::size_t> trivial_through(const Edge& e1, const Edge& e2) const;

 private:
  CircleForm cf_;
  ReducedModel model_;
  std::set<Edge> chords_;
  std::size_t cap_;
  std::vector<Entry> entries_;
};

// Shortest trivial cycle through both chords, ties broken by the walk
// rotated to start at its smallest vertex and oriented to traverse e1 from
// its smaller endpoint.
std::optional<PerfectCycle> edge_connected(const CycleCatalog& cat, const Edge& e1, const Edge& e2);

struct Net {
  std::vector<Edge> edges;  // sorted
  bool operator==(const Net&) const = default;
  auto operator<=>(const Net&) const = default;
};

// Maximal cliques of the edge-connectedness relation on the chords, sorted.
std::vector<Net> nets(const CycleCatalog& cat);

struct Subgraph {
  std::set<Vertex> vertices;
  std::set<Edge> edges;
  bool empty() const { return vertices.empty(); }
  bool operator==(const Subgraph&) const = default;
};

// Union of all trivial cycles through two distinct chords of the net.
Subgraph net_subgraph(const CycleCatalog& cat, const Net& net);

struct SpanningSet {
  std::vector<Edge> tree_edges;  // in selection order
  std::vector<Edge> chord_part;  // tree edges that are chords, sorted
};

// Kruskal with rim edges weighted 0 and chords 1, ties broken by edge order.
// A forest when the subgraph is disconnected.
SpanningSet spanning_set(const Subgraph& s, const std::set<Edge>& chords);

struct CardinalityReport {
  bool skipped = false;
  std::string note;
  long long formula = 0;  // |V| - |rim edges in s| - 1
  std::size_t actual = 0;
  bool rim_acyclic = true;
  bool match = false;

  bool operator==(const CardinalityReport&) const = default;
};

CardinalityReport cardinality_check(const Subgraph& s, const SpanningSet& ss, const std::set<Edge>& chords);

struct BasisEntry {
  bool hamiltonian = false;
  std::optional<Edge> chord;  // empty for the Hamiltonian class
  int type = 0;
  PerfectCycle walk;
};

struct NetDetail {
  Net net;
  Subgraph subgraph;
  SpanningSet spanning;
  CardinalityReport cardinality;
};

struct H1Basis {
  int type = 1;
  bool includes_hamiltonian = false;
  std::vector<BasisEntry> classes;   // survivors
  std::vector<BasisEntry> filtered_trivial;
  std::vector<NetDetail> nets;
  std::size_t rank_claim = 0;
  // Survivors are independent in H1 modulo torsion, and together with the
  // triangles generate the whole cycle space.
  bool independent = false;
  bool spans = false;
};

// Throws std::invalid_argument for a type outside 1..4.
H1Basis h1_basis(const CycleCatalog& cat, int type = 1);

}  // namespace ghom
