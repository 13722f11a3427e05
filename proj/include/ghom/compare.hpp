#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghom/graph.hpp"
#include "ghom/homology.hpp"
#include "ghom/net_basis.hpp"

namespace ghom {

struct BasisSummary {
  int type = 1;
  std::size_t rank_claim = 0;
  bool includes_hamiltonian = false;
  std::size_t filtered = 0;
  std::size_t nets = 0;
  bool independent = false;
  bool spans = false;

  bool operator==(const BasisSummary&) const = default;
};

BasisSummary summarize(const H1Basis& b);

struct OracleComparison {
  explicit OracleComparison(Graph g) : graph(std::move(g)) {}

  Graph graph;
  std::optional<std::vector<Vertex>> hamiltonian;  // source labels, closing vertex omitted
  HomologyGroup reduced;
  std::optional<HomologyGroup> definitional;
  std::string definitional_note;  // why the definitional engine was skipped
  std::optional<BasisSummary> basis;
  std::string basis_note;
  bool engines_agree = true;  // definitional vs reduced, when both ran
  bool basis_agrees = true;   // rank claim vs reduced rank, when the basis ran
  bool torsion_found = false;
  // Engine disagreements and torsion.
  std::vector<std::string> discrepancies;
  // Basis rank claims that miss the reduced rank, dependent or non-spanning
  // classes. Recorded, not treated as failures.
  std::vector<std::string> basis_findings;
};

struct CompareOptions {
  std::uint64_t budget = kDefaultSimplexBudget;
  std::optional<std::size_t> cycle_cap;  // default_cycle_cap(n) when empty
  std::size_t max_cycles = kDefaultMaxCycles;
  int type = 1;
};

// Runs the basis pipeline, the reduced model and (within budget) the
// definitional engine, and records every disagreement. Never throws on
// mathematical outcomes; a graph without a Hamiltonian cycle is reported.
OracleComparison compare_with_oracle(const Graph& g, const CompareOptions& opt = {},
                                     const std::optional<std::vector<Vertex>>& pinned = std::nullopt);

inline constexpr int kCorpusMaxVertices = 12;
inline constexpr int kExhaustiveMaxChords = 20;

struct CorpusGraph {
  std::size_t id;
  Graph graph;  // circle form: rim 1..n plus chords
};

// n uniform in [4, nmax], each chord of C_n kept with probability 1/2.
// Throws std::invalid_argument when nmax is outside [4, kCorpusMaxVertices].
std::vector<CorpusGraph> random_corpus(int nmax, std::size_t count, std::uint64_t seed);
// Every chord subset of C_n.
std::vector<CorpusGraph> exhaustive_corpus(int n);

}  // namespace ghom
