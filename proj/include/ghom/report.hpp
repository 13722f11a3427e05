#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ghom/compare.hpp"
#include "ghom/graph.hpp"
#include "ghom/homology.hpp"
#include "ghom/net_basis.hpp"

namespace ghom {

inline constexpr int kReportSchema = 1;

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitBudget = 2,
  kExitDiscrepancy = 3,
};

struct Options {
  std::string method = "reduced";  // definitional | reduced | basis
  int type = 1;
  std::uint64_t max_simplices = kDefaultSimplexBudget;
  std::optional<std::size_t> cycle_cap;
  std::size_t max_cycles = kDefaultMaxCycles;
  std::uint64_t seed = 42;
  std::size_t count = 100;
  int nmax = 7;
  bool exhaustive = false;
  bool strict = false;
  bool timings = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct Timing {
  std::string phase;
  double seconds = 0;
  bool operator==(const Timing&) const = default;
};

// Edges and walks are in the labels of the input file.
struct GraphInfo {
  int n = 0;
  std::vector<Edge> edges;
  std::optional<std::vector<Vertex>> hamiltonian;
  bool operator==(const GraphInfo&) const = default;
};

struct NetReport {
  std::vector<Edge> chords;
  std::vector<Vertex> vertices;  // of s(G)
  std::vector<Edge> edges;       // of s(G)
  std::vector<Edge> tree;
  std::vector<Edge> chord_part;
  CardinalityReport cardinality;
  bool operator==(const NetReport&) const = default;
};

struct BasisClassReport {
  bool hamiltonian = false;
  std::optional<Edge> chord;
  int type = 0;
  std::vector<Vertex> walk;
  bool operator==(const BasisClassReport&) const = default;
};

struct BasisReport {
  BasisSummary summary;
  std::vector<BasisClassReport> classes;
  std::vector<BasisClassReport> filtered;
  std::vector<NetReport> nets;
  bool operator==(const BasisReport&) const = default;
};

struct TriangleTerm {
  std::vector<Vertex> triangle;  // a < b < c, oriented a -> b -> c -> a
  Integer coefficient;
  bool operator==(const TriangleTerm&) const = default;
};

struct SimplexTerm {
  std::vector<Vertex> cells;  // nine entries, top row first
  std::int64_t coefficient = 0;
  bool operator==(const SimplexTerm&) const = default;
};

struct TrivialityReport {
  std::vector<Vertex> walk;
  bool reduced = false;
  std::vector<TriangleTerm> reduced_certificate;
  std::optional<bool> definitional;
  std::string definitional_note;
  std::vector<SimplexTerm> definitional_certificate;
  bool operator==(const TrivialityReport&) const = default;
};

struct CorpusEntry {
  std::size_t id = 0;
  GraphInfo graph;
  HomologyGroup reduced;
  std::optional<HomologyGroup> definitional;
  std::string definitional_note;
  std::optional<BasisSummary> basis;
  std::string basis_note;
  bool engines_agree = true;
  bool basis_agrees = true;
  bool torsion = false;
  std::vector<std::string> discrepancies;
  std::vector<std::string> basis_findings;
  bool operator==(const CorpusEntry&) const = default;
};

struct CorpusSummary {
  int nmax = 0;
  std::size_t requested = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::size_t graphs = 0;
  std::size_t torsion_graphs = 0;
  std::size_t definitional_checked = 0;
  std::size_t engine_agreements = 0;  // among definitional_checked
  std::size_t basis_checked = 0;
  std::size_t basis_agreements = 0;   // among basis_checked
  std::vector<CorpusEntry> entries;  // sorted by id
  bool operator==(const CorpusSummary&) const = default;
};

struct Report {
  int schema = kReportSchema;
  std::string command;
  int exit_code = kExitOk;
  std::string error;
  std::optional<GraphInfo> graph;
  std::string method;
  std::optional<HomologyGroup> h1;
  std::optional<HomologyGroup> cross_check;  // reduced result when another engine ran
  std::optional<BasisReport> basis;
  std::optional<TrivialityReport> triviality;
  std::optional<CorpusSummary> corpus;
  std::vector<std::string> discrepancies;  // engine disagreement or torsion; --strict fails on these
  std::vector<std::string> basis_findings;
  std::vector<Timing> timings;
  bool operator==(const Report&) const = default;
};

GraphInfo graph_info(const Graph& g, const std::optional<std::vector<Vertex>>& hamiltonian = std::nullopt);

Report run_h1(const GraphDocument& doc, const Options& opt);
Report run_check_trivial(const GraphDocument& doc, std::string_view walk, const Options& opt);
Report run_corpus(const Options& opt);
Report error_report(std::string command, int exit_code, std::string message);

std::string render_text(const Report& r);
std::string render_json(const Report& r);
// Throws ParseError.
Report parse_report_json(std::string_view text);

// Coordinate-list dump of d1 (which = 1) or d2 (which = 2). Throws
// EnumerationBudgetExceeded and std::invalid_argument.
std::string dump_boundary(const Graph& g, int which, std::uint64_t budget = kDefaultSimplexBudget);

}  // namespace ghom
