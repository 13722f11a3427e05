#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ghom/chain.hpp"
#include "ghom/cubical.hpp"
#include "ghom/graph.hpp"

namespace ghom {

// One step of a perfect cycle, realized as the generator (from from to).
struct EdgeStep {
  Vertex from;
  Vertex to;

  Simplex1 generator() const { return {from, from, to}; }
  auto operator<=>(const EdgeStep&) const = default;
};

// Closed walk v1, ..., vm, v1 with no step staying put.
class PerfectCycle {
 public:
  // Accepts the walk with or without the repeated closing vertex.
  explicit PerfectCycle(std::vector<Vertex> walk);

  // Closed form, first vertex repeated at the end.
  const std::vector<Vertex>& walk() const { return walk_; }
  std::vector<Vertex> vertices() const { return {walk_.begin(), walk_.end() - 1}; }
  std::size_t length() const { return walk_.size() - 1; }
  std::vector<EdgeStep> steps() const;
  Chain1 chain() const;
  PerfectCycle reversed() const;
  bool is_vertex_simple() const;
  // Throws NotACycle unless every step is an edge of g.
  void validate(const Graph& g) const;

  bool operator==(const PerfectCycle&) const = default;

 private:
  std::vector<Vertex> walk_;
};

// Generators with coefficient +1, each ending where the next begins and the
// last ending where the first begins.
class ProperCycle {
 public:
  explicit ProperCycle(std::vector<Simplex1> terms);
  const std::vector<Simplex1>& terms() const { return terms_; }
  Chain1 chain() const;
  // Splits every (a b c) into (a a b) + (b b c) and drops constant pieces.
  PerfectCycle subdivide() const;

 private:
  std::vector<Simplex1> terms_;
};

// "13576421" (single-digit labels) or "1,3,5,7" / "1 3 5 7". The closing
// vertex may be omitted. With vertex_count >= 10 only the separated form is
// accepted. Throws ParseError.
PerfectCycle parse_walk(std::string_view text, std::optional<int> vertex_count = std::nullopt);
std::string format_walk(const PerfectCycle& p);

// Closed tours, each starting at the smallest remaining vertex and always
// leaving along the smallest unused generator. Throws NotACycle.
std::vector<ProperCycle> to_proper_cycles(const Chain1& c);

// Perfect cycles whose chains sum to c modulo boundaries. Throws NotACycle.
std::vector<PerfectCycle> normalize_to_perfect(const Graph& g, const Chain1& c);

// [[a c c] [a b b] [a a b]]. Throws std::invalid_argument unless a, b, c are
// pairwise adjacent.
Simplex2 triangle_witness(const Graph& g, Vertex a, Vertex b, Vertex c);

// Chords of g joining two cyclically non-consecutive vertices of p. p must be
// vertex-simple.
std::set<Edge> splitting_edges(const Graph& g, const PerfectCycle& p);

// Splits p along its least chord, recursively, until every piece is a
// triangle or chordless. Pieces start at their smallest vertex; the piece
// containing the part of p between the chord's endpoints comes first.
std::vector<PerfectCycle> cycle_components(const Graph& g, const PerfectCycle& p);

// p must be vertex-simple with length > 3.
bool is_completely_perfect(const Graph& g, const PerfectCycle& p);

// Rotation starting at the smallest vertex, same direction.
PerfectCycle rotate_to_min(const PerfectCycle& p);

}  // namespace ghom
