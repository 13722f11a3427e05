#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ghom/chain.hpp"
#include "ghom/graph.hpp"
#include "ghom/int_linalg.hpp"

namespace ghom {

struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // invariant factors >= 2, each dividing the next

  bool torsion_free() const { return torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

// "0", "Z", "Z^2 + Z/2", ...
std::string to_string(const HomologyGroup& h);

HomologyGroup homology_from_quotient(const QuotientStructure& q);

// The quotient chain complex of a graph in degrees 2 -> 1 -> 0, with the
// image of the second differential held as a lattice. The 2-simplices are
// streamed by boundary ring and never stored.
class DefinitionalComplex {
 public:
  explicit DefinitionalComplex(const Graph& g, std::uint64_t budget = kDefaultSimplexBudget,
                               bool track_certificates = false);
  ~DefinitionalComplex();
  DefinitionalComplex(DefinitionalComplex&&) noexcept;
  DefinitionalComplex& operator=(DefinitionalComplex&&) noexcept;

  const Graph& graph() const;
  const Simplex1Basis& basis() const;
  std::uint64_t simplex_count() const;     // valid 2-simplices, degenerate included
  std::size_t distinct_boundaries() const;  // nonzero boundary vectors inserted
  std::size_t boundary_rank() const;

  HomologyGroup h1() const;

  bool is_cycle(const Chain1& c) const;
  // Throws NotACycle.
  bool is_trivial(const Chain1& c) const;
  // Combination of 2-simplices whose boundary is c (after dropping degenerate
  // terms), or nothing if c is not trivial. Requires certificate tracking.
  std::optional<Chain2> certificate(const Chain1& c) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

HomologyGroup h1_definitional(const Graph& g, std::uint64_t budget = kDefaultSimplexBudget);
bool is_trivial_definitional(const Graph& g, const Chain1& c, std::uint64_t budget = kDefaultSimplexBudget);

// H1 from explicitly assembled matrices; no streaming.
HomologyGroup h1_from_complex(const ChainComplex& cx);

}  // namespace ghom
