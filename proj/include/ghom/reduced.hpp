#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ghom/chain.hpp"
#include "ghom/cycle_rewrite.hpp"
#include "ghom/graph.hpp"
#include "ghom/homology.hpp"
#include "ghom/int_linalg.hpp"

namespace ghom {

// Integer combination of edges, each edge oriented from its smaller to its
// larger endpoint. Zero coefficients are never stored.
class OrientedEdgeVector {
 public:
  // Adds k times the traversal u -> v.
  void add_step(Vertex u, Vertex v, std::int64_t k = 1);
  void add(const Edge& e, std::int64_t k);
  std::int64_t coefficient(const Edge& e) const;
  const std::map<Edge, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  OrientedEdgeVector& operator+=(const OrientedEdgeVector& o);
  OrientedEdgeVector& operator-=(const OrientedEdgeVector& o);
  friend OrientedEdgeVector operator+(OrientedEdgeVector a, const OrientedEdgeVector& b) { return a += b; }
  friend OrientedEdgeVector operator-(OrientedEdgeVector a, const OrientedEdgeVector& b) { return a -= b; }
  OrientedEdgeVector operator-() const;
  bool operator==(const OrientedEdgeVector&) const = default;

 private:
  std::map<Edge, std::int64_t> terms_;
};

std::string to_string(const OrientedEdgeVector& v);

OrientedEdgeVector to_edge_vector(const PerfectCycle& p);
// (a b c) counts as the steps a -> b and b -> c.
OrientedEdgeVector to_edge_vector(const Chain1& c);

// Cycle space of the simple graph modulo the lattice spanned by its triangles
// (a < b < c, lexicographic), each oriented a -> b -> c -> a.
class ReducedModel {
 public:
  explicit ReducedModel(const Graph& g, bool track_certificates = false);

  const Graph& graph() const { return graph_; }
  const std::vector<std::vector<Vertex>>& triangles() const { return triangles_; }
  std::size_t triangle_rank() const { return lattice_.rank(); }
  std::size_t cycle_rank() const { return cycles_.size(); }

  bool in_cycle_space(const OrientedEdgeVector& v) const;
  // Throws NotInCycleSpace.
  bool is_trivial(const OrientedEdgeVector& v) const;
  // Triangle index -> coefficient, or nothing when v is not trivial.
  std::optional<std::map<std::size_t, Integer>> certificate(const OrientedEdgeVector& v) const;

  HomologyGroup h1() const;

  SparseVector coordinates(const OrientedEdgeVector& v) const;
  // Hermite basis of the triangle lattice and a basis of the cycle space, in
  // edge-index coordinates.
  std::vector<BigSparseVector> triangle_basis() const { return lattice_.basis(); }
  const std::vector<BigSparseVector>& cycle_basis() const { return cycles_; }

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> triangles_;
  Lattice lattice_;
  std::vector<BigSparseVector> cycles_;  // fundamental cycles of a BFS forest
};

bool is_trivial_reduced(const Graph& g, const OrientedEdgeVector& v);
HomologyGroup h1_reduced(const Graph& g);

}  // namespace ghom
