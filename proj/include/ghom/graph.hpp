#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ghom {

// Vertices are labelled 1..n.
using Vertex = int;

// Closed-neighbourhood bitmasks cap the vertex count.
inline constexpr int kMaxVertices = 64;

// Unordered pair of distinct vertices, stored with lo < hi.
class Edge {
 public:
  Edge(Vertex a, Vertex b);

  Vertex lo() const { return lo_; }
  Vertex hi() const { return hi_; }
  bool touches(Vertex v) const { return v == lo_ || v == hi_; }

  auto operator<=>(const Edge&) const = default;

 private:
  Vertex lo_;
  Vertex hi_;
};

std::string to_string(const Edge& e);

// Finite undirected reflexive graph, stored as its simple-graph correspondent:
// the loop at each vertex is implicit and never recorded.
class Graph {
 public:
  explicit Graph(int vertex_count);
  Graph(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Irreflexive adjacency.
  bool adjacent(Vertex u, Vertex v) const;
  // Closed neighbourhood test: true when u == v or u ~ v.
  bool related(Vertex u, Vertex v) const { return u == v || adjacent(u, v); }
  bool has_edge(const Edge& e) const { return adjacent(e.lo(), e.hi()); }

  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v]; }
  // Bit (w-1) set iff w is in the closed neighbourhood of v.
  std::uint64_t closed_mask(Vertex v) const { return closed_[v]; }
  std::uint64_t all_mask() const;

  // Lexicographically sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> edge_index(const Edge& e) const;

  bool is_connected() const;
  int component_count() const;

  // Triangles (a < b < c) in lexicographic order.
  std::vector<std::vector<Vertex>> triangles() const;

  // Graph with vertex v renamed to perm[v]; perm is a bijection on 1..n
  // (perm[0] ignored).
  Graph relabeled(const std::vector<Vertex>& perm) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  void check_vertex(Vertex v) const;

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<std::uint64_t> closed_;
};

// Parsed edge-list document: the graph plus an optional pinned Hamiltonian
// cycle (given without the repeated closing vertex).
struct GraphDocument {
  Graph graph;
  std::optional<std::vector<Vertex>> pinned_cycle;
};

// Format: first non-comment line is n; then one "u v" per line; optionally a
// line "H: v1 ... vn". '#' starts a comment. Throws ParseError.
GraphDocument parse_graph_document(std::string_view text);
Graph parse_graph(std::string_view text);
GraphDocument load_graph_document(const std::string& path);

std::string format_graph(const Graph& g, const std::optional<std::vector<Vertex>>& pinned = {});

// Deterministic backtracking from vertex 1, neighbours in ascending order.
// Returns v1..vn (closing vertex not repeated) or nothing.
std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const Graph& g);

// Accepts the cycle with or without the repeated closing vertex.
bool is_hamiltonian_cycle(const Graph& g, const std::vector<Vertex>& cycle);

// Relabelling of a Hamiltonian graph so that 1,2,...,n,1 is the pinned cycle.
class CircleForm {
 public:
  const Graph& graph() const { return graph_; }
  int n() const { return graph_.vertex_count(); }
  // Circle-form label -> label in the source graph.
  Vertex original_label(Vertex v) const { return to_original_[v]; }
  // Source label -> circle-form label.
  Vertex circle_label(Vertex v) const { return to_circle_[v]; }
  const std::vector<Vertex>& original_labels() const { return to_original_; }

  bool is_rim(const Edge& e) const;
  std::vector<Edge> rim_edges() const;

 private:
  friend CircleForm to_circle_form(const Graph& g, const std::vector<Vertex>& cycle);
  CircleForm(Graph g, std::vector<Vertex> to_original, std::vector<Vertex> to_circle);

  Graph graph_;
  std::vector<Vertex> to_original_;
  std::vector<Vertex> to_circle_;
};

// Throws NotHamiltonian when the sequence is not a Hamiltonian cycle of g.
CircleForm to_circle_form(const Graph& g, const std::vector<Vertex>& cycle);

// Chords of the circle form: all edges other than {i,i+1} and {n,1}.
std::set<Edge> diagonal_edges(const CircleForm& cf);

// Diagonal neighbourhood of v: N(v) minus v and its two rim neighbours.
std::set<Vertex> diagonal_neighbors(const CircleForm& cf, Vertex v);

namespace graphs {
Graph cycle(int n);
Graph complete(int n);
Graph path(int n);
}  // namespace graphs

}  // namespace ghom
