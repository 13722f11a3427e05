#include "ghom/reduced.hpp"

#include <queue>

#include "ghom/errors.hpp"

namespace ghom {

void OrientedEdgeVector::add(const Edge& e, std::int64_t k) {
  if (k == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, k);
  if (fresh) return;
  it->second = arith::add(it->second, k);
  if (it->second == 0) terms_.erase(it);
}

void OrientedEdgeVector::add_step(Vertex u, Vertex v, std::int64_t k) {
  if (u == v) return;
  add(Edge(u, v), u < v ? k : arith::neg(k));
}

std::int64_t OrientedEdgeVector::coefficient(const Edge& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

OrientedEdgeVector& OrientedEdgeVector::operator+=(const OrientedEdgeVector& o) {
  for (const auto& [e, k] : o.terms_) add(e, k);
  return *this;
}

OrientedEdgeVector& OrientedEdgeVector::operator-=(const OrientedEdgeVector& o) {
  for (const auto& [e, k] : o.terms_) add(e, arith::neg(k));
  return *this;
}

OrientedEdgeVector OrientedEdgeVector::operator-() const {
  OrientedEdgeVector out;
  return out -= *this;
}

std::string to_string(const OrientedEdgeVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [e, k] : v.terms()) {
    if (!out.empty()) out += ' ';
    out += (k < 0 ? "-" : "+");
    std::int64_t m = k < 0 ? -k : k;
    if (m != 1) out += std::to_string(m);
    out += "e" + std::to_string(e.lo()) + "," + std::to_string(e.hi());
  }
  return out;
}

OrientedEdgeVector to_edge_vector(const PerfectCycle& p) {
  OrientedEdgeVector out;
  for (const EdgeStep& s : p.steps()) out.add_step(s.from, s.to);
  return out;
}

OrientedEdgeVector to_edge_vector(const Chain1& c) {
  OrientedEdgeVector out;
  for (const auto& [s, k] : c.terms()) {
    if (is_degenerate(s)) continue;
    out.add_step(s.a, s.b, k);
    out.add_step(s.b, s.c, k);
  }
  return out;
}

ReducedModel::ReducedModel(const Graph& g, bool track)
    : graph_(g), triangles_(g.triangles()), lattice_(g.edge_count(), track) {
  for (const auto& t : triangles_) {
    OrientedEdgeVector v;
    v.add_step(t[0], t[1]);
    v.add_step(t[1], t[2]);
    v.add_step(t[2], t[0]);
    lattice_.insert(coordinates(v));
  }
  // Fundamental cycles: each non-tree edge closed through the BFS forest.
  const int n = g.vertex_count();
  std::vector<Vertex> parent(n + 1, 0);
  std::vector<int> depth(n + 1, -1);
  for (Vertex root = 1; root <= n; ++root) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u))
        if (depth[w] < 0) {
          depth[w] = depth[u] + 1;
          parent[w] = u;
          q.push(w);
        }
    }
  }
  for (const Edge& e : g.edges()) {
    Vertex u = e.lo(), v = e.hi();
    if (parent[v] == u || parent[u] == v) continue;
    OrientedEdgeVector cyc;
    cyc.add_step(u, v);
    // Walk v and u up to their common ancestor: v -> ... -> lca <- ... <- u.
    Vertex x = v, y = u;
    while (x != y) {
      if (depth[x] >= depth[y]) {
        cyc.add_step(x, parent[x]);
        x = parent[x];
      } else {
        cyc.add_step(parent[y], y);
        y = parent[y];
      }
    }
    cycles_.push_back(to_big(coordinates(cyc)));
  }
}

SparseVector ReducedModel::coordinates(const OrientedEdgeVector& v) const {
  SparseVector out;
  for (const auto& [e, k] : v.terms()) {
    auto i = graph_.edge_index(e);
    if (!i) throw NotInCycleSpace("vector uses " + to_string(e) + ", which is not an edge");
    out.emplace_back(*i, k);
  }
  return out;
}

bool ReducedModel::in_cycle_space(const OrientedEdgeVector& v) const {
  std::map<Vertex, std::int64_t> net;
  for (const auto& [e, k] : v.terms()) {
    if (!graph_.has_edge(e)) return false;
    net[e.hi()] = arith::add(net[e.hi()], k);
    net[e.lo()] = arith::sub(net[e.lo()], k);
  }
  for (const auto& [x, k] : net)
    if (k != 0) return false;
  return true;
}

bool ReducedModel::is_trivial(const OrientedEdgeVector& v) const {
  if (!in_cycle_space(v)) throw NotInCycleSpace("vector " + to_string(v) + " is not a cycle of the graph");
  return lattice_.contains(coordinates(v));
}

std::optional<std::map<std::size_t, Integer>> ReducedModel::certificate(const OrientedEdgeVector& v) const {
  if (!in_cycle_space(v)) throw NotInCycleSpace("vector " + to_string(v) + " is not a cycle of the graph");
  return lattice_.certificate(to_big(coordinates(v)));
}

HomologyGroup ReducedModel::h1() const {
  return homology_from_quotient(quotient_invariants(graph_.edge_count(), cycles_, lattice_.basis()));
}

bool is_trivial_reduced(const Graph& g, const OrientedEdgeVector& v) { return ReducedModel(g).is_trivial(v); }

HomologyGroup h1_reduced(const Graph& g) { return ReducedModel(g).h1(); }

}  // namespace ghom
