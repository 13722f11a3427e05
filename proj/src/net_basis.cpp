#include "ghom/net_basis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ghom/errors.hpp"

namespace ghom {

std::size_t default_cycle_cap(int vertex_count) { return vertex_count <= 12 ? 0 : 8; }

namespace {

void require_chord(const CircleForm& cf, const Edge& e) {
  if (!cf.graph().has_edge(e)) throw std::invalid_argument(to_string(e) + " is not an edge");
  if (cf.is_rim(e)) throw std::invalid_argument(to_string(e) + " is a rim edge, not a chord");
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n) + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

TypedCycle typed_cycle(const CircleForm& cf, const Edge& chord, int type) {
  require_chord(cf, chord);
  const Vertex r = chord.lo(), s = chord.hi(), n = cf.n();
  std::vector<Vertex> w;
  switch (type) {
    case 1:
      w.push_back(r);
      for (Vertex x = s; x <= n; ++x) w.push_back(x);
      for (Vertex x = 1; x < r; ++x) w.push_back(x);
      break;
    case 2:
      w.push_back(r);
      for (Vertex x = s; x > r; --x) w.push_back(x);
      break;
    case 3:
      w.push_back(s);
      for (Vertex x = r; x >= 1; --x) w.push_back(x);
      for (Vertex x = n; x > s; --x) w.push_back(x);
      break;
    case 4:
      w.push_back(s);
      for (Vertex x = r; x < s; ++x) w.push_back(x);
      break;
    default:
      throw std::invalid_argument("cycle type must be 1..4, got " + std::to_string(type));
  }
  return {chord, type, PerfectCycle(std::move(w))};
}

PerfectCycle hamiltonian_cycle(const CircleForm& cf) {
  std::vector<Vertex> w(static_cast<std::size_t>(cf.n()));
  std::iota(w.begin(), w.end(), 1);
  return PerfectCycle(std::move(w));
}

bool type_relations_check(const CircleForm& cf, const ReducedModel& model, const Edge& chord) {
  OrientedEdgeVector h = to_edge_vector(hamiltonian_cycle(cf));
  OrientedEdgeVector t[5];
  for (int i = 1; i <= 4; ++i) t[i] = to_edge_vector(typed_cycle(cf, chord, i).walk);
  auto holds = [&](const OrientedEdgeVector& d) { return d.is_zero() || model.is_trivial(d); };
  return holds(t[2] + h - t[1]) && holds(t[3] + t[1]) && holds(t[4] - h + t[1]);
}

bool type_relations_check(const CircleForm& cf, const Edge& chord) {
  return type_relations_check(cf, ReducedModel(cf.graph()), chord);
}

CycleCatalog::CycleCatalog(const CircleForm& cf, std::size_t cap, std::size_t max_cycles)
    : cf_(cf), model_(cf.graph()), chords_(diagonal_edges(cf)), cap_(cap) {
  const Graph& g = cf_.graph();
  const int n = g.vertex_count();
  std::vector<Vertex> path;
  std::uint64_t used = 0;
  auto close = [&]() {
    std::vector<Edge> edges, chords;
    for (std::size_t i = 0; i < path.size(); ++i) {
      Edge e(path[i], path[(i + 1) % path.size()]);
      edges.push_back(e);
      if (chords_.count(e)) chords.push_back(e);
    }
    if (chords.size() < 2) return;
    if (entries_.size() >= max_cycles)
      throw EnumerationBudgetExceeded("more than " + std::to_string(max_cycles) + " cycles through two chords");
    std::sort(edges.begin(), edges.end());
    std::sort(chords.begin(), chords.end());
    PerfectCycle walk(path);
    bool trivial = model_.is_trivial(to_edge_vector(walk));
    entries_.push_back({std::move(walk), std::move(edges), std::move(chords), trivial});
  };
  auto extend = [&](auto&& self, Vertex start) -> void {
    Vertex u = path.back();
    for (Vertex w : g.neighbors(u)) {
      if (w == start && path.size() >= 3 && path[1] < path.back()) close();
      if (w <= start || (used >> (w - 1) & 1U)) continue;
      if (cap_ && path.size() >= cap_) continue;
      used |= std::uint64_t{1} << (w - 1);
      path.push_back(w);
      self(self, start);
      path.pop_back();
      used &= ~(std::uint64_t{1} << (w - 1));
    }
  };
  for (Vertex s = 1; s <= n; ++s) {
    path = {s};
    used = std::uint64_t{1} << (s - 1);
    extend(extend, s);
  }
}

std::vector<std::size_t> CycleCatalog::trivial_through(const Edge& e1, const Edge& e2) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry& en = entries_[i];
    if (!en.trivial) continue;
    if (std::binary_search(en.chords.begin(), en.chords.end(), e1) &&
        std::binary_search(en.chords.begin(), en.chords.end(), e2))
      out.push_back(i);
  }
  return out;
}

std::optional<PerfectCycle> edge_connected(const CycleCatalog& cat, const Edge& e1, const Edge& e2) {
  if (!cat.chords().count(e1) || !cat.chords().count(e2))
    throw std::invalid_argument("edge-connectedness is defined between chords");
  if (e1 == e2) throw std::invalid_argument("edge-connectedness needs two distinct chords");
  std::optional<PerfectCycle> best;
  for (std::size_t i : cat.trivial_through(e1, e2)) {
    PerfectCycle w = cat.entries()[i].walk;
    auto steps = w.steps();
    bool forward = std::any_of(steps.begin(), steps.end(),
                               [&](const EdgeStep& s) { return s.from == e1.lo() && s.to == e1.hi(); });
    if (!forward) w = w.reversed();
    w = rotate_to_min(w);
    if (!best || w.length() < best->length() || (w.length() == best->length() && w.walk() < best->walk()))
      best = std::move(w);
  }
  return best;
}

std::vector<Net> nets(const CycleCatalog& cat) {
  std::vector<Edge> chords(cat.chords().begin(), cat.chords().end());
  const std::size_t m = chords.size();
  if (m == 0) return {};
  std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!cat.trivial_through(chords[i], chords[j]).empty()) adj[i][j] = adj[j][i] = 1;

  std::vector<Net> out;
  // Bron-Kerbosch with pivoting; sets are sorted index vectors.
  auto bk = [&](auto&& self, std::vector<std::size_t> r, std::vector<std::size_t> p, std::vector<std::size_t> x) -> void {
    if (p.empty() && x.empty()) {
      Net net;
      for (std::size_t i : r) net.edges.push_back(chords[i]);
      std::sort(net.edges.begin(), net.edges.end());
      out.push_back(std::move(net));
      return;
    }
    std::size_t pivot = 0, best = 0;
    bool have = false;
    for (const auto* set : {&p, &x})
      for (std::size_t u : *set) {
        std::size_t deg = 0;
        for (std::size_t v : p) deg += adj[u][v];
        if (!have || deg > best) {
          pivot = u;
          best = deg;
          have = true;
        }
      }
    std::vector<std::size_t> candidates;
    for (std::size_t v : p)
      if (!adj[pivot][v]) candidates.push_back(v);
    for (std::size_t v : candidates) {
      std::vector<std::size_t> r2 = r, p2, x2;
      r2.push_back(v);
      for (std::size_t w : p)
        if (adj[v][w]) p2.push_back(w);
      for (std::size_t w : x)
        if (adj[v][w]) x2.push_back(w);
      self(self, r2, p2, x2);
      p.erase(std::find(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  };
  std::vector<std::size_t> all(m);
  std::iota(all.begin(), all.end(), 0);
  bk(bk, {}, all, {});
  std::sort(out.begin(), out.end());
  return out;
}

Subgraph net_subgraph(const CycleCatalog& cat, const Net& net) {
  Subgraph s;
  for (std::size_t i = 0; i < net.edges.size(); ++i)
    for (std::size_t j = i + 1; j < net.edges.size(); ++j)
      for (std::size_t id : cat.trivial_through(net.edges[i], net.edges[j])) {
        const auto& en = cat.entries()[id];
        for (Vertex v : en.walk.vertices()) s.vertices.insert(v);
        s.edges.insert(en.edges.begin(), en.edges.end());
      }
  return s;
}

SpanningSet spanning_set(const Subgraph& s, const std::set<Edge>& chords) {
  std::vector<std::pair<int, Edge>> order;
  for (const Edge& e : s.edges) order.emplace_back(chords.count(e) ? 1 : 0, e);
  std::sort(order.begin(), order.end());
  int top = s.vertices.empty() ? 0 : *s.vertices.rbegin();
  for (const Edge& e : s.edges) top = std::max(top, e.hi());
  UnionFind uf(top);
  SpanningSet out;
  for (const auto& [w, e] : order)
    if (uf.unite(e.lo(), e.hi())) {
      out.tree_edges.push_back(e);
      if (w == 1) out.chord_part.push_back(e);
    }
  std::sort(out.chord_part.begin(), out.chord_part.end());
  return out;
}

CardinalityReport cardinality_check(const Subgraph& s, const SpanningSet& ss, const std::set<Edge>& chords) {
  CardinalityReport out;
  out.actual = ss.chord_part.size();
  if (s.empty()) {
    out.skipped = true;
    out.note = "empty subgraph";
    return out;
  }
  long long rim = 0;
  int top = *s.vertices.rbegin();
  UnionFind uf(top);
  for (const Edge& e : s.edges) {
    if (chords.count(e)) continue;
    ++rim;
    if (!uf.unite(e.lo(), e.hi())) out.rim_acyclic = false;
  }
  out.formula = static_cast<long long>(s.vertices.size()) - rim - 1;
  out.match = out.formula == static_cast<long long>(out.actual);
  if (!out.rim_acyclic)
    out.note = "rim edges of the subgraph contain a cycle, so not all of them enter the tree";
  else if (!out.match)
    out.note = "formula and spanning set disagree although the rim part is acyclic";
  return out;
}

H1Basis h1_basis(const CycleCatalog& cat, int type) {
  if (type < 1 || type > 4) throw std::invalid_argument("cycle type must be 1..4, got " + std::to_string(type));
  const CircleForm& cf = cat.circle_form();
  const ReducedModel& model = cat.model();
  H1Basis out;
  out.type = type;
  std::set<Edge> candidates;
  for (Net& net : nets(cat)) {
    NetDetail d;
    d.subgraph = net_subgraph(cat, net);
    d.spanning = spanning_set(d.subgraph, cat.chords());
    d.cardinality = cardinality_check(d.subgraph, d.spanning, cat.chords());
    candidates.insert(d.spanning.chord_part.begin(), d.spanning.chord_part.end());
    d.net = std::move(net);
    out.nets.push_back(std::move(d));
  }
  std::vector<BasisEntry> all;
  all.push_back({true, std::nullopt, 0, hamiltonian_cycle(cf)});
  for (const Edge& e : candidates) all.push_back({false, e, type, typed_cycle(cf, e, type).walk});

  Lattice span(cf.graph().edge_count());
  for (const auto& v : model.triangle_basis()) span.insert(v);
  const std::size_t base_rank = span.rank();
  for (BasisEntry& en : all) {
    OrientedEdgeVector v = to_edge_vector(en.walk);
    if (model.is_trivial(v)) {
      out.filtered_trivial.push_back(std::move(en));
    } else {
      span.insert(model.coordinates(v));
      if (en.hamiltonian) out.includes_hamiltonian = true;
      out.classes.push_back(std::move(en));
    }
  }
  out.rank_claim = out.classes.size();
  out.independent = span.rank() == base_rank + out.classes.size();
  QuotientStructure rest = quotient_invariants(cf.graph().edge_count(), model.cycle_basis(), span.basis());
  out.spans = rest.rank == 0 && rest.torsion.empty();
  return out;
}

}  // namespace ghom
