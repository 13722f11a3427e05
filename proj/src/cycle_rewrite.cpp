#include "ghom/cycle_rewrite.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "ghom/errors.hpp"

namespace ghom {

PerfectCycle::PerfectCycle(std::vector<Vertex> walk) : walk_(std::move(walk)) {
  if (walk_.empty()) throw std::invalid_argument("empty walk");
  if (walk_.size() == 1 || walk_.front() != walk_.back()) walk_.push_back(walk_.front());
  if (walk_.size() < 3) throw std::invalid_argument("a perfect cycle needs at least two steps");
  for (std::size_t i = 0; i + 1 < walk_.size(); ++i)
    if (walk_[i] == walk_[i + 1])
      throw std::invalid_argument("walk stays at vertex " + std::to_string(walk_[i]));
}

std::vector<EdgeStep> PerfectCycle::steps() const {
  std::vector<EdgeStep> out;
  for (std::size_t i = 0; i + 1 < walk_.size(); ++i) out.push_back({walk_[i], walk_[i + 1]});
  return out;
}

Chain1 PerfectCycle::chain() const {
  Chain1 c;
  for (const EdgeStep& s : steps()) c.add(s.generator(), 1);
  return c;
}

PerfectCycle PerfectCycle::reversed() const { return PerfectCycle({walk_.rbegin(), walk_.rend()}); }

bool PerfectCycle::is_vertex_simple() const {
  auto v = vertices();
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

void PerfectCycle::validate(const Graph& g) const {
  for (Vertex v : walk_)
    if (v < 1 || v > g.vertex_count())
      throw NotACycle("walk " + format_walk(*this) + " leaves the vertex range 1.." + std::to_string(g.vertex_count()));
  for (const EdgeStep& s : steps())
    if (!g.adjacent(s.from, s.to))
      throw NotACycle("walk " + format_walk(*this) + " uses the non-edge " + std::to_string(s.from) + "-" +
                      std::to_string(s.to));
}

ProperCycle::ProperCycle(std::vector<Simplex1> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("empty proper cycle");
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].c != terms_[(i + 1) % terms_.size()].a)
      throw std::invalid_argument("generators are not endpoint-matched");
}

Chain1 ProperCycle::chain() const {
  Chain1 c;
  for (const Simplex1& s : terms_) c.add(s, 1);
  return c;
}

PerfectCycle ProperCycle::subdivide() const {
  std::vector<Vertex> walk{terms_.front().a};
  for (const Simplex1& s : terms_)
    for (Vertex v : {s.b, s.c})
      if (v != walk.back()) walk.push_back(v);
  return PerfectCycle(std::move(walk));
}

PerfectCycle parse_walk(std::string_view text, std::optional<int> vertex_count) {
  std::vector<Vertex> walk;
  bool separated = text.find_first_of(", \t") != std::string_view::npos;
  auto check = [&](long long v) {
    if (v < 1 || (vertex_count && v > *vertex_count))
      throw ParseError("walk label " + std::to_string(v) + " out of range");
    walk.push_back(static_cast<Vertex>(v));
  };
  if (separated) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ',' || text[i] == ' ' || text[i] == '\t')) ++i;
      if (i == text.size()) break;
      long long v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc() || ptr == text.data() + i) throw ParseError("bad walk label in '" + std::string(text) + "'");
      check(v);
      i = static_cast<std::size_t>(ptr - text.data());
      if (i < text.size() && text[i] != ',' && text[i] != ' ' && text[i] != '\t')
        throw ParseError("bad walk label in '" + std::string(text) + "'");
    }
  } else {
    if (vertex_count && *vertex_count >= 10)
      throw ParseError("graphs with 10 or more vertices need comma-separated walks");
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw ParseError("bad walk character '" + std::string(1, ch) + "'");
      check(ch - '0');
    }
  }
  try {
    return PerfectCycle(std::move(walk));
  } catch (const std::invalid_argument& e) {
    throw ParseError("walk '" + std::string(text) + "': " + e.what());
  }
}

std::string format_walk(const PerfectCycle& p) {
  bool compact = std::all_of(p.walk().begin(), p.walk().end(), [](Vertex v) { return v < 10; });
  std::string out;
  for (std::size_t i = 0; i < p.walk().size(); ++i) {
    if (!compact && i) out += ',';
    out += std::to_string(p.walk()[i]);
  }
  return out;
}

std::vector<ProperCycle> to_proper_cycles(const Chain1& c) {
  Chain1 r = reduce_mod_degenerate(c);
  if (!boundary_1(r).is_zero()) throw NotACycle("chain " + to_string(r) + " has nonzero boundary");
  // Negative terms become reversed generators.
  std::map<Vertex, std::multiset<Simplex1>> out_arcs;
  for (const auto& [s, k] : r.terms()) {
    Simplex1 t = k > 0 ? s : Simplex1{s.c, s.b, s.a};
    std::int64_t m = k > 0 ? k : -k;
    for (std::int64_t i = 0; i < m; ++i) out_arcs[t.a].insert(t);
  }
  std::vector<ProperCycle> cycles;
  while (!out_arcs.empty()) {
    Vertex start = out_arcs.begin()->first;
    // Iterative Hierholzer; arcs are collected in reverse on backtrack.
    std::vector<std::pair<Vertex, std::optional<Simplex1>>> stack{{start, std::nullopt}};
    std::vector<Simplex1> circuit;
    while (!stack.empty()) {
      Vertex v = stack.back().first;
      auto it = out_arcs.find(v);
      if (it != out_arcs.end()) {
        Simplex1 arc = *it->second.begin();
        it->second.erase(it->second.begin());
        if (it->second.empty()) out_arcs.erase(it);
        stack.emplace_back(arc.c, arc);
      } else {
        if (stack.back().second) circuit.push_back(*stack.back().second);
        stack.pop_back();
      }
    }
    std::reverse(circuit.begin(), circuit.end());
    cycles.emplace_back(std::move(circuit));
  }
  return cycles;
}

std::vector<PerfectCycle> normalize_to_perfect(const Graph& g, const Chain1& c) {
  std::vector<PerfectCycle> out;
  for (const ProperCycle& p : to_proper_cycles(c)) {
    PerfectCycle q = p.subdivide();
    q.validate(g);
    out.push_back(std::move(q));
  }
  return out;
}

Simplex2 triangle_witness(const Graph& g, Vertex a, Vertex b, Vertex c) {
  if (!g.adjacent(a, b) || !g.adjacent(b, c) || !g.adjacent(c, a))
    throw std::invalid_argument("vertices " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                std::to_string(c) + " are not pairwise adjacent");
  return Simplex2{{a, c, c}, {a, b, b}, {a, a, b}};
}

PerfectCycle rotate_to_min(const PerfectCycle& p) {
  auto v = p.vertices();
  std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
  return PerfectCycle(std::move(v));
}

std::set<Edge> splitting_edges(const Graph& g, const PerfectCycle& p) {
  if (!p.is_vertex_simple()) throw std::invalid_argument("splitting edges need a vertex-simple cycle");
  auto v = p.vertices();
  const std::size_t m = v.size();
  std::set<Edge> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      if (g.adjacent(v[i], v[j])) out.emplace(v[i], v[j]);
    }
  return out;
}

std::vector<PerfectCycle> cycle_components(const Graph& g, const PerfectCycle& p) {
  if (p.length() <= 3) return {p};
  auto chords = splitting_edges(g, p);
  if (chords.empty()) return {p};
  const Edge e = *chords.begin();
  auto v = p.vertices();
  std::size_t i = static_cast<std::size_t>(std::find(v.begin(), v.end(), e.lo()) - v.begin());
  std::size_t j = static_cast<std::size_t>(std::find(v.begin(), v.end(), e.hi()) - v.begin());
  if (i > j) std::swap(i, j);
  std::vector<Vertex> inner(v.begin() + static_cast<std::ptrdiff_t>(i), v.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  std::vector<Vertex> outer(v.begin() + static_cast<std::ptrdiff_t>(j), v.end());
  outer.insert(outer.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  std::vector<PerfectCycle> out;
  for (auto* piece : {&inner, &outer})
    for (PerfectCycle& q : cycle_components(g, rotate_to_min(PerfectCycle(*piece)))) out.push_back(std::move(q));
  return out;
}

bool is_completely_perfect(const Graph& g, const PerfectCycle& p) {
  if (p.length() <= 3) throw std::invalid_argument("complete perfection is defined for cycles longer than 3");
  return splitting_edges(g, p).empty();
}

}  // namespace ghom
