#include "ghom/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "ghom/errors.hpp"

namespace ghom {

Edge::Edge(Vertex a, Vertex b) : lo_(std::min(a, b)), hi_(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("edge endpoints must be distinct");
}

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.lo()) + "," + std::to_string(e.hi()) + "}";
}

Graph::Graph(int vertex_count) : Graph(vertex_count, {}) {}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges)
    : n_(vertex_count), nbrs_(vertex_count + 1), closed_(vertex_count + 1, 0) {
  if (n_ < 1 || n_ > kMaxVertices)
    throw std::invalid_argument("vertex count must be in 1.." + std::to_string(kMaxVertices));
  std::set<Edge> unique(edges.begin(), edges.end());
  edges_.assign(unique.begin(), unique.end());
  for (Vertex v = 1; v <= n_; ++v) closed_[v] = std::uint64_t{1} << (v - 1);
  for (const Edge& e : edges_) {
    check_vertex(e.lo());
    check_vertex(e.hi());
    nbrs_[e.lo()].push_back(e.hi());
    nbrs_[e.hi()].push_back(e.lo());
    closed_[e.lo()] |= std::uint64_t{1} << (e.hi() - 1);
    closed_[e.hi()] |= std::uint64_t{1} << (e.lo() - 1);
  }
  for (auto& list : nbrs_) std::sort(list.begin(), list.end());
}

void Graph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_ || u == v) return false;
  return (closed_[u] >> (v - 1)) & 1U;
}

std::uint64_t Graph::all_mask() const {
  return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

std::optional<std::size_t> Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

int Graph::component_count() const {
  std::vector<int> seen(n_ + 1, 0);
  int count = 0;
  for (Vertex s = 1; s <= n_; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : nbrs_[u])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return count;
}

bool Graph::is_connected() const { return component_count() == 1; }

std::vector<std::vector<Vertex>> Graph::triangles() const {
  std::vector<std::vector<Vertex>> out;
  for (Vertex a = 1; a <= n_; ++a)
    for (Vertex b : nbrs_[a]) {
      if (b <= a) continue;
      for (Vertex c : nbrs_[b])
        if (c > b && adjacent(a, c)) out.push_back({a, b, c});
    }
  return out;
}

Graph Graph::relabeled(const std::vector<Vertex>& perm) const {
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) edges.emplace_back(perm.at(e.lo()), perm.at(e.hi()));
  return Graph(n_, edges);
}

namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<long long> parse_ints(std::string_view s, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t') {
      ++i;
      continue;
    }
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
    if (ec != std::errc() || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t'))
      throw ParseError("line " + std::to_string(line_no) + ": expected integers, got '" +
                       std::string(s) + "'");
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - s.data());
  }
  return out;
}

}  // namespace

GraphDocument parse_graph_document(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::optional<std::vector<Vertex>> pinned;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    if (!n) {
      auto v = parse_ints(line, line_no);
      if (v.size() != 1) throw ParseError(where() + "first line must be the vertex count");
      if (v[0] < 1 || v[0] > kMaxVertices)
        throw ParseError(where() + "vertex count must be in 1.." + std::to_string(kMaxVertices));
      n = static_cast<int>(v[0]);
    } else if (line.front() == 'H') {
      line.remove_prefix(1);
      line = trim(line);
      if (line.empty() || line.front() != ':') throw ParseError(where() + "expected 'H:'");
      line.remove_prefix(1);
      if (pinned) throw ParseError(where() + "duplicate H: line");
      std::vector<Vertex> cycle;
      for (long long v : parse_ints(trim(line), line_no)) {
        if (v < 1 || v > *n) throw ParseError(where() + "vertex " + std::to_string(v) + " out of range");
        cycle.push_back(static_cast<Vertex>(v));
      }
      pinned = std::move(cycle);
    } else {
      auto v = parse_ints(line, line_no);
      if (v.size() != 2) throw ParseError(where() + "expected an edge 'u v'");
      for (long long x : v)
        if (x < 1 || x > *n)
          throw ParseError(where() + "vertex " + std::to_string(x) + " out of range 1.." +
                           std::to_string(*n));
      if (v[0] == v[1])
        throw ParseError(where() + "self-loop listed explicitly; loops are implicit");
      edges.emplace_back(static_cast<Vertex>(v[0]), static_cast<Vertex>(v[1]));
    }
    if (end == text.size()) break;
  }
  if (!n) throw ParseError("empty document: missing vertex count");
  GraphDocument doc{Graph(*n, edges), std::move(pinned)};
  if (doc.pinned_cycle) {
    auto& c = *doc.pinned_cycle;
    if (c.size() == static_cast<std::size_t>(*n) + 1 && c.front() == c.back()) c.pop_back();
    if (!is_hamiltonian_cycle(doc.graph, c))
      throw ParseError("H: line is not a Hamiltonian cycle of the graph");
  }
  return doc;
}

Graph parse_graph(std::string_view text) { return parse_graph_document(text).graph; }

GraphDocument load_graph_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph_document(ss.str());
}

std::string format_graph(const Graph& g, const std::optional<std::vector<Vertex>>& pinned) {
  std::ostringstream os;
  os << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) os << e.lo() << ' ' << e.hi() << '\n';
  if (pinned) {
    os << "H:";
    for (Vertex v : *pinned) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

bool is_hamiltonian_cycle(const Graph& g, const std::vector<Vertex>& cycle_in) {
  std::vector<Vertex> cycle = cycle_in;
  const int n = g.vertex_count();
  if (n < 3) return false;
  if (cycle.size() == static_cast<std::size_t>(n) + 1 && cycle.front() == cycle.back()) cycle.pop_back();
  if (cycle.size() != static_cast<std::size_t>(n)) return false;
  std::vector<int> seen(n + 1, 0);
  for (Vertex v : cycle) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % n])) return false;
  return true;
}

std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || !g.is_connected()) return std::nullopt;
  for (Vertex v = 1; v <= n; ++v)
    if (g.neighbors(v).size() < 2) return std::nullopt;
  std::vector<Vertex> path{1};
  std::uint64_t used = 1;
  std::function<bool()> extend = [&]() -> bool {
    Vertex u = path.back();
    if (static_cast<int>(path.size()) == n) return g.adjacent(u, 1);
    for (Vertex w : g.neighbors(u)) {
      std::uint64_t bit = std::uint64_t{1} << (w - 1);
      if (used & bit) continue;
      used |= bit;
      path.push_back(w);
      if (extend()) return true;
      path.pop_back();
      used &= ~bit;
    }
    return false;
  };
  if (extend()) return path;
  return std::nullopt;
}

CircleForm::CircleForm(Graph g, std::vector<Vertex> to_original, std::vector<Vertex> to_circle)
    : graph_(std::move(g)), to_original_(std::move(to_original)), to_circle_(std::move(to_circle)) {}

bool CircleForm::is_rim(const Edge& e) const {
  return e.hi() == e.lo() + 1 || (e.lo() == 1 && e.hi() == n());
}

std::vector<Edge> CircleForm::rim_edges() const {
  std::vector<Edge> out;
  for (Vertex i = 1; i < n(); ++i) out.emplace_back(i, i + 1);
  out.emplace_back(1, n());
  std::sort(out.begin(), out.end());
  return out;
}

CircleForm to_circle_form(const Graph& g, const std::vector<Vertex>& cycle_in) {
  if (!is_hamiltonian_cycle(g, cycle_in)) throw NotHamiltonian("sequence is not a Hamiltonian cycle");
  std::vector<Vertex> cycle = cycle_in;
  const int n = g.vertex_count();
  if (cycle.size() == static_cast<std::size_t>(n) + 1) cycle.pop_back();
  std::vector<Vertex> to_original(n + 1, 0), to_circle(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    to_original[i + 1] = cycle[i];
    to_circle[cycle[i]] = i + 1;
  }
  Graph relabeled = g.relabeled(to_circle);
  return CircleForm(std::move(relabeled), std::move(to_original), std::move(to_circle));
}

std::set<Vertex> diagonal_neighbors(const CircleForm& cf, Vertex v) {
  const int n = cf.n();
  std::set<Vertex> excluded;
  if (v == 1)
    excluded = {1, 2, n};
  else if (v == n)
    excluded = {1, n - 1, n};
  else
    excluded = {v - 1, v, v + 1};
  std::set<Vertex> out;
  for (Vertex w : cf.graph().neighbors(v))
    if (!excluded.count(w)) out.insert(w);
  return out;
}

std::set<Edge> diagonal_edges(const CircleForm& cf) {
  std::set<Edge> out;
  for (const Edge& e : cf.graph().edges())
    if (!cf.is_rim(e)) out.insert(e);
  return out;
}

namespace graphs {

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  if (n >= 3) edges.emplace_back(n, 1);
  return Graph(n, edges);
}

Graph complete(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

}  // namespace graphs

}  // namespace ghom
