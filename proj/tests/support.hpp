#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ghom/chain.hpp"
#include "ghom/graph.hpp"

namespace testing_support {

using namespace ghom;

inline Chain1 walk_chain(const std::vector<Vertex>& w) {
  Chain1 c;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) c.add(Simplex1{w[i], w[i], w[i + 1]}, 1);
  return c;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// Rim 1..8 plus the chords 13, 24, 35, 46, 57, 16, 17.
inline Graph two_nets_graph() {
  std::vector<Edge> edges;
  for (int i = 1; i <= 8; ++i) edges.emplace_back(i, i % 8 + 1);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}, {1, 6}, {1, 7}})
    edges.emplace_back(a, b);
  return Graph(8, edges);
}

// Random element of the kernel of the first differential: a sum of closed
// chains of generators, each scaled by a small nonzero integer.
inline Chain1 random_cycle(const Graph& g, std::mt19937_64& rng, int loops = 2) {
  const int n = g.vertex_count();
  auto closed = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w = 1; w <= n; ++w)
      if (g.related(v, w)) out.push_back(w);
    return out;
  };
  auto pick = [&](const std::vector<Vertex>& xs) { return xs[rng() % xs.size()]; };
  Chain1 total;
  for (int l = 0; l < loops; ++l) {
    Vertex start = static_cast<Vertex>(1 + rng() % n);
    std::vector<Vertex> stops{start};
    int len = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < len; ++i) {
      // Two reflexive steps per generator.
      Vertex b = pick(closed(stops.back()));
      stops.push_back(pick(closed(b)));
    }
    // Walk back along the reversed stops so the chain closes.
    Chain1 loop;
    std::vector<Vertex> mids;
    for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
      std::vector<Vertex> common;
      for (Vertex w : closed(stops[i]))
        if (g.related(w, stops[i + 1])) common.push_back(w);
      Vertex b = pick(common);
      loop.add(Simplex1{stops[i], b, stops[i + 1]}, 1);
    }
    for (std::size_t i = stops.size() - 1; i > 0; --i) {
      std::vector<Vertex> common;
      for (Vertex w : closed(stops[i]))
        if (g.related(w, stops[i - 1])) common.push_back(w);
      loop.add(Simplex1{stops[i], pick(common), stops[i - 1]}, 1);
    }
    std::int64_t k = static_cast<std::int64_t>(rng() % 5) - 2;
    if (k == 0) k = 3;
    total += k * loop;
  }
  return reduce_mod_degenerate(total);
}

inline bool is_connected_mask(int n, unsigned mask, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (mask >> i & 1U) edges.emplace_back(pairs[i].first, pairs[i].second);
  return Graph(n, edges).is_connected();
}

// Connected graphs on exactly n vertices, one per isomorphism class.
inline std::vector<Graph> connected_graphs_up_to_iso(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  auto pair_index = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), std::make_pair(u, v)) - pairs.begin());
  };
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::set<unsigned> seen;
  std::vector<Graph> out;
  for (unsigned mask = 0; mask < (1U << pairs.size()); ++mask) {
    unsigned canon = mask;
    for (const auto& q : perms) {
      unsigned image = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1U) image |= 1U << pair_index(q[pairs[i].first - 1], q[pairs[i].second - 1]);
      canon = std::min(canon, image);
    }
    if (!seen.insert(canon).second) continue;
    if (!is_connected_mask(n, canon, pairs)) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (canon >> i & 1U) edges.emplace_back(pairs[i].first, pairs[i].second);
    out.emplace_back(n, edges);
  }
  return out;
}

}  // namespace testing_support
