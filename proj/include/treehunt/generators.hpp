#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "treehunt/graph.hpp"

namespace treehunt {

// xorshift64* generator. Fixed here so seeded corpora are bit-identical on
// every platform:
//   x ^= x >> 12; x ^= x << 25; x ^= x >> 27; return x * 0x2545F4914F6CDD1D
// A zero seed is replaced by 0x9E3779B97F4A7C15 (the generator has no zero state).
class XorShift64Star {
 public:
  explicit XorShift64Star(std::uint64_t seed) : state_(seed == 0 ? 0x9E3779B97F4A7C15ULL : seed) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  // Uniform-ish integer in [0, bound); plain modulo reduction.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// Fisher-Yates from the back: for i = size-1 .. 1, swap(i, next() % (i + 1)).
template <typename T>
void seeded_shuffle(std::vector<T>& items, XorShift64Star& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

inline Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

// Layout: originals 0..n-1, shadows n..2n-1 (shadow of u adjacent to N(u)), apex 2n.
inline Graph mycielskian(const Graph& g) {
  const Vertex n = g.order();
  std::vector<Edge> edges;
  edges.reserve(3 * g.size() + static_cast<std::size_t>(n));
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(n + u, v);
    edges.emplace_back(u, n + v);
  }
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(n + i, 2 * n);
  return Graph(2 * n + 1, edges);
}

// Mycielskian applied k times to C5; chromatic number 3 + k.
inline Graph iterated_mycielski(int k) {
  if (k < 0) throw GraphError("iteration count must be non-negative");
  Graph g = cycle(5);
  for (int i = 0; i < k; ++i) g = mycielskian(g);
  return g;
}

// k-subsets of {1..n}, lexicographic, as ascending vectors.
inline std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// Kneser graph KG(n, k): k-subsets adjacent when disjoint. Triangle-free when n < 3k.
inline Graph kneser(int n, int k) {
  if (k < 1 || n < 2 * k)
    throw GraphError("kneser needs k >= 1 and n >= 2k, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
  auto subsets = k_subsets(n, k);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      const auto& a = subsets[i];
      const auto& b = subsets[j];
      std::vector<int> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (common.empty()) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  return Graph(static_cast<Vertex>(subsets.size()), edges);
}

// Seeded triangle-free process: visit all pairs u < v (lexicographic, then
// shuffled), keep an edge unless it closes a triangle, stop at target_edges.
inline Graph random_triangle_free(int n, std::size_t target_edges, std::uint64_t seed) {
  if (n < 0) throw GraphError("negative vertex count");
  std::vector<Edge> candidates;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) candidates.emplace_back(u, v);
  XorShift64Star rng(seed);
  seeded_shuffle(candidates, rng);

  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  std::vector<Edge> kept;
  for (auto [u, v] : candidates) {
    if (kept.size() >= target_edges) break;
    bool closes = false;
    for (Vertex w = 0; w < n && !closes; ++w)
      closes = adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] &&
               adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
    if (closes) continue;
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    kept.emplace_back(u, v);
  }
  return Graph(n, kept);
}

}  // namespace treehunt
