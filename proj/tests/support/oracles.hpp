#pragma once

// Brute-force reference computations. Nothing here calls into the searches
// it is used to check; only Graph, TreeSpec::vertex_count and the generators
// are shared.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "treehunt/generators.hpp"
#include "treehunt/graph.hpp"
#include "treehunt/tree_patterns.hpp"

namespace treehunt::oracle {

inline bool has_triangle_by_triples(const Graph& g) {
  const Vertex n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return true;
  return false;
}

// Floyd-Warshall distances; INT_MAX/4 for unreachable.
inline std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  const int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) {
    d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    d[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline int radius_by_all_pairs(const Graph& g) {
  auto d = all_pairs(g);
  int best = std::numeric_limits<int>::max();
  for (const auto& row : d) best = std::min(best, *std::max_element(row.begin(), row.end()));
  return best;
}

// Smallest k admitting a proper k-coloring, by plain backtracking in index order.
inline int chromatic_by_exhaustion(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  if (n == 0) return 0;
  std::vector<int> col(n, -1);
  for (int k = 1;; ++k) {
    auto place = [&](auto&& self, std::size_t v) -> bool {
      if (v == n) return true;
      for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (std::size_t u = 0; u < v && ok; ++u)
          ok = !(g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)) && col[u] == c);
        if (!ok) continue;
        col[v] = c;
        if (self(self, v + 1)) return true;
      }
      col[v] = -1;
      return false;
    };
    if (place(place, 0)) return k;
  }
}

// Does the subgraph induced on subset, rooted at root, realize spec?
// Checks tree-ness (|E| = |V| - 1, connected) and every depth's child count.
inline bool subset_realizes(const Graph& g, const std::vector<Vertex>& subset, Vertex root, const TreeSpec& spec) {
  std::size_t edges = 0;
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (g.adjacent(subset[i], subset[j])) ++edges;
  if (edges + 1 != subset.size()) return false;
  std::vector<int> depth(subset.size(), -1);
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < subset.size(); ++i)
    if (subset[i] == root) {
      depth[i] = 0;
      queue.push_back(i);
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    int children = 0;
    for (std::size_t w = 0; w < subset.size(); ++w) {
      if (!g.adjacent(subset[u], subset[w]) || depth[w] >= 0) continue;
      depth[w] = depth[u] + 1;
      queue.push_back(w);
      ++children;
    }
    const auto d = static_cast<std::size_t>(depth[u]);
    const int want = d < spec.level_degrees.size() ? spec.level_degrees[d] : 0;
    if (children != want) return false;
  }
  return queue.size() == subset.size();
}

// Roots r such that some vertex subset containing r induces spec rooted at r.
inline std::vector<Vertex> roots_by_subset_enumeration(const Graph& g, const TreeSpec& spec) {
  const auto k = spec.vertex_count();
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<bool> is_root(n, false);
  if (k > n) return {};
  std::vector<Vertex> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
  while (true) {
    for (Vertex r : pick)
      if (!is_root[static_cast<std::size_t>(r)] && subset_realizes(g, pick, r, spec))
        is_root[static_cast<std::size_t>(r)] = true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == static_cast<Vertex>(n - k + i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < n; ++v)
    if (is_root[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

inline bool contains_by_subset_enumeration(const Graph& g, const TreeSpec& spec) {
  return !roots_by_subset_enumeration(g, spec).empty();
}

// Lexicographically least map (tree BFS order -> host) with siblings in
// increasing host order, found by trying every ordering of every subset.
inline std::optional<std::vector<Vertex>> least_embedding_by_permutation(const Graph& g, const TreeSpec& spec) {
  const TreeGraph tree = build_tree(spec);
  const auto k = spec.vertex_count();
  const auto n = static_cast<std::size_t>(g.order());
  if (k > n) return std::nullopt;
  std::optional<std::vector<Vertex>> best;
  std::vector<Vertex> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
  while (true) {
    bool any_root = false;
    for (Vertex r : pick) any_root = any_root || subset_realizes(g, pick, r, spec);
    if (any_root) {
      std::vector<Vertex> perm = pick;
      do {
        bool ok = true;
        for (std::size_t a = 0; a < k && ok; ++a)
          for (std::size_t b = a + 1; b < k && ok; ++b)
            ok = tree.graph.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b)) == g.adjacent(perm[a], perm[b]);
        for (std::size_t a = 1; a < k && ok; ++a)
          if (tree.parent_of[a] == tree.parent_of[a - 1]) ok = perm[a - 1] < perm[a];
        if (ok && (!best || perm < *best)) best = perm;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == static_cast<Vertex>(n - k + i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

// Exhaustive isomorphism test by trying all vertex permutations.
inline bool isomorphic_by_permutation(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(static_cast<std::size_t>(a.order()));
  for (Vertex v = 0; v < a.order(); ++v) perm[static_cast<std::size_t>(v)] = v;
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!b.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Seeded G(n, 1/2)-style graph, for inputs that are not triangle-free.
inline Graph random_graph(int n, std::uint64_t seed, int percent = 50) {
  XorShift64Star rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (static_cast<int>(rng.below(100)) < percent) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// Pieces found by scanning all 5-tuples against the definition, least first.
struct Quintuple {
  Vertex v1, w1a, w1b, x1a, x1b;
  friend bool operator==(const Quintuple&, const Quintuple&) = default;
};

inline std::optional<Quintuple> least_piece_by_enumeration(const Graph& g, const std::vector<Vertex>& s1,
                                                           const std::vector<Vertex>& s2) {
  auto in2 = [&](Vertex x) { return std::find(s2.begin(), s2.end(), x) != s2.end(); };
  for (Vertex v1 : s1)
    for (Vertex a : s2)
      for (Vertex b : s2) {
        if (a >= b || !g.adjacent(v1, a) || !g.adjacent(v1, b)) continue;
        for (Vertex xa : s2)
          for (Vertex xb : s2) {
            if (!in2(xa) || !in2(xb)) continue;
            if (!g.adjacent(a, xa) || g.adjacent(b, xa)) continue;
            if (!g.adjacent(b, xb) || g.adjacent(a, xb)) continue;
            if (g.adjacent(xa, xb)) continue;
            const std::vector<Vertex> five{v1, a, b, xa, xb};
            const std::vector<std::pair<int, int>> tree_edges{{0, 1}, {0, 2}, {1, 3}, {2, 4}};
            bool induced = true;
            for (int i = 0; i < 5 && induced; ++i)
              for (int j = i + 1; j < 5 && induced; ++j) {
                const bool want = std::find(tree_edges.begin(), tree_edges.end(), std::pair{i, j}) != tree_edges.end();
                if (five[static_cast<std::size_t>(i)] == five[static_cast<std::size_t>(j)]) induced = false;
                else induced = g.adjacent(five[static_cast<std::size_t>(i)], five[static_cast<std::size_t>(j)]) == want;
              }
            if (induced) return Quintuple{v1, a, b, xa, xb};
          }
      }
  return std::nullopt;
}

}  // namespace treehunt::oracle
