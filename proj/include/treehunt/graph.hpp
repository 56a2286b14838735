#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treehunt {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Strictly increasing list of vertex indices.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
  explicit VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  // Caller guarantees the input is already strictly increasing.
  static VertexSet from_sorted(std::vector<Vertex> vs) {
    VertexSet s;
    s.items_ = std::move(vs);
    return s;
  }

  static VertexSet range(Vertex n) {
    std::vector<Vertex> vs(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) vs[static_cast<std::size_t>(v)] = v;
    return from_sorted(std::move(vs));
  }

  [[nodiscard]] bool contains(Vertex v) const {
    return std::binary_search(items_.begin(), items_.end(), v);
  }
  [[nodiscard]] std::size_t size() const { return items_.size(); }
  [[nodiscard]] bool empty() const { return items_.empty(); }
  [[nodiscard]] Vertex operator[](std::size_t i) const { return items_[i]; }
  [[nodiscard]] const_iterator begin() const { return items_.begin(); }
  [[nodiscard]] const_iterator end() const { return items_.end(); }
  [[nodiscard]] const std::vector<Vertex>& items() const { return items_; }

  // Position of v in the set, if present.
  [[nodiscard]] std::optional<std::size_t> index_of(Vertex v) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it == items_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - items_.begin());
  }

  [[nodiscard]] bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> items_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

inline bool disjoint(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return false;
    }
  }
  return true;
}

// Immutable simple undirected graph on vertices 0..n-1.
//
// Keeps sorted adjacency lists for ordered iteration and a dense bit matrix
// for constant-time adjacency queries. Every search in this library walks
// vertices in ascending index order, which is what makes results reproducible.
class Graph {
 public:
  Graph() = default;

  Graph(Vertex n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) throw GraphError("negative vertex count");
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw GraphError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                         std::to_string(v) + ") with n = " + std::to_string(n));
      if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
      if (adjacent(u, v)) continue;
      set_bit(u, v);
      set_bit(v, u);
      adj_[static_cast<std::size_t>(u)].push_back(v);
      adj_[static_cast<std::size_t>(v)].push_back(u);
      ++m_;
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
  }

  [[nodiscard]] Vertex order() const { return n_; }
  [[nodiscard]] std::size_t size() const { return m_; }

  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
    const auto idx = static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64;
    return (bits_[idx] >> (static_cast<unsigned>(v) % 64)) & 1U;
  }

  [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const {
    return adj_[static_cast<std::size_t>(v)];
  }

  [[nodiscard]] VertexSet neighborhood(Vertex v) const { return VertexSet::from_sorted(neighbors(v)); }

  [[nodiscard]] std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  // Edges (u, v) with u < v in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  void set_bit(Vertex u, Vertex v) {
    bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |=
        std::uint64_t{1} << (static_cast<unsigned>(v) % 64);
  }

  Vertex n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Vertex>> adj_;
};

inline Graph build_graph(Vertex n, const std::vector<Edge>& edges) { return Graph(n, edges); }

inline void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order())
    throw GraphError("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(g.order()));
}

// adj(v) ∩ within
inline VertexSet neighbors_in(const Graph& g, Vertex v, const VertexSet& within) {
  check_vertex(g, v);
  std::vector<Vertex> out;
  const auto& nb = g.neighbors(v);
  std::set_intersection(nb.begin(), nb.end(), within.begin(), within.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

inline bool is_triangle_free(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v))
        if (w > v && g.adjacent(u, w)) return false;
    }
  return true;
}

// Induced subgraph; vertex i of the result is s[i].
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(static_cast<Vertex>(s.size()), edges);
}

inline constexpr int kUnreachable = -1;

inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  check_vertex(g, source);
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
  std::queue<Vertex> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      auto& d = dist[static_cast<std::size_t>(w)];
      if (d == kUnreachable) {
        d = dist[static_cast<std::size_t>(u)] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

struct RootedLayers {
  Vertex root = 0;
  VertexSet s1;  // N(root)
  VertexSet s2;  // vertices at distance exactly two
};

// Vertices at distance >= 3 from r appear in neither layer.
inline RootedLayers layers(const Graph& g, Vertex r) {
  auto dist = bfs_distances(g, r);
  std::vector<Vertex> s1;
  std::vector<Vertex> s2;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (dist[static_cast<std::size_t>(v)] == 1) s1.push_back(v);
    if (dist[static_cast<std::size_t>(v)] == 2) s2.push_back(v);
  }
  return {r, VertexSet::from_sorted(std::move(s1)), VertexSet::from_sorted(std::move(s2))};
}

// Layers of r inside the subgraph induced on alive (r itself must survive):
// s1 keeps the surviving neighbors of r, s2 keeps the surviving second-layer
// vertices that still have a neighbor in the new s1. Vertices that lost every
// s1 neighbor are no longer at distance two and drop out.
inline RootedLayers restrict_layers(const Graph& g, const RootedLayers& l, const VertexSet& alive) {
  RootedLayers out{l.root, set_intersection(l.s1, alive), {}};
  std::vector<Vertex> s2;
  for (Vertex z : set_intersection(l.s2, alive)) {
    const auto& nb = g.neighbors(z);
    if (std::any_of(nb.begin(), nb.end(), [&](Vertex v) { return out.s1.contains(v); })) s2.push_back(z);
  }
  out.s2 = VertexSet::from_sorted(std::move(s2));
  return out;
}

// Eccentricity of every vertex; throws on a disconnected or empty graph.
inline std::vector<int> eccentricities(const Graph& g) {
  if (g.order() == 0) throw GraphError("radius of the empty graph is undefined");
  std::vector<int> ecc(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    auto dist = bfs_distances(g, v);
    int worst = 0;
    for (int d : dist) {
      if (d == kUnreachable) throw GraphError("graph is disconnected: radius is infinite");
      worst = std::max(worst, d);
    }
    ecc[static_cast<std::size_t>(v)] = worst;
  }
  return ecc;
}

struct RadiusInfo {
  int radius = 0;
  Vertex center = 0;  // least-index vertex attaining the radius
};

inline RadiusInfo eccentricity_and_radius(const Graph& g) {
  auto ecc = eccentricities(g);
  auto it = std::min_element(ecc.begin(), ecc.end());
  return {*it, static_cast<Vertex>(it - ecc.begin())};
}

// Every a-b pair adjacent, both sides independent. Vacuous when a side is empty.
inline bool is_complete_bipartite_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (!disjoint(a, b)) throw GraphError("complete-bipartite test needs disjoint sides");
  if (a.empty() || b.empty()) return true;
  for (Vertex x : a)
    for (Vertex y : b)
      if (!g.adjacent(x, y)) return false;
  return is_independent(g, a) && is_independent(g, b);
}

}  // namespace treehunt
