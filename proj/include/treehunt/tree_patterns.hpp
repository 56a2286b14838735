#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "treehunt/graph.hpp"

namespace treehunt {

// Level-degree description of a rooted tree: the root has level_degrees[0]
// children, each depth-1 vertex has level_degrees[1] children, and so on.
// {a, b} is the radius-two tree T(a, b); {t, 2, 1} is T(t, 2, 1).
struct TreeSpec {
  std::vector<int> level_degrees;

  static TreeSpec radius_two(int a, int b) { return {{a, b}}; }
  static TreeSpec spider(int t) { return {{t, 2, 1}}; }

  [[nodiscard]] bool valid() const {
    return !level_degrees.empty() &&
           std::all_of(level_degrees.begin(), level_degrees.end(), [](int d) { return d >= 1; });
  }

  // 1 + d1 + d1*d2 + ...
  [[nodiscard]] std::size_t vertex_count() const {
    std::size_t total = 1;
    std::size_t level = 1;
    for (int d : level_degrees) {
      level *= static_cast<std::size_t>(d);
      total += level;
    }
    return total;
  }

  [[nodiscard]] std::string name() const {
    std::string s = "T(";
    for (std::size_t i = 0; i < level_degrees.size(); ++i) {
      if (i > 0) s += ",";
      s += std::to_string(level_degrees[i]);
    }
    return s + ")";
  }

  friend bool operator==(const TreeSpec&, const TreeSpec&) = default;
};

inline void check_spec(const TreeSpec& spec) {
  if (!spec.valid()) throw GraphError("tree spec needs at least one level and every degree >= 1");
}

struct TreeGraph {
  Graph graph;
  Vertex root = 0;
  std::vector<int> depth_of;
  std::vector<Vertex> parent_of;  // -1 for the root
  std::vector<std::vector<Vertex>> children_of;
};

// Breadth-first realization: vertex 0 is the root, then each level in order,
// with the children of an earlier vertex numbered before those of a later one.
inline TreeGraph build_tree(const TreeSpec& spec) {
  check_spec(spec);
  TreeGraph t;
  const auto n = spec.vertex_count();
  t.depth_of.assign(n, 0);
  t.parent_of.assign(n, -1);
  t.children_of.assign(n, {});
  std::vector<Edge> edges;
  std::vector<Vertex> frontier{0};
  Vertex next = 1;
  for (std::size_t level = 0; level < spec.level_degrees.size(); ++level) {
    std::vector<Vertex> upcoming;
    for (Vertex p : frontier)
      for (int k = 0; k < spec.level_degrees[level]; ++k) {
        Vertex c = next++;
        t.parent_of[static_cast<std::size_t>(c)] = p;
        t.depth_of[static_cast<std::size_t>(c)] = static_cast<int>(level) + 1;
        t.children_of[static_cast<std::size_t>(p)].push_back(c);
        edges.emplace_back(p, c);
        upcoming.push_back(c);
      }
    frontier = std::move(upcoming);
  }
  t.graph = Graph(static_cast<Vertex>(n), edges);
  return t;
}

// Tree vertex i maps to host vertex map[i].
struct Embedding {
  std::vector<Vertex> map;
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

inline bool verify_embedding(const Graph& host, const TreeSpec& spec, const Embedding& e) {
  if (!spec.valid()) return false;
  const TreeGraph tree = build_tree(spec);
  const auto n = static_cast<std::size_t>(tree.graph.order());
  if (e.map.size() != n) return false;
  for (Vertex h : e.map)
    if (h < 0 || h >= host.order()) return false;
  std::vector<Vertex> sorted = e.map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (tree.graph.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) != host.adjacent(e.map[i], e.map[j]))
        return false;
  return true;
}

namespace detail {

// Backtracking over tree vertices in BFS order. Each candidate must be
// adjacent to its parent's image and non-adjacent to every other placed
// image; siblings take increasing host indices. The first complete map found
// is the lexicographically least one.
class InducedTreeSearch {
 public:
  InducedTreeSearch(const Graph& host, const TreeGraph& tree) : host_(host), tree_(tree) {
    const auto n = static_cast<std::size_t>(tree.graph.order());
    image_.assign(n, -1);
    used_.assign(static_cast<std::size_t>(host.order()), false);
    need_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      need_[i] = tree.children_of[i].size() + (i == 0 ? 0 : 1);
  }

  std::optional<Embedding> run(const std::vector<Vertex>& roots) {
    for (Vertex r : roots) {
      if (host_.degree(r) < need_[0]) continue;
      place(0, r);
      if (extend(1)) return Embedding{image_};
      unplace(0, r);
    }
    return std::nullopt;
  }

 private:
  void place(std::size_t i, Vertex h) {
    image_[i] = h;
    used_[static_cast<std::size_t>(h)] = true;
  }
  void unplace(std::size_t i, Vertex h) {
    image_[i] = -1;
    used_[static_cast<std::size_t>(h)] = false;
  }

  bool fits(std::size_t i, Vertex h) const {
    if (used_[static_cast<std::size_t>(h)] || host_.degree(h) < need_[i]) return false;
    const auto parent = static_cast<std::size_t>(tree_.parent_of[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (j != parent && host_.adjacent(image_[j], h)) return false;
    return true;
  }

  bool extend(std::size_t i) {
    if (i == image_.size()) return true;
    const Vertex parent = tree_.parent_of[i];
    const Vertex anchor = image_[static_cast<std::size_t>(parent)];
    // Previous sibling shares the parent and sits at i - 1 in BFS order.
    Vertex floor = -1;
    if (i > 0 && tree_.parent_of[i - 1] == parent) floor = image_[i - 1];
    for (Vertex h : host_.neighbors(anchor)) {
      if (h <= floor || !fits(i, h)) continue;
      place(i, h);
      if (extend(i + 1)) return true;
      unplace(i, h);
    }
    return false;
  }

  const Graph& host_;
  const TreeGraph& tree_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
  std::vector<std::size_t> need_;
};

}  // namespace detail

// Lexicographically least induced copy of spec in g (siblings in increasing
// host order), optionally with the root restricted to root_candidates.
inline std::optional<Embedding> find_induced_copy(const Graph& g, const TreeSpec& spec,
                                                  const std::optional<VertexSet>& root_candidates = std::nullopt) {
  check_spec(spec);
  const TreeGraph tree = build_tree(spec);
  if (static_cast<std::size_t>(tree.graph.order()) > static_cast<std::size_t>(g.order())) return std::nullopt;
  std::vector<Vertex> roots;
  if (root_candidates) {
    for (Vertex r : *root_candidates)
      if (r >= 0 && r < g.order()) roots.push_back(r);
  } else {
    roots = VertexSet::range(g.order()).items();
  }
  detail::InducedTreeSearch search(g, tree);
  return search.run(roots);
}

}  // namespace treehunt
