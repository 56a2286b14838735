#pragma once

// Constructive search for an induced T(t,2,1) in a triangle-free graph of
// radius two.
//
// The pipeline, per candidate center r:
//   1. Greedy extraction: pull out induced T(2,1) pieces hanging off r, one
//      at a time, deleting each piece's neighborhood before the next. t pieces
//      already form T(t,2,1) rooted at r.
//   2. On a stall the remaining layers have a rigid structure: each S1 vertex
//      gets a pair of S2 neighbors (its labels) that cover everything its S2
//      neighborhood touches.
//   3. The labeled vertices are thinned to a minimal dominating family H.
//   4. H is searched for T(2t+1, 8); leaves of that tree are then joined to S1
//      vertices, either by an induced matching (no S1 vertex sees both a leaf
//      and the tree root) or through a second anchor z'' next to the tree root.
//
// Every claimed structural fact the construction leans on is checked at run
// time. A failed check ends that center's attempt with a StallReport naming
// the step and the offending vertices; it never aborts the process.

#include <algorithm>
#include <cstddef>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "treehunt/coloring.hpp"
#include "treehunt/graph.hpp"
#include "treehunt/tree_patterns.hpp"

namespace treehunt {

struct StallReport {
  std::string phase;
  std::string claim;
  std::vector<Vertex> witness;
  std::string detail;
  friend bool operator==(const StallReport&, const StallReport&) = default;
};

template <typename T>
using Step = std::variant<T, StallReport>;

template <typename T>
bool succeeded(const Step<T>& s) {
  return std::holds_alternative<T>(s);
}

struct ExtractionPiece {
  Vertex v1 = 0;
  Vertex w1a = 0;
  Vertex w1b = 0;
  Vertex x1a = 0;
  Vertex x1b = 0;
  VertexSet deletion_set;

  // BFS order of T(2,1): root, its two children, their children.
  [[nodiscard]] std::vector<Vertex> core() const { return {v1, w1a, w1b, x1a, x1b}; }
};

struct LabelPair {
  Vertex v = 0;
  Vertex wa = 0;
  Vertex wb = 0;
};

struct HReduction {
  VertexSet h_star;
  VertexSet h;
  std::map<Vertex, Vertex> dominator;
};

// Embedded T(2t+1, 8): root z', children z(i), leaves z(i, j); 0-based i, j.
struct GstTree {
  Embedding embedding;
  int branches = 0;
  static constexpr int kLeavesPerBranch = 8;

  [[nodiscard]] Vertex z_prime() const { return embedding.map[0]; }
  [[nodiscard]] Vertex z(int i) const { return embedding.map[static_cast<std::size_t>(1 + i)]; }
  [[nodiscard]] Vertex z(int i, int j) const {
    return embedding.map[static_cast<std::size_t>(1 + branches + i * kLeavesPerBranch + j)];
  }
  [[nodiscard]] TreeSpec spec() const { return TreeSpec::radius_two(branches, kLeavesPerBranch); }
};

enum class HuntStatus { found, not_found, premise_violated, step_failed };

inline std::string to_string(HuntStatus s) {
  switch (s) {
    case HuntStatus::found: return "found";
    case HuntStatus::not_found: return "not_found";
    case HuntStatus::premise_violated: return "premise_violated";
    case HuntStatus::step_failed: return "step_failed";
  }
  return "unknown";
}

// Route names recorded on found outcomes.
namespace route {
inline constexpr const char* kPhase1 = "phase1";
inline constexpr const char* kMatching = "matching";
inline constexpr const char* kMain = "main";
inline constexpr const char* kOracle = "oracle";
}  // namespace route

struct HuntOutcome {
  HuntStatus status = HuntStatus::not_found;
  std::optional<Embedding> certificate;
  std::string route;
  std::optional<Vertex> center;
  std::optional<StallReport> stall_report;
  friend bool operator==(const HuntOutcome&, const HuntOutcome&) = default;
};

// ---------------------------------------------------------------------------
// Greedy extraction

inline std::optional<ExtractionPiece> find_piece(const Graph& g, const RootedLayers& l, const VertexSet& alive) {
  const TreeSpec shape = TreeSpec::radius_two(2, 1);
  for (Vertex v1 : l.s1) {
    const VertexSet nv = neighbors_in(g, v1, l.s2);
    for (std::size_t i = 0; i < nv.size(); ++i)
      for (std::size_t j = i + 1; j < nv.size(); ++j) {
        const Vertex a = nv[i];
        const Vertex b = nv[j];
        const VertexSet na = neighbors_in(g, a, l.s2);
        const VertexSet nb = neighbors_in(g, b, l.s2);
        const VertexSet only_a = set_difference(na, nb);
        const VertexSet only_b = set_difference(nb, na);
        for (Vertex xa : only_a)
          for (Vertex xb : only_b) {
            if (g.adjacent(xa, xb)) continue;
            ExtractionPiece p{v1, a, b, xa, xb, {}};
            if (!verify_embedding(g, shape, Embedding{p.core()})) continue;
            VertexSet del(p.core());
            del = set_union(del, nv);
            for (Vertex u : {a, b, xa, xb}) del = set_union(del, g.neighborhood(u));
            p.deletion_set = set_intersection(del, alive);
            return p;
          }
      }
  }
  return std::nullopt;
}

inline std::optional<ExtractionPiece> find_piece(const Graph& g, const RootedLayers& l) {
  return find_piece(g, l, VertexSet::range(g.order()));
}

struct Phase1Result {
  std::vector<ExtractionPiece> pieces;
  VertexSet residual;
  std::optional<StallReport> premise;
};

// Map of {r} ∪ pieces onto T(k,2,1) in BFS order.
inline Embedding phase1_embedding(Vertex r, const std::vector<ExtractionPiece>& pieces) {
  const std::size_t k = pieces.size();
  std::vector<Vertex> map(1 + 5 * k);
  map[0] = r;
  for (std::size_t i = 0; i < k; ++i) {
    map[1 + i] = pieces[i].v1;
    map[1 + k + 2 * i] = pieces[i].w1a;
    map[1 + k + 2 * i + 1] = pieces[i].w1b;
    map[1 + 3 * k + 2 * i] = pieces[i].x1a;
    map[1 + 3 * k + 2 * i + 1] = pieces[i].x1b;
  }
  return Embedding{map};
}

inline std::optional<StallReport> check_center_premise(const Graph& g, Vertex r) {
  check_vertex(g, r);
  if (!is_triangle_free(g)) return StallReport{"premise", "triangle-free", {}, "host contains a triangle"};
  const auto dist = bfs_distances(g, r);
  const int worst = *std::max_element(dist.begin(), dist.end());
  const bool unreachable = std::find(dist.begin(), dist.end(), kUnreachable) != dist.end();
  if (unreachable || worst != 2)
    return StallReport{"premise", "radius-two-center", {r}, "root does not have eccentricity 2"};
  return std::nullopt;
}

inline Phase1Result phase1(const Graph& g, Vertex r, int t) {
  Phase1Result out;
  out.residual = VertexSet::range(g.order());
  if (auto bad = check_center_premise(g, r)) {
    out.premise = std::move(bad);
    return out;
  }
  const RootedLayers full = layers(g, r);
  while (static_cast<int>(out.pieces.size()) < t) {
    const RootedLayers cur = restrict_layers(g, full, out.residual);
    auto piece = find_piece(g, cur, out.residual);
    if (!piece) break;
    out.residual = set_difference(out.residual, piece->deletion_set);
    out.pieces.push_back(std::move(*piece));
  }
  return out;
}

// Best-effort four-class coloring of a deletion set: classes
// {v1, x1a, x1b}, N_S2(v1), N_S2(w1a) ∪ N_S2(x1a), N_S2(w1b) ∪ N_S2(x1b),
// first listed class wins. Vertices outside every class stay uncolored.
inline std::map<Vertex, int> four_class_partial_coloring(const Graph& g, const ExtractionPiece& p, const VertexSet& s2) {
  std::map<Vertex, int> col;
  auto put = [&](const VertexSet& s, int c) {
    for (Vertex v : s)
      if (p.deletion_set.contains(v)) col.emplace(v, c);
  };
  put(VertexSet{p.v1, p.x1a, p.x1b}, 3);
  put(neighbors_in(g, p.v1, s2), 2);
  put(set_union(neighbors_in(g, p.w1a, s2), neighbors_in(g, p.x1a, s2)), 0);
  put(set_union(neighbors_in(g, p.w1b, s2), neighbors_in(g, p.x1b, s2)), 1);
  return col;
}

inline bool partial_coloring_proper(const Graph& g, const std::map<Vertex, int>& col) {
  for (auto [u, cu] : col)
    for (Vertex w : g.neighbors(u)) {
      auto it = col.find(w);
      if (it != col.end() && it->second == cu) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Stall structure and labels

struct StallCheck {
  bool holds = true;
  std::vector<Vertex> witness;  // (v, wa, wb, x, y) when holds is false
};

inline StallCheck check_stall_structure(const Graph& g, const RootedLayers& l) {
  for (Vertex v : l.s1) {
    const VertexSet nv = neighbors_in(g, v, l.s2);
    for (std::size_t i = 0; i < nv.size(); ++i)
      for (std::size_t j = i + 1; j < nv.size(); ++j) {
        const VertexSet na = neighbors_in(g, nv[i], l.s2);
        const VertexSet nb = neighbors_in(g, nv[j], l.s2);
        const VertexSet a = set_difference(na, nb);
        const VertexSet b = set_difference(nb, na);
        if (is_complete_bipartite_between(g, a, b)) continue;
        for (Vertex x : a)
          for (Vertex y : b)
            if (!g.adjacent(x, y)) return {false, {v, nv[i], nv[j], x, y}};
        for (const VertexSet* side : {&a, &b})
          for (Vertex x : *side)
            for (Vertex y : *side)
              if (x < y && g.adjacent(x, y)) return {false, {v, nv[i], nv[j], x, y}};
      }
  }
  for (Vertex v : l.s1) {
    const VertexSet nv = neighbors_in(g, v, l.s2);
    const VertexSet outside = set_difference(l.s2, nv);
    std::vector<VertexSet> traces;
    traces.reserve(outside.size());
    for (Vertex z : outside) traces.push_back(neighbors_in(g, z, nv));
    for (std::size_t i = 0; i < outside.size(); ++i)
      for (std::size_t j = i + 1; j < outside.size(); ++j) {
        const VertexSet& p = traces[i];
        const VertexSet& q = traces[j];
        if (disjoint(p, q) || p.is_subset_of(q) || q.is_subset_of(p)) continue;
        const Vertex a = set_difference(p, q)[0];
        const Vertex b = set_difference(q, p)[0];
        return {false, {v, std::min(a, b), std::max(a, b), a < b ? outside[i] : outside[j],
                        a < b ? outside[j] : outside[i]}};
      }
  }
  return {};
}

// Every S2 vertex touching N_S2(v) is adjacent to wa or wb.
inline bool label_covers(const Graph& g, const RootedLayers& l, Vertex v, Vertex wa, Vertex wb) {
  const VertexSet nv = neighbors_in(g, v, l.s2);
  for (Vertex z : l.s2) {
    if (neighbors_in(g, z, nv).empty()) continue;
    if (!g.adjacent(z, wa) && !g.adjacent(z, wb)) return false;
  }
  return true;
}

inline Step<std::vector<LabelPair>> label_vertices(const Graph& g, const RootedLayers& l) {
  std::vector<LabelPair> out;
  for (Vertex v : l.s1) {
    const VertexSet nv = neighbors_in(g, v, l.s2);
    if (nv.empty()) continue;
    std::vector<Vertex> touched;
    for (Vertex z : l.s2)
      if (!neighbors_in(g, z, nv).empty()) touched.push_back(z);
    bool labeled = false;
    for (std::size_t i = 0; i < nv.size() && !labeled; ++i)
      for (std::size_t j = i; j < nv.size() && !labeled; ++j) {
        const Vertex wa = nv[i];
        const Vertex wb = nv[j];
        labeled = std::all_of(touched.begin(), touched.end(),
                              [&](Vertex z) { return g.adjacent(z, wa) || g.adjacent(z, wb); });
        if (labeled) out.push_back({v, wa, wb});
      }
    if (!labeled)
      return StallReport{"label", "label-pair", {v}, "no pair in N_S2(v) covers every S2 vertex touching it"};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Domination reduction

inline HReduction reduce_to_H(const Graph& g, const std::vector<LabelPair>& labels, const VertexSet& s2) {
  std::vector<Vertex> star;
  for (const auto& lp : labels) {
    star.push_back(lp.wa);
    star.push_back(lp.wb);
  }
  HReduction red;
  red.h_star = VertexSet(std::move(star));

  std::map<Vertex, VertexSet> nbhd;
  for (Vertex x : red.h_star) nbhd.emplace(x, neighbors_in(g, x, s2));

  std::vector<bool> alive(red.h_star.size(), true);
  for (std::size_t i = 0; i < red.h_star.size(); ++i) {
    const VertexSet& nx = nbhd.at(red.h_star[i]);
    for (std::size_t j = 0; j < red.h_star.size(); ++j) {
      if (j == i || !alive[j]) continue;
      if (nx.is_subset_of(nbhd.at(red.h_star[j]))) {
        alive[i] = false;
        break;
      }
    }
  }
  std::vector<Vertex> h;
  for (std::size_t i = 0; i < red.h_star.size(); ++i)
    if (alive[i]) h.push_back(red.h_star[i]);
  red.h = VertexSet::from_sorted(std::move(h));

  for (Vertex x : red.h_star) {
    if (red.h.contains(x)) {
      red.dominator[x] = x;
      continue;
    }
    for (Vertex y : red.h)
      if (nbhd.at(x).is_subset_of(nbhd.at(y))) {
        red.dominator[x] = y;
        break;
      }
  }
  return red;
}

// Colors S2 from a coloring of H (indexed by position in red.h). The result
// is indexed by position in s2.
inline Step<Coloring> extend_coloring(const Graph& g, const HReduction& red, const VertexSet& s2,
                                      const Coloring& h_coloring) {
  if (h_coloring.assignment.size() != red.h.size())
    throw GraphError("coloring of H has the wrong size");
  std::vector<VertexSet> h_nbhd;
  for (Vertex h : red.h) h_nbhd.push_back(neighbors_in(g, h, s2));

  Coloring out{std::vector<int>(s2.size(), -1), h_coloring.color_count};
  for (std::size_t i = 0; i < s2.size(); ++i) {
    const Vertex z = s2[i];
    if (auto pos = red.h.index_of(z)) {
      out.assignment[i] = h_coloring.assignment[*pos];
      continue;
    }
    const VertexSet nz = neighbors_in(g, z, s2);
    for (std::size_t k = 0; k < red.h.size(); ++k)
      if (nz.is_subset_of(h_nbhd[k])) {
        out.assignment[i] = h_coloring.assignment[k];
        break;
      }
    if (out.assignment[i] < 0)
      return StallReport{"extend", "h-coloring-extension", {z}, "no vertex of H dominates this S2 vertex"};
  }
  for (std::size_t i = 0; i < s2.size(); ++i)
    for (std::size_t j = i + 1; j < s2.size(); ++j)
      if (g.adjacent(s2[i], s2[j]) && out.assignment[i] == out.assignment[j])
        return StallReport{"extend", "h-coloring-extension", {s2[i], s2[j]}, "extended coloring is not proper"};
  return out;
}

// ---------------------------------------------------------------------------
// Tree in H and the final assembly

inline std::optional<GstTree> find_gst_tree(const Graph& g, const HReduction& red, int t) {
  const TreeSpec spec = TreeSpec::radius_two(2 * t + 1, GstTree::kLeavesPerBranch);
  const Graph sub = induced_subgraph(g, red.h);
  auto found = find_induced_copy(sub, spec);
  if (!found) return std::nullopt;
  GstTree tree;
  tree.branches = 2 * t + 1;
  for (Vertex local : found->map) tree.embedding.map.push_back(red.h[static_cast<std::size_t>(local)]);
  return tree;
}

struct LeafNeighborProfile {
  VertexSet adjacent;  // tree vertices adjacent to v
  bool violation = false;
};

// v may see one leaf z(i,j) plus at most one more vertex, which must be a
// leaf of the same branch or the root z'.
inline LeafNeighborProfile leaf_neighbor_filter(const Graph& g, [[maybe_unused]] const RootedLayers& l, const GstTree& tree,
                                   Vertex v) {
  LeafNeighborProfile prof;
  std::vector<Vertex> adj;
  std::vector<int> leaf_rows;
  bool inner = false;
  for (std::size_t k = 0; k < tree.embedding.map.size(); ++k) {
    const Vertex x = tree.embedding.map[k];
    if (!g.adjacent(v, x)) continue;
    adj.push_back(x);
    const auto first_leaf = static_cast<std::size_t>(1 + tree.branches);
    if (k >= first_leaf)
      leaf_rows.push_back(static_cast<int>((k - first_leaf) / GstTree::kLeavesPerBranch));
    else if (k != 0)
      inner = true;
  }
  prof.adjacent = VertexSet(std::move(adj));
  std::sort(leaf_rows.begin(), leaf_rows.end());
  leaf_rows.erase(std::unique(leaf_rows.begin(), leaf_rows.end()), leaf_rows.end());
  prof.violation = inner || leaf_rows.size() > 1 || prof.adjacent.size() > 2;
  return prof;
}

// T(t,2,1) in BFS order from root, branch (mid, leaf pair, partner pair) per selected row.
struct Branch {
  Vertex mid;
  Vertex leaf1;
  Vertex leaf2;
  Vertex partner1;
  Vertex partner2;
};

inline Embedding spider_embedding(Vertex root, const std::vector<Branch>& rows) {
  const std::size_t k = rows.size();
  std::vector<Vertex> map(1 + 5 * k);
  map[0] = root;
  for (std::size_t i = 0; i < k; ++i) {
    map[1 + i] = rows[i].mid;
    map[1 + k + 2 * i] = rows[i].leaf1;
    map[1 + k + 2 * i + 1] = rows[i].leaf2;
    map[1 + 3 * k + 2 * i] = rows[i].partner1;
    map[1 + 3 * k + 2 * i + 1] = rows[i].partner2;
  }
  return Embedding{map};
}

namespace detail {

inline VertexSet tree_vertex_set(const GstTree& tree) { return VertexSet(tree.embedding.map); }

}  // namespace detail

// Branch used when no S1 vertex sees both a leaf and z': match leaves of a
// row to S1 vertices whose only tree neighbor is that leaf.
inline Step<Embedding> assemble_matching_branch(const Graph& g, const RootedLayers& l, const GstTree& tree, int t) {
  constexpr int kMatchSize = 4;
  const VertexSet tv = detail::tree_vertex_set(tree);
  std::vector<Branch> rows;
  std::vector<Vertex> matched_rows;
  std::string per_row;
  for (int i = 0; i < tree.branches; ++i) {
    std::vector<std::pair<Vertex, Vertex>> matching;
    for (int j = 0; j < GstTree::kLeavesPerBranch && static_cast<int>(matching.size()) < kMatchSize; ++j) {
      const Vertex leaf = tree.z(i, j);
      for (Vertex v : neighbors_in(g, leaf, l.s1)) {
        if (neighbors_in(g, v, tv) == VertexSet{leaf}) {
          matching.emplace_back(leaf, v);
          break;
        }
      }
    }
    per_row += (per_row.empty() ? "" : ",") + std::to_string(matching.size());
    if (static_cast<int>(matching.size()) < kMatchSize) continue;
    matched_rows.push_back(tree.z(i));
    if (static_cast<int>(rows.size()) < t)
      rows.push_back({tree.z(i), matching[0].first, matching[1].first, matching[0].second, matching[1].second});
  }
  if (static_cast<int>(rows.size()) < t)
    return StallReport{"matching", "matching-rows", matched_rows,
                       "rows with an induced 4-matching: " + std::to_string(matched_rows.size()) + " of " +
                           std::to_string(tree.branches) + " needed " + std::to_string(t) +
                           "; matched leaves per row: " + per_row};
  Embedding e = spider_embedding(tree.z_prime(), rows);
  if (!verify_embedding(g, TreeSpec::spider(t), e))
    return StallReport{"matching", "assembly", e.map, "matched rows do not induce T(t,2,1)"};
  return e;
}

// Least-index S1 vertex adjacent to z' and to some leaf, with that leaf's
// (row, column) in tree order.
struct MainPivot {
  Vertex v1;
  int row;
  int col;
};

inline std::optional<MainPivot> find_main_pivot(const Graph& g, const RootedLayers& l, const GstTree& tree) {
  for (Vertex v : l.s1) {
    if (!g.adjacent(v, tree.z_prime())) continue;
    for (int i = 0; i < tree.branches; ++i)
      for (int j = 0; j < GstTree::kLeavesPerBranch; ++j)
        if (g.adjacent(v, tree.z(i, j))) return MainPivot{v, i, j};
  }
  return std::nullopt;
}

inline Step<Embedding> assemble_main_branch(const Graph& g, const RootedLayers& l, const GstTree& tree,
                                            const HReduction& red, int t) {
  const auto pivot = find_main_pivot(g, l, tree);
  if (!pivot) return StallReport{"main", "pivot", {}, "no S1 vertex is adjacent to both a leaf and z'"};
  const Vertex zp = tree.z_prime();
  const Vertex z11 = tree.z(pivot->row, pivot->col);

  std::optional<Vertex> zpp;
  for (Vertex z : l.s2)
    if (g.adjacent(z, z11) && !g.adjacent(z, zp)) {
      zpp = z;
      break;
    }
  if (!zpp) return StallReport{"main", "z-double-prime", {z11, zp}, "no S2 vertex sees the pivot leaf but not z'"};

  std::vector<int> others;
  for (int i = 0; i < tree.branches; ++i)
    if (i != pivot->row) others.push_back(i);

  for (int i : others) {
    if (!g.adjacent(*zpp, tree.z(i)))
      return StallReport{"main", "z2-branch-adjacency", {*zpp, tree.z(i)}, "z'' misses a branch vertex"};
    for (int j = 0; j < GstTree::kLeavesPerBranch; ++j)
      if (g.adjacent(*zpp, tree.z(i, j)))
        return StallReport{"main", "z2-branch-adjacency", {*zpp, tree.z(i, j)}, "z'' sees a leaf outside the pivot row"};
  }

  // partner[i][j]: least-index S1 neighbor of z(i, j), or -1.
  std::map<int, std::vector<Vertex>> partner;
  for (int i : others) {
    auto& row = partner[i];
    for (int j = 0; j < GstTree::kLeavesPerBranch; ++j) {
      const VertexSet nv = neighbors_in(g, tree.z(i, j), l.s1);
      for (Vertex v : nv)
        if (g.adjacent(v, zp) && g.adjacent(v, *zpp))
          return StallReport{"main", "anchor-exclusivity", {v, tree.z(i, j), zp, *zpp}, "S1 vertex sees z' and z''"};
      row.push_back(nv.empty() ? -1 : nv[0]);
      if (!nv.empty() && neighbors_in(g, nv[0], red.h).size() > 2)
        return StallReport{"main", "s1-h-degree", {nv[0]}, "S1 vertex adjacent to more than two vertices of H"};
    }
  }

  // A row backs an anchor when at least half its partners avoid it.
  auto backs = [&](int i, Vertex anchor) {
    int avoid = 0;
    for (Vertex v : partner[i])
      if (v >= 0 && !g.adjacent(v, anchor)) ++avoid;
    return 2 * avoid >= GstTree::kLeavesPerBranch;
  };
  std::optional<Vertex> anchor;
  for (Vertex candidate : {zp, *zpp}) {
    int count = 0;
    for (int i : others) count += backs(i, candidate) ? 1 : 0;
    if (count >= t) {
      anchor = candidate;
      break;
    }
  }
  if (!anchor) return StallReport{"main", "majority", {zp, *zpp}, "fewer than t rows back either anchor"};

  std::vector<Branch> rows;
  for (int i : others) {
    if (static_cast<int>(rows.size()) == t) break;
    if (!backs(i, *anchor)) continue;
    const auto& row = partner[i];
    std::optional<Branch> pick;
    for (int a = 0; a < GstTree::kLeavesPerBranch && !pick; ++a)
      for (int b = a + 1; b < GstTree::kLeavesPerBranch && !pick; ++b) {
        const Vertex va = row[static_cast<std::size_t>(a)];
        const Vertex vb = row[static_cast<std::size_t>(b)];
        if (va < 0 || vb < 0 || va == vb) continue;
        if (g.adjacent(va, *anchor) || g.adjacent(vb, *anchor)) continue;
        if (g.adjacent(va, tree.z(i, b)) || g.adjacent(vb, tree.z(i, a))) continue;
        pick = Branch{tree.z(i), tree.z(i, a), tree.z(i, b), va, vb};
      }
    if (!pick)
      return StallReport{"main", "distinct-partners", {tree.z(i)}, "no two leaves with distinct anchor-avoiding partners"};
    rows.push_back(*pick);
  }
  Embedding e = spider_embedding(*anchor, rows);
  if (!verify_embedding(g, TreeSpec::spider(t), e))
    return StallReport{"main", "assembly", e.map, "selected rows do not induce T(t,2,1)"};
  return e;
}

// ---------------------------------------------------------------------------
// End to end

struct CenterAttempt {
  std::optional<Embedding> embedding;
  std::string route;
  StallReport report;
};

inline CenterAttempt attempt_center(const Graph& g, Vertex r, int t) {
  CenterAttempt out;
  const Phase1Result p1 = phase1(g, r, t);
  if (p1.premise) {
    out.report = *p1.premise;
    return out;
  }
  if (static_cast<int>(p1.pieces.size()) == t) {
    out.embedding = phase1_embedding(r, p1.pieces);
    out.route = route::kPhase1;
    return out;
  }
  const RootedLayers l = restrict_layers(g, layers(g, r), p1.residual);
  const std::string extracted = "pieces extracted: " + std::to_string(p1.pieces.size());

  if (auto sc = check_stall_structure(g, l); !sc.holds) {
    out.report = {"stall", "stall-structure", sc.witness, "stalled layers still contain a piece; " + extracted};
    return out;
  }
  auto labels = label_vertices(g, l);
  if (!succeeded(labels)) {
    out.report = std::get<StallReport>(labels);
    return out;
  }
  const HReduction red = reduce_to_H(g, std::get<std::vector<LabelPair>>(labels), l.s2);
  const auto tree = find_gst_tree(g, red, t);
  if (!tree) {
    out.report = {"gst", "wide-tree-in-h", {},
                  "H (" + std::to_string(red.h.size()) + " vertices) has no induced T(" + std::to_string(2 * t + 1) +
                      ",8); " + extracted};
    return out;
  }
  for (Vertex v : l.s1) {
    bool sees_leaf = false;
    for (int i = 0; i < tree->branches && !sees_leaf; ++i)
      for (int j = 0; j < GstTree::kLeavesPerBranch && !sees_leaf; ++j) sees_leaf = g.adjacent(v, tree->z(i, j));
    if (!sees_leaf) continue;
    auto prof = leaf_neighbor_filter(g, l, *tree, v);
    if (prof.violation) {
      std::vector<Vertex> w{v};
      w.insert(w.end(), prof.adjacent.begin(), prof.adjacent.end());
      out.report = {"shape", "leaf-neighbor-shape", w, "S1 vertex sees the tree outside the allowed shape"};
      return out;
    }
  }

  const bool main_first = find_main_pivot(g, l, *tree).has_value();
  auto run_main = [&] { return assemble_main_branch(g, l, *tree, red, t); };
  auto run_matching = [&] { return assemble_matching_branch(g, l, *tree, t); };
  auto first = main_first ? run_main() : run_matching();
  if (succeeded(first)) {
    out.embedding = std::get<Embedding>(first);
    out.route = main_first ? route::kMain : route::kMatching;
    return out;
  }
  auto second = main_first ? run_matching() : run_main();
  if (succeeded(second)) {
    out.embedding = std::get<Embedding>(second);
    out.route = main_first ? route::kMatching : route::kMain;
    return out;
  }
  out.report = std::get<StallReport>(first);
  out.report.detail += "; other branch: " + std::get<StallReport>(second).claim;
  return out;
}

struct HuntOptions {
  bool oracle_fallback = true;
  int jobs = 1;
};

inline HuntOutcome hunt(const Graph& g, int t, const HuntOptions& opts = {}) {
  if (t < 1) throw GraphError("target t must be positive");
  HuntOutcome out;
  const TreeSpec target = TreeSpec::spider(t);

  if (!is_triangle_free(g)) {
    out.status = HuntStatus::premise_violated;
    out.stall_report = StallReport{"premise", "triangle-free", {}, "host contains a triangle"};
    return out;
  }
  std::vector<int> ecc;
  try {
    ecc = eccentricities(g);
  } catch (const GraphError& e) {
    out.status = HuntStatus::premise_violated;
    out.stall_report = StallReport{"premise", "radius-two", {}, e.what()};
    return out;
  }
  const int radius = *std::min_element(ecc.begin(), ecc.end());
  if (radius != 2) {
    out.status = HuntStatus::premise_violated;
    out.stall_report = StallReport{"premise", "radius-two", {}, "radius is " + std::to_string(radius)};
    return out;
  }
  if (target.vertex_count() > static_cast<std::size_t>(g.order())) {
    out.status = HuntStatus::not_found;
    out.stall_report = StallReport{"size", "vertex-count", {}, "host is smaller than " + target.name()};
    return out;
  }

  std::vector<Vertex> centers;
  for (Vertex v = 0; v < g.order(); ++v)
    if (ecc[static_cast<std::size_t>(v)] == 2) centers.push_back(v);

  std::optional<StallReport> first_report;
  std::optional<Vertex> first_center;
  const std::size_t batch = static_cast<std::size_t>(std::max(1, opts.jobs));
  for (std::size_t start = 0; start < centers.size(); start += batch) {
    const std::size_t stop = std::min(centers.size(), start + batch);
    std::vector<CenterAttempt> attempts(stop - start);
    if (batch == 1) {
      attempts[0] = attempt_center(g, centers[start], t);
    } else {
      std::vector<std::future<CenterAttempt>> futures;
      for (std::size_t i = start; i < stop; ++i)
        futures.push_back(std::async(std::launch::async, attempt_center, std::cref(g), centers[i], t));
      for (std::size_t i = 0; i < futures.size(); ++i) attempts[i] = futures[i].get();
    }
    for (std::size_t i = 0; i < attempts.size(); ++i) {
      auto& a = attempts[i];
      if (a.embedding && verify_embedding(g, target, *a.embedding)) {
        out.status = HuntStatus::found;
        out.certificate = std::move(a.embedding);
        out.route = a.route;
        out.center = centers[start + i];
        return out;
      }
      if (!first_report) {
        first_report = a.embedding ? StallReport{"verify", "certificate", a.embedding->map, "assembled map failed"}
                                   : a.report;
        first_center = centers[start + i];
      }
    }
  }
  out.stall_report = first_report;
  out.center = first_center;

  if (!opts.oracle_fallback) {
    out.status = HuntStatus::step_failed;
    return out;
  }
  if (auto e = find_induced_copy(g, target)) {
    out.status = HuntStatus::found;
    out.certificate = std::move(e);
    out.route = route::kOracle;
    return out;
  }
  out.status = HuntStatus::not_found;
  return out;
}

}  // namespace treehunt
