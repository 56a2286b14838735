#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "treehunt/graph.hpp"

namespace treehunt {

struct Coloring {
  std::vector<int> assignment;  // color of each vertex, 0-based
  int color_count = 0;
};

struct ChromaticResult {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  Coloring witness;
  std::uint64_t search_nodes = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

inline bool verify_coloring(const Graph& g, const Coloring& c) {
  if (c.assignment.size() != static_cast<std::size_t>(g.order()))
    throw GraphError("coloring covers " + std::to_string(c.assignment.size()) + " vertices, graph has " +
                     std::to_string(g.order()));
  for (auto [u, v] : g.edges())
    if (c.assignment[static_cast<std::size_t>(u)] == c.assignment[static_cast<std::size_t>(v)]) return false;
  return true;
}

// Number of distinct colors actually present.
inline int colors_used(const Coloring& c) {
  std::vector<int> seen = c.assignment;
  std::sort(seen.begin(), seen.end());
  return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

inline Coloring greedy_coloring(const Graph& g, const std::vector<Vertex>& order) {
  const auto n = static_cast<std::size_t>(g.order());
  if (order.size() != n) throw GraphError("greedy order is not a permutation of the vertices");
  std::vector<bool> seen(n, false);
  for (Vertex v : order) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)])
      throw GraphError("greedy order is not a permutation of the vertices");
    seen[static_cast<std::size_t>(v)] = true;
  }

  Coloring c{std::vector<int>(n, -1), 0};
  std::vector<int> mark(n + 1, -1);
  for (Vertex v : order) {
    for (Vertex w : g.neighbors(v)) {
      int cw = c.assignment[static_cast<std::size_t>(w)];
      if (cw >= 0) mark[static_cast<std::size_t>(cw)] = v;
    }
    int col = 0;
    while (mark[static_cast<std::size_t>(col)] == v) ++col;
    c.assignment[static_cast<std::size_t>(v)] = col;
    c.color_count = std::max(c.color_count, col + 1);
  }
  return c;
}

namespace detail {

// Largest clique found by greedy extension from each vertex.
inline int greedy_clique_bound(const Graph& g) {
  int best = g.order() > 0 ? 1 : 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> clique{v};
    for (Vertex w : g.neighbors(v)) {
      bool ok = std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return g.adjacent(c, w); });
      if (ok) clique.push_back(w);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

// DSATUR branch and bound. Saturation counts are kept per (vertex, color).
class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, int lower, Coloring initial, std::uint64_t budget)
      : g_(g),
        n_(static_cast<std::size_t>(g.order())),
        lower_(lower),
        best_(std::move(initial)),
        budget_(budget),
        color_(n_, -1),
        sat_(n_, 0) {
    width_ = static_cast<std::size_t>(best_.color_count) + 1;
    conflicts_.assign(n_ * width_, 0);
  }

  // Returns true when the search tree was fully explored.
  bool run() {
    if (best_.color_count <= lower_) return true;
    descend(0, 0);
    return !aborted_;
  }

  [[nodiscard]] const Coloring& best() const { return best_; }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

 private:
  Vertex pick() const {
    Vertex chosen = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      int deg = 0;
      for (Vertex w : g_.neighbors(static_cast<Vertex>(v)))
        if (color_[static_cast<std::size_t>(w)] < 0) ++deg;
      if (sat_[v] > best_sat || (sat_[v] == best_sat && deg > best_deg)) {
        chosen = static_cast<Vertex>(v);
        best_sat = sat_[v];
        best_deg = deg;
      }
    }
    return chosen;
  }

  void assign(Vertex v, int c, int delta) {
    for (Vertex w : g_.neighbors(v)) {
      auto& cnt = conflicts_[static_cast<std::size_t>(w) * width_ + static_cast<std::size_t>(c)];
      if (delta > 0 && cnt++ == 0) ++sat_[static_cast<std::size_t>(w)];
      if (delta < 0 && --cnt == 0) --sat_[static_cast<std::size_t>(w)];
    }
    color_[static_cast<std::size_t>(v)] = delta > 0 ? c : -1;
  }

  void descend(std::size_t colored, int used) {
    if (aborted_ || done_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (colored == n_) {
      best_.assignment = color_;
      best_.color_count = used;
      if (used <= lower_) done_ = true;
      return;
    }
    Vertex v = pick();
    const int limit = std::min(used + 1, best_.color_count - 1);
    for (int c = 0; c < limit; ++c) {
      if (conflicts_[static_cast<std::size_t>(v) * width_ + static_cast<std::size_t>(c)] > 0) continue;
      assign(v, c, +1);
      descend(colored + 1, std::max(used, c + 1));
      assign(v, c, -1);
      if (aborted_ || done_) return;
      // A fresh color is interchangeable with every other fresh color.
      if (c >= used) break;
    }
  }

  const Graph& g_;
  std::size_t n_;
  int lower_;
  Coloring best_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool done_ = false;
  std::size_t width_ = 0;
  std::vector<int> color_;
  std::vector<int> sat_;
  std::vector<int> conflicts_;
};

inline Coloring dsatur_greedy(const Graph& g) {
  // Static DSATUR order with the same tie-breaking as the exact search.
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> color(n, -1);
  std::vector<std::vector<bool>> blocked(n);
  std::vector<int> sat(n, 0);
  std::vector<Vertex> order;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex chosen = -1;
    int bs = -1;
    int bd = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      int deg = 0;
      for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
        if (color[static_cast<std::size_t>(w)] < 0) ++deg;
      if (sat[v] > bs || (sat[v] == bs && deg > bd)) {
        chosen = static_cast<Vertex>(v);
        bs = sat[v];
        bd = deg;
      }
    }
    auto& mine = blocked[static_cast<std::size_t>(chosen)];
    int c = 0;
    while (static_cast<std::size_t>(c) < mine.size() && mine[static_cast<std::size_t>(c)]) ++c;
    color[static_cast<std::size_t>(chosen)] = c;
    order.push_back(chosen);
    for (Vertex w : g.neighbors(chosen)) {
      auto& b = blocked[static_cast<std::size_t>(w)];
      if (b.size() <= static_cast<std::size_t>(c)) b.resize(static_cast<std::size_t>(c) + 1, false);
      if (!b[static_cast<std::size_t>(c)]) {
        b[static_cast<std::size_t>(c)] = true;
        ++sat[static_cast<std::size_t>(w)];
      }
    }
  }
  return greedy_coloring(g, order);
}

}  // namespace detail

// Exact chromatic number by DSATUR branch and bound. Running out of budget
// yields the best bounds found so far with exact = false.
inline ChromaticResult chromatic_number(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget) {
  ChromaticResult result;
  if (g.order() == 0) {
    result.exact = true;
    return result;
  }
  const int lower = detail::greedy_clique_bound(g);
  Coloring start = detail::dsatur_greedy(g);
  detail::DsaturSearch search(g, lower, start, node_budget);
  const bool complete = search.run();
  result.witness = search.best();
  result.upper = result.witness.color_count;
  result.lower = complete ? result.upper : lower;
  result.exact = complete;
  result.search_nodes = search.nodes();
  return result;
}

// Chromatic number of the subgraph induced on s; witness is indexed by position in s.
inline ChromaticResult chromatic_of_subset(const Graph& g, const VertexSet& s,
                                           std::uint64_t node_budget = kDefaultNodeBudget) {
  for (Vertex v : s) check_vertex(g, v);
  return chromatic_number(induced_subgraph(g, s), node_budget);
}

}  // namespace treehunt
