#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "recolor/error.hpp"

namespace recolor {

// Simple undirected graph on vertices 0..n-1, immutable after construction.
// The edge list is normalized: endpoints ordered u < v, duplicates removed,
// loops rejected.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// Two-sided vertex partition with every edge crossing sides. Side 0 contains
// the lowest-indexed vertex of each connected component, which fixes one
// canonical orientation; the sides of distinct components remain
// independently swappable in principle.
struct Bipartition {
  std::vector<std::uint8_t> side;  // side[v] is 0 or 1

  std::vector<int> side_vertices(int s) const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(side.size()); ++v)
      if (side[v] == s) out.push_back(v);
    return out;
  }
};

// Partition of the vertex set into disjoint independent classes; class i
// becomes quotient vertex i.
struct QuotientMap {
  std::vector<std::vector<int>> classes;
};

// Canonical bipartition witness, or absent when the graph has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

// b plus m new vertices n..n+m-1 inducing a clique, all adjacent to every
// vertex of b. New vertices sit at the high end so callers can address them
// as a contiguous range.
Graph join_clique(const Graph& b, int m);

// Contracts each class to a single vertex; quotient vertices are adjacent
// iff some cross-class edge exists. Classes must be independent sets.
Graph quotient(const Graph& g, const QuotientMap& q);

}  // namespace recolor
