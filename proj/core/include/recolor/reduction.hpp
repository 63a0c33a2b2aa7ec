#pragma once

#include <vector>

#include "recolor/explore.hpp"

namespace recolor {

// A base bipartite graph b joined with a clique X of k-3 new vertices that
// are complete to b. The clique occupies the contiguous high range
// b_count()..b_count()+k-4 of g.
struct ReductionInstance {
  Graph g;
  Graph b;
  int k = 0;

  int b_count() const noexcept { return b.vertex_count(); }
  int x_count() const noexcept { return k - 3; }
  int x_first() const noexcept { return b.vertex_count(); }
  std::vector<int> x_vertices() const {
    std::vector<int> out;
    for (int i = 0; i < x_count(); ++i) out.push_back(x_first() + i);
    return out;
  }
};

// Builds the instance for palette size k >= 4; rejects non-bipartite b.
ReductionInstance reduce(const Graph& b, int k);

// Proper k-coloring of inst.g assembled from a proper 3-coloring of b: b's
// colors are routed through palette_map (injective, 3 entries) and the
// clique receives x_colors (k-3 distinct colors disjoint from the map's
// image).
Coloring embed_coloring(const ReductionInstance& inst, const Coloring& c_b,
                        const std::vector<int>& palette_map, const std::vector<int>& x_colors);

enum class WitnessTier {
  ExactBfs,    // disconnection machine-checked by breadth-first search
  Structural,  // certified by the pinned-clique argument only
};

struct WitnessPair {
  Coloring a;
  Coloring b;
  WitnessTier tier = WitnessTier::Structural;
};

// Turns a stuck 3-coloring of b (one that cannot reach a two-coloring) into
// a verified pair of k-colorings of inst.g lying in different components of
// the configuration graph.
WitnessPair non_mixing_witness(const ReductionInstance& inst, const Coloring& stuck,
                               const SearchLimits& limits = {});

}  // namespace recolor
