#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// Hard cap on the k^n upper bound of the state space. Exceeding it raises
// TooLarge instead of thrashing.
inline constexpr std::uint64_t kDefaultMaxStates = std::uint64_t{1} << 26;

struct SearchLimits {
  std::uint64_t max_states = kDefaultMaxStates;
};

// Packs a color vector into a base-k integer, vertex 0 most significant, so
// numeric order on codes equals lexicographic order on color vectors.
class StateCodec {
 public:
  StateCodec(int n, int k, std::uint64_t max_states = kDefaultMaxStates);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::uint64_t state_count() const noexcept { return state_count_; }  // k^n

  std::uint64_t encode(const std::vector<int>& colors) const;
  void decode(std::uint64_t code, std::vector<int>& colors) const;
  // Code of the coloring that differs from `code` only at `vertex`.
  std::uint64_t repack(std::uint64_t code, int vertex, int old_color, int new_color) const {
    return code - static_cast<std::uint64_t>(old_color) * weight_[vertex] +
           static_cast<std::uint64_t>(new_color) * weight_[vertex];
  }

 private:
  int n_;
  int k_;
  std::uint64_t state_count_;
  std::vector<std::uint64_t> weight_;
};

struct ConfigStats {
  std::uint64_t num_colorings = 0;
  std::uint64_t num_components = 0;
  std::uint64_t num_frozen = 0;
  std::uint64_t largest_component = 0;
  bool is_connected = true;  // vacuously true when no colorings exist

  friend bool operator==(const ConfigStats&, const ConfigStats&) = default;
};

// Full component census of the configuration graph, keyed by packed state
// codes (ascending = lexicographic on color vectors).
struct Census {
  StateCodec codec;
  ConfigStats stats;
  std::vector<std::uint64_t> codes;
  std::vector<std::int32_t> component;        // per code
  std::vector<std::uint8_t> frozen;           // per code
  std::vector<std::uint64_t> component_size;  // per component id

  Coloring coloring_at(std::size_t i) const {
    Coloring c{codec.k(), std::vector<int>(codec.n())};
    codec.decode(codes[i], c.colors);
    return c;
  }
};

// True iff at least one proper k-coloring exists (early-exit backtracking).
bool colorable(const Graph& g, int k, const SearchLimits& limits = {});

// Exact number of proper k-colorings.
std::uint64_t enumerate_colorings(const Graph& g, int k, const SearchLimits& limits = {});
// Streaming variant: visits every proper k-coloring in lexicographic order.
std::uint64_t enumerate_colorings(const Graph& g, int k,
                                  const std::function<void(const Coloring&)>& visit,
                                  const SearchLimits& limits = {});

Census census(const Graph& g, int k, const SearchLimits& limits = {});
ConfigStats components(const Graph& g, int k, const SearchLimits& limits = {});

// Breadth-first search from `from` until `goal` holds; returns the step list
// and the goal coloring reached, or absent if no reachable state satisfies
// the goal.
struct SearchResult {
  RecoloringSequence steps;
  Coloring endpoint;
};
std::optional<SearchResult> bfs_search(const Graph& g, int k, const Coloring& from,
                                       const std::function<bool(const Coloring&)>& goal,
                                       const SearchLimits& limits = {});

// Shortest recoloring sequence from c1 to c2, or absent when they lie in
// different components.
std::optional<RecoloringSequence> reachable(const Graph& g, int k, const Coloring& c1,
                                            const Coloring& c2, const SearchLimits& limits = {});

bool is_mixing_bruteforce(const Graph& g, int k, const SearchLimits& limits = {});

// True iff some coloring using at most two distinct colors is reachable
// from c.
bool reaches_two_coloring(const Graph& g, const Coloring& c, const SearchLimits& limits = {});

}  // namespace recolor
