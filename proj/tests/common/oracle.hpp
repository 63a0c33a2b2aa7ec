#pragma once

// Naive reference implementations used as independent cross-checks. They
// share nothing with the library's search machinery: colorings are plain
// vectors enumerated with an odometer, properness is a full edge scan, and
// the configuration graph is walked with map-based BFS.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "recolor/graph.hpp"

namespace oracle {

using ColorVec = std::vector<int>;

inline bool proper(const recolor::Graph& g, const ColorVec& c) {
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) return false;
  return true;
}

inline std::vector<ColorVec> all_proper_colorings(const recolor::Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<ColorVec> out;
  ColorVec c(n, 0);
  for (;;) {
    if (proper(g, c)) out.push_back(c);
    int i = n - 1;
    while (i >= 0 && c[i] == k - 1) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  if (n == 0) return {ColorVec{}};
  return out;
}

// All colorings one legal single-vertex recoloring away from c.
inline std::vector<ColorVec> config_neighbors(const recolor::Graph& g, int k, const ColorVec& c) {
  std::vector<ColorVec> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int a = 0; a < k; ++a) {
      if (a == c[v]) continue;
      ColorVec d = c;
      d[v] = a;
      if (proper(g, d)) out.push_back(d);
    }
  }
  return out;
}

inline int distinct(const ColorVec& c) { return static_cast<int>(std::set<int>(c.begin(), c.end()).size()); }

struct CensusResult {
  long long num_colorings = 0;
  long long num_components = 0;
  long long num_frozen = 0;
  long long largest_component = 0;
  bool connected = true;
  std::map<ColorVec, int> component_of;
  std::vector<long long> component_sizes;
};

inline CensusResult census(const recolor::Graph& g, int k) {
  CensusResult res;
  const auto all = all_proper_colorings(g, k);
  res.num_colorings = static_cast<long long>(all.size());
  for (const auto& c : all)
    if (config_neighbors(g, k, c).empty()) ++res.num_frozen;
  for (const auto& start : all) {
    if (res.component_of.count(start)) continue;
    const int comp = static_cast<int>(res.num_components++);
    long long size = 0;
    std::vector<ColorVec> queue{start};
    res.component_of[start] = comp;
    while (!queue.empty()) {
      ColorVec cur = queue.back();
      queue.pop_back();
      ++size;
      for (auto& next : config_neighbors(g, k, cur)) {
        if (res.component_of.count(next)) continue;
        res.component_of[next] = comp;
        queue.push_back(next);
      }
    }
    res.component_sizes.push_back(size);
  }
  for (long long s : res.component_sizes) res.largest_component = std::max(res.largest_component, s);
  res.connected = res.num_components <= 1;
  return res;
}

inline std::optional<int> shortest_distance(const recolor::Graph& g, int k, const ColorVec& from,
                                            const ColorVec& to) {
  if (from == to) return 0;
  std::map<ColorVec, int> dist{{from, 0}};
  std::vector<ColorVec> frontier{from};
  while (!frontier.empty()) {
    std::vector<ColorVec> next_frontier;
    for (const auto& cur : frontier) {
      for (auto& next : config_neighbors(g, k, cur)) {
        if (dist.count(next)) continue;
        dist[next] = dist[cur] + 1;
        if (next == to) return dist[next];
        next_frontier.push_back(next);
      }
    }
    frontier = std::move(next_frontier);
  }
  return std::nullopt;
}

inline bool reaches_le2(const recolor::Graph& g, int k, const ColorVec& from) {
  if (distinct(from) <= 2 || g.vertex_count() == 0) return true;
  std::set<ColorVec> seen{from};
  std::vector<ColorVec> queue{from};
  while (!queue.empty()) {
    ColorVec cur = queue.back();
    queue.pop_back();
    for (auto& next : config_neighbors(g, k, cur)) {
      if (!seen.insert(next).second) continue;
      if (distinct(next) <= 2) return true;
      queue.push_back(next);
    }
  }
  return false;
}

// Bipartiteness by exhausting all two-sidings; independent of any BFS logic.
inline bool two_colorable_bruteforce(const recolor::Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  if (n > 20) throw std::logic_error("brute-force bipartiteness capped at 20 vertices");
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (((mask >> u) & 1) == ((mask >> v) & 1)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace oracle
