#include "recolor/explore.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace recolor {

namespace {

// Visits every proper k-coloring in lexicographic order by backtracking over
// vertices in index order; properness is checked against lower-indexed
// neighbors only.
template <typename Fn>
std::uint64_t for_each_proper(const Graph& g, int k, Fn&& fn) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> prior(n);
  for (auto [u, v] : g.edges()) prior[v].push_back(u);  // u < v after normalization

  std::vector<int> colors(n, 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++count;
      fn(static_cast<const std::vector<int>&>(colors));
      return;
    }
    for (int a = 0; a < k; ++a) {
      bool ok = true;
      for (int u : prior[v])
        if (colors[u] == a) {
          ok = false;
          break;
        }
      if (!ok) continue;
      colors[v] = a;
      self(self, v + 1);
    }
  };
  rec(rec, 0);
  return count;
}

void require_palette(int k) {
  if (k < 1) throw Error(ErrorCode::PaletteError, "palette size must be at least 1");
}

}  // namespace

StateCodec::StateCodec(int n, int k, std::uint64_t max_states) : n_(n), k_(k) {
  require_palette(k);
  if (n < 0) throw Error(ErrorCode::VertexOutOfRange, "vertex count is negative");
  std::uint64_t total = 1;
  for (int i = 0; i < n_; ++i) {
    if (total > max_states / static_cast<std::uint64_t>(k_))
      throw Error(ErrorCode::TooLarge,
                  "state space " + std::to_string(k_) + "^" + std::to_string(n_) +
                      " exceeds the budget of " + std::to_string(max_states) + " states");
    total *= static_cast<std::uint64_t>(k_);
  }
  if (total > max_states)
    throw Error(ErrorCode::TooLarge, "state space exceeds the budget of " +
                                         std::to_string(max_states) + " states");
  state_count_ = total;
  weight_.assign(n_, 1);
  for (int i = n_ - 2; i >= 0; --i) weight_[i] = weight_[i + 1] * static_cast<std::uint64_t>(k_);
}

std::uint64_t StateCodec::encode(const std::vector<int>& colors) const {
  std::uint64_t code = 0;
  for (int i = 0; i < n_; ++i) code += static_cast<std::uint64_t>(colors[i]) * weight_[i];
  return code;
}

void StateCodec::decode(std::uint64_t code, std::vector<int>& colors) const {
  colors.resize(n_);
  for (int i = 0; i < n_; ++i)
    colors[i] = static_cast<int>((code / weight_[i]) % static_cast<std::uint64_t>(k_));
}

bool colorable(const Graph& g, int k, const SearchLimits& limits) {
  StateCodec guard(g.vertex_count(), k, limits.max_states);
  (void)guard;
  const int n = g.vertex_count();
  std::vector<std::vector<int>> prior(n);
  for (auto [u, v] : g.edges()) prior[v].push_back(u);
  std::vector<int> colors(n, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int a = 0; a < k; ++a) {
      bool ok = true;
      for (int u : prior[v])
        if (colors[u] == a) {
          ok = false;
          break;
        }
      if (!ok) continue;
      colors[v] = a;
      if (self(self, v + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

std::uint64_t enumerate_colorings(const Graph& g, int k, const SearchLimits& limits) {
  StateCodec guard(g.vertex_count(), k, limits.max_states);
  (void)guard;
  return for_each_proper(g, k, [](const std::vector<int>&) {});
}

std::uint64_t enumerate_colorings(const Graph& g, int k,
                                  const std::function<void(const Coloring&)>& visit,
                                  const SearchLimits& limits) {
  StateCodec guard(g.vertex_count(), k, limits.max_states);
  (void)guard;
  return for_each_proper(g, k, [&](const std::vector<int>& colors) {
    visit(Coloring{k, colors});
  });
}

Census census(const Graph& g, int k, const SearchLimits& limits) {
  const int n = g.vertex_count();
  Census out{StateCodec(n, k, limits.max_states), {}, {}, {}, {}, {}};

  for_each_proper(g, k, [&](const std::vector<int>& colors) {
    out.codes.push_back(out.codec.encode(colors));
  });
  out.stats.num_colorings = out.codes.size();
  out.component.assign(out.codes.size(), -1);
  out.frozen.assign(out.codes.size(), 0);

  auto index_of = [&](std::uint64_t code) -> std::size_t {
    return static_cast<std::size_t>(
        std::lower_bound(out.codes.begin(), out.codes.end(), code) - out.codes.begin());
  };

  std::vector<int> buf(n);
  std::vector<char> blocked(k);
  std::deque<std::size_t> queue;
  std::int32_t next_component = 0;

  for (std::size_t start = 0; start < out.codes.size(); ++start) {
    if (out.component[start] != -1) continue;
    const std::int32_t comp = next_component++;
    std::uint64_t size = 0;
    out.component[start] = comp;
    queue.assign(1, start);
    while (!queue.empty()) {
      const std::size_t idx = queue.front();
      queue.pop_front();
      ++size;
      out.codec.decode(out.codes[idx], buf);
      int moves = 0;
      for (int v = 0; v < n; ++v) {
        std::fill(blocked.begin(), blocked.end(), 0);
        for (int w : g.neighbors(v)) blocked[buf[w]] = 1;
        for (int a = 0; a < k; ++a) {
          if (a == buf[v] || blocked[a]) continue;
          ++moves;
          const std::size_t j = index_of(out.codec.repack(out.codes[idx], v, buf[v], a));
          if (out.component[j] == -1) {
            out.component[j] = comp;
            queue.push_back(j);
          }
        }
      }
      if (moves == 0) {
        out.frozen[idx] = 1;
        ++out.stats.num_frozen;
      }
    }
    out.component_size.push_back(size);
  }

  out.stats.num_components = static_cast<std::uint64_t>(next_component);
  out.stats.largest_component =
      out.component_size.empty()
          ? 0
          : *std::max_element(out.component_size.begin(), out.component_size.end());
  out.stats.is_connected = out.stats.num_components <= 1;
  return out;
}

ConfigStats components(const Graph& g, int k, const SearchLimits& limits) {
  return census(g, k, limits).stats;
}

std::optional<SearchResult> bfs_search(const Graph& g, int k, const Coloring& from,
                                       const std::function<bool(const Coloring&)>& goal,
                                       const SearchLimits& limits) {
  const int n = g.vertex_count();
  if (from.k != k)
    throw Error(ErrorCode::PaletteError, "coloring palette " + std::to_string(from.k) +
                                             " does not match requested k=" + std::to_string(k));
  if (!is_proper(g, from)) throw Error(ErrorCode::NotProper, "search start must be proper");
  StateCodec codec(n, k, limits.max_states);
  if (goal(from)) return SearchResult{{}, from};

  const std::uint64_t start = codec.encode(from.colors);
  std::unordered_set<std::uint64_t> visited{start};
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, Step>> parent;
  std::deque<std::uint64_t> queue{start};

  std::vector<int> buf(n);
  std::vector<char> blocked(k);
  Coloring candidate{k, std::vector<int>(n)};

  while (!queue.empty()) {
    const std::uint64_t code = queue.front();
    queue.pop_front();
    codec.decode(code, buf);
    for (int v = 0; v < n; ++v) {
      std::fill(blocked.begin(), blocked.end(), 0);
      for (int w : g.neighbors(v)) blocked[buf[w]] = 1;
      for (int a = 0; a < k; ++a) {
        if (a == buf[v] || blocked[a]) continue;
        const std::uint64_t ncode = codec.repack(code, v, buf[v], a);
        if (!visited.insert(ncode).second) continue;
        parent.emplace(ncode, std::make_pair(code, Step{v, a}));
        candidate.colors = buf;
        candidate.colors[v] = a;
        if (goal(candidate)) {
          RecoloringSequence steps;
          std::uint64_t cur = ncode;
          while (cur != start) {
            const auto& [prev, step] = parent.at(cur);
            steps.push_back(step);
            cur = prev;
          }
          std::reverse(steps.begin(), steps.end());
          return SearchResult{std::move(steps), candidate};
        }
        queue.push_back(ncode);
      }
    }
  }
  return std::nullopt;
}

std::optional<RecoloringSequence> reachable(const Graph& g, int k, const Coloring& c1,
                                            const Coloring& c2, const SearchLimits& limits) {
  if (c2.k != k)
    throw Error(ErrorCode::PaletteError, "target palette does not match requested k");
  if (!is_proper(g, c2)) throw Error(ErrorCode::NotProper, "target coloring must be proper");
  auto hit = bfs_search(
      g, k, c1, [&](const Coloring& c) { return c.colors == c2.colors; }, limits);
  if (!hit) return std::nullopt;
  return std::move(hit->steps);
}

bool is_mixing_bruteforce(const Graph& g, int k, const SearchLimits& limits) {
  return components(g, k, limits).is_connected;
}

bool reaches_two_coloring(const Graph& g, const Coloring& c, const SearchLimits& limits) {
  return bfs_search(
             g, c.k, c, [](const Coloring& state) { return state.distinct_color_count() <= 2; },
             limits)
      .has_value();
}

}  // namespace recolor
