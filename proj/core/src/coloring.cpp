#include "recolor/coloring.hpp"

#include <algorithm>
#include <string>

namespace recolor {

int Coloring::distinct_color_count() const {
  std::vector<int> seen = colors;
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  return static_cast<int>(seen.size());
}

void validate_coloring(const Graph& g, const Coloring& c) {
  if (c.size() != g.vertex_count())
    throw Error(ErrorCode::ShapeError, "coloring has " + std::to_string(c.size()) +
                                           " entries for " + std::to_string(g.vertex_count()) +
                                           " vertices");
  if (g.vertex_count() > 0 && c.k < 1)
    throw Error(ErrorCode::PaletteError, "palette size must be at least 1");
  for (int v = 0; v < c.size(); ++v)
    if (c.colors[v] < 0 || c.colors[v] >= c.k)
      throw Error(ErrorCode::PaletteError, "color " + std::to_string(c.colors[v]) +
                                               " of vertex " + std::to_string(v) +
                                               " is outside palette 0.." + std::to_string(c.k - 1));
}

bool is_proper(const Graph& g, const Coloring& c) {
  validate_coloring(g, c);
  for (auto [u, v] : g.edges())
    if (c.colors[u] == c.colors[v]) return false;
  return true;
}

std::vector<Step> admissible_moves(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) throw Error(ErrorCode::NotProper, "admissible_moves needs a proper coloring");
  std::vector<Step> out;
  std::vector<char> blocked(c.k);
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::fill(blocked.begin(), blocked.end(), 0);
    for (int w : g.neighbors(v)) blocked[c.colors[w]] = 1;
    for (int a = 0; a < c.k; ++a)
      if (a != c.colors[v] && !blocked[a]) out.push_back({v, a});
  }
  return out;
}

Coloring apply_sequence(const Graph& g, const Coloring& c, const RecoloringSequence& s) {
  if (!is_proper(g, c)) throw Error(ErrorCode::NotProper, "apply_sequence needs a proper start");
  Coloring cur = c;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Step& step = s[i];
    if (step.vertex < 0 || step.vertex >= g.vertex_count())
      throw Error(ErrorCode::VertexOutOfRange, "step vertex " + std::to_string(step.vertex), i);
    if (step.new_color < 0 || step.new_color >= cur.k)
      throw Error(ErrorCode::PaletteError, "step color " + std::to_string(step.new_color), i);
    if (cur.colors[step.vertex] == step.new_color)
      throw Error(ErrorCode::NoOpStep, "step does not change vertex " + std::to_string(step.vertex), i);
    for (int w : g.neighbors(step.vertex))
      if (cur.colors[w] == step.new_color)
        throw Error(ErrorCode::ImproperStep,
                    "vertex " + std::to_string(step.vertex) + " would clash with neighbor " +
                        std::to_string(w),
                    i);
    cur.colors[step.vertex] = step.new_color;
  }
  return cur;
}

bool is_frozen(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) throw Error(ErrorCode::NotProper, "is_frozen needs a proper coloring");
  std::vector<char> blocked(c.k);
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::fill(blocked.begin(), blocked.end(), 0);
    for (int w : g.neighbors(v)) blocked[c.colors[w]] = 1;
    for (int a = 0; a < c.k; ++a)
      if (a != c.colors[v] && !blocked[a]) return false;
  }
  return true;
}

RecoloringSequence reverse_sequence(const Coloring& start, const RecoloringSequence& s) {
  std::vector<int> cur = start.colors;
  std::vector<int> displaced(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Step& step = s[i];
    if (step.vertex < 0 || step.vertex >= static_cast<int>(cur.size()))
      throw Error(ErrorCode::VertexOutOfRange, "step vertex " + std::to_string(step.vertex), i);
    displaced[i] = cur[step.vertex];
    cur[step.vertex] = step.new_color;
  }
  RecoloringSequence out;
  out.reserve(s.size());
  for (std::size_t i = s.size(); i-- > 0;) out.push_back({s[i].vertex, displaced[i]});
  return out;
}

}  // namespace recolor
