#include "recolor/reduction.hpp"

#include <algorithm>
#include <string>

namespace recolor {

ReductionInstance reduce(const Graph& b, int k) {
  if (k < 4)
    throw Error(ErrorCode::PaletteTooSmall, "reduction needs k >= 4, got " + std::to_string(k));
  if (!bipartition(b))
    throw Error(ErrorCode::NotBipartite, "reduction base graph must be bipartite");
  return ReductionInstance{join_clique(b, k - 3), b, k};
}

Coloring embed_coloring(const ReductionInstance& inst, const Coloring& c_b,
                        const std::vector<int>& palette_map, const std::vector<int>& x_colors) {
  if (c_b.k != 3)
    throw Error(ErrorCode::PaletteError, "base coloring must use palette size 3");
  if (!is_proper(inst.b, c_b))
    throw Error(ErrorCode::NotProper, "base coloring is not proper on b");

  if (palette_map.size() != 3)
    throw Error(ErrorCode::PaletteClash, "palette map must have exactly 3 entries");
  if (static_cast<int>(x_colors.size()) != inst.x_count())
    throw Error(ErrorCode::PaletteClash, "expected " + std::to_string(inst.x_count()) +
                                             " clique colors, got " +
                                             std::to_string(x_colors.size()));
  std::vector<char> taken(inst.k, 0);
  for (int c : palette_map) {
    if (c < 0 || c >= inst.k)
      throw Error(ErrorCode::PaletteError, "palette map color " + std::to_string(c));
    if (taken[c]) throw Error(ErrorCode::PaletteClash, "palette map is not injective");
    taken[c] = 1;
  }
  for (int c : x_colors) {
    if (c < 0 || c >= inst.k)
      throw Error(ErrorCode::PaletteError, "clique color " + std::to_string(c));
    if (taken[c])
      throw Error(ErrorCode::PaletteClash,
                  "clique color " + std::to_string(c) + " collides with the base palette");
    taken[c] = 1;
  }

  Coloring out{inst.k, std::vector<int>(inst.g.vertex_count())};
  for (int v = 0; v < inst.b_count(); ++v) out.colors[v] = palette_map[c_b.colors[v]];
  for (int i = 0; i < inst.x_count(); ++i) out.colors[inst.x_first() + i] = x_colors[i];
  return out;
}

WitnessPair non_mixing_witness(const ReductionInstance& inst, const Coloring& stuck,
                               const SearchLimits& limits) {
  if (reaches_two_coloring(inst.b, stuck, limits))
    throw Error(ErrorCode::BadWitness, "coloring can reach a two-coloring of b");

  std::vector<int> identity{0, 1, 2};
  std::vector<int> x_colors;
  for (int i = 0; i < inst.x_count(); ++i) x_colors.push_back(3 + i);

  const Coloring stranded = embed_coloring(inst, stuck, identity, x_colors);

  const auto bip = bipartition(inst.b);
  if (!bip) throw Error(ErrorCode::NotBipartite, "instance base graph must be bipartite");
  Coloring two{3, std::vector<int>(inst.b_count())};
  for (int v = 0; v < inst.b_count(); ++v) two.colors[v] = bip->side[v];
  const Coloring settled = embed_coloring(inst, two, identity, x_colors);

  // Machine-check disconnection when the state space fits the budget; the
  // pinned clique keeps b inside a 3-color palette otherwise.
  WitnessTier tier = WitnessTier::Structural;
  try {
    if (reachable(inst.g, inst.k, stranded, settled, limits))
      throw Error(ErrorCode::BadWitness, "witness pair is unexpectedly connected");
    tier = WitnessTier::ExactBfs;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
  }
  return WitnessPair{stranded, settled, tier};
}

}  // namespace recolor
