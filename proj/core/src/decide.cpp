#include "recolor/decide.hpp"

#include <string>
#include <vector>

namespace recolor {

MixingVerdict three_to_two(const Graph& b, const SearchLimits& limits) {
  Census cen = census(b, 3, limits);
  if (cen.codes.empty()) return {true, Reason::VacuousNoColorings, std::nullopt};

  // One census instead of one search per coloring: a coloring can reach a
  // two-coloring iff its component contains one.
  std::vector<char> component_ok(cen.stats.num_components, 0);
  std::vector<int> buf;
  for (std::size_t i = 0; i < cen.codes.size(); ++i) {
    cen.codec.decode(cen.codes[i], buf);
    Coloring c{3, buf};
    if (c.distinct_color_count() <= 2) component_ok[cen.component[i]] = 1;
  }

  for (std::size_t i = 0; i < cen.codes.size(); ++i) {
    if (component_ok[cen.component[i]]) continue;
    // Codes ascend lexicographically, so the first miss is the least witness.
    Coloring witness = cen.coloring_at(i);
    const Reason reason = cen.frozen[i] ? Reason::FrozenWitness : Reason::StuckWitness;
    return {false, reason, std::move(witness)};
  }
  return {true, Reason::Connected, std::nullopt};
}

MixingVerdict is_3_mixing(const Graph& g, const SearchLimits& limits) {
  if (!bipartition(g)) {
    // Non-3-colorable graphs sit outside the problem's domain; answer them
    // vacuously, matching the brute-force convention on empty state spaces.
    if (!colorable(g, 3, limits)) return {true, Reason::VacuousNoColorings, std::nullopt};
    return {false, Reason::NonBipartite, std::nullopt};
  }
  return three_to_two(g, limits);
}

MixingVerdict decide_mixing(const Graph& g, int k, Method method, const SearchLimits& limits) {
  if (method == Method::Lemma3 && k != 3)
    throw Error(ErrorCode::MethodMismatch,
                "the characterization method requires k=3, got k=" + std::to_string(k));
  if (method == Method::Auto) method = (k == 3) ? Method::Lemma3 : Method::Brute;
  if (method == Method::Lemma3) return is_3_mixing(g, limits);

  Census cen = census(g, k, limits);
  if (cen.stats.is_connected) {
    return {true, cen.codes.empty() ? Reason::VacuousNoColorings : Reason::Connected,
            std::nullopt};
  }
  if (cen.stats.num_frozen > 0) {
    for (std::size_t i = 0; i < cen.codes.size(); ++i)
      if (cen.frozen[i]) return {false, Reason::FrozenWitness, cen.coloring_at(i)};
  }
  // No frozen coloring: report the least state outside the first component.
  for (std::size_t i = 0; i < cen.codes.size(); ++i)
    if (cen.component[i] != cen.component[0])
      return {false, Reason::StuckWitness, cen.coloring_at(i)};
  return {false, Reason::StuckWitness, std::nullopt};  // unreachable
}

}  // namespace recolor
