#include "recolor/synthesis.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "recolor/decide.hpp"

namespace recolor {

namespace {

bool is_permutation_of_palette(const std::vector<int>& pi, int k) {
  if (static_cast<int>(pi.size()) != k) return false;
  std::vector<char> seen(k, 0);
  for (int x : pi) {
    if (x < 0 || x >= k || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::vector<int> inverse_permutation(const std::vector<int>& pi) {
  std::vector<int> inv(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) inv[pi[i]] = static_cast<int>(i);
  return inv;
}

std::vector<int> distinct_colors(const Coloring& c) {
  std::vector<int> used = c.colors;
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  return used;
}

Coloring permute_coloring(const Coloring& c, const std::vector<int>& pi) {
  Coloring out = c;
  for (int& color : out.colors) color = pi[color];
  return out;
}

// Greedy rainbow-to-rainbow transformation with global availability checks.
// Both colorings stay all-distinct throughout, so every emitted step is also
// legal on any graph over the same vertices.
RecoloringSequence rainbow_transform(int k, std::vector<int> cur, const std::vector<int>& target) {
  const int m = static_cast<int>(cur.size());
  RecoloringSequence steps;
  auto used = [&](int color) { return std::find(cur.begin(), cur.end(), color) != cur.end(); };
  for (;;) {
    int direct = -1;
    int lowest_mismatch = -1;
    for (int v = 0; v < m; ++v) {
      if (cur[v] == target[v]) continue;
      if (lowest_mismatch < 0) lowest_mismatch = v;
      if (!used(target[v])) {
        direct = v;
        break;
      }
    }
    if (lowest_mismatch < 0) break;
    if (direct >= 0) {
      steps.push_back({direct, target[direct]});
      cur[direct] = target[direct];
    } else {
      int spare = 0;
      while (spare < k && used(spare)) ++spare;
      if (spare == k)
        throw Error(ErrorCode::PaletteTooSmall, "no spare color; need k > m");
      steps.push_back({lowest_mismatch, spare});
      cur[lowest_mismatch] = spare;
    }
  }
  return steps;
}

// BFS target for endpoint normalization: constant on each bipartition side,
// two distinct side colors when both sides are inhabited.
bool constant_on_sides(const Coloring& c, const std::vector<int>& side0,
                       const std::vector<int>& side1) {
  int c0 = -1;
  int c1 = -1;
  for (int v : side0) {
    if (c0 == -1) c0 = c.colors[v];
    if (c.colors[v] != c0) return false;
  }
  for (int v : side1) {
    if (c1 == -1) c1 = c.colors[v];
    if (c.colors[v] != c1) return false;
  }
  if (c0 != -1 && c1 != -1 && c0 == c1) return false;
  return true;
}

}  // namespace

std::pair<RecoloringSequence, Coloring> relabel(const RecoloringSequence& s,
                                                const Coloring& c_start,
                                                const std::vector<int>& pi) {
  if (!is_permutation_of_palette(pi, c_start.k))
    throw Error(ErrorCode::BadPermutation,
                "expected a permutation of 0.." + std::to_string(c_start.k - 1));
  Coloring start = c_start;
  for (int& c : start.colors) c = pi[c];
  RecoloringSequence out = s;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].new_color < 0 || out[i].new_color >= c_start.k)
      throw Error(ErrorCode::PaletteError, "step color " + std::to_string(out[i].new_color), i);
    out[i].new_color = pi[out[i].new_color];
  }
  return {std::move(out), std::move(start)};
}

RecoloringSequence two_coloring_bridge(const Graph& g, const Coloring& c,
                                       const Bipartition& target) {
  validate_coloring(g, c);
  if (c.k < 3) throw Error(ErrorCode::PaletteError, "bridge needs k >= 3");
  for (int v = 0; v < c.size(); ++v)
    if (c.colors[v] != 1 && c.colors[v] != 2)
      throw Error(ErrorCode::PaletteError,
                  "vertex " + std::to_string(v) + " is colored " + std::to_string(c.colors[v]) +
                      "; the bridge source must use colors {1,2}");
  if (!is_proper(g, c)) throw Error(ErrorCode::NotProper, "bridge source must be proper");

  if (static_cast<int>(target.side.size()) != g.vertex_count())
    throw Error(ErrorCode::NotBipartition, "side vector length mismatch");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (target.side[v] > 1) throw Error(ErrorCode::NotBipartition, "side entries must be 0 or 1");
  for (auto [u, v] : g.edges())
    if (target.side[u] == target.side[v])
      throw Error(ErrorCode::NotBipartition,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") does not cross");

  RecoloringSequence steps;
  std::vector<int> cur = c.colors;
  // Side-0 neighbors all sit on side 1 and still carry colors from {1,2},
  // so color 0 is always free; afterwards side-1 neighbors are all 0.
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (target.side[v] != 0) continue;
    steps.push_back({v, 0});
    cur[v] = 0;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (target.side[v] != 1 || cur[v] == 1) continue;
    steps.push_back({v, 1});
    cur[v] = 1;
  }
  return steps;
}

RecoloringSequence compose_three_mixing(const Graph& b, const Coloring& c1, const Coloring& c2,
                                        const SearchLimits& limits) {
  if (!is_3_mixing(b, limits).answer)
    throw Error(ErrorCode::NotMixing, "graph is not 3-mixing");
  if (c1.k != 3 || c2.k != 3)
    throw Error(ErrorCode::PaletteError, "both colorings must use palette size 3");
  if (!is_proper(b, c1) || !is_proper(b, c2))
    throw Error(ErrorCode::NotProper, "both colorings must be proper");
  if (b.vertex_count() == 0) return {};

  const auto two_colored = [](const Coloring& c) { return c.distinct_color_count() <= 2; };
  auto walk1 = bfs_search(b, 3, c1, two_colored, limits);
  auto walk2 = bfs_search(b, 3, c2, two_colored, limits);
  if (!walk1 || !walk2)
    throw Error(ErrorCode::NotMixing, "no two-coloring reachable despite mixing verdict");
  const Coloring& d1 = walk1->endpoint;
  const Coloring& d2 = walk2->endpoint;

  const std::vector<int> used1 = distinct_colors(d1);
  const std::vector<int> used2 = distinct_colors(d2);

  // One permutation rho sending d1's colors into {1,2} and d2's into {0,1}
  // lets the whole middle ride on the bridge: build it in the relabeled
  // space and map it back, so its endpoints are exactly d1 and d2.
  std::vector<int> rho;
  {
    std::vector<int> pi{0, 1, 2};
    do {
      bool ok = true;
      for (int c : used1)
        if (pi[c] == 0) ok = false;
      for (int c : used2)
        if (pi[c] == 2) ok = false;
      if (ok) {
        rho = pi;
        break;
      }
    } while (std::next_permutation(pi.begin(), pi.end()));
  }

  RecoloringSequence mid;
  if (!rho.empty()) {
    const Coloring e1 = permute_coloring(d1, rho);
    const Coloring e2 = permute_coloring(d2, rho);
    Bipartition classes;
    classes.side.assign(e2.colors.begin(), e2.colors.end());  // zeros on side 0, ones on side 1
    const RecoloringSequence bridge = two_coloring_bridge(b, e1, classes);
    mid = relabel(bridge, e1, inverse_permutation(rho)).first;
  } else {
    // Both endpoints use the same two colors {a,c}; no single permutation
    // fits, so bridge onto d2's classes swapped and finish with one sweep
    // through the spare color.
    assert(used1 == used2 && used1.size() == 2);
    const int a = used1[0];
    const int c = used1[1];
    const int spare = 3 - a - c;
    std::vector<int> perm(3);
    perm[a] = 1;
    perm[c] = 2;
    perm[spare] = 0;
    const Coloring e1 = permute_coloring(d1, perm);
    Bipartition classes;
    classes.side.resize(d2.colors.size());
    for (std::size_t v = 0; v < d2.colors.size(); ++v)
      classes.side[v] = (d2.colors[v] == a) ? 1 : 0;
    const RecoloringSequence bridge = two_coloring_bridge(b, e1, classes);
    // Mapped back, the bridge ends with d2's a-class on a and its c-class
    // parked on the spare; one sweep moves the c-class home.
    mid = relabel(bridge, e1, inverse_permutation(perm)).first;
    for (std::size_t v = 0; v < d2.colors.size(); ++v)
      if (d2.colors[v] == c) mid.push_back({static_cast<int>(v), c});
  }

  RecoloringSequence out = walk1->steps;
  out.insert(out.end(), mid.begin(), mid.end());
  const RecoloringSequence back = reverse_sequence(c2, walk2->steps);
  out.insert(out.end(), back.begin(), back.end());
  return out;
}

RecoloringSequence clique_schedule(int m, int k, const Coloring& source, const Coloring& target) {
  if (m < 0) throw Error(ErrorCode::ShapeError, "clique size is negative");
  if (m >= k)
    throw Error(ErrorCode::PaletteTooSmall,
                "clique schedule needs k > m, got m=" + std::to_string(m) +
                    ", k=" + std::to_string(k));
  for (const Coloring* c : {&source, &target}) {
    if (c->size() != m) throw Error(ErrorCode::ShapeError, "coloring size must equal m");
    if (c->k != k) throw Error(ErrorCode::PaletteError, "coloring palette must equal k");
    for (int x : c->colors)
      if (x < 0 || x >= k) throw Error(ErrorCode::PaletteError, "color " + std::to_string(x));
    if (c->distinct_color_count() != m)
      throw Error(ErrorCode::NotProper, "clique coloring must be all-distinct");
  }
  return rainbow_transform(k, source.colors, target.colors);
}

RecoloringSequence lift(const Graph& g, const QuotientMap& q, const Coloring& c_start,
                        const RecoloringSequence& s_q) {
  const Graph qg = quotient(g, q);  // validates the map
  if (!is_proper(g, c_start)) throw Error(ErrorCode::NotProper, "lift start must be proper");

  Coloring qcol{c_start.k, std::vector<int>(qg.vertex_count())};
  for (std::size_t ci = 0; ci < q.classes.size(); ++ci) {
    const int color = c_start.colors[q.classes[ci][0]];
    for (int v : q.classes[ci])
      if (c_start.colors[v] != color)
        throw Error(ErrorCode::NotClassConstant,
                    "class " + std::to_string(ci) + " is not uniformly colored");
    qcol.colors[ci] = color;
  }

  apply_sequence(qg, qcol, s_q);  // propagates any invalid quotient step

  RecoloringSequence out;
  for (const Step& step : s_q) {
    const auto& members = q.classes[step.vertex];
    for (int v : members) out.push_back({v, step.new_color});
  }
  return out;
}

namespace {

struct NormalizedEndpoint {
  RecoloringSequence steps;  // on the full instance graph, touching only b
  Coloring settled;          // endpoint: b constant on each side, clique unchanged
};

// Drives the base part of a k-coloring to the canonical side-constant
// two-coloring while the clique stays pinned. The search runs on b alone
// inside the 3-color palette left free by the clique.
NormalizedEndpoint normalize_endpoint(const ReductionInstance& inst, const Bipartition& bip,
                                      const Coloring& c, const SearchLimits& limits) {
  const int nb = inst.b_count();
  std::vector<char> clique_color(inst.k, 0);
  for (int x : inst.x_vertices()) clique_color[c.colors[x]] = 1;
  std::vector<int> palette;  // the three colors available to b, ascending
  for (int color = 0; color < inst.k; ++color)
    if (!clique_color[color]) palette.push_back(color);
  assert(palette.size() == 3);
  std::vector<int> palette_index(inst.k, -1);
  for (int i = 0; i < 3; ++i) palette_index[palette[i]] = i;

  Coloring base{3, std::vector<int>(nb)};
  for (int v = 0; v < nb; ++v) base.colors[v] = palette_index[c.colors[v]];

  const std::vector<int> side0 = bip.side_vertices(0);
  const std::vector<int> side1 = bip.side_vertices(1);
  auto walk = bfs_search(
      inst.b, 3, base,
      [&](const Coloring& state) { return constant_on_sides(state, side0, side1); }, limits);
  if (!walk)
    throw Error(ErrorCode::NotMixing, "no side-constant two-coloring reachable");

  NormalizedEndpoint out;
  out.steps.reserve(walk->steps.size());
  for (const Step& step : walk->steps) out.steps.push_back({step.vertex, palette[step.new_color]});
  out.settled = c;
  for (int v = 0; v < nb; ++v) out.settled.colors[v] = palette[walk->endpoint.colors[v]];
  return out;
}

}  // namespace

SynthesisParts synthesize_k_parts(const ReductionInstance& inst, const Coloring& c1,
                                  const Coloring& c2, const SearchLimits& limits) {
  if (!three_to_two(inst.b, limits).answer)
    throw Error(ErrorCode::NotMixing, "base graph fails the reachability predicate");
  if (c1.k != inst.k || c2.k != inst.k)
    throw Error(ErrorCode::PaletteError, "colorings must use the instance palette");
  if (!is_proper(inst.g, c1) || !is_proper(inst.g, c2))
    throw Error(ErrorCode::NotProper, "both colorings must be proper on the instance");

  const auto bip = bipartition(inst.b);
  if (!bip) throw Error(ErrorCode::NotBipartite, "instance base graph must be bipartite");

  const NormalizedEndpoint from = normalize_endpoint(inst, *bip, c1, limits);
  const NormalizedEndpoint to = normalize_endpoint(inst, *bip, c2, limits);

  // Both settled colorings are constant on each side, so contracting the two
  // sides leaves a near-clique on at most k-1 vertices colored all-distinct.
  QuotientMap q;
  for (int s : {0, 1}) {
    std::vector<int> side = bip->side_vertices(s);
    if (!side.empty()) q.classes.push_back(std::move(side));
  }
  for (int x : inst.x_vertices()) q.classes.push_back({x});

  std::vector<int> u1(q.classes.size());
  std::vector<int> u2(q.classes.size());
  for (std::size_t ci = 0; ci < q.classes.size(); ++ci) {
    u1[ci] = from.settled.colors[q.classes[ci][0]];
    u2[ci] = to.settled.colors[q.classes[ci][0]];
  }

  const RecoloringSequence schedule = rainbow_transform(inst.k, u1, u2);
  SynthesisParts parts;
  parts.head = from.steps;
  parts.mid = lift(inst.g, q, from.settled, schedule);
  parts.tail = reverse_sequence(c2, to.steps);
  return parts;
}

RecoloringSequence synthesize_k(const ReductionInstance& inst, const Coloring& c1,
                                const Coloring& c2, const SearchLimits& limits) {
  return synthesize_k_parts(inst, c1, c2, limits).full();
}

}  // namespace recolor
