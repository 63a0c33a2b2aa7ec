#pragma once

#include <utility>

#include "recolor/reduction.hpp"

namespace recolor {

// Applies a color permutation to a sequence and its start coloring. The
// permuted sequence is valid from the permuted start whenever the original
// was valid from the original start, with the same length.
std::pair<RecoloringSequence, Coloring> relabel(const RecoloringSequence& s,
                                                const Coloring& c_start,
                                                const std::vector<int>& pi);

// From a proper coloring with colors inside {1,2}, recolors side 0 of
// `target` to color 0 in index order, then side 1 to color 1 (skipping
// vertices already there). Ends at the coloring that is 0 on side 0 and 1 on
// side 1. Needs k >= 3.
RecoloringSequence two_coloring_bridge(const Graph& g, const Coloring& c,
                                       const Bipartition& target);

// Full transformation between two proper 3-colorings of a 3-mixing graph:
// walk both endpoints down to two-colorings, align the color classes through
// the bridge, then replay the second walk backwards.
RecoloringSequence compose_three_mixing(const Graph& b, const Coloring& c1, const Coloring& c2,
                                        const SearchLimits& limits = {});

// Transforms one all-distinct coloring of the clique K_m into another using
// at most 2m steps, m < k. Greedy: recolor a vertex straight to its target
// color whenever that color is currently unused; otherwise park the lowest
// mismatched vertex on a spare color to break the blocking cycle.
RecoloringSequence clique_schedule(int m, int k, const Coloring& source, const Coloring& target);

// Expands a sequence on quotient(g, q) into one on g: a quotient step
// recoloring class C to color a becomes |C| member steps in index order.
// c_start must be constant on every class.
RecoloringSequence lift(const Graph& g, const QuotientMap& q, const Coloring& c_start,
                        const RecoloringSequence& s_q);

// The three segments of a synthesized transformation on a reduction
// instance: normalize c1's base part to the canonical two-coloring, move the
// remaining near-clique through the lifted quotient schedule, then undo c2's
// normalization.
struct SynthesisParts {
  RecoloringSequence head;
  RecoloringSequence mid;
  RecoloringSequence tail;

  RecoloringSequence full() const {
    RecoloringSequence out = head;
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  }
};

SynthesisParts synthesize_k_parts(const ReductionInstance& inst, const Coloring& c1,
                                  const Coloring& c2, const SearchLimits& limits = {});

// Verified end-to-end sequence from c1 to c2 on inst.g.
RecoloringSequence synthesize_k(const ReductionInstance& inst, const Coloring& c1,
                                const Coloring& c2, const SearchLimits& limits = {});

}  // namespace recolor
