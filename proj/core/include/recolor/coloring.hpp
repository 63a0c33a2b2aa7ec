#pragma once

#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

// A palette assignment: colors[v] in 0..k-1. Properness with respect to a
// graph is a predicate, not an invariant of the type.
struct Coloring {
  int k = 0;
  std::vector<int> colors;

  int size() const noexcept { return static_cast<int>(colors.size()); }
  int distinct_color_count() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// One single-vertex recoloring. A step that does not change the vertex's
// color is invalid.
struct Step {
  int vertex = 0;
  int new_color = 0;

  friend bool operator==(const Step&, const Step&) = default;
};

// Ordered single-vertex recolorings; validity is relative to a graph,
// palette, and start coloring.
using RecoloringSequence = std::vector<Step>;

// Throws ShapeError on length mismatch, PaletteError on out-of-range entries.
void validate_coloring(const Graph& g, const Coloring& c);

// True iff every edge is bichromatic.
bool is_proper(const Graph& g, const Coloring& c);

// All legal single-vertex recolorings from c, ascending by (vertex, color).
std::vector<Step> admissible_moves(const Graph& g, const Coloring& c);

// Replays s from c, checking that every step changes exactly one vertex and
// every intermediate coloring stays proper. Returns the final coloring.
Coloring apply_sequence(const Graph& g, const Coloring& c, const RecoloringSequence& s);

// True iff no single-vertex recoloring is available from c.
bool is_frozen(const Graph& g, const Coloring& c);

// The reverse walk of a valid sequence: replays s from `start` to collect the
// displaced colors, then emits them in reverse order. Valid from s's endpoint
// back to `start` whenever s was valid from `start`.
RecoloringSequence reverse_sequence(const Coloring& start, const RecoloringSequence& s);

}  // namespace recolor
