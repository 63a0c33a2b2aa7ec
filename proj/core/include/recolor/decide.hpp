#pragma once

#include <optional>

#include "recolor/explore.hpp"

namespace recolor {

enum class Reason {
  NonBipartite,
  FrozenWitness,
  StuckWitness,
  Connected,
  VacuousNoColorings,
};

inline const char* name(Reason r) {
  switch (r) {
    case Reason::NonBipartite: return "NonBipartite";
    case Reason::FrozenWitness: return "FrozenWitness";
    case Reason::StuckWitness: return "StuckWitness";
    case Reason::Connected: return "Connected";
    case Reason::VacuousNoColorings: return "VacuousNoColorings";
  }
  return "Unknown";
}

// Decision outcome. A negative answer with reason FrozenWitness or
// StuckWitness always carries a witness coloring; NonBipartite does not.
struct MixingVerdict {
  bool answer = false;
  Reason reason = Reason::Connected;
  std::optional<Coloring> witness;
};

enum class Method { Auto, Brute, Lemma3 };

// True iff every proper 3-coloring of b can reach a coloring that uses at
// most two colors. On failure the witness is the lexicographically least
// stuck 3-coloring. Non-bipartite inputs are answered honestly.
MixingVerdict three_to_two(const Graph& b, const SearchLimits& limits = {});

// Bipartiteness plus the three_to_two predicate.
MixingVerdict is_3_mixing(const Graph& g, const SearchLimits& limits = {});

// Dispatching decision: Brute runs the exhaustive census, Lemma3 requires
// k == 3, Auto picks Lemma3 for k == 3 and Brute otherwise.
MixingVerdict decide_mixing(const Graph& g, int k, Method method = Method::Auto,
                            const SearchLimits& limits = {});

}  // namespace recolor
