#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "recolor/explore.hpp"
#include "test_graphs.hpp"

using namespace recolor;
using namespace testgraphs;

namespace {

std::uint64_t falling_factorial(int k, int n) {
  std::uint64_t out = 1;
  for (int i = 0; i < n; ++i) out *= static_cast<std::uint64_t>(k - i);
  return out;
}

std::uint64_t cycle_chromatic(int k, int n) {
  // (k-1)^n + (-1)^n (k-1)
  std::uint64_t p = 1;
  for (int i = 0; i < n; ++i) p *= static_cast<std::uint64_t>(k - 1);
  return n % 2 == 0 ? p + static_cast<std::uint64_t>(k - 1) : p - static_cast<std::uint64_t>(k - 1);
}

}  // namespace

TEST_CASE("state codec round-trips and orders colorings lexicographically") {
  StateCodec codec(4, 3);
  std::vector<int> buf;
  std::vector<std::uint64_t> codes;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const std::vector<int> colors{a, b, a, b};
      const std::uint64_t code = codec.encode(colors);
      codec.decode(code, buf);
      CHECK(buf == colors);
      codes.push_back(code);
    }
  CHECK(std::is_sorted(codes.begin(), codes.end()));  // lexicographic inputs
  CHECK(codec.state_count() == 81);
}

TEST_CASE("the state budget is enforced") {
  try {
    StateCodec codec(10, 3, 100);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  CHECK_THROWS_AS(components(cycle(4), 3, SearchLimits{10}), Error);
  CHECK_THROWS_AS(enumerate_colorings(cycle(4), 3, SearchLimits{10}), Error);
}

TEST_CASE("colorable stops at the first proper coloring") {
  CHECK(colorable(cycle(5), 3));
  CHECK_FALSE(colorable(cycle(5), 2));
  CHECK(colorable(complete(4), 4));
  CHECK_FALSE(colorable(complete(4), 3));
  CHECK(colorable(edgeless(3), 1));
  CHECK_THROWS_AS(colorable(cycle(4), 3, SearchLimits{10}), Error);
  for (int n = 1; n <= 5; ++n)
    for (unsigned long long mask = 0; mask < mask_count(n); ++mask) {
      const Graph g = from_mask(n, mask);
      CHECK(colorable(g, 3) == !oracle::all_proper_colorings(g, 3).empty());
    }
}

TEST_CASE("enumerate_colorings matches known counts") {
  CHECK(enumerate_colorings(complete(3), 3) == 6);
  CHECK(enumerate_colorings(cycle(6), 3) == 66);
  CHECK(enumerate_colorings(join_clique(cycle(6), 1), 4) == 264);
  CHECK(enumerate_colorings(cycle(6), 3) == oracle::all_proper_colorings(cycle(6), 3).size());
}

TEST_CASE("enumerate_colorings streams in lexicographic order") {
  std::vector<Coloring> seen;
  const std::uint64_t count =
      enumerate_colorings(cycle(5), 3, [&](const Coloring& c) { seen.push_back(c); });
  CHECK(count == seen.size());
  CHECK(seen.size() == oracle::all_proper_colorings(cycle(5), 3).size());
  for (std::size_t i = 0; i + 1 < seen.size(); ++i) CHECK(seen[i].colors < seen[i + 1].colors);
}

TEST_CASE("enumerate_colorings equals the chromatic polynomial in closed form") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 3; n <= 7; ++n) CHECK(enumerate_colorings(cycle(n), k) == cycle_chromatic(k, n));
    for (int n = 1; n <= 7; ++n) {
      std::uint64_t tree = k;  // k(k-1)^(n-1) for any tree on n vertices
      for (int i = 1; i < n; ++i) tree *= static_cast<std::uint64_t>(k - 1);
      CHECK(enumerate_colorings(path(n), k) == tree);
      if (n >= 2) CHECK(enumerate_colorings(star(n - 1), k) == tree);
    }
    for (int n = 1; n <= k; ++n)
      CHECK(enumerate_colorings(complete(n), k) == falling_factorial(k, n));
  }
}

TEST_CASE("components census on the standard small graphs") {
  const ConfigStats c6 = components(cycle(6), 3);
  CHECK(c6.num_colorings == 66);
  CHECK(c6.num_frozen == 6);
  CHECK(c6.num_components == 7);
  CHECK(c6.largest_component == 60);
  CHECK_FALSE(c6.is_connected);

  CHECK(components(cycle(4), 3).is_connected);

  const ConfigStats k3 = components(complete(3), 3);
  CHECK(k3.num_colorings == 6);
  CHECK(k3.num_components == 6);
  CHECK(k3.num_frozen == 6);
  CHECK(k3.largest_component == 1);

  // no proper colorings: vacuously connected
  const ConfigStats k4 = components(complete(4), 3);
  CHECK(k4.num_colorings == 0);
  CHECK(k4.num_components == 0);
  CHECK(k4.is_connected);
}

TEST_CASE("census invariants: sizes partition the states, frozen states are singletons") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int k = 2 + static_cast<int>(rng() % 3);
    Graph g = from_mask(n, rng() % mask_count(n));
    const Census cen = census(g, k);
    std::uint64_t total = 0;
    for (std::uint64_t s : cen.component_size) total += s;
    CHECK(total == cen.stats.num_colorings);
    CHECK(cen.stats.num_frozen <= cen.stats.num_components);
    for (std::size_t i = 0; i < cen.codes.size(); ++i)
      if (cen.frozen[i]) CHECK(cen.component_size[cen.component[i]] == 1);

    const auto ref = oracle::census(g, k);
    CHECK(cen.stats.num_colorings == static_cast<std::uint64_t>(ref.num_colorings));
    CHECK(cen.stats.num_components == static_cast<std::uint64_t>(ref.num_components));
    CHECK(cen.stats.num_frozen == static_cast<std::uint64_t>(ref.num_frozen));
    CHECK(cen.stats.largest_component == static_cast<std::uint64_t>(ref.largest_component));
  }
}

TEST_CASE("reachable finds shortest certified sequences") {
  const Coloring same{3, {0, 1, 0, 1}};
  auto trivial = reachable(cycle(4), 3, same, same);
  REQUIRE(trivial);
  CHECK(trivial->empty());

  // a frozen source reaches nothing else
  CHECK_FALSE(reachable(cycle(6), 3, {3, {0, 1, 2, 0, 1, 2}}, {3, {0, 1, 0, 1, 0, 1}}));

  const Coloring from{3, {0, 1, 0, 1}};
  const Coloring to{3, {1, 0, 1, 0}};
  auto seq = reachable(cycle(4), 3, from, to);
  REQUIRE(seq);
  CHECK(seq->size() == 6);  // brute-force BFS distance
  CHECK(apply_sequence(cycle(4), from, *seq) == to);
}

TEST_CASE("reachability is symmetric and matches oracle distances") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int k = 2 + static_cast<int>(rng() % 3);
    Graph g = from_mask(n, rng() % mask_count(n));
    auto all = oracle::all_proper_colorings(g, k);
    if (all.empty()) continue;
    const Coloring a{k, all[rng() % all.size()]};
    const Coloring b{k, all[rng() % all.size()]};
    auto fwd = reachable(g, k, a, b);
    auto bwd = reachable(g, k, b, a);
    CHECK(fwd.has_value() == bwd.has_value());
    auto dist = oracle::shortest_distance(g, k, a.colors, b.colors);
    CHECK(fwd.has_value() == dist.has_value());
    if (fwd && dist) {
      CHECK(static_cast<int>(fwd->size()) == *dist);
      CHECK(apply_sequence(g, a, *fwd) == b);
      CHECK(apply_sequence(g, b, *bwd) == a);
    }
  }
}

TEST_CASE("identical inputs give identical sequences and stats") {
  const Coloring from{3, {0, 1, 0, 1}};
  const Coloring to{3, {1, 0, 1, 0}};
  auto s1 = reachable(cycle(4), 3, from, to);
  auto s2 = reachable(cycle(4), 3, from, to);
  REQUIRE(s1);
  REQUIRE(s2);
  CHECK(*s1 == *s2);
  CHECK(components(cycle(6), 3) == components(cycle(6), 3));
}

TEST_CASE("reaches_two_coloring") {
  CHECK_FALSE(reaches_two_coloring(cycle(6), {3, {0, 1, 2, 0, 1, 2}}));
  CHECK(reaches_two_coloring(cycle(6), {3, {0, 1, 0, 1, 0, 1}}));
  for (const auto& colors : oracle::all_proper_colorings(cycle(4), 3)) {
    CHECK(reaches_two_coloring(cycle(4), {3, colors}));
    CHECK(oracle::reaches_le2(cycle(4), 3, colors));
  }
  CHECK_THROWS_AS(reaches_two_coloring(cycle(4), {3, {0, 0, 0, 0}}), Error);
}

TEST_CASE("is_mixing_bruteforce on the standard small graphs") {
  CHECK_FALSE(is_mixing_bruteforce(cycle(6), 3));
  CHECK(is_mixing_bruteforce(cycle(4), 3));
  CHECK_FALSE(is_mixing_bruteforce(join_clique(cycle(6), 1), 4));
}
