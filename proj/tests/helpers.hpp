#pragma once

// Shared test helpers: compact instance builders and deterministic random
// colored tournaments.

#include <cstdint>
#include <tuple>
#include <vector>

#include "flashbow/core.hpp"
#include "flashbow/rng.hpp"

namespace testutil {

using namespace flashbow;

// Builds a colored tournament from explicit directed, colored edges.
inline ColoredTournament ct_from(int n,
                                 const std::vector<std::tuple<int, int, int>>& edges) {
  Tournament t(n);
  std::vector<Color> by_pair(pair_count(n), 0);
  for (auto [u, v, c] : edges) {
    t.orient(u, v);
    by_pair[pair_index(u, v)] = static_cast<Color>(c);
  }
  return ColoredTournament(std::move(t), EdgeColoring(n, std::move(by_pair)));
}

// Random tournament with colors drawn uniformly from 1..colors.
inline ColoredTournament random_colored(int n, int colors, std::uint64_t seed) {
  Tournament t = random_tournament(n, seed);
  rng::Stream s(seed, 0x636f6c6fULL);  // stream tag: "colo"
  return make_colored(t, [&](Vertex, Vertex) {
    return static_cast<Color>(1 + s.below(static_cast<std::uint64_t>(colors)));
  });
}

}  // namespace testutil
