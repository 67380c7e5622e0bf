#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <variant>
#include <vector>

#include "flashbow/construct.hpp"
#include "flashbow/detect.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace flashbow;

TEST_CASE("grid labels decode indices in lexicographic order") {
  CHECK(grid_label(1, 2, 3) == std::vector<int>{1, 1});
  CHECK(grid_label(4, 2, 3) == std::vector<int>{2, 2});
  CHECK(grid_label(5, 3, 3) == std::vector<int>{2, 2});
  CHECK(grid_label(1, 5, 2) == std::vector<int>{1});
  CHECK(grid_label(5, 5, 2) == std::vector<int>{5});

  // Bijective and lexicographically increasing across the whole square.
  std::vector<std::vector<int>> seen;
  for (std::uint64_t i = 1; i <= 9; ++i) seen.push_back(grid_label(i, 3, 3));
  for (std::size_t i = 0; i + 1 < seen.size(); ++i) CHECK(seen[i] < seen[i + 1]);

  CHECK_THROWS_AS(grid_label(0, 2, 3), DomainError);
  CHECK_THROWS_AS(grid_label(5, 2, 3), DomainError);  // beyond 2^2
  CHECK_THROWS_AS(grid_label(1, 0, 3), DomainError);
  CHECK_THROWS_AS(grid_label(1, 2, 1), DomainError);
}

TEST_CASE("grid coloring of the 2x2 square matches the worked instance") {
  ColoredTournament g = grid_coloring(2, 3);
  REQUIRE(g.size() == 4);
  REQUIRE(is_transitive(g.tournament));
  // Vertices 1..4 carry labels (1,1),(1,2),(2,1),(2,2).
  CHECK(g.color(1, 2) == 2);
  CHECK(g.color(1, 3) == 1);
  CHECK(g.color(1, 4) == 1);
  CHECK(g.color(2, 3) == 1);
  CHECK(g.color(2, 4) == 1);
  CHECK(g.color(3, 4) == 2);
}

TEST_CASE("grid colorings are extremal: longest flash exactly l-1, few colors") {
  for (int l = 2; l <= 6; ++l) {
    for (int k = 2; k <= 5; ++k) {
      std::uint64_t n = 1;
      for (int i = 0; i < k - 1; ++i) n *= static_cast<std::uint64_t>(l);
      if (n > 2048) continue;
      CAPTURE(l, k, n);
      ColoredTournament g = grid_coloring(l, k);
      REQUIRE(g.size() == static_cast<int>(n));

      auto palette = g.palette();
      CHECK(palette.size() <= static_cast<std::size_t>(k - 1));
      for (Color c : palette) CHECK(c <= static_cast<Color>(k - 1));

      // Defining monotonicity: a color-c edge leaves earlier coordinates
      // equal-or-larger and strictly raises coordinate c.
      g.for_each_edge([&](Vertex u, Vertex v, Color c) {
        auto xu = grid_label(static_cast<std::uint64_t>(u), l, k);
        auto xv = grid_label(static_cast<std::uint64_t>(v), l, k);
        REQUIRE(xu[c - 1] < xv[c - 1]);
        for (Color i = 1; i < c; ++i) REQUIRE(xu[i - 1] >= xv[i - 1]);
      });

      auto [len, cert] = longest_flash(g);
      REQUIRE_FALSE(len.is_unbounded());
      CHECK(len.value() == l - 1);
      REQUIRE(cert.has_value());
      CHECK(cert->walk.size() == static_cast<std::size_t>(l));
    }
  }
}

TEST_CASE("grid corner cases: one-vertex grids and the size cap") {
  ColoredTournament tiny = grid_coloring(1, 4);
  CHECK(tiny.size() == 1);
  CHECK(tiny.palette().empty());

  CHECK_THROWS_AS(grid_coloring(10, 7), SizeCapError);   // 10^6 vertices
  CHECK_THROWS_AS(grid_coloring(10, 7, 999'999), SizeCapError);
  CHECK(grid_coloring(10, 3, 100).size() == 100);
  CHECK_THROWS_AS(grid_coloring(10, 3, 99), SizeCapError);
}

TEST_CASE("the 3x3 grid has rainbow walks no longer than 2") {
  ColoredTournament g = grid_coloring(3, 3);
  auto [flash_len, flash_cert] = longest_flash(g);
  CHECK(flash_len == FlashLen::finite(2));
  auto [rlen, rcert] = longest_rainbow(g, 3);
  CHECK(rlen == 2);
  REQUIRE(rcert.has_value());
}

TEST_CASE("antichain label sets match their worked examples") {
  AntichainLabelSet x43 = antichain_labels(4, 3);
  CHECK(x43.target_sum == 4);
  CHECK(x43.labels == std::vector<std::vector<int>>{{1, 3}, {2, 2}, {3, 1}});

  AntichainLabelSet x24 = antichain_labels(2, 4);
  CHECK(x24.target_sum == 3);
  CHECK(x24.labels == std::vector<std::vector<int>>{{1, 1, 1}});

  // floor(2*2/2) = 2, so the 2x2 square's middle layer is the single label
  // (1,1) -- its neighbors (1,2) and (2,1) sit on sum 3.
  AntichainLabelSet x23 = antichain_labels(2, 3);
  CHECK(x23.target_sum == 2);
  CHECK(x23.labels == std::vector<std::vector<int>>{{1, 1}});

  CHECK(antichain_labels(1, 3).labels.empty());
  CHECK(antichain_labels(1, 2).labels.empty());  // target 0, minimum sum 1
}

TEST_CASE("antichain label counts agree with the composition oracle") {
  for (int l = 1; l <= 6; ++l) {
    for (int k = 2; k <= 5; ++k) {
      CAPTURE(l, k);
      AntichainLabelSet set = antichain_labels(l, k);
      CHECK(static_cast<long long>(set.size()) ==
            oracle::composition_count(l, k - 1, l * (k - 1) / 2));
      // Lexicographic, distinct, all on the target sum.
      for (std::size_t i = 0; i + 1 < set.labels.size(); ++i)
        CHECK(set.labels[i] < set.labels[i + 1]);
      for (const auto& label : set.labels) {
        int sum = 0;
        for (int x : label) {
          CHECK(x >= 1);
          CHECK(x <= l);
          sum += x;
        }
        CHECK(sum == set.target_sum);
      }
    }
  }
}

TEST_CASE("antichain coloring colors every edge by the first rising coordinate") {
  // Transitive base: labels ascend with the vertex order, so every forward
  // edge rises in the first coordinate already.
  ColoredTournament mono = antichain_coloring(new_transitive(3), 4, 3);
  CHECK(mono.color(1, 2) == 1);
  CHECK(mono.color(1, 3) == 1);
  CHECK(mono.color(2, 3) == 1);

  // The directed triangle exercises a backward edge: (3,1) -> (1,3) rises
  // only in the second coordinate.
  ColoredTournament tri = antichain_coloring(reversed_edge_tournament(3), 4, 3);
  CHECK(tri.color(1, 2) == 1);
  CHECK(tri.color(2, 3) == 1);
  CHECK(tri.color(3, 1) == 2);

  ColoredTournament lone = antichain_coloring(new_transitive(1), 2, 3);
  CHECK(lone.palette().empty());

  CHECK_THROWS_AS(antichain_coloring(new_transitive(4), 2, 3), SizeCapError);
  CHECK_THROWS_AS(antichain_coloring(new_transitive(2), 1, 3), SizeCapError);
}

TEST_CASE("antichain colorings keep every color's walks short on random bases") {
  struct Shape { int l, k; };
  for (Shape shape : {Shape{4, 3}, Shape{5, 3}, Shape{3, 4}}) {
    AntichainLabelSet set = antichain_labels(shape.l, shape.k);
    REQUIRE(set.size() >= 2);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      int n = static_cast<int>(set.size());
      Tournament t = random_tournament(n, seed);
      ColoredTournament ct = antichain_coloring(t, shape.l, shape.k);
      CAPTURE(shape.l, shape.k, seed);

      ct.for_each_edge([&](Vertex u, Vertex v, Color c) {
        const auto& xu = set.labels[static_cast<std::size_t>(u - 1)];
        const auto& xv = set.labels[static_cast<std::size_t>(v - 1)];
        REQUIRE(xu[c - 1] < xv[c - 1]);
        for (Color i = 1; i < c; ++i) REQUIRE(xu[i - 1] >= xv[i - 1]);
      });

      auto [len, cert] = longest_flash(ct);
      REQUIRE_FALSE(len.is_unbounded());
      CHECK(len.value() <= shape.l - 1);
    }
  }
}

TEST_CASE("reversed-edge tournament flips exactly the outer pair") {
  Tournament tri = reversed_edge_tournament(3);
  CHECK(tri.dominates(1, 2));
  CHECK(tri.dominates(2, 3));
  CHECK(tri.dominates(3, 1));
  CHECK_FALSE(is_transitive(tri));

  Tournament t5 = reversed_edge_tournament(5);
  Tournament base = new_transitive(5);
  int differing = 0;
  base.for_each_edge([&](Vertex u, Vertex v) {
    if (t5.dominates(u, v) != base.dominates(u, v)) ++differing;
  });
  CHECK(differing == 1);
  CHECK(t5.dominates(5, 1));

  CHECK_THROWS_AS(reversed_edge_tournament(2), DomainError);
}

namespace {

void check_block_invariants(const Tournament& base, const BlockColoring& bc, int l,
                            int k) {
  // Blocks partition the vertex set and each is a dominating chain.
  std::set<Vertex> seen;
  for (const auto& block : bc.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      CHECK(seen.insert(block[i]).second);
      for (std::size_t j = i + 1; j < block.size(); ++j)
        CHECK(base.dominates(block[i], block[j]));
    }
  }
  CHECK(seen.size() == static_cast<std::size_t>(base.size()));
  CHECK(bc.block_labels.size() == bc.blocks.size());
  CHECK(static_cast<std::int64_t>(bc.a) * bc.b <= l);

  // Colors follow the grid rule inside blocks and the label rule across.
  std::vector<int> block_of(static_cast<std::size_t>(base.size()) + 1);
  std::vector<int> pos_of(static_cast<std::size_t>(base.size()) + 1);
  for (std::size_t j = 0; j < bc.blocks.size(); ++j)
    for (std::size_t p = 0; p < bc.blocks[j].size(); ++p) {
      block_of[static_cast<std::size_t>(bc.blocks[j][p])] = static_cast<int>(j);
      pos_of[static_cast<std::size_t>(bc.blocks[j][p])] = static_cast<int>(p + 1);
    }
  bc.instance.for_each_edge([&](Vertex u, Vertex v, Color c) {
    const int ju = block_of[static_cast<std::size_t>(u)];
    const int jv = block_of[static_cast<std::size_t>(v)];
    if (ju == jv) {
      auto gu = grid_label(static_cast<std::uint64_t>(pos_of[static_cast<std::size_t>(u)]),
                           bc.a, k);
      auto gv = grid_label(static_cast<std::uint64_t>(pos_of[static_cast<std::size_t>(v)]),
                           bc.a, k);
      REQUIRE(gu[c - 1] < gv[c - 1]);
    } else {
      REQUIRE(bc.block_labels[static_cast<std::size_t>(ju)][c - 1] <
              bc.block_labels[static_cast<std::size_t>(jv)][c - 1]);
    }
  });

  // The headline promise: no color carries a walk of length l.
  auto [len, cert] = longest_flash(bc.instance);
  REQUIRE_FALSE(len.is_unbounded());
  CHECK(len.value() < l);
  CHECK(len.value() < static_cast<std::int64_t>(bc.a) * bc.b);
}

}  // namespace

TEST_CASE("block coloring succeeds when the two radices fit inside l") {
  Tournament t = new_transitive(4);
  auto result = block_coloring(t, 6, 3, 2);
  REQUIRE(std::holds_alternative<BlockColoring>(result));
  const auto& bc = std::get<BlockColoring>(result);
  CHECK(bc.a == 2);
  CHECK(bc.b == 3);
  CHECK(bc.blocks == std::vector<std::vector<Vertex>>{{1, 2}, {3, 4}});
  CHECK(bc.block_labels == std::vector<std::vector<int>>{{1, 2}, {2, 1}});
  // Within blocks position labels (1,1),(1,2) rise in coordinate 2; across
  // blocks label (1,2) -> (2,1) rises first in coordinate 1.
  CHECK(bc.instance.color(1, 2) == 2);
  CHECK(bc.instance.color(3, 4) == 2);
  CHECK(bc.instance.color(1, 3) == 1);
  CHECK(bc.instance.color(1, 4) == 1);
  CHECK(bc.instance.color(2, 3) == 1);
  CHECK(bc.instance.color(2, 4) == 1);
  check_block_invariants(t, bc, 6, 3);
}

TEST_CASE("block coloring reports failure when the radices cannot fit") {
  // Two blocks of the transitive square need b = 3, so a*b = 6 > 4.
  auto tight = block_coloring(new_transitive(4), 4, 3, 2);
  REQUIRE(std::holds_alternative<BlockColoringFailure>(tight));
  const auto& f = std::get<BlockColoringFailure>(tight);
  CHECK(f.reason == BlockColoringFailure::Reason::ProductExceedsL);
  CHECK(f.blocks == 2);
  CHECK(f.a == 2);
  CHECK(f.b == 3);

  // A random order-10 base with l = 2 cannot fit either way.
  auto wide = block_coloring(random_tournament(10, 7), 2, 3, 4);
  CHECK(std::holds_alternative<BlockColoringFailure>(wide));

  // With one label per radix, two singleton blocks can never be covered.
  auto flat = block_coloring(new_transitive(2), 4, 2, 1);
  REQUIRE(std::holds_alternative<BlockColoringFailure>(flat));
  CHECK(std::get<BlockColoringFailure>(flat).reason ==
        BlockColoringFailure::Reason::QuotientTooLarge);
}

TEST_CASE("a single block needs no outer labels") {
  auto result = block_coloring(new_transitive(2), 2, 3, 2);
  REQUIRE(std::holds_alternative<BlockColoring>(result));
  const auto& bc = std::get<BlockColoring>(result);
  CHECK(bc.a == 2);
  CHECK(bc.b == 1);
  CHECK(bc.blocks == std::vector<std::vector<Vertex>>{{1, 2}});
  CHECK(bc.instance.color(1, 2) == 2);
  check_block_invariants(new_transitive(2), bc, 2, 3);
}

TEST_CASE("singleton blocks reduce to the antichain coloring") {
  Tournament t = new_transitive(3);
  auto result = block_coloring(t, 4, 3, 1);
  REQUIRE(std::holds_alternative<BlockColoring>(result));
  const auto& bc = std::get<BlockColoring>(result);
  CHECK(bc.a == 1);
  CHECK(bc.b == 4);
  ColoredTournament direct = antichain_coloring(t, 4, 3);
  CHECK(bc.instance == direct);
}

TEST_CASE("block coloring holds its invariants on random bases") {
  int successes = 0;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    Tournament t = random_tournament(8, seed);
    auto result = block_coloring(t, 9, 3, 4);
    if (std::holds_alternative<BlockColoringFailure>(result)) continue;
    ++successes;
    check_block_invariants(t, std::get<BlockColoring>(result), 9, 3);
  }
  // The radices are generous enough that most seeds should succeed.
  CHECK(successes >= 6);
}
