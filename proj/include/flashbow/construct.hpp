#pragma once

// Generators for the extremal instances: grid colorings of transitive
// tournaments (long-walk-free with few colors), antichain label colorings of
// arbitrary tournaments, the transitive tournament with one reversed edge,
// and a two-level block coloring that combines chains-by-grid inside blocks
// with antichain labels across blocks.

#include <algorithm>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "flashbow/core.hpp"
#include "flashbow/detect.hpp"
#include "flashbow/structure.hpp"

namespace flashbow {

// ---------------------------------------------------------------------------
// Grid coloring

// Label of grid vertex `index` (1-based) in [1..l]^(k-1): the mixed-radix
// digits of index-1, most significant first, shifted up by one.  Labels are
// lexicographically increasing in the index.
inline std::vector<int> grid_label(std::uint64_t index, int l, int k) {
  if (l < 1 || k < 2) throw DomainError("grid labels need l >= 1 and k >= 2");
  if (index < 1) throw DomainError("grid index is 1-based");
  std::uint64_t rem = index - 1;
  std::vector<int> label(static_cast<std::size_t>(k - 1));
  for (int i = k - 2; i >= 0; --i) {
    label[static_cast<std::size_t>(i)] =
        1 + static_cast<int>(rem % static_cast<std::uint64_t>(l));
    rem /= static_cast<std::uint64_t>(l);
  }
  if (rem != 0) throw DomainError("grid index exceeds l^(k-1)");
  return label;
}

// Transitive tournament on l^(k-1) vertices labeled by [1..l]^(k-1) in
// lexicographic order; the edge u -> v (u before v) gets the smallest
// coordinate where u's label is strictly below v's.  Along color-i edges
// coordinate i strictly increases, so no color carries a walk of length l;
// the longest monochromatic walk is exactly l-1 (color 1 along the first
// axis).  Uses at most k-1 colors.
inline ColoredTournament grid_coloring(int l, int k,
                                       std::uint64_t size_cap = 100'000) {
  if (l < 1 || k < 2) throw DomainError("grid coloring needs l >= 1 and k >= 2");
  std::uint64_t n = 1;
  for (int i = 0; i < k - 1; ++i) {
    n *= static_cast<std::uint64_t>(l);
    if (n > size_cap)
      throw SizeCapError("grid on l^(k-1) vertices exceeds the size cap of " +
                         std::to_string(size_cap));
  }
  std::vector<std::vector<int>> labels;
  labels.reserve(n);
  for (std::uint64_t i = 1; i <= n; ++i) labels.push_back(grid_label(i, l, k));

  Tournament t = new_transitive(static_cast<int>(n));
  return make_colored(t, [&](Vertex u, Vertex v) -> Color {
    const auto& xu = labels[static_cast<std::size_t>(u - 1)];
    const auto& xv = labels[static_cast<std::size_t>(v - 1)];
    for (std::size_t i = 0; i < xu.size(); ++i)
      if (xu[i] < xv[i]) return static_cast<Color>(i + 1);
    throw Error("grid labels are not lexicographically increasing");
  });
}

// ---------------------------------------------------------------------------
// Antichain labels

struct AntichainLabelSet {
  int l = 0;
  int k = 0;
  int target_sum = 0;
  std::vector<std::vector<int>> labels;  // lexicographic order
  std::size_t size() const { return labels.size(); }
};

// All labels in [1..l]^(k-1) whose coordinates sum to floor(l(k-1)/2) -- the
// middle layer of the grid, an antichain under coordinatewise comparison.
// May be empty (for l = 1 and k >= 3 the target lies below the minimum sum).
inline AntichainLabelSet antichain_labels(int l, int k) {
  if (l < 1 || k < 2) throw DomainError("antichain labels need l >= 1 and k >= 2");
  AntichainLabelSet set;
  set.l = l;
  set.k = k;
  set.target_sum = l * (k - 1) / 2;

  const int coords = k - 1;
  std::vector<int> partial(static_cast<std::size_t>(coords));
  auto emit = [&](auto&& self, int pos, int sum) -> void {
    const int rest = coords - pos;
    if (pos == coords) {
      if (sum == set.target_sum) set.labels.push_back(partial);
      return;
    }
    for (int x = 1; x <= l; ++x) {
      int next = sum + x;
      if (next + (rest - 1) > set.target_sum) break;          // min for the rest
      if (next + (rest - 1) * l < set.target_sum) continue;   // max for the rest
      partial[static_cast<std::size_t>(pos)] = x;
      self(self, pos + 1, next);
    }
  };
  emit(emit, 0, 0);
  return set;
}

// Colors an arbitrary tournament by assigning antichain labels to vertices
// in vertex order; the edge u -> v gets the smallest coordinate where u's
// label is strictly below v's.  Distinct labels with equal sums always have
// such a coordinate in both directions, so every edge receives a color no
// matter its orientation.  Along color-i edges coordinate i strictly
// increases, so no color carries a walk of length l.
inline ColoredTournament antichain_coloring(const Tournament& t, int l, int k) {
  AntichainLabelSet set = antichain_labels(l, k);
  if (static_cast<std::size_t>(t.size()) > set.size())
    throw SizeCapError("tournament has " + std::to_string(t.size()) +
                       " vertices but only " + std::to_string(set.size()) +
                       " antichain labels are available");
  return make_colored(t, [&](Vertex u, Vertex v) -> Color {
    const auto& xu = set.labels[static_cast<std::size_t>(u - 1)];
    const auto& xv = set.labels[static_cast<std::size_t>(v - 1)];
    for (std::size_t i = 0; i < xu.size(); ++i)
      if (xu[i] < xv[i]) return static_cast<Color>(i + 1);
    throw Error("equal-sum labels must differ in some coordinate");
  });
}

// ---------------------------------------------------------------------------
// Transitive tournament with a single reversed edge

// The transitive tournament on n vertices with the edge between 1 and n
// flipped so that n dominates 1.  For n = 3 this is the directed triangle.
inline Tournament reversed_edge_tournament(int n) {
  if (n < 3) throw DomainError("a reversed edge needs n >= 3");
  Tournament t = new_transitive(n);
  t.orient(n, 1);
  return t;
}

// ---------------------------------------------------------------------------
// Block coloring

struct BlockColoring {
  ColoredTournament instance;
  std::vector<std::vector<Vertex>> blocks;  // chain order within each block
  int a = 0;  // inner grid radix: minimal a with a^(k-1) >= block size
  int b = 0;  // outer label radix: minimal b whose antichain covers the blocks
  std::vector<std::vector<int>> block_labels;  // antichain label per block
};

struct BlockColoringFailure {
  enum class Reason { QuotientTooLarge, ProductExceedsL };
  Reason reason = Reason::ProductExceedsL;
  int blocks = 0;
  int a = 0;
  int b = 0;  // 0 when no usable antichain radix was found
  std::string detail;
};

using BlockColoringResult = std::variant<BlockColoring, BlockColoringFailure>;

namespace detail {

// Longest dominating chain reachable greedily from some start position of a
// forward-max ordering: scanning right, a vertex joins when every current
// member dominates it.  Longest over starts, earliest start on ties.
inline std::vector<Vertex> longest_greedy_chain(const Tournament& t,
                                                const std::vector<Vertex>& order) {
  std::vector<Vertex> best;
  for (std::size_t s = 0; s < order.size(); ++s) {
    std::vector<Vertex> chain{order[s]};
    for (std::size_t p = s + 1; p < order.size(); ++p) {
      const Vertex v = order[p];
      bool dominated = true;
      for (Vertex w : chain)
        if (!t.dominates(w, v)) {
          dominated = false;
          break;
        }
      if (dominated) chain.push_back(v);
    }
    if (chain.size() > best.size()) best = std::move(chain);
  }
  return best;
}

}  // namespace detail

// Two-level coloring: partitions the vertices into dominating chains of at
// most `block_size` vertices (repeatedly extracting the longest greedy chain
// of a forward-max ordering of what remains), indexes chain positions by the
// grid over [a]^(k-1) and blocks by the antichain of [b]^(k-1).  Edges inside
// a block are colored by the grid rule on positions, edges across blocks by
// the antichain rule on block labels.  Succeeds when a*b <= l, in which case
// no color carries a walk of length a*b (coordinate pairs (outer, inner)
// lexicographically increase along each color), so in particular the result
// has no monochromatic walk of length l.
inline BlockColoringResult block_coloring(const Tournament& t, int l, int k,
                                          int block_size) {
  if (l < 1 || k < 2 || block_size < 1)
    throw DomainError("block coloring needs l >= 1, k >= 2 and a positive block size");
  const int n = t.size();

  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> remaining(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) remaining[static_cast<std::size_t>(i)] = i + 1;
  while (!remaining.empty()) {
    Tournament sub = induce(t, remaining);
    std::vector<Vertex> local = detail::longest_greedy_chain(sub, forward_max_ordering(sub));
    if (local.size() > static_cast<std::size_t>(block_size))
      local.resize(static_cast<std::size_t>(block_size));
    std::vector<Vertex> block;
    block.reserve(local.size());
    for (Vertex lv : local) block.push_back(remaining[static_cast<std::size_t>(lv - 1)]);
    std::vector<Vertex> rest;
    rest.reserve(remaining.size() - block.size());
    for (Vertex v : remaining)
      if (std::find(block.begin(), block.end(), v) == block.end()) rest.push_back(v);
    blocks.push_back(std::move(block));
    remaining = std::move(rest);
  }

  int a = 1;
  {
    auto power = [&](int base) {
      std::uint64_t p = 1;
      for (int i = 0; i < k - 1; ++i) p *= static_cast<std::uint64_t>(base);
      return p;
    };
    while (power(a) < static_cast<std::uint64_t>(block_size)) ++a;
  }

  int b = 0;
  if (blocks.size() <= 1) {
    b = 1;
  } else {
    // b <= l is all a success can use, but keep searching a little further
    // so the failure can report whether any radix covers the blocks at all.
    const int b_limit = std::max(l, 64);
    for (int cand = 1; cand <= b_limit; ++cand) {
      if (antichain_labels(cand, k).size() >= blocks.size()) {
        b = cand;
        break;
      }
    }
    if (b == 0) {
      BlockColoringFailure f;
      f.reason = BlockColoringFailure::Reason::QuotientTooLarge;
      f.blocks = static_cast<int>(blocks.size());
      f.a = a;
      f.detail = "no antichain of radix <= " + std::to_string(b_limit) + " covers " +
                 std::to_string(blocks.size()) + " blocks";
      return f;
    }
  }

  if (static_cast<std::int64_t>(a) * b > l) {
    BlockColoringFailure f;
    f.reason = BlockColoringFailure::Reason::ProductExceedsL;
    f.blocks = static_cast<int>(blocks.size());
    f.a = a;
    f.b = b;
    f.detail = "a*b = " + std::to_string(a) + "*" + std::to_string(b) + " exceeds l = " +
               std::to_string(l);
    return f;
  }

  AntichainLabelSet outer = antichain_labels(b, k);
  std::vector<int> block_of(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> pos_of(static_cast<std::size_t>(n) + 1, 0);  // 1-based chain slot
  for (std::size_t j = 0; j < blocks.size(); ++j)
    for (std::size_t p = 0; p < blocks[j].size(); ++p) {
      block_of[static_cast<std::size_t>(blocks[j][p])] = static_cast<int>(j);
      pos_of[static_cast<std::size_t>(blocks[j][p])] = static_cast<int>(p + 1);
    }

  ColoredTournament instance = make_colored(t, [&](Vertex u, Vertex v) -> Color {
    const int ju = block_of[static_cast<std::size_t>(u)];
    const int jv = block_of[static_cast<std::size_t>(v)];
    if (ju == jv) {
      // Inside a block the chain head dominates everything after it, so the
      // edge runs down the chain and grid labels on positions lex-increase.
      auto gu = grid_label(static_cast<std::uint64_t>(pos_of[static_cast<std::size_t>(u)]),
                           a, k);
      auto gv = grid_label(static_cast<std::uint64_t>(pos_of[static_cast<std::size_t>(v)]),
                           a, k);
      for (std::size_t i = 0; i < gu.size(); ++i)
        if (gu[i] < gv[i]) return static_cast<Color>(i + 1);
      throw Error("block chain order does not match grid label order");
    }
    const auto& xu = outer.labels[static_cast<std::size_t>(ju)];
    const auto& xv = outer.labels[static_cast<std::size_t>(jv)];
    for (std::size_t i = 0; i < xu.size(); ++i)
      if (xu[i] < xv[i]) return static_cast<Color>(i + 1);
    throw Error("equal-sum block labels must differ in some coordinate");
  });

  // Self-check the promise before handing the instance out.
  auto [len, cert] = longest_flash(instance);
  (void)cert;
  if (len.at_least(static_cast<std::int64_t>(a) * b))
    throw Error("block coloring self-check failed: found a monochromatic walk of length " +
                len.str());

  BlockColoring result;
  result.instance = std::move(instance);
  result.blocks = std::move(blocks);
  result.a = a;
  result.b = b;
  result.block_labels.reserve(result.blocks.size());
  if (result.blocks.size() == 1 && outer.labels.empty()) {
    // Radix 1 has no middle-layer labels, but a lone block needs no
    // incomparability either; record the grid's only point as its label.
    result.block_labels.push_back(std::vector<int>(static_cast<std::size_t>(k - 1), 1));
  } else {
    for (std::size_t j = 0; j < result.blocks.size(); ++j)
      result.block_labels.push_back(outer.labels[j]);
  }
  return result;
}

}  // namespace flashbow
