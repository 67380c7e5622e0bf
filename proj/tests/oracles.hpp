#pragma once

// Independent reference implementations used to verify the library.  These
// deliberately share no code with the production algorithms: they enumerate
// walks and orbits directly, trading speed for obviousness, and are only run
// on small instances.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "flashbow/core.hpp"

namespace oracle {

using namespace flashbow;

// Longest monochromatic walk by brute-force walk enumeration.  Any single
// color walk of length n must repeat a vertex and therefore rides a cycle,
// so lengths are explored up to n and reaching n means "unbounded".
inline FlashLen naive_longest_flash(const ColoredTournament& ct) {
  const int n = ct.size();
  int best = 0;
  bool unbounded = false;
  for (Color a : ct.palette()) {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n) + 1);
    ct.for_each_edge([&](Vertex u, Vertex v, Color c) {
      if (c == a) adj[u].push_back(v);
    });
    std::function<void(Vertex, int)> walk = [&](Vertex v, int len) {
      if (unbounded) return;
      best = std::max(best, len);
      if (len >= n) {
        unbounded = true;
        return;
      }
      for (Vertex w : adj[v]) walk(w, len + 1);
    };
    for (Vertex s = 1; s <= n && !unbounded; ++s) walk(s, 0);
    if (unbounded) return FlashLen::unbounded();
  }
  return FlashLen::finite(best);
}

// Longest rainbow walk (pairwise distinct edge colors) by brute force,
// truncated at cap.
inline int naive_longest_rainbow(const ColoredTournament& ct, int cap) {
  const int n = ct.size();
  int best = 0;
  std::vector<Color> used;
  std::function<void(Vertex, int)> walk = [&](Vertex v, int len) {
    best = std::max(best, len);
    if (len >= cap || best >= cap) return;
    for (Vertex w = 1; w <= n; ++w) {
      if (w == v || !ct.dominates(v, w)) continue;
      Color c = ct.color(v, w);
      if (std::find(used.begin(), used.end(), c) != used.end()) continue;
      used.push_back(c);
      walk(w, len + 1);
      used.pop_back();
    }
  };
  for (Vertex s = 1; s <= n && best < cap; ++s) walk(s, 0);
  return best;
}

// Vertices visited by some monochromatic walk of length >= m, per color, by
// enumerating all walks of length exactly min-needed.  Walk lengths are
// explored up to n (beyond that the color is cyclic and touches everything
// reachable, which enumeration up to n already visits).
inline std::vector<std::vector<Color>> naive_m_flash_colors(const ColoredTournament& ct,
                                                            int m) {
  const int n = ct.size();
  std::vector<std::set<Color>> through(static_cast<std::size_t>(n) + 1);
  for (Color a : ct.palette()) {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n) + 1);
    ct.for_each_edge([&](Vertex u, Vertex v, Color c) {
      if (c == a) adj[u].push_back(v);
    });
    // Enumerate walks of length up to max(m, n); record vertex sets of all
    // prefixes that eventually reach length >= m.
    std::vector<Vertex> cur;
    std::function<void(Vertex, int)> walk = [&](Vertex v, int len) {
      cur.push_back(v);
      if (len >= m)
        for (Vertex x : cur) through[x].insert(a);
      if (len < std::max(m, n))
        for (Vertex w : adj[v]) walk(w, len + 1);
      cur.pop_back();
    };
    for (Vertex s = 1; s <= n; ++s) walk(s, 0);
  }
  std::vector<std::vector<Color>> out(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 1; v <= n; ++v) out[v].assign(through[v].begin(), through[v].end());
  return out;
}

// Is there a rainbow walk of length exactly r ending at v that avoids color
// `avoid`?  Brute force over walks.
inline bool naive_rainbow_ending_at(const ColoredTournament& ct, Vertex target, int r,
                                    Color avoid) {
  const int n = ct.size();
  bool found = false;
  std::vector<Color> used;
  std::function<void(Vertex, int)> walk = [&](Vertex v, int len) {
    if (found) return;
    if (len == r) {
      found = (v == target);
      return;
    }
    for (Vertex w = 1; w <= n; ++w) {
      if (w == v || !ct.dominates(v, w)) continue;
      Color c = ct.color(v, w);
      if (c == avoid) continue;
      if (std::find(used.begin(), used.end(), c) != used.end()) continue;
      used.push_back(c);
      walk(w, len + 1);
      used.pop_back();
    }
  };
  for (Vertex s = 1; s <= n && !found; ++s) walk(s, 0);
  return found;
}

// Number of integer vectors in [1..l]^d with coordinate sum `target`.
inline long long composition_count(int l, int d, int target) {
  std::vector<long long> dp(static_cast<std::size_t>(target) + 1, 0);
  dp[0] = 1;
  for (int i = 0; i < d; ++i) {
    std::vector<long long> next(static_cast<std::size_t>(target) + 1, 0);
    for (int s = 0; s <= target; ++s) {
      if (dp[s] == 0) continue;
      for (int x = 1; x <= l && s + x <= target; ++x) next[s + x] += dp[s];
    }
    dp.swap(next);
  }
  return dp[static_cast<std::size_t>(target)];
}

// Bell numbers via the Bell triangle.
inline std::vector<unsigned long long> bell_numbers(int count) {
  std::vector<unsigned long long> bell{1};  // B(0)
  std::vector<unsigned long long> row{1};
  for (int i = 1; i <= count; ++i) {
    std::vector<unsigned long long> next{row.back()};
    for (unsigned long long x : row) next.push_back(next.back() + x);
    row.swap(next);
    bell.push_back(row.front());
  }
  return bell;  // bell[e] = B(e)
}

// Number of tournament isomorphism classes on n vertices, by Burnside's
// key fact: a permutation fixes some tournament iff all its cycles have odd
// length, and then fixes exactly 2^(pair orbits) of them.
inline unsigned long long tournament_class_count(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  unsigned long long total = 0;
  unsigned long long nfact = 0;
  do {
    ++nfact;
    // Cycle lengths.
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    bool all_odd = true;
    for (int i = 0; i < n && all_odd; ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      int len = 0;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = 1;
        ++len;
      }
      all_odd = (len % 2 == 1);
    }
    if (!all_odd) continue;
    // Orbits of unordered pairs.
    std::set<std::pair<int, int>> visited;
    int orbits = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (visited.count({a, b})) continue;
        ++orbits;
        int x = a, y = b;
        while (true) {
          x = perm[static_cast<std::size_t>(x)];
          y = perm[static_cast<std::size_t>(y)];
          auto p = std::minmax(x, y);
          if (!visited.insert({p.first, p.second}).second) break;
        }
      }
    total += 1ULL << orbits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / nfact;
}

}  // namespace oracle
