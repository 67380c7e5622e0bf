#pragma once

// Core value types: tournaments (complete orientations of K_n), positive
// edge colorings, their combination, and directed walks over them.
//
// Conventions used throughout the library:
//   * vertices are 1-based ints;
//   * colors are strictly positive 32-bit integers (0 never names a color);
//   * a "walk" is a vertex sequence following edge directions, and may
//     repeat vertices and edges; a single vertex is a walk of length 0;
//   * unordered pairs are stored in a fixed order, lexicographic on
//     (min endpoint, max endpoint), which every serializer, enumerator and
//     canonical form in the library shares.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flashbow/rng.hpp"

namespace flashbow {

using Vertex = int;
using Color = std::uint32_t;
using Walk = std::vector<Vertex>;

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter lies outside an operation's contract (bad vertex, cap < 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A requested construction would exceed an explicit size cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

// A vertex sequence is not a directed walk of the given tournament.
class InvalidWalk : public Error {
 public:
  using Error::Error;
};

// The input violates a documented precondition (e.g. a sampler run on an
// instance that already contains the structure it assumes absent).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search exceeded its explicit state budget.  Deliberately
// loud: callers must treat the result as unknown, never as "none found".
class StateBudgetExceeded : public Error {
 public:
  StateBudgetExceeded(std::uint64_t states, const std::string& what)
      : Error(what), states_(states) {}
  std::uint64_t states() const { return states_; }

 private:
  std::uint64_t states_;
};

// ---------------------------------------------------------------------------
// Pair indexing

inline std::size_t pair_count(int n) {
  return static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
}

// Index of the unordered pair {u, v} in the fixed (min, max) lex order.
inline std::size_t pair_index(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return static_cast<std::size_t>(v - 1) * (static_cast<std::size_t>(v) - 2) / 2 +
         static_cast<std::size_t>(u - 1);
}

// ---------------------------------------------------------------------------
// Tournament

class Tournament {
 public:
  Tournament() = default;

  // Starts transitive: every pair oriented from the lower to the higher label.
  explicit Tournament(int n) : n_(n) {
    if (n < 1) throw DomainError("tournament order must be at least 1");
    low_to_high_.assign(pair_count(n), true);
  }

  int size() const { return n_; }
  std::size_t edge_count() const { return low_to_high_.size(); }

  // True iff the edge between u and v points u -> v.
  bool dominates(Vertex u, Vertex v) const {
    check_pair(u, v);
    return low_to_high_[pair_index(u, v)] == (u < v);
  }

  // Re-orients the pair {u, v} so that the edge points u -> v.
  void orient(Vertex u, Vertex v) {
    check_pair(u, v);
    low_to_high_[pair_index(u, v)] = (u < v);
  }

  // Visits every edge once, in pair order, as f(from, to).
  template <class F>
  void for_each_edge(F&& f) const {
    for (Vertex v = 2; v <= n_; ++v)
      for (Vertex u = 1; u < v; ++u) {
        if (low_to_high_[pair_index(u, v)])
          f(u, v);
        else
          f(v, u);
      }
  }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v)
      throw DomainError("vertex pair out of range");
  }

  int n_ = 0;
  std::vector<bool> low_to_high_;  // one bit per pair, in pair order
};

inline Tournament new_transitive(int n) { return Tournament(n); }

inline Tournament random_tournament(int n, std::uint64_t seed) {
  Tournament t(n);
  rng::Stream s(seed, /*tag0=*/0x746f75726eULL);  // stream tag: "tourn"
  for (Vertex v = 2; v <= n; ++v)
    for (Vertex u = 1; u < v; ++u)
      if (s.coin()) t.orient(v, u);
  return t;
}

inline Tournament reverse(const Tournament& t) {
  Tournament r(t.size());
  t.for_each_edge([&](Vertex u, Vertex v) { r.orient(v, u); });
  return r;
}

// Subtournament on `keep`, relabeled 1..keep.size() in the given order.
inline Tournament induce(const Tournament& t, const std::vector<Vertex>& keep) {
  const int m = static_cast<int>(keep.size());
  Tournament r(m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j < i; ++j)
      if (t.dominates(keep[i - 1], keep[j - 1])) r.orient(i, j);
  return r;
}

// A tournament is transitive iff domination is acyclic; equivalently the
// out-degree sequence is a permutation of 0..n-1 and sorting by out-degree
// yields a linear order.  Checked directly against the linear order induced
// by out-degrees.
inline bool is_transitive(const Tournament& t) {
  const int n = t.size();
  std::vector<int> outdeg(n + 1, 0);
  t.for_each_edge([&](Vertex u, Vertex) { ++outdeg[u]; });
  std::vector<Vertex> order(n);
  for (int v = 1; v <= n; ++v) order[v - 1] = v;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    if (outdeg[a] != outdeg[b]) return outdeg[a] > outdeg[b];
    return a < b;
  });
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!t.dominates(order[i], order[j])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// EdgeColoring

class EdgeColoring {
 public:
  EdgeColoring() = default;

  // `by_pair` holds one positive color per unordered pair, in pair order.
  EdgeColoring(int n, std::vector<Color> by_pair) : n_(n), colors_(std::move(by_pair)) {
    if (n < 1) throw DomainError("coloring order must be at least 1");
    if (colors_.size() != pair_count(n))
      throw DomainError("coloring must assign exactly one color per pair");
    for (Color c : colors_)
      if (c == 0) throw DomainError("colors must be strictly positive");
  }

  int size() const { return n_; }

  Color color_between(Vertex u, Vertex v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v)
      throw DomainError("vertex pair out of range");
    return colors_[pair_index(u, v)];
  }

  const std::vector<Color>& by_pair() const { return colors_; }

  // Distinct colors in use, ascending.
  std::vector<Color> palette() const {
    std::vector<Color> p(colors_);
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  int n_ = 0;
  std::vector<Color> colors_;
};

// ---------------------------------------------------------------------------
// ColoredTournament

struct ColoredTournament {
  Tournament tournament;
  EdgeColoring coloring;

  ColoredTournament() = default;
  ColoredTournament(Tournament t, EdgeColoring c)
      : tournament(std::move(t)), coloring(std::move(c)) {
    if (tournament.size() != coloring.size())
      throw DomainError("tournament and coloring disagree on order");
  }

  int size() const { return tournament.size(); }
  bool dominates(Vertex u, Vertex v) const { return tournament.dominates(u, v); }
  Color color(Vertex u, Vertex v) const { return coloring.color_between(u, v); }
  std::vector<Color> palette() const { return coloring.palette(); }

  // Visits every edge once, in pair order, as f(from, to, color).
  template <class F>
  void for_each_edge(F&& f) const {
    tournament.for_each_edge(
        [&](Vertex u, Vertex v) { f(u, v, coloring.color_between(u, v)); });
  }

  friend bool operator==(const ColoredTournament&, const ColoredTournament&) = default;
};

// Colors each edge of `t` by color_of(from, to).
template <class F>
ColoredTournament make_colored(const Tournament& t, F&& color_of) {
  std::vector<Color> by_pair(pair_count(t.size()), 0);
  t.for_each_edge([&](Vertex u, Vertex v) {
    by_pair[pair_index(u, v)] = static_cast<Color>(color_of(u, v));
  });
  return ColoredTournament(t, EdgeColoring(t.size(), std::move(by_pair)));
}

inline ColoredTournament monochromatic(const Tournament& t, Color c) {
  return make_colored(t, [c](Vertex, Vertex) { return c; });
}

inline ColoredTournament reverse(const ColoredTournament& ct) {
  return ColoredTournament(reverse(ct.tournament), ct.coloring);
}

inline ColoredTournament induce(const ColoredTournament& ct,
                                const std::vector<Vertex>& keep) {
  const int m = static_cast<int>(keep.size());
  Tournament t = induce(ct.tournament, keep);
  std::vector<Color> by_pair(pair_count(m), 0);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j < i; ++j)
      by_pair[pair_index(j, i)] = ct.color(keep[i - 1], keep[j - 1]);
  return ColoredTournament(std::move(t), EdgeColoring(m, std::move(by_pair)));
}

// ---------------------------------------------------------------------------
// Walks

inline bool walk_valid(const Tournament& t, const Walk& w) {
  if (w.empty()) return false;
  for (Vertex v : w)
    if (v < 1 || v > t.size()) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!t.dominates(w[i], w[i + 1])) return false;
  return true;
}

inline bool walk_valid(const ColoredTournament& ct, const Walk& w) {
  return walk_valid(ct.tournament, w);
}

// Edge colors along a walk, in traversal order; length 0 walks yield {}.
inline std::vector<Color> walk_colors(const ColoredTournament& ct, const Walk& w) {
  if (!walk_valid(ct, w)) throw InvalidWalk("vertex sequence is not a directed walk");
  std::vector<Color> cs;
  cs.reserve(w.size() - 1);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) cs.push_back(ct.color(w[i], w[i + 1]));
  return cs;
}

// A monochromatic directed walk, reported with its color.
struct FlashCertificate {
  Color color = 0;
  Walk walk;
};

// A directed walk whose edge colors are pairwise distinct.
struct RainbowCertificate {
  Walk walk;
  std::vector<Color> colors;  // in traversal order
};

// ---------------------------------------------------------------------------
// FlashLen: a walk length that may be unbounded (cyclic color class)

class FlashLen {
 public:
  FlashLen() = default;

  static FlashLen finite(int v) {
    if (v < 0) throw DomainError("walk lengths are non-negative");
    FlashLen f;
    f.value_ = v;
    return f;
  }
  static FlashLen unbounded() {
    FlashLen f;
    f.unbounded_ = true;
    return f;
  }

  bool is_unbounded() const { return unbounded_; }
  int value() const {
    if (unbounded_) throw DomainError("unbounded length has no finite value");
    return value_;
  }
  // True iff the length is at least m (unbounded exceeds every finite m).
  bool at_least(int m) const { return unbounded_ || value_ >= m; }

  std::string str() const { return unbounded_ ? "unbounded" : std::to_string(value_); }

  friend bool operator==(const FlashLen&, const FlashLen&) = default;
  // Total order: finite values by magnitude, unbounded above all of them.
  friend bool operator<(const FlashLen& a, const FlashLen& b) {
    if (a.unbounded_) return false;
    if (b.unbounded_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const FlashLen& a, const FlashLen& b) { return !(b < a); }
  friend bool operator>(const FlashLen& a, const FlashLen& b) { return b < a; }
  friend bool operator>=(const FlashLen& a, const FlashLen& b) { return !(a < b); }

 private:
  int value_ = 0;
  bool unbounded_ = false;
};

}  // namespace flashbow
