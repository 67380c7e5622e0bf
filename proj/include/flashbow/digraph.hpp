#pragma once

// Internal colored-digraph view shared by the walk detectors and the
// enumerative search: adjacency lists over 1-based vertices, plus an
// iterative strongly-connected-components pass used both for cycle
// detection inside one color class and for reachable-color masks.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "flashbow/core.hpp"

namespace flashbow::detail {

struct Arc {
  Vertex to = 0;
  Color color = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct ColoredDigraph {
  int n = 0;
  std::vector<std::vector<Arc>> out;  // indexed 1..n; slot 0 unused

  ColoredDigraph() = default;
  explicit ColoredDigraph(int n_) : n(n_), out(static_cast<std::size_t>(n_) + 1) {}

  void add_arc(Vertex u, Vertex v, Color c) { out[u].push_back(Arc{v, c}); }

  static ColoredDigraph from(const ColoredTournament& ct) {
    ColoredDigraph g(ct.size());
    ct.for_each_edge([&](Vertex u, Vertex v, Color c) { g.add_arc(u, v, c); });
    return g;
  }

  ColoredDigraph reversed() const {
    ColoredDigraph r(n);
    for (Vertex u = 1; u <= n; ++u)
      for (const Arc& a : out[u]) r.add_arc(a.to, u, a.color);
    return r;
  }
};

// Tarjan's algorithm, iterative to keep stack depth flat.  Components are
// numbered 0..count-1 in reverse topological order: every arc u -> v with
// comp[u] != comp[v] has comp[u] > comp[v] (sinks get the low ids).
// `adj` is plain adjacency over vertices 1..n; comp[0] is unused.
inline std::vector<int> scc_components(int n, const std::vector<std::vector<Vertex>>& adj,
                                       int& comp_count) {
  std::vector<int> comp(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> index(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> low(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> stack;
  int next_index = 0;
  comp_count = 0;

  struct Frame {
    Vertex v;
    std::size_t next_arc;
  };
  std::vector<Frame> frames;

  for (Vertex root = 1; root <= n; ++root) {
    if (index[root] != -1) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next_arc < adj[f.v].size()) {
        Vertex w = adj[f.v][f.next_arc++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        const Vertex v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          while (true) {
            Vertex w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = comp_count;
            if (w == v) break;
          }
          ++comp_count;
        }
      }
    }
  }
  return comp;
}

}  // namespace flashbow::detail
