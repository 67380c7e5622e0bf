#pragma once

// Walk detectors.
//
// "Flash" here always means a monochromatic directed walk (vertices and
// edges may repeat); an l-flash has exactly l edges.  "Rainbow" means a
// directed walk whose edge colors are pairwise distinct; a k-rainbow has k
// edges.  Both detectors are exact:
//
//   * flash lengths come from a longest-path dynamic program run per color
//     class, with strongly connected pieces collapsing to an explicit
//     unbounded marker (a walk may circle a monochromatic cycle forever);
//   * rainbow lengths come from a memoized search over (vertex, set of used
//     colors, remaining length) states, truncated at a caller cap and
//     guarded by a hard state budget that fails loudly when exceeded.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flashbow/core.hpp"
#include "flashbow/digraph.hpp"

namespace flashbow {

// ---------------------------------------------------------------------------
// Flash table: for every color a and vertex v, the longest a-colored walk
// ending at v (0 when v has no incoming a-edge; unbounded when v lies on or
// is reachable in color a from an a-colored cycle).

class FlashTable {
 public:
  const std::vector<Color>& palette() const { return palette_; }
  int order() const { return n_; }

  std::optional<std::size_t> index_of(Color a) const {
    auto it = std::lower_bound(palette_.begin(), palette_.end(), a);
    if (it == palette_.end() || *it != a) return std::nullopt;
    return static_cast<std::size_t>(it - palette_.begin());
  }

  FlashLen value(std::size_t color_index, Vertex v) const {
    int raw = raw_[color_index][v];
    return raw < 0 ? FlashLen::unbounded() : FlashLen::finite(raw);
  }

  // Lookup by color; colors outside the palette trivially give length 0.
  FlashLen value_of(Color a, Vertex v) const {
    auto ci = index_of(a);
    return ci ? value(*ci, v) : FlashLen::finite(0);
  }

  // Witness walk for a finite table entry, ending at v.
  Walk walk_to(std::size_t color_index, Vertex v) const {
    if (raw_[color_index][v] < 0)
      throw DomainError("no finite witness for an unbounded entry");
    Walk w{v};
    while (raw_[color_index][v] > 0) {
      v = pred_[color_index][v];
      w.push_back(v);
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  friend FlashTable flash_table(const ColoredTournament& ct);

 private:
  int n_ = 0;
  std::vector<Color> palette_;
  std::vector<std::vector<int>> raw_;     // [color][vertex]; -1 = unbounded
  std::vector<std::vector<Vertex>> pred_; // last-arc tail for finite entries
};

inline FlashTable flash_table(const ColoredTournament& ct) {
  const int n = ct.size();
  FlashTable table;
  table.n_ = n;
  table.palette_ = ct.palette();
  const std::size_t pcount = table.palette_.size();
  table.raw_.assign(pcount, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  table.pred_.assign(pcount, std::vector<Vertex>(static_cast<std::size_t>(n) + 1, 0));

  // Group arcs by color once.
  std::unordered_map<Color, std::size_t> slot;
  slot.reserve(pcount * 2);
  for (std::size_t i = 0; i < pcount; ++i) slot.emplace(table.palette_[i], i);
  std::vector<std::vector<std::pair<Vertex, Vertex>>> arcs_of(pcount);
  ct.for_each_edge([&](Vertex u, Vertex v, Color c) {
    arcs_of[slot.find(c)->second].emplace_back(u, v);
  });

  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n) + 1);
  for (std::size_t ci = 0; ci < pcount; ++ci) {
    for (auto& a : adj) a.clear();
    for (auto [u, v] : arcs_of[ci]) adj[u].push_back(v);

    int comp_count = 0;
    std::vector<int> comp = detail::scc_components(n, adj, comp_count);

    std::vector<int> comp_size(comp_count, 0);
    for (Vertex v = 1; v <= n; ++v) ++comp_size[comp[v]];
    std::vector<char> unbounded(comp_count, 0);
    for (int c = 0; c < comp_count; ++c) unbounded[c] = comp_size[c] >= 2;

    // Vertices ordered by descending component id visit sources before
    // sinks, so one sweep both spreads the unbounded marker and finalizes
    // each finite value before pushing it across outgoing arcs.
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) order[v - 1] = v;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      if (comp[a] != comp[b]) return comp[a] > comp[b];
      return a < b;
    });

    auto& raw = table.raw_[ci];
    auto& pred = table.pred_[ci];
    for (Vertex u : order) {
      if (unbounded[comp[u]]) {
        raw[u] = -1;
        for (Vertex v : adj[u]) unbounded[comp[v]] = 1;
        continue;
      }
      for (Vertex v : adj[u]) {
        if (unbounded[comp[v]]) continue;
        if (raw[u] + 1 > raw[v]) {
          raw[v] = raw[u] + 1;
          pred[v] = u;
        }
      }
    }
  }
  return table;
}

// Longest flash over all colors: (length, witness).  The witness is present
// exactly when the length is finite and at least 1; ties are broken toward
// the smallest color, then the smallest end vertex.
inline std::pair<FlashLen, std::optional<FlashCertificate>> longest_flash(
    const ColoredTournament& ct) {
  FlashTable table = flash_table(ct);
  const int n = ct.size();
  int best = 0;
  std::size_t best_ci = 0;
  Vertex best_v = 0;
  for (std::size_t ci = 0; ci < table.palette().size(); ++ci)
    for (Vertex v = 1; v <= n; ++v) {
      FlashLen f = table.value(ci, v);
      if (f.is_unbounded()) return {FlashLen::unbounded(), std::nullopt};
      if (f.value() > best) {
        best = f.value();
        best_ci = ci;
        best_v = v;
      }
    }
  if (best == 0) return {FlashLen::finite(0), std::nullopt};
  FlashCertificate cert{table.palette()[best_ci], table.walk_to(best_ci, best_v)};
  return {FlashLen::finite(best), std::move(cert)};
}

// ---------------------------------------------------------------------------
// Color profiles

struct ColorProfile {
  std::vector<Color> in;        // colors on incoming edges, sorted distinct
  std::vector<Color> out;       // colors on outgoing edges, sorted distinct
  std::vector<Color> incident;  // union of the two
};

// One profile per vertex; index 0 is unused.
inline std::vector<ColorProfile> color_profiles(const ColoredTournament& ct) {
  const int n = ct.size();
  std::vector<ColorProfile> prof(static_cast<std::size_t>(n) + 1);
  ct.for_each_edge([&](Vertex u, Vertex v, Color c) {
    prof[u].out.push_back(c);
    prof[v].in.push_back(c);
  });
  auto dedup = [](std::vector<Color>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  };
  for (Vertex v = 1; v <= n; ++v) {
    dedup(prof[v].in);
    dedup(prof[v].out);
    prof[v].incident.resize(prof[v].in.size() + prof[v].out.size());
    auto end = std::set_union(prof[v].in.begin(), prof[v].in.end(), prof[v].out.begin(),
                              prof[v].out.end(), prof[v].incident.begin());
    prof[v].incident.erase(end, prof[v].incident.end());
  }
  return prof;
}

// ---------------------------------------------------------------------------
// Rainbow search

struct RainbowQuery {
  int cap = 1;                              // longest length worth reporting
  std::uint64_t state_budget = 50'000'000;  // hard limit on memo states
  std::optional<std::vector<Color>> allowed;  // restrict usable colors
  std::optional<Vertex> start;                // fix the walk's first vertex
};

struct RainbowAnswer {
  int length = 0;
  Walk walk;                 // witness walk of `length` edges
  std::vector<Color> colors; // its edge colors, in order
  std::uint64_t states = 0;  // search states consumed
};

namespace detail {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const {
    std::uint64_t h = 0x100001b3ULL;
    for (std::uint64_t w : key) h = rng::mix64(h ^ w);
    return static_cast<std::size_t>(h);
  }
};

// Exact longest-rainbow search over a colored digraph.  States are
// (vertex, used-color set, remaining length); the used set is projected onto
// the colors still reachable from the vertex (computed on the condensation)
// so unreachable colors never split states.  Values are truncated at the cap
// both on entry and by early exit, which keeps them consistent: every memo
// entry stores min(true longest from the state, remaining length).
class RainbowEngine {
 public:
  RainbowEngine(const ColoredDigraph& g, const RainbowQuery& q) : n_(g.n), query_(q) {
    if (q.cap < 0) throw DomainError("rainbow cap must be non-negative");

    // Palette of usable colors, ascending.
    std::vector<Color> allowed_sorted;
    if (q.allowed) {
      allowed_sorted = *q.allowed;
      std::sort(allowed_sorted.begin(), allowed_sorted.end());
      allowed_sorted.erase(std::unique(allowed_sorted.begin(), allowed_sorted.end()),
                           allowed_sorted.end());
    }
    auto usable = [&](Color c) {
      return !q.allowed || std::binary_search(allowed_sorted.begin(),
                                              allowed_sorted.end(), c);
    };
    for (Vertex u = 1; u <= n_; ++u)
      for (const Arc& a : g.out[u])
        if (usable(a.color)) palette_.push_back(a.color);
    std::sort(palette_.begin(), palette_.end());
    palette_.erase(std::unique(palette_.begin(), palette_.end()), palette_.end());

    const int pcount = static_cast<int>(palette_.size());
    cap_ = std::min(q.cap, pcount);  // a rainbow needs that many distinct colors
    words_ = std::max(1, (pcount + 63) / 64);
    memoize_ = pcount <= 4096;

    fadj_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (Vertex u = 1; u <= n_; ++u) {
      for (const Arc& a : g.out[u]) {
        auto it = std::lower_bound(palette_.begin(), palette_.end(), a.color);
        if (it != palette_.end() && *it == a.color)
          fadj_[u].emplace_back(a.to, static_cast<int>(it - palette_.begin()));
      }
      std::sort(fadj_[u].begin(), fadj_[u].end());
    }

    masking_ = memoize_ && pcount > 0 && pcount <= 256 && n_ <= 16384;
    if (masking_) build_reach_masks();
  }

  RainbowAnswer run() {
    RainbowAnswer ans;
    if (n_ < 1) return ans;
    std::vector<std::uint64_t> used(static_cast<std::size_t>(words_), 0);
    Vertex best_start = query_.start.value_or(1);
    int best = -1;
    const Vertex lo = query_.start.value_or(1);
    const Vertex hi = query_.start.value_or(n_);
    if (lo < 1 || hi > n_) throw DomainError("start vertex out of range");
    for (Vertex s = lo; s <= hi; ++s) {
      int got = value(s, used, cap_);
      if (got > best) {
        best = got;
        best_start = s;
      }
      if (best >= cap_) break;
    }
    if (best < 0) best = 0;
    ans.length = best;
    reconstruct(best_start, ans);
    ans.states = states_;
    return ans;
  }

  std::uint64_t states_used() const { return states_; }

 private:
  void build_reach_masks() {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n_) + 1);
    for (Vertex u = 1; u <= n_; ++u)
      for (auto [to, ci] : fadj_[u]) {
        (void)ci;
        adj[u].push_back(to);
      }
    int comp_count = 0;
    std::vector<int> comp = detail::scc_components(n_, adj, comp_count);
    // Component ids are reverse-topological: ascending order sees every
    // successor component before the components that point at it.
    std::vector<std::uint64_t> cmask(static_cast<std::size_t>(comp_count) * words_, 0);
    std::vector<std::vector<Vertex>> members(comp_count);
    for (Vertex v = 1; v <= n_; ++v) members[comp[v]].push_back(v);
    for (int c = 0; c < comp_count; ++c) {
      std::uint64_t* m = cmask.data() + static_cast<std::size_t>(c) * words_;
      for (Vertex u : members[c])
        for (auto [to, ci] : fadj_[u]) {
          m[ci >> 6] |= std::uint64_t{1} << (ci & 63);
          if (comp[to] != c) {
            const std::uint64_t* tm =
                cmask.data() + static_cast<std::size_t>(comp[to]) * words_;
            for (int w = 0; w < words_; ++w) m[w] |= tm[w];
          }
        }
    }
    reach_.assign(static_cast<std::size_t>(n_ + 1) * words_, 0);
    for (Vertex v = 1; v <= n_; ++v)
      for (int w = 0; w < words_; ++w)
        reach_[static_cast<std::size_t>(v) * words_ + w] =
            cmask[static_cast<std::size_t>(comp[v]) * words_ + w];
  }

  void charge_state() {
    if (++states_ > query_.state_budget)
      throw StateBudgetExceeded(states_, "rainbow search exceeded its state budget");
  }

  // Longest rainbow from v using no color in `used`, truncated at rem.
  int value(Vertex v, std::vector<std::uint64_t>& used, int rem) {
    if (rem <= 0) return 0;
    std::vector<std::uint64_t> key;
    if (memoize_) {
      key.resize(static_cast<std::size_t>(words_) + 1);
      key[0] = (static_cast<std::uint64_t>(v) << 32) | static_cast<std::uint32_t>(rem);
      if (masking_) {
        const std::uint64_t* rm = reach_.data() + static_cast<std::size_t>(v) * words_;
        for (int w = 0; w < words_; ++w) key[static_cast<std::size_t>(w) + 1] = used[w] & rm[w];
      } else {
        for (int w = 0; w < words_; ++w) key[static_cast<std::size_t>(w) + 1] = used[w];
      }
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    charge_state();

    int best = 0;
    for (auto [to, ci] : fadj_[v]) {
      std::uint64_t& word = used[ci >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (ci & 63);
      if (word & bit) continue;
      word |= bit;
      int sub = value(to, used, rem - 1);
      word &= ~bit;
      if (1 + sub > best) {
        best = 1 + sub;
        if (best >= rem) break;  // truncated maximum reached
      }
    }
    if (memoize_) memo_.emplace(std::move(key), best);
    return best;
  }

  void reconstruct(Vertex start, RainbowAnswer& ans) {
    std::vector<std::uint64_t> used(static_cast<std::size_t>(words_), 0);
    Vertex v = start;
    int rem = cap_;
    ans.walk = {v};
    int need = ans.length;
    while (need > 0) {
      bool stepped = false;
      for (auto [to, ci] : fadj_[v]) {
        std::uint64_t& word = used[ci >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (ci & 63);
        if (word & bit) continue;
        word |= bit;
        if (1 + value(to, used, rem - 1) >= need) {
          ans.walk.push_back(to);
          ans.colors.push_back(palette_[static_cast<std::size_t>(ci)]);
          v = to;
          --rem;
          --need;
          stepped = true;
          break;
        }
        word &= ~bit;
      }
      if (!stepped) throw Error("internal: rainbow witness reconstruction failed");
    }
  }

  int n_;
  RainbowQuery query_;
  std::vector<Color> palette_;
  std::vector<std::vector<std::pair<Vertex, int>>> fadj_;
  std::vector<std::uint64_t> reach_;
  int cap_ = 0;
  int words_ = 1;
  bool masking_ = false;
  bool memoize_ = true;
  std::uint64_t states_ = 0;
  std::unordered_map<std::vector<std::uint64_t>, int, KeyHash> memo_;
};

}  // namespace detail

// Longest rainbow walk in a colored digraph, subject to the query's cap,
// palette restriction and optional fixed start.
inline RainbowAnswer rainbow_search(const detail::ColoredDigraph& g,
                                    const RainbowQuery& q) {
  detail::RainbowEngine engine(g, q);
  return engine.run();
}

// Longest rainbow walk in a colored tournament, truncated at `cap` (>= 1).
// The certificate is present exactly when the reported length is >= 1.
inline std::pair<int, std::optional<RainbowCertificate>> longest_rainbow(
    const ColoredTournament& ct, int cap, std::uint64_t state_budget = 50'000'000) {
  if (cap < 1) throw DomainError("rainbow cap must be at least 1");
  RainbowQuery q;
  q.cap = cap;
  q.state_budget = state_budget;
  RainbowAnswer ans = rainbow_search(detail::ColoredDigraph::from(ct), q);
  if (ans.length < 1) return {ans.length, std::nullopt};
  return {ans.length, RainbowCertificate{std::move(ans.walk), std::move(ans.colors)}};
}

// ---------------------------------------------------------------------------
// m-flash colors: for each vertex v, the colors a such that some a-colored
// walk of length at least m passes through v.  A longest a-walk ending at v
// and a longest a-walk starting at v splice at v, so the test is
// end(v) + start(v) >= m, with either side unbounded counting as infinite.

inline std::vector<std::vector<Color>> m_flash_colors(const ColoredTournament& ct, int m) {
  if (m < 1) throw DomainError("m must be at least 1");
  const int n = ct.size();
  FlashTable fwd = flash_table(ct);
  FlashTable bwd = flash_table(flashbow::reverse(ct));  // start lengths
  std::vector<std::vector<Color>> through(static_cast<std::size_t>(n) + 1);
  for (std::size_t ci = 0; ci < fwd.palette().size(); ++ci) {
    for (Vertex v = 1; v <= n; ++v) {
      FlashLen end = fwd.value(ci, v);
      FlashLen start = bwd.value(ci, v);
      bool hit = end.is_unbounded() || start.is_unbounded() ||
                 end.value() + start.value() >= m;
      if (hit) through[v].push_back(fwd.palette()[ci]);
    }
  }
  return through;
}

}  // namespace flashbow
