#pragma once

// Exhaustive verification that a tournament forces every complete edge
// coloring to contain a long monochromatic walk or a long rainbow walk.
//
// Colorings are enumerated as restricted-growth strings over the fixed pair
// order of the edges, so each set partition of the edges is visited exactly
// once.  Pruning is exact and incremental: an assignment can only create a
// monochromatic walk in its own color or a rainbow walk through its own
// edge, so checking the just-assigned color (gated by an edge count) and
// running a full rainbow check (gated by a cheap degree trigger) after every
// assignment catches every violation at the shallowest prefix.  A leaf
// reached unpruned is therefore a complete coloring free of both patterns —
// a counterexample to forcing.
//
// Pruned subtrees are accounted exactly: a prefix of q remaining edges with
// current maximum color M covers N(M,q) = M*N(M,q-1) + N(M+1,q-1) complete
// colorings, so `covered` reaches the Bell number of the edge count exactly
// when the search is exhaustive.
//
// Parallelism is deterministic by construction: a root pass enumerates the
// surviving prefixes at a fixed split depth, each becomes a task with an
// equal share of the node budget, tasks run in any order on any number of
// threads, and results merge in task order.  Outputs are byte-identical
// across thread counts.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "flashbow/bounds.hpp"
#include "flashbow/construct.hpp"
#include "flashbow/core.hpp"
#include "flashbow/detect.hpp"
#include "flashbow/rng.hpp"

namespace flashbow {

// ---------------------------------------------------------------------------
// Options, stats, reports

struct SearchOptions {
  std::uint64_t node_budget = 1'000'000'000;
  int threads = 1;
  int split_depth = 4;
  std::string checkpoint_path;                    // empty: no checkpointing
  std::uint64_t checkpoint_interval = 10'000'000;  // nodes between writes
};

struct SearchStats {
  BigInt covered = 0;                  // complete colorings accounted for
  std::uint64_t complete_visited = 0;  // leaves reached unpruned
  std::uint64_t pruned_prefixes = 0;
  BigInt pruned_covered = 0;
  std::uint64_t nodes = 0;

  SearchStats& operator+=(const SearchStats& o) {
    covered += o.covered;
    complete_visited += o.complete_visited;
    pruned_prefixes += o.pruned_prefixes;
    pruned_covered += o.pruned_covered;
    nodes += o.nodes;
    return *this;
  }
};

enum class ForcingOutcome { Forced, Counterexample, BudgetExceeded };

struct ForcingReport {
  ForcingOutcome outcome = ForcingOutcome::Forced;
  bool budget_exceeded = false;  // may accompany a counterexample
  std::optional<ColoredTournament> counterexample;  // lexicographically least
  SearchStats stats;
  int n = 0, l = 0, k = 0;
  std::uint64_t tasks = 0;
  std::uint64_t root_nodes = 0;
};

// ---------------------------------------------------------------------------
// Search internals

namespace detail {

// Directed edges of a tournament in pair order.
inline std::vector<std::pair<Vertex, Vertex>> arc_list(const Tournament& t) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  arcs.reserve(pair_count(t.size()));
  t.for_each_edge([&](Vertex u, Vertex v) { arcs.emplace_back(u, v); });
  return arcs;
}

// completions[M][q]: complete colorings reachable from a prefix with q edges
// left and current maximum color M.
inline std::vector<std::vector<BigInt>> completion_table(int e) {
  std::vector<std::vector<BigInt>> table(static_cast<std::size_t>(e) + 2,
                                         std::vector<BigInt>(static_cast<std::size_t>(e) + 1));
  for (int m = e + 1; m >= 0; --m) {
    table[static_cast<std::size_t>(m)][0] = 1;
    for (int q = 1; q <= e; ++q)
      table[static_cast<std::size_t>(m)][static_cast<std::size_t>(q)] =
          BigInt(m) * table[static_cast<std::size_t>(m)][static_cast<std::size_t>(q - 1)] +
          (m + 1 <= e + 1
               ? table[static_cast<std::size_t>(m + 1)][static_cast<std::size_t>(q - 1)]
               : BigInt(0));
  }
  return table;
}

// Longest walk (in arcs) using only edges of one color of a partial
// coloring; a directed cycle counts as infinite.
class PartialFlashCheck {
 public:
  PartialFlashCheck(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {}

  bool at_least(const std::vector<std::pair<Vertex, Vertex>>& arcs,
                const std::vector<int>& colors, int color, int l) {
    for (auto& row : adj_) row.clear();
    for (std::size_t i = 0; i < arcs.size(); ++i)
      if (colors[i] == color) adj_[static_cast<std::size_t>(arcs[i].first)].push_back(arcs[i].second);
    state_.assign(static_cast<std::size_t>(n_) + 1, 0);
    best_.assign(static_cast<std::size_t>(n_) + 1, 0);
    cycle_ = false;
    int longest = 0;
    for (Vertex v = 1; v <= n_ && !cycle_; ++v)
      longest = std::max(longest, walk_from(v));
    return cycle_ || longest >= l;
  }

 private:
  int walk_from(Vertex v) {
    if (cycle_) return 0;
    auto& st = state_[static_cast<std::size_t>(v)];
    if (st == 2) return best_[static_cast<std::size_t>(v)];
    if (st == 1) {
      cycle_ = true;
      return 0;
    }
    st = 1;
    int out = 0;
    for (Vertex w : adj_[static_cast<std::size_t>(v)])
      out = std::max(out, 1 + walk_from(w));
    st = 2;
    best_[static_cast<std::size_t>(v)] = out;
    return out;
  }

  int n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> state_;
  std::vector<int> best_;
  bool cycle_ = false;
};

// Rainbow walk of length >= k somewhere in the assigned part of a coloring.
// Colors are restricted-growth values <= edge count, so a 64-bit mask holds
// the used set.
class PartialRainbowCheck {
 public:
  PartialRainbowCheck(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {}

  bool at_least(const std::vector<std::pair<Vertex, Vertex>>& arcs,
                const std::vector<int>& colors, int k) {
    for (auto& row : adj_) row.clear();
    for (std::size_t i = 0; i < arcs.size(); ++i)
      if (colors[i] > 0)
        adj_[static_cast<std::size_t>(arcs[i].first)].emplace_back(arcs[i].second, colors[i]);
    k_ = k;
    for (Vertex v = 1; v <= n_; ++v)
      if (extend(v, 0, 0)) return true;
    return false;
  }

 private:
  bool extend(Vertex v, std::uint64_t used, int len) {
    if (len == k_) return true;
    for (auto [w, c] : adj_[static_cast<std::size_t>(v)]) {
      std::uint64_t bit = 1ull << c;
      if (used & bit) continue;
      if (extend(w, used | bit, len + 1)) return true;
    }
    return false;
  }

  int n_;
  int k_ = 0;
  std::vector<std::vector<std::pair<Vertex, int>>> adj_;
};

struct TaskResult {
  SearchStats stats;
  bool budget_exceeded = false;
  std::optional<std::vector<int>> cex;  // full color assignment, pair order
  bool done = false;
};

inline std::uint64_t forcing_config_hash(const Tournament& t, int l, int k,
                                         int split_depth) {
  std::uint64_t h = rng::mix64(0x666f726345ULL);
  auto fold = [&](std::uint64_t x) { h = rng::mix64(h ^ x); };
  fold(static_cast<std::uint64_t>(t.size()));
  fold(static_cast<std::uint64_t>(l));
  fold(static_cast<std::uint64_t>(k));
  fold(static_cast<std::uint64_t>(split_depth));
  t.for_each_edge([&](Vertex u, Vertex v) {
    fold((static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v));
  });
  return h;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Forcing check

namespace detail {

class ForcingEngine {
 public:
  ForcingEngine(const Tournament& t, int l, int k, const SearchOptions& opts)
      : t_(t),
        opts_(opts),
        n_(t.size()),
        l_(l),
        k_(k),
        e_(static_cast<int>(pair_count(t.size()))),
        arcs_(arc_list(t)),
        completions_(completion_table(e_)) {
    if (l < 1 || k < 1) throw DomainError("forcing needs l >= 1 and k >= 1");
    if (opts.split_depth < 1) throw DomainError("split depth must be positive");
    if (opts.threads < 1) throw DomainError("thread count must be positive");
    split_ = std::min(opts.split_depth, e_);
  }

  ForcingReport run() {
    ForcingReport report;
    report.n = n_;
    report.l = l_;
    report.k = k_;

    if (e_ == 0) {
      // The empty coloring of a one-vertex tournament is free of both
      // patterns (walks need edges).
      report.outcome = ForcingOutcome::Counterexample;
      report.counterexample = ColoredTournament{t_, EdgeColoring(n_, {})};
      report.stats.covered = 1;
      report.stats.complete_visited = 1;
      return report;
    }

    // Root pass: enumerate surviving prefixes at the split depth.  When the
    // split depth reaches the edge count the root pass is the whole search
    // and no tasks are spawned.
    Cursor root(*this);
    bool root_aborted = !descend(root, 0, 0, opts_.node_budget, &tasks_);
    report.root_nodes = root.stats.nodes;
    report.tasks = tasks_.size();
    SearchStats total = root.stats;

    std::uint64_t per_task_budget = 0;
    bool task_budget_exhausted = false;
    if (!tasks_.empty()) {
      if (root.stats.nodes >= opts_.node_budget) {
        task_budget_exhausted = true;
      } else {
        per_task_budget = (opts_.node_budget - root.stats.nodes) / tasks_.size();
        if (per_task_budget == 0) task_budget_exhausted = true;
      }
    }

    std::vector<TaskResult> results(tasks_.size());
    Checkpoint ckpt;
    if (!tasks_.empty() && !task_budget_exhausted) {
      if (!opts_.checkpoint_path.empty())
        ckpt.load(opts_.checkpoint_path, forcing_config_hash(t_, l_, k_, split_),
                  tasks_.size(), per_task_budget, results);

      std::atomic<std::size_t> next{0};
      std::atomic<std::uint64_t> nodes_done{0};
      std::mutex ckpt_mutex;
      auto worker = [&]() {
        PerTaskState state(*this);
        while (true) {
          std::size_t id = next.fetch_add(1);
          if (id >= tasks_.size()) return;
          if (results[id].done) continue;  // restored from a checkpoint
          results[id] = run_task(state, tasks_[id], per_task_budget);
          results[id].done = true;
          if (!opts_.checkpoint_path.empty()) {
            std::uint64_t so_far =
                nodes_done.fetch_add(results[id].stats.nodes) + results[id].stats.nodes;
            std::lock_guard<std::mutex> lock(ckpt_mutex);
            if (so_far - ckpt.nodes_at_last_write >= opts_.checkpoint_interval) {
              ckpt.nodes_at_last_write = so_far;
              ckpt.write(opts_.checkpoint_path,
                         forcing_config_hash(t_, l_, k_, split_), tasks_.size(),
                         per_task_budget, results);
            }
          }
        }
      };
      int workers = std::min<int>(opts_.threads, static_cast<int>(tasks_.size()));
      if (workers <= 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
      }
    }

    // Merge in task order: deterministic regardless of scheduling.  The
    // root cursor holds the counterexample when the search never split.
    bool any_budget = root_aborted || task_budget_exhausted;
    std::optional<std::vector<int>> cex = root.cex;
    for (const TaskResult& r : results) {
      total += r.stats;
      any_budget = any_budget || r.budget_exceeded;
      if (!cex && r.cex) cex = r.cex;
    }

    report.stats = total;
    report.budget_exceeded = any_budget;
    if (cex) {
      report.outcome = ForcingOutcome::Counterexample;
      std::vector<Color> by_pair(cex->begin(), cex->end());
      report.counterexample = ColoredTournament{t_, EdgeColoring(n_, by_pair)};
    } else if (any_budget) {
      report.outcome = ForcingOutcome::BudgetExceeded;
    } else {
      report.outcome = ForcingOutcome::Forced;
    }

    // Completed runs clean up their checkpoint; an interrupted run persists
    // its final state so a rerun can pick up the finished tasks.
    if (!opts_.checkpoint_path.empty()) {
      if (report.budget_exceeded && !tasks_.empty() && !task_budget_exhausted)
        ckpt.write(opts_.checkpoint_path, forcing_config_hash(t_, l_, k_, split_),
                   tasks_.size(), per_task_budget, results);
      else if (!report.budget_exceeded)
        std::remove(opts_.checkpoint_path.c_str());
    }
    return report;
  }

 private:
  struct Cursor {
    explicit Cursor(ForcingEngine& e)
        : colors(static_cast<std::size_t>(e.e_), 0),
          flash(e.n_),
          rainbow(e.n_) {}
    std::vector<int> colors;
    PartialFlashCheck flash;
    PartialRainbowCheck rainbow;
    SearchStats stats;
    std::optional<std::vector<int>> cex;
  };
  using PerTaskState = Cursor;

  // Assign colors from depth `at` onwards; `spawn` non-null makes this the
  // root pass, which collects surviving prefixes at the split depth instead
  // of descending past it.  Returns false when the node budget ran out.
  bool descend(Cursor& cur, int at, int max_color, std::uint64_t budget,
               std::vector<std::vector<int>>* spawn) {
    if (spawn && at == split_) {
      spawn->emplace_back(cur.colors.begin(), cur.colors.begin() + split_);
      return true;
    }
    for (int c = 1; c <= max_color + 1; ++c) {
      if (cur.stats.nodes >= budget) return false;
      ++cur.stats.nodes;
      cur.colors[static_cast<std::size_t>(at)] = c;
      const int new_max = std::max(max_color, c);
      const int remaining = e_ - at - 1;

      bool prune = false;
      // The new arc can only lengthen walks in its own color.  An acyclic
      // class needs l arcs for a walk of length l; a cyclic class gives
      // arbitrarily long walks but needs at least 3 arcs, tournaments
      // having no 2-cycles.
      int count = 0;
      for (int i = 0; i <= at; ++i)
        if (cur.colors[static_cast<std::size_t>(i)] == c) ++count;
      if (count >= std::min(l_, 3))
        prune = cur.flash.at_least(arcs_, cur.colors, c, l_);
      // A rainbow through the new arc needs enough colors and a neighbor
      // arc unless k = 1, where the arc itself is one.
      if (!prune) {
        if (k_ == 1) {
          prune = true;
        } else if (new_max >= k_) {
          const auto [u, v] = arcs_[static_cast<std::size_t>(at)];
          bool touching = false;
          for (int i = 0; i < at && !touching; ++i) {
            if (cur.colors[static_cast<std::size_t>(i)] == 0) continue;
            const auto [a, b] = arcs_[static_cast<std::size_t>(i)];
            touching = (b == u) || (a == v);
          }
          if (touching) prune = cur.rainbow.at_least(arcs_, cur.colors, k_);
        }
      }

      if (prune) {
        ++cur.stats.pruned_prefixes;
        const BigInt& sub =
            completions_[static_cast<std::size_t>(new_max)][static_cast<std::size_t>(remaining)];
        cur.stats.pruned_covered += sub;
        cur.stats.covered += sub;
      } else if (remaining == 0) {
        // Unpruned leaf: a complete coloring free of both patterns.
        ++cur.stats.complete_visited;
        cur.stats.covered += 1;
        cur.cex = cur.colors;
        cur.colors[static_cast<std::size_t>(at)] = 0;
        return true;  // lexicographically first counterexample found
      } else {
        if (!descend(cur, at + 1, new_max, budget, spawn)) {
          cur.colors[static_cast<std::size_t>(at)] = 0;
          return false;
        }
        if (cur.cex) {
          cur.colors[static_cast<std::size_t>(at)] = 0;
          return true;
        }
      }
      cur.colors[static_cast<std::size_t>(at)] = 0;
    }
    return true;
  }

  TaskResult run_task(Cursor& cur, const std::vector<int>& prefix,
                      std::uint64_t budget) {
    cur.stats = SearchStats{};
    cur.cex.reset();
    std::fill(cur.colors.begin(), cur.colors.end(), 0);
    int max_color = 0;
    for (int i = 0; i < split_; ++i) {
      cur.colors[static_cast<std::size_t>(i)] = prefix[static_cast<std::size_t>(i)];
      max_color = std::max(max_color, prefix[static_cast<std::size_t>(i)]);
    }
    TaskResult result;
    result.budget_exceeded = !descend(cur, split_, max_color, budget, nullptr);
    result.stats = cur.stats;
    if (cur.cex) result.cex = *cur.cex;
    return result;
  }

  // Completed-task checkpointing: the file records per-task results; a
  // resumed run re-runs only the tasks that never finished.  Content is
  // validated against the search configuration before anything is reused.
  struct Checkpoint {
    std::uint64_t nodes_at_last_write = 0;

    static std::string hex(std::uint64_t h) {
      char buf[17];
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
      return buf;
    }

    void load(const std::string& path, std::uint64_t config, std::size_t ntasks,
              std::uint64_t per_task_budget, std::vector<TaskResult>& results) {
      std::ifstream in(path);
      if (!in) return;  // nothing saved yet
      std::string line;
      if (!std::getline(in, line) || line != "flashbow-forcing-checkpoint 1")
        throw Error("unrecognized checkpoint file: " + path);
      if (!std::getline(in, line) || line != "config " + hex(config))
        throw Error("checkpoint does not match this search: " + path);
      std::ostringstream shape;
      shape << "shape " << ntasks << ' ' << per_task_budget;
      if (!std::getline(in, line) || line != shape.str())
        throw Error("checkpoint was written with different budget settings: " + path);
      while (std::getline(in, line)) {
        if (line == "end") return;
        std::istringstream row(line);
        std::string tag;
        row >> tag;
        if (tag == "task") {
          std::size_t id;
          std::string covered, pruned_covered;
          TaskResult r;
          int flag;
          row >> id >> covered >> r.stats.complete_visited >> r.stats.pruned_prefixes >>
              pruned_covered >> r.stats.nodes >> flag;
          if (!row || id >= results.size())
            throw Error("corrupt checkpoint record: " + path);
          r.stats.covered = BigInt(covered);
          r.stats.pruned_covered = BigInt(pruned_covered);
          r.budget_exceeded = flag != 0;
          r.done = true;
          std::string cex_tag;
          if (row >> cex_tag) {
            if (cex_tag != "cex") throw Error("corrupt checkpoint record: " + path);
            std::vector<int> colors;
            int c;
            while (row >> c) colors.push_back(c);
            r.cex = std::move(colors);
          }
          results[id] = std::move(r);
          nodes_at_last_write += results[id].stats.nodes;
        } else {
          throw Error("corrupt checkpoint line: " + path);
        }
      }
      throw Error("truncated checkpoint file: " + path);
    }

    void write(const std::string& path, std::uint64_t config, std::size_t ntasks,
               std::uint64_t per_task_budget, const std::vector<TaskResult>& results) {
      const std::string tmp = path + ".tmp";
      {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error("cannot write checkpoint: " + tmp);
        out << "flashbow-forcing-checkpoint 1\n";
        out << "config " << hex(config) << '\n';
        out << "shape " << ntasks << ' ' << per_task_budget << '\n';
        for (std::size_t id = 0; id < results.size(); ++id) {
          const TaskResult& r = results[id];
          if (!r.done) continue;
          out << "task " << id << ' ' << r.stats.covered.str() << ' '
              << r.stats.complete_visited << ' ' << r.stats.pruned_prefixes << ' '
              << r.stats.pruned_covered.str() << ' ' << r.stats.nodes << ' '
              << (r.budget_exceeded ? 1 : 0);
          if (r.cex) {
            out << " cex";
            for (int c : *r.cex) out << ' ' << c;
          }
          out << '\n';
        }
        out << "end\n";
      }
      std::rename(tmp.c_str(), path.c_str());
    }
  };

  Tournament t_;
  SearchOptions opts_;
  int n_, l_, k_, e_;
  int split_ = 0;
  std::vector<std::pair<Vertex, Vertex>> arcs_;
  std::vector<std::vector<BigInt>> completions_;
  std::vector<std::vector<int>> tasks_;
};

}  // namespace detail

// Does every complete edge coloring of `t` contain a monochromatic walk of
// length l or a rainbow walk of length k?  Reports the lexicographically
// least free coloring when one exists.
inline ForcingReport forcing_check(const Tournament& t, int l, int k,
                                   const SearchOptions& opts = {}) {
  return detail::ForcingEngine(t, l, k, opts).run();
}

// ---------------------------------------------------------------------------
// Complete-coloring enumeration (no pruning)

// Visits every complete coloring of `t` in restricted-growth (lexicographic)
// order and returns how many there are — the Bell number of the edge count.
inline BigInt enumerate_complete_colorings(
    const Tournament& t,
    const std::function<void(const ColoredTournament&)>& fn = {}) {
  const int e = static_cast<int>(pair_count(t.size()));
  if (e == 0) {
    if (fn) fn(ColoredTournament{t, EdgeColoring(t.size(), {})});
    return 1;
  }
  std::vector<Color> colors(static_cast<std::size_t>(e), 0);
  BigInt count = 0;
  auto rec = [&](auto&& self, int at, Color max_color) -> void {
    for (Color c = 1; c <= max_color + 1; ++c) {
      colors[static_cast<std::size_t>(at)] = c;
      if (at + 1 == e) {
        ++count;
        if (fn) fn(ColoredTournament{t, EdgeColoring(t.size(), colors)});
      } else {
        self(self, at + 1, std::max(max_color, c));
      }
    }
    colors[static_cast<std::size_t>(at)] = 0;
  };
  rec(rec, 0, 0);
  return count;
}

// ---------------------------------------------------------------------------
// Canonical forms and tournament enumeration

// Upper-triangle orientation bits in pair order: '1' when the lower-numbered
// vertex dominates.
inline std::string adjacency_encoding(const Tournament& t) {
  std::string bits;
  bits.reserve(pair_count(t.size()));
  for (Vertex v = 2; v <= t.size(); ++v)
    for (Vertex u = 1; u < v; ++u) bits.push_back(t.dominates(u, v) ? '1' : '0');
  return bits;
}

inline Tournament tournament_from_encoding(int n, const std::string& bits) {
  if (bits.size() != pair_count(n)) throw DomainError("encoding length mismatch");
  Tournament t(n);
  std::size_t i = 0;
  for (Vertex v = 2; v <= n; ++v)
    for (Vertex u = 1; u < v; ++u, ++i)
      if (bits[i] == '1')
        t.orient(u, v);
      else
        t.orient(v, u);
  return t;
}

// Lexicographically least adjacency encoding over all vertex relabelings.
// Factorial in n; guarded by the same cap as tournament enumeration.
inline Tournament canonical_form(const Tournament& t, int cap = 8) {
  const int n = t.size();
  if (n > cap)
    throw SizeCapError("canonical forms are factorial in n; refusing n = " +
                       std::to_string(n));
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::string best;
  std::string bits;
  do {
    bits.clear();
    for (Vertex v = 2; v <= n; ++v)
      for (Vertex u = 1; u < v; ++u)
        bits.push_back(t.dominates(perm[static_cast<std::size_t>(u - 1)],
                                   perm[static_cast<std::size_t>(v - 1)])
                           ? '1'
                           : '0');
    if (best.empty() || bits < best) best = bits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return tournament_from_encoding(n, best);
}

// All tournaments on n vertices up to isomorphism, represented by their
// canonical forms, sorted by encoding.  Sizes 1..7 have 1, 1, 2, 4, 12, 56,
// 456 classes; beyond that the factorial canonicalization is refused.
inline std::vector<Tournament> enumerate_tournaments(int n, int cap = 7) {
  if (n < 1) throw DomainError("enumeration needs n >= 1");
  if (n > cap)
    throw SizeCapError("tournament enumeration is capped at n = " + std::to_string(cap));
  std::vector<std::string> reps{""};  // the one-vertex tournament
  for (int m = 2; m <= n; ++m) {
    std::vector<std::string> grown;
    for (const std::string& enc : reps) {
      Tournament base = tournament_from_encoding(m - 1, enc);
      for (std::uint64_t mask = 0; mask < (1ull << (m - 1)); ++mask) {
        Tournament t(m);
        base.for_each_edge([&](Vertex u, Vertex v) { t.orient(u, v); });
        for (int j = 0; j < m - 1; ++j) {
          if (mask >> j & 1)
            t.orient(j + 1, m);
          else
            t.orient(m, j + 1);
        }
        grown.push_back(adjacency_encoding(canonical_form(t)));
      }
    }
    std::sort(grown.begin(), grown.end());
    grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
    reps = std::move(grown);
  }
  std::vector<Tournament> out;
  out.reserve(reps.size());
  for (const std::string& enc : reps) out.push_back(tournament_from_encoding(n, enc));
  return out;
}

// Renumbers colors by first use over the pair order of the edges, mapping
// every coloring onto its restricted-growth representative.
inline ColoredTournament canonicalize_coloring(const ColoredTournament& ct) {
  std::vector<Color> mapping;  // old color at index new-1
  std::vector<Color> by_pair;
  by_pair.reserve(ct.coloring.by_pair().size());
  for (Color c : ct.coloring.by_pair()) {
    auto it = std::find(mapping.begin(), mapping.end(), c);
    if (it == mapping.end()) {
      mapping.push_back(c);
      by_pair.push_back(static_cast<Color>(mapping.size()));
    } else {
      by_pair.push_back(static_cast<Color>(it - mapping.begin() + 1));
    }
  }
  return ColoredTournament{ct.tournament, EdgeColoring(ct.size(), by_pair)};
}

// ---------------------------------------------------------------------------
// Threshold scanners

struct ThresholdReport {
  int l = 0, k = 0;
  bool exact = false;
  int value = 0;  // largest size carrying a verified free coloring
  std::optional<ColoredTournament> witness;       // free instance of that size
  std::optional<ForcingReport> forcing;           // the run that closed the scan
  bool budget_hit = false;
  int scanned_to = 0;  // last size fully processed
  SearchStats aggregate;
};

namespace detail {

inline SearchOptions without_checkpoint(SearchOptions opts) {
  // Scans run many forcing checks; a shared checkpoint file would mix
  // configurations, so checkpointing applies only to single checks.
  opts.checkpoint_path.clear();
  return opts;
}

inline void assert_free(const ColoredTournament& ct, int l, int k) {
  if (longest_flash(ct).first.at_least(l))
    throw Error("internal witness check failed: monochromatic walk of length " +
                std::to_string(l));
  if (longest_rainbow(ct, k).first >= k)
    throw Error("internal witness check failed: rainbow walk of length " +
                std::to_string(k));
}

}  // namespace detail

// Largest n such that some coloring of the transitive tournament on n
// vertices avoids both an l-long monochromatic walk and a k-long rainbow
// walk.  The grid seeds the scan, so only sizes above l^(k-1) are searched;
// each counterexample becomes the next witness.  A zero n_cap scans until
// the answer is exact or the budget interferes.
inline ThresholdReport compute_f(int l, int k, int n_cap = 0,
                                 const SearchOptions& opts = {}) {
  if (l < 1 || k < 1) throw DomainError("thresholds need l >= 1 and k >= 1");
  SearchOptions run_opts = detail::without_checkpoint(opts);
  ThresholdReport report;
  report.l = l;
  report.k = k;

  if (k == 1) {
    // A single edge in any color is a 1-rainbow; only the lone vertex is free.
    report.value = 1;
    report.witness = ColoredTournament{new_transitive(1), EdgeColoring(1, {})};
    ForcingReport closing = forcing_check(new_transitive(2), l, 1, run_opts);
    report.aggregate = closing.stats;
    report.scanned_to = 2;
    report.exact = closing.outcome == ForcingOutcome::Forced;
    report.budget_hit = closing.budget_exceeded;
    report.forcing = std::move(closing);
    return report;
  }

  ColoredTournament witness = grid_coloring(l, k);
  detail::assert_free(witness, l, k);
  report.value = witness.size();
  report.witness = std::move(witness);
  report.scanned_to = report.value;

  for (int n = report.value + 1; n_cap == 0 || n <= n_cap; ++n) {
    ForcingReport run = forcing_check(new_transitive(n), l, k, run_opts);
    report.aggregate += run.stats;
    report.scanned_to = n;
    if (run.outcome == ForcingOutcome::Forced) {
      report.exact = true;
      report.forcing = std::move(run);
      return report;  // value stays n-1: the last size with a free coloring
    }
    if (run.outcome == ForcingOutcome::BudgetExceeded) {
      report.budget_hit = true;
      report.forcing = std::move(run);
      return report;
    }
    report.value = n;
    report.witness = run.counterexample;
  }
  return report;
}

// Same threshold over all tournaments: the largest n such that some
// tournament on n vertices carries a free coloring.  Every isomorphism
// class is checked; the scan is exact at n-1 once all classes at n force.
inline ThresholdReport compute_t(int l, int k, int n_cap = 7,
                                 const SearchOptions& opts = {}) {
  if (l < 1 || k < 1) throw DomainError("thresholds need l >= 1 and k >= 1");
  if (n_cap < 2) throw DomainError("the scan needs n_cap >= 2");
  SearchOptions run_opts = detail::without_checkpoint(opts);
  ThresholdReport report;
  report.l = l;
  report.k = k;
  report.value = 1;
  report.witness = ColoredTournament{new_transitive(1), EdgeColoring(1, {})};

  for (int n = 2; n <= n_cap; ++n) {
    bool found_free = false;
    for (const Tournament& rep : enumerate_tournaments(n, n_cap)) {
      ForcingReport run = forcing_check(rep, l, k, run_opts);
      report.aggregate += run.stats;
      if (run.outcome == ForcingOutcome::BudgetExceeded) {
        report.budget_hit = true;
        report.scanned_to = n - 1;
        return report;
      }
      if (run.outcome == ForcingOutcome::Counterexample) {
        report.value = n;
        report.witness = run.counterexample;
        found_free = true;
        break;  // the first class with a free coloring settles this size
      }
    }
    report.scanned_to = n;
    if (!found_free) {
      report.exact = true;  // every class at n forces, so the answer is n-1
      return report;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Adversarial scan

struct AdversarialEntry {
  int n = 0;
  std::string encoding;
  bool early = false;             // forces strictly below the transitive threshold
  bool is_reversed_edge = false;  // transitive with exactly one flipped pair
};

struct AdversarialReport {
  int l = 0, k = 0;
  int f_value = 0;  // exact transitive threshold supplied by the caller
  std::vector<AdversarialEntry> forcing;  // sorted by (n, encoding)
  int scanned_to = 0;
  bool budget_hit = false;
};

// Scans every non-transitive tournament class of size 3..n_cap for forcing,
// flagging the classes that force strictly below f+1 — tournaments beating
// the transitive threshold.  `f_value` must be the exact transitive
// threshold (from compute_f).
inline AdversarialReport adversarial_scan(int l, int k, int n_cap, int f_value,
                                          const SearchOptions& opts = {}) {
  if (l < 1 || k < 1) throw DomainError("thresholds need l >= 1 and k >= 1");
  if (n_cap < 3) throw DomainError("the scan needs n_cap >= 3");
  if (f_value < 1) throw DomainError("the scan needs the exact transitive threshold");
  SearchOptions run_opts = detail::without_checkpoint(opts);
  AdversarialReport report;
  report.l = l;
  report.k = k;
  report.f_value = f_value;

  for (int n = 3; n <= n_cap; ++n) {
    const std::string reversed_enc =
        adjacency_encoding(canonical_form(reversed_edge_tournament(n)));
    for (const Tournament& rep : enumerate_tournaments(n, n_cap)) {
      if (is_transitive(rep)) continue;
      ForcingReport run = forcing_check(rep, l, k, run_opts);
      if (run.budget_exceeded) {
        report.budget_hit = true;
        continue;
      }
      if (run.outcome != ForcingOutcome::Forced) continue;
      AdversarialEntry entry;
      entry.n = n;
      entry.encoding = adjacency_encoding(rep);
      entry.early = n <= f_value - 1;
      entry.is_reversed_edge = entry.encoding == reversed_enc;
      report.forcing.push_back(std::move(entry));
    }
    report.scanned_to = n;
  }
  return report;
}

}  // namespace flashbow
