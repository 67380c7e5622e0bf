// flashbow: construct, inspect, sample, decompose, bound, and exhaustively
// verify edge-colored tournaments.
//
// Exit codes: 0 success, 1 property violated (an assertion failed, a
// construction was infeasible, or a forcing check found a counterexample),
// 2 usage or input error, 3 budget exhausted before an answer.
//
// Outputs are deterministic for a given configuration: thread counts and
// file locations never appear in them, and seeds are echoed only where
// randomness was actually consumed.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "flashbow/flashbow.hpp"

namespace {

using namespace flashbow;

constexpr int kExitSuccess = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// --------------------------------------------------------------------------
// Small helpers

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::trunc | std::ios::binary);
  if (!out) throw Error("cannot write output file: " + output_path);
  out << text;
}

std::string join(const std::vector<Vertex>& xs) {
  if (xs.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

std::string join_colors(const std::vector<Color>& xs) {
  if (xs.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

// The node budget for exhaustive searches: default, overridden by the
// FLASHBOW_BUDGET environment variable, overridden by an explicit --budget.
std::uint64_t env_node_budget() {
  const char* raw = std::getenv("FLASHBOW_BUDGET");
  if (raw == nullptr || *raw == '\0') return SearchOptions{}.node_budget;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0')
    throw Error(std::string("FLASHBOW_BUDGET is not a number: ") + raw);
  return parsed;
}

Tournament base_tournament(const std::string& kind, int n, std::uint64_t seed) {
  if (kind == "transitive") return new_transitive(n);
  if (kind == "random") return random_tournament(n, seed);
  throw Error("unknown base tournament kind: " + kind);
}

// --------------------------------------------------------------------------
// construct

int run_construct_grid(int l, int k, std::uint64_t size_cap, const std::string& output) {
  emit(serialize_ect(grid_coloring(l, k, size_cap)), output);
  return kExitSuccess;
}

int run_construct_antichain(int l, int k, int n, bool n_given, const std::string& base,
                            std::uint64_t seed, const std::string& output) {
  const AntichainLabelSet labels = antichain_labels(l, k);
  const int size = n_given ? n : static_cast<int>(labels.size());
  if (size < 1) throw DomainError("the antichain label set is empty; give --n");
  const Tournament t = base_tournament(base, size, seed);
  std::string text;
  if (base == "random") text += "# seed " + std::to_string(seed) + "\n";
  text += serialize_ect(antichain_coloring(t, l, k));
  emit(text, output);
  return kExitSuccess;
}

int run_construct_reversed(int l, int k, int n, bool n_given, const std::string& output) {
  int size = n;
  if (!n_given) {
    if (l < 1 || k < 2) throw DomainError("give --n, or --l and --k to derive it");
    unsigned long long power = 1;
    for (int i = 0; i < k - 1; ++i) {
      power *= static_cast<unsigned long long>(l);
      if (power > 100'000) throw SizeCapError("derived size exceeds 100000 vertices");
    }
    size = static_cast<int>(power) - 1;
  }
  // The interesting coloring questions are asked downstream (search
  // forcing); the emitted instance carries the single color 1.
  emit(serialize_ect(monochromatic(reversed_edge_tournament(size), 1)), output);
  return kExitSuccess;
}

int run_construct_block(int l, int k, int block_size, int n, const std::string& base,
                        std::uint64_t seed, const std::string& output) {
  const Tournament t = base_tournament(base, n, seed);
  const BlockColoringResult result = block_coloring(t, l, k, block_size);
  if (const auto* failure = std::get_if<BlockColoringFailure>(&result)) {
    std::cerr << "block construction failed: " << failure->detail << "\n";
    return kExitViolation;
  }
  const BlockColoring& bc = std::get<BlockColoring>(result);
  std::string text;
  if (base == "random") text += "# seed " + std::to_string(seed) + "\n";
  text += "# blocks " + std::to_string(bc.blocks.size()) + " a " + std::to_string(bc.a) +
          " b " + std::to_string(bc.b) + "\n";
  text += serialize_ect(bc.instance);
  emit(text, output);
  return kExitSuccess;
}

// --------------------------------------------------------------------------
// check / profile

int run_check(const std::string& file, int l, int k, bool assert_free) {
  const ColoredTournament ct = read_ect_file(file);
  const auto [flash, flash_cert] = longest_flash(ct);
  const auto [rainbow, rainbow_cert] = longest_rainbow(ct, k);

  std::ostringstream os;
  os << "vertices " << ct.size() << "\n";
  os << "edges " << ct.tournament.edge_count() << "\n";
  os << "colors " << ct.coloring.palette().size() << "\n";
  os << "longest flash " << flash.str();
  if (flash_cert)
    os << " color " << flash_cert->color << " walk " << join(flash_cert->walk);
  os << "\n";
  os << "longest rainbow " << rainbow << " cap " << k;
  if (rainbow_cert)
    os << " walk " << join(rainbow_cert->walk) << " colors "
       << join_colors(rainbow_cert->colors);
  os << "\n";

  const bool free = !flash.at_least(l) && rainbow < k;
  if (assert_free) os << "free " << (free ? "true" : "false") << "\n";
  std::cout << os.str();
  return (assert_free && !free) ? kExitViolation : kExitSuccess;
}

int run_profile(const std::string& file) {
  const ColoredTournament ct = read_ect_file(file);
  const auto profiles = color_profiles(ct);
  const FlashTable table = flash_table(ct);
  std::ostringstream os;
  for (Vertex v = 1; v <= ct.size(); ++v) {
    const ColorProfile& p = profiles[static_cast<std::size_t>(v)];
    os << "vertex " << v << " in " << join_colors(p.in) << " out " << join_colors(p.out)
       << " incident " << join_colors(p.incident) << "\n";
  }
  for (Color c : table.palette()) {
    os << "flash " << c;
    for (Vertex v = 1; v <= ct.size(); ++v) os << ' ' << table.value_of(c, v).str();
    os << "\n";
  }
  std::cout << os.str();
  return kExitSuccess;
}

// --------------------------------------------------------------------------
// sample

void print_sample_rows(std::ostringstream& os, const DeletionSample& s) {
  if (s.mode == DeletionSample::Mode::PointDraw) {
    os << " drawn";
    for (std::size_t i = 0; i < s.palette.size(); ++i)
      os << ' ' << s.palette[i] << ':' << s.drawn[i];
  } else {
    os << " windows";
    for (std::size_t i = 0; i < s.palette.size(); ++i) {
      os << ' ' << s.palette[i] << ':';
      for (std::size_t j = 0; j < s.windows[i].size(); ++j)
        os << (j ? "," : "") << s.windows[i][j];
    }
  }
  os << " survivors " << join(s.survivors) << "\n";
}

int run_sample(const std::string& mode, const std::string& file, int l, int m,
               int trials, std::uint64_t seed) {
  const ColoredTournament ct = read_ect_file(file);
  std::ostringstream os;
  os << "sample " << mode << " l " << l;
  if (mode == "window") os << " m " << m;
  os << " trials " << trials << " seed " << seed << "\n";
  std::size_t total = 0, largest = 0;
  for (int i = 0; i < trials; ++i) {
    const DeletionSample s = mode == "deletion"
                                 ? sample_deletion(ct, l, seed + static_cast<std::uint64_t>(i))
                                 : sample_flash_window(ct, l, m, seed + static_cast<std::uint64_t>(i));
    os << "trial " << i;
    if (s.mode == DeletionSample::Mode::PointDraw) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", s.p);
      os << " p " << buf;
    }
    print_sample_rows(os, s);
    total += s.survivors.size();
    largest = std::max(largest, s.survivors.size());
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f",
                trials > 0 ? static_cast<double>(total) / trials : 0.0);
  os << "summary trials " << trials << " mean-survivors " << buf << " max " << largest
     << "\n";
  std::cout << os.str();
  return kExitSuccess;
}

// --------------------------------------------------------------------------
// bounds

int run_bounds(int l, int k_max, bool f_variant, const std::string& output) {
  emit(emit_table(build_table(l, k_max, f_variant)), output);
  return kExitSuccess;
}

// --------------------------------------------------------------------------
// search

void print_stats(std::ostringstream& os, const SearchStats& stats) {
  os << "covered " << stats.covered.str() << "\n";
  os << "complete " << stats.complete_visited << "\n";
  os << "pruned " << stats.pruned_prefixes << "\n";
  os << "nodes " << stats.nodes << "\n";
}

int run_search_threshold(char which, int l, int k, int n_cap, const SearchOptions& opts,
                         const std::string& output) {
  const ThresholdReport report =
      which == 'f' ? compute_f(l, k, n_cap, opts) : compute_t(l, k, n_cap, opts);
  std::ostringstream os;
  os << which << '(' << l << ',' << k << ") " << (report.exact ? "=" : ">=") << ' '
     << report.value << "\n";
  os << "status "
     << (report.exact ? "exact" : (report.budget_hit ? "budget-exceeded" : "capped"))
     << "\n";
  os << "scanned " << report.scanned_to << "\n";
  print_stats(os, report.aggregate);
  if (report.witness) {
    os << "witness:\n";
    os << serialize_ect(*report.witness);
  }
  emit(os.str(), output);
  return report.budget_hit ? kExitBudget : kExitSuccess;
}

int run_search_forcing(const std::string& file, int transitive_n, int reversed_n,
                       int l, int k, const SearchOptions& opts,
                       const std::string& output) {
  Tournament t(1);
  if (!file.empty())
    t = read_ect_file(file).tournament;
  else if (transitive_n > 0)
    t = new_transitive(transitive_n);
  else if (reversed_n > 0)
    t = reversed_edge_tournament(reversed_n);
  else
    throw Error("give one of --file, --transitive, or --reversed");

  const ForcingReport report = forcing_check(t, l, k, opts);
  std::ostringstream os;
  os << "forcing n " << report.n << " l " << report.l << " k " << report.k << "\n";
  os << "outcome "
     << (report.outcome == ForcingOutcome::Forced
             ? "forced"
             : (report.outcome == ForcingOutcome::Counterexample ? "counterexample"
                                                                 : "budget-exceeded"))
     << "\n";
  print_stats(os, report.stats);
  os << "tasks " << report.tasks << "\n";
  if (report.counterexample) {
    os << "counterexample:\n";
    os << serialize_ect(*report.counterexample);
  }
  emit(os.str(), output);
  if (report.outcome == ForcingOutcome::BudgetExceeded) return kExitBudget;
  return report.outcome == ForcingOutcome::Forced ? kExitSuccess : kExitViolation;
}

int run_search_scan(int l, int k, int n_cap, int f_value, const SearchOptions& opts,
                    const std::string& output) {
  if (f_value <= 0) {
    const ThresholdReport f = compute_f(l, k, 0, opts);
    if (!f.exact) return kExitBudget;  // cannot anchor the scan
    f_value = f.value;
  }
  const AdversarialReport report = adversarial_scan(l, k, n_cap, f_value, opts);
  std::ostringstream os;
  os << "scan l " << l << " k " << k << " n-cap " << n_cap << " f " << f_value << "\n";
  for (const AdversarialEntry& entry : report.forcing) {
    os << "forcing " << entry.n << ' ' << entry.encoding;
    if (entry.early) os << " early";
    if (entry.is_reversed_edge) os << " reversed-edge";
    os << "\n";
  }
  os << "scanned " << report.scanned_to << "\n";
  emit(os.str(), output);
  return report.budget_hit ? kExitBudget : kExitSuccess;
}

// --------------------------------------------------------------------------
// decompose

int run_decompose(const std::string& file, int k, int r, std::uint64_t seed) {
  const ColoredTournament ct = read_ect_file(file);
  const Decomposition d = decompose(ct, k, r, seed);
  std::ostringstream os;
  os << "decompose k " << k << " r " << r;
  if (seed != 0) os << " seed " << seed;  // nonzero seeds shuffle the ordering
  os << "\n";
  os << "excluded " << join(d.no_rainbow_end) << "\n";
  os << "ordering " << join(d.ordering) << "\n";
  if (!d.pivot_found) {
    os << "pivot none\n";
    std::cout << os.str();
    return kExitSuccess;
  }
  os << "pivot " << d.pivot << "\n";
  os << "prefix " << join(d.prefix) << "\n";
  os << "out-neighborhood " << join(d.out_neighborhood) << "\n";
  for (const auto& cls : d.classes) {
    os << "class color " << cls.color << " members " << join(cls.members) << "\n";
    os << "  witness walk " << join(cls.witness.walk) << " colors "
       << join_colors(cls.witness.colors) << "\n";
    os << "  witness-colors " << join_colors(cls.witness_colors) << "\n";
    for (const auto& sig : cls.signature_classes) {
      os << "  signature ";
      for (std::size_t i = 0; i < sig.signature.size(); ++i)
        os << (i ? "," : "") << sig.signature[i].str();
      os << " members " << join(sig.members) << "\n";
    }
  }
  std::cout << os.str();
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-colored tournaments: constructions, detection, sampling,\n"
               "decomposition, recursive bounds, and exhaustive forcing checks"};
  app.require_subcommand(1);

  try {
    const std::uint64_t default_budget = env_node_budget();

    // ---- construct ------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "emit a colored tournament");
    construct->require_subcommand(1);

    int g_l = 0, g_k = 0;
    std::uint64_t g_cap = 100'000;
    std::string g_out;
    auto* grid = construct->add_subcommand(
        "grid", "power-of-l transitive instance with no long flash");
    grid->add_option("--l", g_l, "flash length bound")->required();
    grid->add_option("--k", g_k, "rainbow length bound")->required();
    grid->add_option("--size-cap", g_cap, "refuse instances larger than this");
    grid->add_option("--output", g_out, "write here instead of stdout");

    int a_l = 0, a_k = 0, a_n = 0;
    std::string a_base = "transitive", a_out;
    std::uint64_t a_seed = 0;
    auto* anti = construct->add_subcommand(
        "antichain", "instance labeled by the middle layer of the grid");
    anti->add_option("--l", a_l, "flash length bound")->required();
    anti->add_option("--k", a_k, "rainbow length bound")->required();
    auto* a_n_opt = anti->add_option("--n", a_n, "vertex count (default: all labels)");
    anti->add_option("--base", a_base, "base tournament: transitive or random")
        ->check(CLI::IsMember({"transitive", "random"}));
    anti->add_option("--seed", a_seed, "seed for a random base");
    anti->add_option("--output", a_out, "write here instead of stdout");

    int r_l = 0, r_k = 0, r_n = 0;
    std::string r_out;
    auto* rev = construct->add_subcommand(
        "reversed", "transitive tournament with its top edge reversed");
    rev->add_option("--l", r_l, "flash length bound used to derive the size");
    rev->add_option("--k", r_k, "rainbow length bound used to derive the size");
    auto* r_n_opt = rev->add_option("--n", r_n, "vertex count (overrides --l/--k)");
    rev->add_option("--output", r_out, "write here instead of stdout");

    int b_l = 0, b_k = 0, b_size = 0, b_n = 0;
    std::string b_base = "transitive", b_out;
    std::uint64_t b_seed = 0;
    auto* block = construct->add_subcommand(
        "block", "chain blocks colored by grid inside and antichain outside");
    block->add_option("--l", b_l, "flash length bound")->required();
    block->add_option("--k", b_k, "rainbow length bound")->required();
    block->add_option("--block-size", b_size, "vertices per chain block")->required();
    block->add_option("--n", b_n, "vertex count of the base tournament")->required();
    block->add_option("--base", b_base, "base tournament: transitive or random")
        ->check(CLI::IsMember({"transitive", "random"}));
    block->add_option("--seed", b_seed, "seed for a random base");
    block->add_option("--output", b_out, "write here instead of stdout");

    // ---- check / profile -------------------------------------------------
    std::string c_file;
    int c_l = 0, c_k = 0;
    bool c_assert = false;
    auto* check = app.add_subcommand("check", "measure longest flash and rainbow walks");
    check->add_option("file", c_file, "instance in ect format")->required();
    check->add_option("--l", c_l, "flash length bound")->required();
    check->add_option("--k", c_k, "rainbow length bound")->required();
    check->add_flag("--assert-free", c_assert,
                    "exit 1 unless the instance avoids both patterns");

    std::string p_file;
    auto* profile = app.add_subcommand(
        "profile", "per-vertex color profiles and per-color flash values");
    profile->add_option("file", p_file, "instance in ect format")->required();

    // ---- sample -----------------------------------------------------------
    auto* sample = app.add_subcommand("sample", "randomized vertex-survival samplers");
    sample->require_subcommand(1);
    std::string sd_file;
    int sd_l = 0, sd_trials = 1;
    std::uint64_t sd_seed = 0;
    auto* sdel = sample->add_subcommand(
        "deletion", "per-color point draws; survivors match everywhere");
    sdel->add_option("file", sd_file, "flash-free instance in ect format")->required();
    sdel->add_option("--l", sd_l, "flash length bound")->required();
    sdel->add_option("--trials", sd_trials, "independent trials")->check(CLI::PositiveNumber);
    sdel->add_option("--seed", sd_seed, "base seed; trial i uses seed+i");

    std::string sw_file;
    int sw_l = 0, sw_m = 0, sw_trials = 1;
    std::uint64_t sw_seed = 0;
    auto* swin = sample->add_subcommand(
        "window", "per-color m-subsets; survivors' values fall inside");
    swin->add_option("file", sw_file, "flash-free instance in ect format")->required();
    swin->add_option("--l", sw_l, "flash length bound")->required();
    swin->add_option("--m", sw_m, "window size per color")->required();
    swin->add_option("--trials", sw_trials, "independent trials")->check(CLI::PositiveNumber);
    swin->add_option("--seed", sw_seed, "base seed; trial i uses seed+i");

    // ---- bounds ------------------------------------------------------------
    int bo_l = 0, bo_kmax = 0;
    bool bo_f = false;
    std::string bo_out;
    auto* bounds = app.add_subcommand("bounds", "recursive upper-bound table as CSV");
    bounds->add_option("--l", bo_l, "flash length bound")->required();
    bounds->add_option("--kmax", bo_kmax, "largest rainbow bound row")->required();
    bounds->add_flag("--f-variant", bo_f,
                     "seed the depth-two branch with the transitive threshold");
    bounds->add_option("--output", bo_out, "write here instead of stdout");

    // ---- search -------------------------------------------------------------
    auto* search = app.add_subcommand("search", "exhaustive forcing verification");
    search->require_subcommand(1);

    struct SearchFlags {
      int l = 0, k = 0, n_cap = 0;
      std::uint64_t budget = 0;
      int threads = 1, split_depth = 4;
      std::uint64_t checkpoint_interval = SearchOptions{}.checkpoint_interval;
      std::string checkpoint, output;
    };
    auto add_engine_flags = [&](CLI::App* cmd, SearchFlags& f, bool with_checkpoint) {
      cmd->add_option("--budget", f.budget, "node budget (also: FLASHBOW_BUDGET)");
      cmd->add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);
      cmd->add_option("--split-depth", f.split_depth, "task split depth")
          ->check(CLI::PositiveNumber);
      if (with_checkpoint) {
        cmd->add_option("--checkpoint", f.checkpoint, "resumable checkpoint file");
        cmd->add_option("--checkpoint-interval", f.checkpoint_interval,
                        "nodes between checkpoint writes");
      }
      cmd->add_option("--output", f.output, "write here instead of stdout");
    };
    auto engine_options = [&](const SearchFlags& f) {
      SearchOptions opts;
      opts.node_budget = f.budget > 0 ? f.budget : default_budget;
      opts.threads = f.threads;
      opts.split_depth = f.split_depth;
      opts.checkpoint_path = f.checkpoint;
      opts.checkpoint_interval = f.checkpoint_interval;
      return opts;
    };

    SearchFlags sf;
    auto* search_f = search->add_subcommand(
        "f", "largest transitive size carrying a free coloring");
    search_f->add_option("--l", sf.l, "flash length bound")->required();
    search_f->add_option("--k", sf.k, "rainbow length bound")->required();
    search_f->add_option("--n-cap", sf.n_cap, "stop scanning above this size");
    add_engine_flags(search_f, sf, false);

    SearchFlags st;
    st.n_cap = 7;
    auto* search_t = search->add_subcommand(
        "t", "largest size over all tournaments carrying a free coloring");
    search_t->add_option("--l", st.l, "flash length bound")->required();
    search_t->add_option("--k", st.k, "rainbow length bound")->required();
    search_t->add_option("--n-cap", st.n_cap, "stop scanning above this size");
    add_engine_flags(search_t, st, false);

    SearchFlags sg;
    std::string sg_file;
    int sg_transitive = 0, sg_reversed = 0;
    auto* search_forcing = search->add_subcommand(
        "forcing", "check one tournament against every complete coloring");
    search_forcing->add_option("--file", sg_file, "tournament from an ect instance");
    search_forcing->add_option("--transitive", sg_transitive, "transitive tournament size");
    search_forcing->add_option("--reversed", sg_reversed,
                               "one-edge-reversed tournament size");
    search_forcing->add_option("--l", sg.l, "flash length bound")->required();
    search_forcing->add_option("--k", sg.k, "rainbow length bound")->required();
    add_engine_flags(search_forcing, sg, true);

    SearchFlags sc;
    int sc_f = 0;
    auto* search_scan = search->add_subcommand(
        "scan", "non-transitive classes that force, up to a size cap");
    search_scan->add_option("--l", sc.l, "flash length bound")->required();
    search_scan->add_option("--k", sc.k, "rainbow length bound")->required();
    search_scan->add_option("--n-cap", sc.n_cap, "largest size to scan")->required();
    search_scan->add_option("--f", sc_f,
                            "exact transitive threshold (default: computed)");
    add_engine_flags(search_scan, sc, false);

    // ---- decompose -----------------------------------------------------------
    std::string d_file;
    int d_k = 0, d_r = 0;
    std::uint64_t d_seed = 0;
    auto* decomp = app.add_subcommand(
        "decompose", "pivot decomposition of a rainbow-free instance");
    decomp->add_option("file", d_file, "instance in ect format")->required();
    decomp->add_option("--k", d_k, "rainbow length bound")->required();
    decomp->add_option("--r", d_r, "robustness radius of the pivot")->required();
    decomp->add_option("--seed", d_seed, "nonzero: shuffle the ordering start");

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);  // prints the help text, exits 0
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      app.exit(e);  // prints the diagnostic to stderr
      return kExitUsage;
    }

    if (grid->parsed()) return run_construct_grid(g_l, g_k, g_cap, g_out);
    if (anti->parsed())
      return run_construct_antichain(a_l, a_k, a_n, a_n_opt->count() > 0, a_base,
                                     a_seed, a_out);
    if (rev->parsed())
      return run_construct_reversed(r_l, r_k, r_n, r_n_opt->count() > 0, r_out);
    if (block->parsed())
      return run_construct_block(b_l, b_k, b_size, b_n, b_base, b_seed, b_out);
    if (check->parsed()) return run_check(c_file, c_l, c_k, c_assert);
    if (profile->parsed()) return run_profile(p_file);
    if (sdel->parsed()) return run_sample("deletion", sd_file, sd_l, 0, sd_trials, sd_seed);
    if (swin->parsed())
      return run_sample("window", sw_file, sw_l, sw_m, sw_trials, sw_seed);
    if (bounds->parsed()) return run_bounds(bo_l, bo_kmax, bo_f, bo_out);
    if (search_f->parsed())
      return run_search_threshold('f', sf.l, sf.k, sf.n_cap, engine_options(sf), sf.output);
    if (search_t->parsed())
      return run_search_threshold('t', st.l, st.k, st.n_cap, engine_options(st), st.output);
    if (search_forcing->parsed())
      return run_search_forcing(sg_file, sg_transitive, sg_reversed, sg.l, sg.k,
                                engine_options(sg), sg.output);
    if (search_scan->parsed())
      return run_search_scan(sc.l, sc.k, sc.n_cap, sc_f, engine_options(sc), sc.output);
    if (decomp->parsed()) return run_decompose(d_file, d_k, d_r, d_seed);

    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const StateBudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
