#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sqsq/bouwkamp.hpp"
#include "sqsq/compositions.hpp"
#include "sqsq/enumerate.hpp"
#include "sqsq/geometry.hpp"
#include "sqsq/io.hpp"
#include "sqsq/lemmas.hpp"
#include "sqsq/oracle.hpp"
#include "sqsq/symmetry.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalidInput = 2;
constexpr int kBudgetExhausted = 3;
constexpr int kVerificationFailure = 4;

unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sqsq::parse_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sqsq::parse_error("cannot open file for writing: " + path);
  out << content;
}

void print_summary(const sqsq::EnumerationReport& r) {
  std::printf("n=%u raw=%llu canonical=%llu reflection_pairs=%llu "
              "nodes=%llu time=%.3fs\n",
              r.n, (unsigned long long)r.raw_count,
              (unsigned long long)r.canonical_count,
              (unsigned long long)r.reflection_pair_count,
              (unsigned long long)r.nodes_expanded, r.wall_time_s);
}

int cmd_enumerate(unsigned min_n, unsigned max_n, bool no_prune,
                  unsigned workers, const std::vector<std::string>& emit,
                  bool count_only, std::uint64_t node_budget) {
  sqsq::SearchOptions opts;
  opts.workers = workers;
  if (no_prune) {
    opts.prune_border_min = false;
    opts.prune_nontrivial_incremental = false;
  }
  if (count_only) opts.collect = sqsq::CollectMode::count_only;
  if (node_budget) opts.node_budget = node_budget;

  std::string mode = emit.empty() ? "summary" : emit[0];
  if (mode == "svg-dir") {
    if (emit.size() < 2)
      throw CLI::ValidationError("--emit svg-dir needs a directory path");
  } else if (emit.size() > 1) {
    throw CLI::ValidationError("--emit " + mode + " takes no path");
  }
  if (mode != "summary" && count_only)
    throw CLI::ValidationError("--count-only conflicts with --emit");

  const std::vector<sqsq::EnumerationReport> reports =
      sqsq::enumerate_range(min_n, max_n, opts);

  if (mode == "summary") {
    for (const auto& r : reports) print_summary(r);
  } else if (mode == "json") {
    std::fputs(sqsq::emit_json_reports(reports).c_str(), stdout);
  } else if (mode == "text") {
    for (const auto& r : reports)
      for (const auto& d : r.representatives) {
        sqsq::DissectionDocument doc{d, {std::nullopt, true}};
        std::fputs(sqsq::emit_text(doc).c_str(), stdout);
        std::fputs("\n", stdout);
      }
  } else if (mode == "bouwkamp") {
    for (const auto& r : reports)
      for (const auto& d : r.representatives)
        std::printf("n=%u %s\n", r.n,
                    sqsq::to_string(sqsq::to_bouwkamp(d)).c_str());
  } else if (mode == "svg-dir") {
    std::filesystem::create_directories(emit[1]);
    for (const auto& r : reports) {
      unsigned i = 0;
      for (const auto& d : r.representatives) {
        const auto path = std::filesystem::path(emit[1]) /
                          ("square-" + std::to_string(r.n) + "-" +
                           std::to_string(++i) + ".svg");
        write_file(path.string(), sqsq::to_svg(d));
        std::printf("wrote %s\n", path.string().c_str());
      }
    }
  } else {
    throw CLI::ValidationError("unknown --emit mode: " + mode);
  }
  return kOk;
}

int cmd_classify(const std::string& file) {
  const sqsq::DissectionDocument doc =
      sqsq::parse_text_checked(read_file(file));
  const sqsq::Classification c = sqsq::classify(doc.dissection);
  std::printf("order=%u\n", c.order);
  std::printf("perfect=%s\n", c.perfect ? "yes" : "no");
  std::printf("simple=%s\n", c.simple ? "yes" : "no");
  std::printf("trivial=%s\n", c.trivial ? "yes" : "no");
  std::printf("border_touch=%u\n", c.border_touch_count);
  return kOk;
}

int cmd_compositions(unsigned n, unsigned min_parts, bool apply_filters) {
  std::vector<sqsq::BorderComposition> list =
      sqsq::border_compositions(n, min_parts);
  if (apply_filters)
    list = sqsq::filter_compositions(list, sqsq::all_composition_filters());
  for (const auto& c : list) std::printf("%s\n", sqsq::to_string(c).c_str());
  return kOk;
}

int cmd_verify_lemma(const std::string& id, unsigned max_n, unsigned workers,
                     bool verbose) {
  sqsq::SearchCache cache;
  cache.workers = workers;
  const sqsq::LemmaReport r = sqsq::verify_lemma(id, max_n, &cache);
  std::printf("%s (max_n=%u): %s — %s\n", r.id.c_str(), r.max_n,
              r.pass ? "PASS" : "FAIL", r.claim.c_str());
  if (verbose)
    for (const auto& line : r.checks) std::printf("  %s\n", line.c_str());
  for (const auto& w : r.witnesses)
    std::printf("  witness: %s\n", w.c_str());
  return r.pass ? kOk : kVerificationFailure;
}

int cmd_render(const std::string& file, const std::string& out,
               unsigned cell_px) {
  const sqsq::DissectionDocument doc =
      sqsq::parse_text_checked(read_file(file));
  write_file(out, sqsq::to_svg(doc.dissection, cell_px));
  std::printf("wrote %s\n", out.c_str());
  return kOk;
}

int cmd_oracle(unsigned n, bool include_trivial, bool compare) {
  sqsq::NaiveOptions nopts;
  nopts.include_trivial = include_trivial;
  const sqsq::EnumerationReport naive = sqsq::naive_enumerate(n, nopts);
  std::printf("oracle    ");
  print_summary(naive);
  if (!compare) return kOk;

  sqsq::SearchOptions opts;
  opts.include_trivial = include_trivial;
  const sqsq::EnumerationReport fast = sqsq::enumerate(n, opts);
  std::printf("enumerate ");
  print_summary(fast);

  bool same = naive.raw_count == fast.raw_count &&
              naive.canonical_count == fast.canonical_count &&
              naive.reflection_pair_count == fast.reflection_pair_count &&
              naive.labeled_digest == fast.labeled_digest &&
              naive.representatives.size() == fast.representatives.size();
  if (same)
    for (std::size_t i = 0; i < naive.representatives.size(); ++i)
      if (sqsq::canonical_key(naive.representatives[i]).bytes !=
          sqsq::canonical_key(fast.representatives[i]).bytes) {
        same = false;
        break;
      }
  std::printf("compare: %s\n", same ? "MATCH" : "MISMATCH");
  return same ? kOk : kVerificationFailure;
}

int cmd_theorem(unsigned max_n, unsigned workers) {
  sqsq::SearchOptions opts;
  opts.workers = workers;
  std::printf("  n  canonical  expected        raw  reflection_pairs   time_s\n");
  bool ok = true;
  std::vector<sqsq::EnumerationReport> found;
  for (unsigned n = 1; n <= max_n; ++n) {
    const sqsq::EnumerationReport r = sqsq::enumerate(n, opts);
    const unsigned expected = (n == 11 || n == 16) ? 1 : 0;
    const bool row_ok = r.canonical_count == expected;
    ok = ok && row_ok;
    std::printf("%3u  %9llu  %8u  %9llu  %16llu  %7.2f%s\n", n,
                (unsigned long long)r.canonical_count, expected,
                (unsigned long long)r.raw_count,
                (unsigned long long)r.reflection_pair_count, r.wall_time_s,
                row_ok ? "" : "  <- MISMATCH");
    if (r.canonical_count > 0) found.push_back(r);
  }
  for (const auto& r : found)
    for (const auto& d : r.representatives)
      std::printf("n=%u %s\n", r.n, sqsq::to_string(sqsq::to_bouwkamp(d)).c_str());
  std::printf("theorem: %s\n", ok ? "REPRODUCED" : "MISMATCH");
  return ok ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration of nontrivial squared squares"};
  app.require_subcommand(1);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "search a range of sizes");
  unsigned min_n = 1, max_n = 17, workers = default_workers();
  bool no_prune = false, count_only = false;
  std::uint64_t node_budget = 0;
  std::vector<std::string> emit;
  enumerate->add_option("--min", min_n, "smallest size")->capture_default_str();
  enumerate->add_option("--max", max_n, "largest size")->capture_default_str();
  enumerate->add_flag("--no-prune", no_prune, "disable search pruning");
  enumerate->add_option("--workers", workers, "parallel workers")
      ->capture_default_str();
  enumerate->add_option("--emit", emit,
                        "output: json | text | bouwkamp | svg-dir PATH")
      ->expected(1, 2);
  enumerate->add_flag("--count-only", count_only, "skip representatives");
  enumerate->add_option("--node-budget", node_budget,
                        "abort after this many search nodes");

  // classify
  auto* classify = app.add_subcommand("classify", "classify a dissection file");
  std::string classify_file;
  classify->add_option("file", classify_file, "dissection text file")
      ->required();

  // compositions
  auto* compositions =
      app.add_subcommand("compositions", "list admissible border compositions");
  unsigned comp_n = 0, comp_min_parts = 1;
  bool apply_filters = false;
  compositions->add_option("--n", comp_n, "border length")->required();
  compositions->add_option("--min-parts", comp_min_parts, "minimum elements")
      ->capture_default_str();
  compositions->add_flag("--apply-filters", apply_filters,
                         "apply every composition filter");

  // verify-lemma
  auto* verify = app.add_subcommand("verify-lemma", "machine-check one lemma");
  std::string lemma_id;
  unsigned lemma_max_n = 17, lemma_workers = default_workers();
  bool lemma_verbose = false;
  verify->add_option("id", lemma_id, "registry id (e.g. L3)")->required();
  verify->add_option("--max-n", lemma_max_n, "check up to this size")
      ->capture_default_str();
  verify->add_option("--workers", lemma_workers, "parallel workers")
      ->capture_default_str();
  verify->add_flag("--verbose", lemma_verbose, "print every check");

  // render
  auto* render = app.add_subcommand("render", "render a dissection to SVG");
  std::string render_file, render_out;
  unsigned cell_px = 32;
  render->add_option("file", render_file, "dissection text file")->required();
  render->add_option("--out", render_out, "output SVG path")->required();
  render->add_option("--cell-px", cell_px, "pixels per cell")
      ->capture_default_str();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "run the naive reference engine");
  unsigned oracle_n = 0;
  bool oracle_trivial = false, oracle_compare = false;
  oracle->add_option("--n", oracle_n, "size (<= 12)")->required();
  oracle->add_flag("--include-trivial", oracle_trivial,
                   "count trivial dissections too");
  oracle->add_flag("--compare", oracle_compare,
                   "also run the fast engine and compare");

  // theorem
  auto* theorem =
      app.add_subcommand("theorem", "reproduce the full enumeration table");
  unsigned theorem_max_n = 17, theorem_workers = default_workers();
  theorem->add_option("--max-n", theorem_max_n, "top of the sweep")
      ->capture_default_str();
  theorem->add_option("--workers", theorem_workers, "parallel workers")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    if (enumerate->parsed())
      return cmd_enumerate(min_n, max_n, no_prune, workers, emit, count_only,
                           node_budget);
    if (classify->parsed()) return cmd_classify(classify_file);
    if (compositions->parsed())
      return cmd_compositions(comp_n, comp_min_parts, apply_filters);
    if (verify->parsed())
      return cmd_verify_lemma(lemma_id, lemma_max_n, lemma_workers,
                              lemma_verbose);
    if (render->parsed()) return cmd_render(render_file, render_out, cell_px);
    if (oracle->parsed())
      return cmd_oracle(oracle_n, oracle_trivial, oracle_compare);
    if (theorem->parsed()) return cmd_theorem(theorem_max_n, theorem_workers);
    return kInvalidInput;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  } catch (const sqsq::budget_exceeded& e) {
    std::fprintf(stderr, "budget exhausted: %s\n", e.what());
    return kBudgetExhausted;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInvalidInput;
  }
}
