#include "sqsq/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <map>
#include <thread>

#include "sqsq/symmetry.hpp"

namespace sqsq {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = kFnvOffset;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

struct ClassInfo {
  Dissection canon;
  unsigned rotation_classes = 0;
};

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::optional<std::uint64_t> budget;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// One independent search worker.  Occupancy is one 64-bit word per row
// (bit x = cell x occupied), which is why n is capped at 64.  corner_[y][x]
// remembers the size of the element whose bottom-left corner sits at (x, y);
// that is all the incremental nontriviality check needs, because scanline
// filling guarantees an equal-size full-edge partner of a fresh placement can
// only lie directly left of or below it (pre-placed squares are the one
// exception, which the final pairwise check covers).
class Searcher {
 public:
  Searcher(unsigned n, const std::vector<SquareElement>& pre,
           const SearchOptions& opts, Shared& shared)
      : n_(n), opts_(opts), shared_(shared), pre_(pre) {
    for (const auto& e : pre_) {
      const std::uint64_t mask = width_mask(e.s) << e.x;
      for (unsigned i = 0; i < e.s; ++i) rows_[e.y + i] |= mask;
      corner_[e.y][e.x] = std::uint8_t(e.s);
    }
    prune_border_ = opts.prune_border_min && !opts.include_trivial;
    prune_pairs_ = opts.prune_nontrivial_incremental && !opts.include_trivial;
    accel_ = opts.corner_symmetry_accel && pre_.empty() && !opts.include_trivial;
  }

  // Feasible sizes at the first free cell (fit only; prunes run at placement).
  std::vector<unsigned> root_sizes() {
    unsigned x, y;
    if (!first_free(0, x, y)) return {};
    std::vector<unsigned> out;
    std::uint64_t acc = rows_[y];
    const std::uint64_t guard = high_guard(x);
    for (unsigned s = 1; s <= n_ - y; ++s) {
      if (s >= 2) acc |= rows_[y + s - 1];
      const unsigned w = unsigned(std::countr_zero((acc >> x) | guard));
      if (w < s) break;
      out.push_back(s);
    }
    return out;
  }

  void run(const std::vector<unsigned>& root) {
    unsigned x, y;
    if (!first_free(0, x, y)) {
      complete();
      return;
    }
    for (unsigned s : root) try_place(x, y, s);
    flush_nodes();
  }

  std::uint64_t raw = 0;
  std::uint64_t digest = 0;
  std::map<std::string, ClassInfo> classes;
  std::vector<Dissection> labeled;
  std::uint64_t local_nodes = 0;

 private:
  static std::uint64_t width_mask(unsigned s) {
    return s >= 64 ? ~0ULL : ((1ULL << s) - 1);
  }

  std::uint64_t high_guard(unsigned x) const {
    const unsigned span = n_ - x;
    return span >= 64 ? 0ULL : (~0ULL << span);
  }

  bool first_free(unsigned y_from, unsigned& x, unsigned& y) const {
    for (unsigned yy = y_from; yy < n_; ++yy) {
      const unsigned xx = unsigned(std::countr_one(rows_[yy]));
      if (xx < n_) {
        x = xx;
        y = yy;
        return true;
      }
    }
    return false;
  }

  bool accept(unsigned x, unsigned y, unsigned s) const {
    if (prune_border_) {
      const bool left = x == 0, right = x + s == n_;
      const bool bottom = y == 0, top = y + s == n_;
      if ((left || right || bottom || top) && s < 3) return false;
      if (((left && bottom) || (right && bottom) || (left && top) ||
           (right && top)) &&
          s < 4)
        return false;
    }
    if (prune_pairs_) {
      if (x >= s && corner_[y][x - s] == s) return false;   // left neighbor
      if (y >= s && corner_[y - s][x] == s) return false;   // below neighbor
    }
    if (accel_ && !placed_.empty()) {
      const bool far_corner = (y == 0 && x + s == n_) ||
                              (x == 0 && y + s == n_) ||
                              (x + s == n_ && y + s == n_);
      if (far_corner && s > placed_.front().s) return false;
    }
    return true;
  }

  void try_place(unsigned x, unsigned y, unsigned s) {
    if (!accept(x, y, s)) return;
    const std::uint64_t mask = width_mask(s) << x;
    for (unsigned i = 0; i < s; ++i) rows_[y + i] |= mask;
    corner_[y][x] = std::uint8_t(s);
    placed_.push_back({x, y, s});
    count_node();
    search(y);
    placed_.pop_back();
    corner_[y][x] = 0;
    for (unsigned i = 0; i < s; ++i) rows_[y + i] &= ~mask;
  }

  void search(unsigned y_from) {
    unsigned x, y;
    if (!first_free(y_from, x, y)) {
      complete();
      return;
    }
    std::uint64_t acc = rows_[y];
    const std::uint64_t guard = high_guard(x);
    for (unsigned s = 1; s <= n_ - y; ++s) {
      if (s >= 2) acc |= rows_[y + s - 1];
      const unsigned w = unsigned(std::countr_zero((acc >> x) | guard));
      if (w < s) break;  // taller squares only get narrower
      try_place(x, y, s);
    }
  }

  void complete() {
    Dissection d;
    d.n = n_;
    if (pre_.empty()) {
      d.elements = placed_;  // already in scanline order
    } else {
      d.elements.reserve(pre_.size() + placed_.size());
      d.elements.insert(d.elements.end(), pre_.begin(), pre_.end());
      d.elements.insert(d.elements.end(), placed_.begin(), placed_.end());
      normalize_scanline(d);
    }
    if (d.elements.size() < 2) return;
    if (!opts_.include_trivial && !is_nontrivial(d)) return;
    ++raw;
    digest += fnv1a(scanline_key(d).bytes);
    if (!opts_.skip_canonical) {
      CanonicalKey key = canonical_key(d);
      auto it = classes.find(key.bytes);
      if (it == classes.end()) {
        ClassInfo info;
        info.rotation_classes = rotation_class_count(d);
        if (opts_.collect != CollectMode::count_only)
          info.canon = canonical_form(d);
        classes.emplace(std::move(key.bytes), std::move(info));
      }
    }
    if (opts_.collect == CollectMode::all_labeled) labeled.push_back(d);
  }

  void count_node() {
    ++pending_;
    if ((++local_nodes & 0x3ff) == 0) flush_nodes();
  }

  void flush_nodes() {
    if (shared_.stop.load(std::memory_order_relaxed))
      throw budget_exceeded("search aborted");
    if (!shared_.budget && !shared_.deadline) return;
    const std::uint64_t total =
        shared_.nodes.fetch_add(pending_, std::memory_order_relaxed) + pending_;
    pending_ = 0;
    if (shared_.budget && total > *shared_.budget) {
      shared_.stop.store(true, std::memory_order_relaxed);
      throw budget_exceeded("node budget exhausted");
    }
    if (shared_.deadline &&
        std::chrono::steady_clock::now() > *shared_.deadline) {
      shared_.stop.store(true, std::memory_order_relaxed);
      throw budget_exceeded("deadline exceeded");
    }
  }

  unsigned n_;
  const SearchOptions& opts_;
  Shared& shared_;
  std::vector<SquareElement> pre_;
  std::array<std::uint64_t, 64> rows_{};
  std::uint8_t corner_[64][64] = {};
  std::vector<SquareElement> placed_;
  bool prune_border_ = false;
  bool prune_pairs_ = false;
  bool accel_ = false;
  std::uint64_t pending_ = 0;  // nodes not yet flushed to the shared counter
};

void validate_preplaced(unsigned n, const std::vector<SquareElement>& pre) {
  std::vector<std::uint8_t> cells(std::size_t(n) * n, 0);
  for (const auto& e : pre) {
    if (e.s < 1) throw std::invalid_argument("pre-placed side must be >= 1");
    if (e.x + e.s > n || e.y + e.s > n)
      throw std::invalid_argument("pre-placed square out of bounds");
    for (unsigned yy = e.y; yy < e.y + e.s; ++yy)
      for (unsigned xx = e.x; xx < e.x + e.s; ++xx) {
        std::uint8_t& c = cells[std::size_t(yy) * n + xx];
        if (c) throw std::invalid_argument("pre-placed squares overlap");
        c = 1;
      }
  }
}

std::vector<SquareElement> border_preplacement(unsigned n,
                                               const FixedBorder& fb) {
  unsigned sum = 0;
  for (unsigned p : fb.parts) {
    if (p < 1) throw std::invalid_argument("border parts must be >= 1");
    sum += p;
  }
  if (sum != n)
    throw std::invalid_argument("border composition does not sum to n");
  std::vector<SquareElement> pre;
  unsigned at = 0;
  for (unsigned p : fb.parts) {
    switch (fb.side) {
      case Side::bottom: pre.push_back({at, 0, p}); break;
      case Side::top: pre.push_back({at, n - p, p}); break;
      case Side::left: pre.push_back({0, at, p}); break;
      case Side::right: pre.push_back({n - p, at, p}); break;
    }
    at += p;
  }
  return pre;
}

EnumerationReport run_search(unsigned n, const std::vector<SquareElement>& pre,
                             const SearchOptions& opts) {
  if (n < 1 || n > 64)
    throw std::invalid_argument("n must be in 1..64 (one row per word)");
  validate_preplaced(n, pre);
  const auto t0 = std::chrono::steady_clock::now();

  Shared shared;
  shared.budget = opts.node_budget;
  shared.deadline = opts.deadline;

  Searcher probe(n, pre, opts, shared);
  const std::vector<unsigned> branches = probe.root_sizes();
  const unsigned want = std::max(1u, opts.workers);
  const unsigned k =
      std::min<unsigned>(want, std::max<std::size_t>(1, branches.size()));

  std::vector<Searcher> workers;
  workers.reserve(k);
  for (unsigned w = 0; w < k; ++w) workers.emplace_back(n, pre, opts, shared);

  if (k <= 1) {
    workers[0].run(branches);
  } else {
    std::vector<std::vector<unsigned>> parts(k);
    for (std::size_t i = 0; i < branches.size(); ++i)
      parts[i % k].push_back(branches[i]);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(k);
    for (unsigned w = 0; w < k; ++w)
      threads.emplace_back([&, w] {
        try {
          workers[w].run(parts[w]);
        } catch (...) {
          errors[w] = std::current_exception();
          shared.stop.store(true, std::memory_order_relaxed);
        }
      });
    for (auto& t : threads) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  EnumerationReport r;
  r.n = n;
  std::map<std::string, ClassInfo> classes;
  for (auto& w : workers) {
    r.raw_count += w.raw;
    r.nodes_expanded += w.local_nodes;
    r.labeled_digest += w.digest;
    for (auto& [key, info] : w.classes) classes.emplace(key, std::move(info));
    if (opts.collect == CollectMode::all_labeled)
      r.labeled.insert(r.labeled.end(), w.labeled.begin(), w.labeled.end());
  }
  if (!opts.skip_canonical) {
    r.canonical_count = classes.size();
    for (auto& [key, info] : classes) {
      r.reflection_pair_count += info.rotation_classes;
      if (opts.collect != CollectMode::count_only)
        r.representatives.push_back(std::move(info.canon));
    }
  }
  if (opts.collect == CollectMode::all_labeled)
    std::sort(r.labeled.begin(), r.labeled.end(),
              [](const Dissection& a, const Dissection& b) {
                return scanline_key(a).bytes < scanline_key(b).bytes;
              });
  r.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

}  // namespace

EnumerationReport enumerate(unsigned n, const SearchOptions& opts) {
  std::vector<SquareElement> pre;
  if (opts.fixed_border) pre = border_preplacement(n, *opts.fixed_border);
  return run_search(n, pre, opts);
}

std::vector<EnumerationReport> enumerate_range(unsigned lo, unsigned hi,
                                               const SearchOptions& opts) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("bad range");
  std::vector<EnumerationReport> out;
  out.reserve(hi - lo + 1);
  for (unsigned n = lo; n <= hi; ++n) out.push_back(enumerate(n, opts));
  return out;
}

EnumerationReport enumerate_with_border(unsigned n,
                                        const BorderComposition& comp,
                                        SearchOptions opts) {
  // The scanline fill starts at the bottom row, so a top-border constraint
  // would only bite at the very end of every branch.  Pinning the same
  // composition to the bottom border explores the vertically mirrored
  // tilings instead — a bijection that preserves counts and canonical
  // classes — and the labeled results are mirrored back afterwards.
  opts.fixed_border = FixedBorder{Side::bottom, comp};
  EnumerationReport r = enumerate(n, opts);
  if (!r.labeled.empty()) {
    r.labeled_digest = 0;
    for (auto& d : r.labeled) {
      d = apply(d, SymmetryOp::mv);
      r.labeled_digest += fnv1a(scanline_key(d).bytes);
    }
    std::sort(r.labeled.begin(), r.labeled.end(),
              [](const Dissection& a, const Dissection& b) {
                return scanline_key(a).bytes < scanline_key(b).bytes;
              });
  }
  return r;
}

EnumerationReport enumerate_with_preplaced(unsigned n,
                                           std::vector<SquareElement> preplaced,
                                           const SearchOptions& opts) {
  return run_search(n, preplaced, opts);
}

}  // namespace sqsq
