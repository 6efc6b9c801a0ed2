#include "sqsq/oracle.hpp"

#include <chrono>
#include <map>
#include <stdexcept>
#include <vector>

#include "sqsq/symmetry.hpp"

namespace sqsq {

namespace {

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Deliberately artless reference enumerator: an owner grid instead of
// bitmasks, column-major fill order (bottom-most cell of the leftmost
// unfilled column) instead of row scanline, O(s^2) cell loops everywhere.
// The only concession to tractability: when trivial dissections are
// excluded, a placement that shares a full edge with an equal-size earlier
// element is rejected immediately rather than at the leaf — any completion
// of such a prefix would keep that pair, so the leaf filter would reject
// them all anyway.
class NaiveSearch {
 public:
  NaiveSearch(unsigned n, const NaiveOptions& opts)
      : n_(n), opts_(opts), owner_(std::size_t(n) * n, -1) {}

  EnumerationReport run() {
    const auto t0 = std::chrono::steady_clock::now();
    step();
    EnumerationReport r;
    r.n = n_;
    r.raw_count = raw_;
    r.nodes_expanded = nodes_;
    r.labeled_digest = digest_;
    if (!opts_.skip_canonical) {
      r.canonical_count = classes_.size();
      for (auto& [key, info] : classes_) {
        r.reflection_pair_count += info.second;
        r.representatives.push_back(std::move(info.first));
      }
    }
    r.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return r;
  }

 private:
  bool find_cell(unsigned& x, unsigned& y) const {
    for (unsigned xx = 0; xx < n_; ++xx)
      for (unsigned yy = 0; yy < n_; ++yy)
        if (owner_[idx(xx, yy)] < 0) {
          x = xx;
          y = yy;
          return true;
        }
    return false;
  }

  bool fits(unsigned x, unsigned y, unsigned s) const {
    if (x + s > n_ || y + s > n_) return false;
    for (unsigned yy = y; yy < y + s; ++yy)
      for (unsigned xx = x; xx < x + s; ++xx)
        if (owner_[idx(xx, yy)] >= 0) return false;
    return true;
  }

  bool touches_equal_neighbor(const SquareElement& e) const {
    for (const auto& other : placed_)
      if (shares_full_edge(e, other)) return true;
    return false;
  }

  void step() {
    check_budget();
    unsigned x, y;
    if (!find_cell(x, y)) {
      finish();
      return;
    }
    for (unsigned s = 1; fits(x, y, s); ++s) {
      SquareElement e{x, y, s};
      if (!opts_.include_trivial && touches_equal_neighbor(e)) continue;
      for (unsigned yy = y; yy < y + s; ++yy)
        for (unsigned xx = x; xx < x + s; ++xx)
          owner_[idx(xx, yy)] = int(placed_.size());
      placed_.push_back(e);
      step();
      placed_.pop_back();
      for (unsigned yy = y; yy < y + s; ++yy)
        for (unsigned xx = x; xx < x + s; ++xx) owner_[idx(xx, yy)] = -1;
    }
  }

  void finish() {
    if (placed_.size() < 2) return;
    Dissection d;
    d.n = n_;
    d.elements = placed_;
    normalize_scanline(d);
    if (!opts_.include_trivial && !is_nontrivial(d)) return;
    ++raw_;
    digest_ += fnv1a(scanline_key(d).bytes);
    if (opts_.skip_canonical) return;
    CanonicalKey key = canonical_key(d);
    if (!classes_.count(key.bytes))
      classes_.emplace(key.bytes,
                       std::pair{canonical_form(d), rotation_class_count(d)});
  }

  void check_budget() {
    ++nodes_;
    if (opts_.node_budget && nodes_ > *opts_.node_budget)
      throw budget_exceeded("node budget exhausted");
    if (opts_.deadline && (nodes_ & 0xfff) == 0 &&
        std::chrono::steady_clock::now() > *opts_.deadline)
      throw budget_exceeded("deadline exceeded");
  }

  std::size_t idx(unsigned x, unsigned y) const {
    return std::size_t(y) * n_ + x;
  }

  unsigned n_;
  const NaiveOptions& opts_;
  std::vector<int> owner_;
  std::vector<SquareElement> placed_;
  std::uint64_t raw_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t digest_ = 0;
  std::map<std::string, std::pair<Dissection, unsigned>> classes_;
};

}  // namespace

EnumerationReport naive_enumerate(unsigned n, const NaiveOptions& opts) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > 12)
    throw std::invalid_argument(
        "naive reference enumerator is capped at n <= 12");
  return NaiveSearch(n, opts).run();
}

EnumerationReport naive_enumerate(unsigned n, bool include_trivial) {
  NaiveOptions opts;
  opts.include_trivial = include_trivial;
  return naive_enumerate(n, opts);
}

}  // namespace sqsq
