#include "sqsq/lemmas.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqsq {

namespace {

std::string num(unsigned long long v) { return std::to_string(v); }

void log_check(LemmaReport& r, std::string line) {
  r.checks.push_back(std::move(line));
}

void fail(LemmaReport& r, std::string witness) {
  r.pass = false;
  r.witnesses.push_back(std::move(witness));
}

SearchOptions cached_opts(const SearchCache& cache) {
  SearchOptions o;
  o.workers = cache.workers;
  return o;
}

// ---- predicate entries: scan every solution found up to max_n ----

void check_predicate(LemmaReport& r, unsigned max_n, SearchCache& cache,
                     bool (*pred)(const Dissection&),
                     const char* violation) {
  for (unsigned n = 2; n <= max_n; ++n) {
    const EnumerationReport& rep = cache.full(n);
    for (const Dissection& d : rep.representatives) {
      if (!pred(d)) fail(r, "n=" + num(n) + ": " + violation + " in " +
                                to_compact_string(d));
    }
    log_check(r, "n=" + num(n) + ": " + num(rep.representatives.size()) +
                     " solution(s) scanned");
  }
}

bool border_min3(const Dissection& d) {
  for (const auto& e : border_elements(d))
    if (e.s < 3) return false;
  return true;
}

bool corner_min4(const Dissection& d) {
  for (const auto& e : corner_elements(d))
    if (e.s < 4) return false;
  return true;
}

bool six_on_border(const Dissection& d) {
  return border_elements(d).size() >= 6;
}

// ---- count entries: the sweep finds nothing (or exactly one thing) ----

void check_absent(LemmaReport& r, unsigned target, unsigned max_n,
                  SearchCache& cache) {
  if (target > max_n) return;
  const EnumerationReport& rep = cache.full(target);
  log_check(r, "n=" + num(target) + ": " + num(rep.canonical_count) +
                   " class(es) found");
  if (rep.canonical_count != 0)
    fail(r, "n=" + num(target) + ": expected no solutions, found " +
                num(rep.canonical_count) + " class(es)");
}

void check_absent_range(LemmaReport& r, unsigned lo, unsigned hi,
                        unsigned max_n, SearchCache& cache) {
  for (unsigned n = lo; n <= std::min(hi, max_n); ++n)
    check_absent(r, n, max_n, cache);
}

void check_unique(LemmaReport& r, unsigned target, unsigned max_n,
                  SearchCache& cache) {
  if (target > max_n) return;
  const EnumerationReport& rep = cache.full(target);
  log_check(r, "n=" + num(target) + ": " + num(rep.canonical_count) +
                   " class(es) found");
  if (rep.canonical_count != 1)
    fail(r, "n=" + num(target) + ": expected exactly one class, found " +
                num(rep.canonical_count));
}

// ---- composition entries: every border matching the forbidden pattern is
// pinned to a border and the constrained search must come back empty ----

void check_filter(LemmaReport& r, CompositionFilter f, unsigned max_n,
                  SearchCache& cache) {
  SearchOptions opts = cached_opts(cache);
  opts.collect = CollectMode::count_only;
  opts.skip_canonical = true;
  for (unsigned n = 2; n <= max_n; ++n) {
    for (const BorderComposition& c : border_compositions(n, 2)) {
      if (composition_passes(c, f)) continue;
      if (!composition_passes(c, CompositionFilter::reversal_dedupe))
        continue;  // its reversal is searched instead
      EnumerationReport rep = enumerate_with_border(n, c, opts);
      log_check(r, "n=" + num(n) + " border " + to_string(c) + ": " +
                       num(rep.raw_count) + " completion(s)");
      if (rep.raw_count != 0)
        fail(r, "n=" + num(n) + ": border " + to_string(c) +
                    " admits a completion");
    }
  }
}

// Corner 5 flanked along both borders by a 3 and then a 4.  The pattern is
// pinned to the bottom-left corner; all other corners are mirror images.
void check_corner_pattern(LemmaReport& r, unsigned max_n, SearchCache& cache) {
  SearchOptions opts = cached_opts(cache);
  opts.collect = CollectMode::count_only;
  opts.skip_canonical = true;
  for (unsigned n = 12; n <= max_n; ++n) {
    const std::vector<SquareElement> pattern = {
        {0, 0, 5}, {5, 0, 3}, {8, 0, 4}, {0, 5, 3}, {0, 8, 4}};
    EnumerationReport rep = enumerate_with_preplaced(n, pattern, opts);
    log_check(r, "n=" + num(n) + " corner pattern 5/3+4/3+4: " +
                     num(rep.raw_count) + " completion(s)");
    if (rep.raw_count != 0)
      fail(r, "n=" + num(n) + ": corner pattern admits a completion");
  }
}

// ---- size-16 border structure ----

void check_16_borders(LemmaReport& r, unsigned max_n, SearchCache& cache,
                      bool exactly_four) {
  if (max_n < 16) return;
  const EnumerationReport& rep = cache.full(16);
  for (const Dissection& d : rep.representatives) {
    for (Side side : {Side::bottom, Side::right, Side::top, Side::left}) {
      const BorderComposition comp = border_sizes(d, side);
      log_check(r, "border " + to_string(comp));
      if (!exactly_four && comp.size() == 3)
        fail(r, "a 16-border reads " + to_string(comp));
      if (exactly_four) {
        BorderComposition fwd = comp, rev(comp.rbegin(), comp.rend());
        const BorderComposition a = {4, 3, 4, 5}, b = {4, 3, 5, 4};
        if (comp.size() != 4 || (fwd != a && fwd != b && rev != a && rev != b))
          fail(r, "a 16-border reads " + to_string(comp));
      }
    }
  }
  log_check(r, num(rep.representatives.size()) + " solution(s) inspected");
}

}  // namespace

const EnumerationReport& SearchCache::full(unsigned n) {
  auto it = by_n.find(n);
  if (it != by_n.end()) return it->second;
  SearchOptions opts;
  opts.workers = workers;
  return by_n.emplace(n, enumerate(n, opts)).first->second;
}

const std::vector<LemmaInfo>& lemma_registry() {
  static const std::vector<LemmaInfo> reg = {
      {"L1", "every border element has size at least 3"},
      {"L2", "every corner element has size at least 4"},
      {"L3", "at least six elements touch the borders"},
      {"L4", "no solution has size below 11"},
      {"L5", "the size-11 solution is unique up to symmetry"},
      {"L6", "no solution has size 12"},
      {"L7", "no border contains x+3+y with x >= 5 and y >= 5"},
      {"L8", "no solution has size 13"},
      {"L9", "a corner 4 never borders an element of size 6 or more"},
      {"L10", "no solution has size 14"},
      {"L11", "no border reads 4+3+x with x >= 6"},
      {"L12", "no solution has size 15"},
      {"L13", "no border reads x+4+y with x >= 6 and y >= 6"},
      {"L_no43535",
       "a corner 5 flanked on both borders by a 3 and then a 4 never extends "
       "to a solution"},
      {"L16_three", "no border of a size-16 solution has three elements"},
      {"L16_four", "every border of a size-16 solution has four elements"},
  };
  return reg;
}

bool is_known_lemma(const std::string& id) {
  for (const auto& info : lemma_registry())
    if (info.id == id) return true;
  return false;
}

LemmaReport verify_lemma(const std::string& id, unsigned max_n,
                         SearchCache* cache) {
  const auto& reg = lemma_registry();
  const auto it = std::find_if(reg.begin(), reg.end(),
                               [&](const LemmaInfo& i) { return i.id == id; });
  if (it == reg.end()) throw std::invalid_argument("unknown lemma id: " + id);
  if (max_n > 64) throw std::invalid_argument("max_n out of range");

  SearchCache local;
  SearchCache& c = cache ? *cache : local;

  LemmaReport r;
  r.id = it->id;
  r.claim = it->claim;
  r.max_n = max_n;
  r.pass = true;

  if (id == "L1") check_predicate(r, max_n, c, border_min3, "border element below 3");
  else if (id == "L2") check_predicate(r, max_n, c, corner_min4, "corner element below 4");
  else if (id == "L3") check_predicate(r, max_n, c, six_on_border, "fewer than six border elements");
  else if (id == "L4") check_absent_range(r, 2, 10, max_n, c);
  else if (id == "L5") check_unique(r, 11, max_n, c);
  else if (id == "L6") check_absent(r, 12, max_n, c);
  else if (id == "L7") check_filter(r, CompositionFilter::x3y, max_n, c);
  else if (id == "L8") check_absent(r, 13, max_n, c);
  else if (id == "L9") check_filter(r, CompositionFilter::corner4_neighbor6, max_n, c);
  else if (id == "L10") check_absent(r, 14, max_n, c);
  else if (id == "L11") check_filter(r, CompositionFilter::fourthree_x, max_n, c);
  else if (id == "L12") check_absent(r, 15, max_n, c);
  else if (id == "L13") check_filter(r, CompositionFilter::x4y, max_n, c);
  else if (id == "L_no43535") check_corner_pattern(r, max_n, c);
  else if (id == "L16_three") check_16_borders(r, max_n, c, false);
  else if (id == "L16_four") check_16_borders(r, max_n, c, true);

  return r;
}

}  // namespace sqsq
