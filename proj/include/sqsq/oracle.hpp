#pragma once
// Deliberately simple brute-force enumerator used only to cross-validate the
// main search on small sizes.  It scans cells column by column (leftmost
// column first, bottom cell first) -- the opposite of the main search's
// row-major order -- and shares no placement or adjacency code with it.

#include <chrono>
#include <cstdint>
#include <optional>

#include "sqsq/enumerate.hpp"

namespace sqsq {

struct NaiveOptions {
  bool include_trivial = false;
  bool skip_canonical = false;
  std::optional<std::uint64_t> node_budget;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Hard cap n <= 12: beyond that the naive search is out of budget.  Throws
// std::invalid_argument above the cap and budget_exceeded when a node budget
// or deadline is given and hit.
EnumerationReport naive_enumerate(unsigned n, const NaiveOptions& opts);
EnumerationReport naive_enumerate(unsigned n, bool include_trivial = false);

}  // namespace sqsq
