#pragma once
// Exhaustive corner-filling search for nontrivial squared squares.  The
// search repeatedly fills the lowest-then-leftmost empty cell, so complete
// tilings are produced in scanline normal form and each labeled tiling is
// visited exactly once.

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sqsq/compositions.hpp"
#include "sqsq/geometry.hpp"

namespace sqsq {

enum class CollectMode {
  count_only,   // counts and digests, no dissections kept
  canonical,    // one canonical representative per symmetry class
  all_labeled,  // every labeled tiling (small n only)
};

struct FixedBorder {
  Side side = Side::top;
  BorderComposition parts;
};

struct SearchOptions {
  // Reject border elements below size 3 and corner elements below size 4.
  // Sound for nontrivial squared squares; ignored in include_trivial mode.
  bool prune_border_min = true;

  // Reject a placement forming a full edge with an equal-size neighbor as
  // soon as it happens.  The property is hereditary, so this never loses a
  // nontrivial tiling; a full pairwise check still runs on every complete
  // tiling.  Ignored in include_trivial mode.
  bool prune_nontrivial_incremental = true;

  // All-tilings mode used only to cross-validate against the naive oracle:
  // keeps trivial tilings (order >= 2 still applies) and disables the prunes.
  bool include_trivial = false;

  // Optional accelerator: keep only labeled tilings whose bottom-left corner
  // element is at least as large as the other three corner elements.  Every
  // symmetry class retains a member, so canonical results are unchanged, but
  // raw_count then counts a subset of the labeled tilings.  Ignored when
  // squares are pre-placed.
  bool corner_symmetry_accel = false;

  CollectMode collect = CollectMode::canonical;
  std::optional<FixedBorder> fixed_border;
  unsigned workers = 1;
  std::optional<std::uint64_t> node_budget;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  // Skip per-tiling canonicalization (canonical fields come back zero).
  // Used for large cross-validation runs where only raw_count and
  // labeled_digest are compared.
  bool skip_canonical = false;
};

struct EnumerationReport {
  unsigned n = 0;
  std::uint64_t raw_count = 0;         // labeled tilings found
  std::uint64_t canonical_count = 0;   // symmetry classes
  std::uint64_t reflection_pair_count = 0;  // classes counting mirrors separately
  std::vector<Dissection> representatives;  // canonical forms, sorted by key
  std::vector<Dissection> labeled;          // all_labeled mode only
  std::uint64_t nodes_expanded = 0;
  double wall_time_s = 0.0;
  std::uint64_t labeled_digest = 0;  // order-independent digest of labeled tilings
};

class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requires 1 <= n <= 64 (one occupancy row per machine word).
EnumerationReport enumerate(unsigned n, const SearchOptions& opts = {});

std::vector<EnumerationReport> enumerate_range(unsigned lo, unsigned hi,
                                               const SearchOptions& opts = {});

// Search with the top border pre-filled left to right by squares of the given
// sizes.  Throws std::invalid_argument when the parts do not sum to n.
EnumerationReport enumerate_with_border(unsigned n, const BorderComposition& comp,
                                        SearchOptions opts = {});

// Search with an arbitrary set of pre-placed squares (used by the lemma
// checks for patterns spanning two borders).
EnumerationReport enumerate_with_preplaced(unsigned n,
                                           std::vector<SquareElement> preplaced,
                                           const SearchOptions& opts = {});

}  // namespace sqsq
