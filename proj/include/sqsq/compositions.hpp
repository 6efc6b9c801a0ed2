#pragma once
// Border compositions: ordered part lists describing how one side of the
// square is split among the elements touching it, plus the filters that
// reject compositions no nontrivial dissection can realize.

#include <string>
#include <vector>

namespace sqsq {

// Parts of one border read corner to corner.  For a composition describing a
// full border of an n x n square the parts sum to n and adjacent parts are
// unequal (equal adjacent border squares would share a full edge).
using BorderComposition = std::vector<unsigned>;

// All compositions of n with at least min_parts parts, first and last part
// >= 4, interior parts >= 3, adjacent parts unequal.  Ascending lexicographic
// order, no duplicates.
std::vector<BorderComposition> border_compositions(unsigned n, unsigned min_parts);

enum class CompositionFilter {
  corner_min4,       // first and last part >= 4
  inner_min3,        // interior parts >= 3
  x3y,               // reject any consecutive x,3,y with x>=5 and y>=5
  corner4_neighbor6, // reject a corner part 4 whose border neighbor is >= 6
  fourthree_x,       // reject a border starting (or ending) 4,3,x with x>=6
  x4y,               // reject any consecutive x,4,y with x>=6 and y>=6
  reversal_dedupe,   // keep only the lexicographically smaller reading direction
};

const std::vector<CompositionFilter>& all_composition_filters();
const char* to_string(CompositionFilter f);

// Pure per-composition predicate; true = keep.  reversal_dedupe keeps c iff
// c <= reverse(c), so the surviving set is independent of filter order.
bool composition_passes(const BorderComposition& c, CompositionFilter f);

std::vector<BorderComposition> filter_compositions(
    std::vector<BorderComposition> list,
    const std::vector<CompositionFilter>& filters);

std::string to_string(const BorderComposition& c);  // "4+3+4+6"
BorderComposition parse_composition(const std::string& text);

}  // namespace sqsq
