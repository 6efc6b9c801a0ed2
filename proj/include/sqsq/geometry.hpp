#pragma once
// Data model for square dissections: axis-aligned integer squares tiling an
// n x n square, plus the definitional predicates (exact cover, nontriviality,
// perfection, simplicity, border structure).
//
// Coordinates are cell based with the origin at the bottom-left corner;
// y grows upward.  An element occupies the half-open region
// [x, x+s) x [y, y+s).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sqsq {

struct SquareElement {
  unsigned x = 0;  // left edge
  unsigned y = 0;  // bottom edge
  unsigned s = 1;  // side length, >= 1
  friend bool operator==(const SquareElement&, const SquareElement&) = default;
};

// Scanline order: ascending y, then ascending x.
bool scanline_less(const SquareElement& a, const SquareElement& b);

struct Dissection {
  unsigned n = 0;
  std::vector<SquareElement> elements;  // kept in scanline order
  friend bool operator==(const Dissection&, const Dissection&) = default;
};

struct Classification {
  unsigned order = 0;
  bool perfect = false;  // all element sizes distinct
  bool simple = false;   // no proper squared subrectangle
  bool trivial = false;  // two equal elements share a full edge
  unsigned border_touch_count = 0;
  friend bool operator==(const Classification&, const Classification&) = default;
};

void normalize_scanline(Dissection& d);

// Exact-cover validation: elements in bounds, every cell covered exactly once,
// areas summing to n^2.  Returns a message describing the first problem found,
// or nullopt when the dissection is a valid tiling.
std::optional<std::string> validity_error(const Dissection& d);
bool is_valid(const Dissection& d);

// True iff a and b have equal size and are edge-adjacent with full-side
// contact (a shared segment of length exactly s).
bool shares_full_edge(const SquareElement& a, const SquareElement& b);

// No two equal-size elements share a full edge.  Single-element dissections
// are vacuously nontrivial.
bool is_nontrivial(const Dissection& d);

// Elements touching at least one of the four outer borders.
std::vector<SquareElement> border_elements(const Dissection& d);

// Elements covering the four corner cells, in the order
// bottom-left, bottom-right, top-left, top-right.  A single-element
// dissection is all four corners at once.
std::array<SquareElement, 4> corner_elements(const Dissection& d);

enum class Side { bottom, right, top, left };

// Element sizes along one side, corner to corner.  bottom/top are read
// left to right, left/right bottom to top.
std::vector<unsigned> border_sizes(const Dissection& d, Side side);

// Requires a valid dissection.
Classification classify(const Dissection& d);

// "n=11 [0 0 4][4 0 3]..." -- compact single-line form for logs and witnesses.
std::string to_compact_string(const Dissection& d);

}  // namespace sqsq
