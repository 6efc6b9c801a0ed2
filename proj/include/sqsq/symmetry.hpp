#pragma once
// The eight isometries of the square (rotations and reflections) acting on
// dissections, and the canonical key used to identify dissections up to
// symmetry.

#include <array>
#include <cstdint>
#include <string>

#include "sqsq/geometry.hpp"

namespace sqsq {

enum class SymmetryOp : std::uint8_t {
  id,    // identity
  r90,   // rotate 90 degrees counterclockwise
  r180,  // rotate 180 degrees
  r270,  // rotate 270 degrees counterclockwise
  mh,    // mirror across the vertical axis (x -> n-x)
  mv,    // mirror across the horizontal axis (y -> n-y)
  md,    // mirror across the main diagonal
  ma,    // mirror across the anti-diagonal
};

inline constexpr std::array<SymmetryOp, 8> all_symmetry_ops = {
    SymmetryOp::id, SymmetryOp::r90, SymmetryOp::r180, SymmetryOp::r270,
    SymmetryOp::mh, SymmetryOp::mv,  SymmetryOp::md,   SymmetryOp::ma};

const char* to_string(SymmetryOp g);

// Group operation: the op equivalent to applying `first`, then `then`.
SymmetryOp compose(SymmetryOp first, SymmetryOp then);
SymmetryOp inverse(SymmetryOp g);

SquareElement transform_element(const SquareElement& e, unsigned n, SymmetryOp g);

// Transformed copy, re-normalized to scanline order.
Dissection apply(const Dissection& d, SymmetryOp g);

// Deterministic byte encoding of a dissection: n, then (y, x, s) per element
// in scanline order.  Assumes n <= 64.
struct CanonicalKey {
  std::string bytes;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey scanline_key(const Dissection& d);

// Lexicographically smallest scanline encoding over all 8 transformed copies.
// Two dissections have equal canonical keys iff they lie in the same orbit.
CanonicalKey canonical_key(const Dissection& d);

// The transformed copy realizing canonical_key.
Dissection canonical_form(const Dissection& d);

// Number of distinct transformed copies (divides 8).
unsigned orbit_size(const Dissection& d);

// 1 when the dissection is equivalent to its mirror image under rotations
// alone, 2 when the mirror forms a separate rotation class.
unsigned rotation_class_count(const Dissection& d);

}  // namespace sqsq
