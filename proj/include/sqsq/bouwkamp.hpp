#pragma once
// Bouwkamp codes.  Convention: repeatedly take the uppermost-then-leftmost
// uncovered cell and emit the size of the square whose top-left corner sits
// there; consecutive squares sharing the same top level form one
// parenthesized group, e.g. "(4,3,4)(1,2)..." for the 11x11 solution.

#include <stdexcept>
#include <string>
#include <vector>

#include "sqsq/geometry.hpp"

namespace sqsq {

struct BouwkampCode {
  std::vector<std::vector<unsigned>> groups;
  friend bool operator==(const BouwkampCode&, const BouwkampCode&) = default;
};

class bouwkamp_parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class bouwkamp_geometry_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requires a valid dissection.
BouwkampCode to_bouwkamp(const Dissection& d);

// Replays the code into an n x n square; throws bouwkamp_geometry_error when
// the sizes do not tile it.
Dissection from_bouwkamp(const BouwkampCode& code, unsigned n);

std::string to_string(const BouwkampCode& code);
BouwkampCode parse_bouwkamp(const std::string& text);

}  // namespace sqsq
