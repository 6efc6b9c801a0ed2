#include "sqsq/compositions.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqsq {

namespace {

void gen(unsigned n, unsigned min_parts, std::vector<unsigned>& cur,
         unsigned sum, std::vector<BorderComposition>& out) {
  // Parts ascending at each position makes the emission order lexicographic.
  for (unsigned p = cur.empty() ? 4u : 3u; sum + p <= n; ++p) {
    if (!cur.empty() && p == cur.back()) continue;
    if (sum + p == n) {
      // p closes the border, so it is a corner part.
      if (p >= 4 && cur.size() + 1 >= min_parts) {
        cur.push_back(p);
        out.push_back(cur);
        cur.pop_back();
      }
    } else {
      cur.push_back(p);
      gen(n, min_parts, cur, sum + p, out);
      cur.pop_back();
    }
  }
}

bool violates_x3y(const BorderComposition& c) {
  for (std::size_t i = 0; i + 2 < c.size(); ++i)
    if (c[i] >= 5 && c[i + 1] == 3 && c[i + 2] >= 5) return true;
  return false;
}

bool violates_corner4_neighbor6(const BorderComposition& c) {
  if (c.size() < 2) return false;
  if (c.front() == 4 && c[1] >= 6) return true;
  if (c.back() == 4 && c[c.size() - 2] >= 6) return true;
  return false;
}

// Whole-border patterns: these two rules speak about borders made of exactly
// three squares, read in either direction.
bool violates_fourthree_x(const BorderComposition& c) {
  if (c.size() != 3) return false;
  if (c[0] == 4 && c[1] == 3 && c[2] >= 6) return true;
  if (c[2] == 4 && c[1] == 3 && c[0] >= 6) return true;
  return false;
}

bool violates_x4y(const BorderComposition& c) {
  return c.size() == 3 && c[1] == 4 && c[0] >= 6 && c[2] >= 6;
}

}  // namespace

std::vector<BorderComposition> border_compositions(unsigned n,
                                                   unsigned min_parts) {
  std::vector<BorderComposition> out;
  std::vector<unsigned> cur;
  gen(n, min_parts, cur, 0, out);
  return out;
}

const std::vector<CompositionFilter>& all_composition_filters() {
  static const std::vector<CompositionFilter> fs = {
      CompositionFilter::corner_min4,       CompositionFilter::inner_min3,
      CompositionFilter::x3y,               CompositionFilter::corner4_neighbor6,
      CompositionFilter::fourthree_x,       CompositionFilter::x4y,
      CompositionFilter::reversal_dedupe,
  };
  return fs;
}

const char* to_string(CompositionFilter f) {
  switch (f) {
    case CompositionFilter::corner_min4: return "corner_min4";
    case CompositionFilter::inner_min3: return "inner_min3";
    case CompositionFilter::x3y: return "x3y";
    case CompositionFilter::corner4_neighbor6: return "corner4_neighbor6";
    case CompositionFilter::fourthree_x: return "fourthree_x";
    case CompositionFilter::x4y: return "x4y";
    case CompositionFilter::reversal_dedupe: return "reversal_dedupe";
  }
  return "?";
}

bool composition_passes(const BorderComposition& c, CompositionFilter f) {
  if (c.empty()) return false;
  switch (f) {
    case CompositionFilter::corner_min4:
      return c.front() >= 4 && c.back() >= 4;
    case CompositionFilter::inner_min3:
      for (std::size_t i = 1; i + 1 < c.size(); ++i)
        if (c[i] < 3) return false;
      return true;
    case CompositionFilter::x3y:
      return !violates_x3y(c);
    case CompositionFilter::corner4_neighbor6:
      return !violates_corner4_neighbor6(c);
    case CompositionFilter::fourthree_x:
      return !violates_fourthree_x(c);
    case CompositionFilter::x4y:
      return !violates_x4y(c);
    case CompositionFilter::reversal_dedupe: {
      BorderComposition r(c.rbegin(), c.rend());
      return !std::lexicographical_compare(r.begin(), r.end(), c.begin(),
                                           c.end());
    }
  }
  return true;
}

std::vector<BorderComposition> filter_compositions(
    std::vector<BorderComposition> list,
    const std::vector<CompositionFilter>& filters) {
  auto dead = [&](const BorderComposition& c) {
    for (CompositionFilter f : filters)
      if (!composition_passes(c, f)) return true;
    return false;
  };
  list.erase(std::remove_if(list.begin(), list.end(), dead), list.end());
  return list;
}

std::string to_string(const BorderComposition& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(c[i]);
  }
  return out;
}

BorderComposition parse_composition(const std::string& text) {
  BorderComposition c;
  unsigned cur = 0;
  bool have = false;
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      cur = cur * 10 + unsigned(ch - '0');
      have = true;
    } else if (ch == '+') {
      if (!have) throw std::invalid_argument("malformed composition");
      c.push_back(cur);
      cur = 0;
      have = false;
    } else if (ch != ' ') {
      throw std::invalid_argument("malformed composition");
    }
  }
  if (!have) throw std::invalid_argument("malformed composition");
  c.push_back(cur);
  return c;
}

}  // namespace sqsq
