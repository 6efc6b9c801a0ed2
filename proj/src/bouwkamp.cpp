#include "sqsq/bouwkamp.hpp"

#include <cctype>
#include <cstdio>

namespace sqsq {

namespace {

// Uppermost-then-leftmost uncovered cell, in bottom-origin coordinates:
// maximal y, then minimal x.
bool next_pick(const std::vector<char>& covered, unsigned n, unsigned& x,
               unsigned& y) {
  for (unsigned yy = n; yy-- > 0;)
    for (unsigned xx = 0; xx < n; ++xx)
      if (!covered[std::size_t(yy) * n + xx]) {
        x = xx;
        y = yy;
        return true;
      }
  return false;
}

std::string group_msg(const char* what, std::size_t group) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s (group %zu)", what, group + 1);
  return buf;
}

}  // namespace

BouwkampCode to_bouwkamp(const Dissection& d) {
  if (auto err = validity_error(d))
    throw bouwkamp_geometry_error("dissection is not an exact cover: " + *err);
  const unsigned n = d.n;
  std::vector<int> owner(std::size_t(n) * n, -1);
  for (std::size_t i = 0; i < d.elements.size(); ++i) {
    const auto& e = d.elements[i];
    for (unsigned yy = e.y; yy < e.y + e.s; ++yy)
      for (unsigned xx = e.x; xx < e.x + e.s; ++xx)
        owner[std::size_t(yy) * n + xx] = int(i);
  }
  std::vector<char> covered(std::size_t(n) * n, 0);
  BouwkampCode code;
  unsigned x = 0, y = 0;
  long last_level = -1;
  while (next_pick(covered, n, x, y)) {
    // The covering square's top-left cell is exactly the pick: anything
    // higher or further left inside it would be an earlier uncovered cell.
    const auto& e = d.elements[std::size_t(owner[std::size_t(y) * n + x])];
    for (unsigned yy = e.y; yy < e.y + e.s; ++yy)
      for (unsigned xx = e.x; xx < e.x + e.s; ++xx)
        covered[std::size_t(yy) * n + xx] = 1;
    if (long(y) != last_level) {
      code.groups.emplace_back();
      last_level = long(y);
    }
    code.groups.back().push_back(e.s);
  }
  return code;
}

Dissection from_bouwkamp(const BouwkampCode& code, unsigned n) {
  if (n < 1) throw bouwkamp_geometry_error("n must be >= 1");
  unsigned long long area = 0;
  for (std::size_t g = 0; g < code.groups.size(); ++g) {
    if (code.groups[g].empty())
      throw bouwkamp_geometry_error(group_msg("empty group", g));
    for (unsigned s : code.groups[g]) {
      if (s < 1) throw bouwkamp_geometry_error(group_msg("zero-size entry", g));
      if (s > n)
        throw bouwkamp_geometry_error(group_msg("entry larger than n", g));
      area += (unsigned long long)s * s;
    }
  }
  if (area != (unsigned long long)n * n)
    throw bouwkamp_geometry_error("sizes do not sum to the square's area");

  std::vector<char> covered(std::size_t(n) * n, 0);
  Dissection d;
  d.n = n;
  unsigned x = 0, y = 0;
  long prev_level = long(n);  // group top levels strictly decrease
  for (std::size_t g = 0; g < code.groups.size(); ++g) {
    long level = -1;
    for (unsigned s : code.groups[g]) {
      if (!next_pick(covered, n, x, y))
        throw bouwkamp_geometry_error(
            group_msg("code continues past a full square", g));
      if (level < 0) {
        if (long(y) >= prev_level)
          throw bouwkamp_geometry_error(
              group_msg("group does not start a new top level", g));
        level = long(y);
        prev_level = level;
      } else if (long(y) != level) {
        throw bouwkamp_geometry_error(
            group_msg("group spans two top levels", g));
      }
      if (s > y + 1 || x + s > n)
        throw bouwkamp_geometry_error(group_msg("square does not fit", g));
      for (unsigned yy = y + 1 - s; yy <= y; ++yy)
        for (unsigned xx = x; xx < x + s; ++xx) {
          char& c = covered[std::size_t(yy) * n + xx];
          if (c) throw bouwkamp_geometry_error(group_msg("squares overlap", g));
          c = 1;
        }
      d.elements.push_back({x, y + 1 - s, s});
    }
  }
  normalize_scanline(d);
  return d;
}

std::string to_string(const BouwkampCode& code) {
  std::string out;
  for (const auto& group : code.groups) {
    out += '(';
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(group[i]);
    }
    out += ')';
  }
  return out;
}

BouwkampCode parse_bouwkamp(const std::string& text) {
  BouwkampCode code;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw bouwkamp_parse_error("expected '('");
    ++i;
    std::vector<unsigned> group;
    for (;;) {
      skip_ws();
      if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
        throw bouwkamp_parse_error("expected a size");
      unsigned long v = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) {
        v = v * 10 + unsigned(text[i] - '0');
        if (v > 1'000'000) throw bouwkamp_parse_error("size out of range");
        ++i;
      }
      if (v == 0) throw bouwkamp_parse_error("size must be positive");
      group.push_back(unsigned(v));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    if (i >= text.size() || text[i] != ')')
      throw bouwkamp_parse_error("expected ')'");
    ++i;
    code.groups.push_back(std::move(group));
    skip_ws();
  }
  if (code.groups.empty()) throw bouwkamp_parse_error("no groups");
  return code;
}

}  // namespace sqsq
