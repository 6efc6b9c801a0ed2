#include "sqsq/geometry.hpp"

#include <algorithm>
#include <cstdio>

namespace sqsq {

bool scanline_less(const SquareElement& a, const SquareElement& b) {
  if (a.y != b.y) return a.y < b.y;
  if (a.x != b.x) return a.x < b.x;
  return a.s < b.s;
}

void normalize_scanline(Dissection& d) {
  std::sort(d.elements.begin(), d.elements.end(), scanline_less);
}

std::optional<std::string> validity_error(const Dissection& d) {
  if (d.n == 0) return "outer square side must be positive";
  unsigned long long area = 0;
  for (const auto& e : d.elements) {
    if (e.s < 1) return "element side must be >= 1";
    if (e.x + e.s > d.n || e.y + e.s > d.n) return "element out of bounds";
    area += 1ULL * e.s * e.s;
  }
  if (area != 1ULL * d.n * d.n) return "element areas do not sum to n^2";
  // Paint test; together with the area check this implies an exact cover.
  std::vector<std::uint8_t> cells(std::size_t(d.n) * d.n, 0);
  for (const auto& e : d.elements)
    for (unsigned yy = e.y; yy < e.y + e.s; ++yy)
      for (unsigned xx = e.x; xx < e.x + e.s; ++xx) {
        std::uint8_t& c = cells[std::size_t(yy) * d.n + xx];
        if (c) return "overlapping elements";
        c = 1;
      }
  return std::nullopt;
}

bool is_valid(const Dissection& d) { return !validity_error(d).has_value(); }

bool shares_full_edge(const SquareElement& a, const SquareElement& b) {
  if (a.s != b.s) return false;
  const bool horizontal = a.y == b.y && (a.x + a.s == b.x || b.x + b.s == a.x);
  const bool vertical = a.x == b.x && (a.y + a.s == b.y || b.y + b.s == a.y);
  return horizontal || vertical;
}

bool is_nontrivial(const Dissection& d) {
  const auto& es = d.elements;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (shares_full_edge(es[i], es[j])) return false;
  return true;
}

namespace {

bool touches_border(const SquareElement& e, unsigned n) {
  return e.x == 0 || e.y == 0 || e.x + e.s == n || e.y + e.s == n;
}

bool covers_cell(const SquareElement& e, unsigned cx, unsigned cy) {
  return e.x <= cx && cx < e.x + e.s && e.y <= cy && cy < e.y + e.s;
}

// True when the elements lying inside [x1,x2) x [y1,y2) tile it exactly and
// no element crosses its boundary.  Disjointness is inherited from the whole
// dissection, so an area match suffices.
bool tiles_subrectangle(const Dissection& d, unsigned x1, unsigned y1,
                        unsigned x2, unsigned y2) {
  unsigned long long want = 1ULL * (x2 - x1) * (y2 - y1);
  unsigned long long got = 0;
  unsigned count = 0;
  for (const auto& e : d.elements) {
    const bool overlaps =
        e.x < x2 && e.x + e.s > x1 && e.y < y2 && e.y + e.s > y1;
    if (!overlaps) continue;
    const bool inside =
        e.x >= x1 && e.x + e.s <= x2 && e.y >= y1 && e.y + e.s <= y2;
    if (!inside) return false;
    ++count;
    got += 1ULL * e.s * e.s;
    if (got > want) return false;
  }
  return count >= 2 && got == want;
}

// Candidate subrectangle corners can only sit on element boundaries.
bool has_squared_subrectangle(const Dissection& d) {
  std::vector<unsigned> xs{0, d.n}, ys{0, d.n};
  for (const auto& e : d.elements) {
    xs.push_back(e.x);
    xs.push_back(e.x + e.s);
    ys.push_back(e.y);
    ys.push_back(e.y + e.s);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b)
      for (std::size_t c = 0; c < ys.size(); ++c)
        for (std::size_t e = c + 1; e < ys.size(); ++e) {
          if (xs[b] - xs[a] == d.n && ys[e] - ys[c] == d.n) continue;
          if (tiles_subrectangle(d, xs[a], ys[c], xs[b], ys[e])) return true;
        }
  return false;
}

}  // namespace

std::vector<SquareElement> border_elements(const Dissection& d) {
  std::vector<SquareElement> out;
  for (const auto& e : d.elements)
    if (touches_border(e, d.n)) out.push_back(e);
  return out;
}

std::array<SquareElement, 4> corner_elements(const Dissection& d) {
  std::array<SquareElement, 4> out{};
  const unsigned m = d.n - 1;
  const unsigned cx[4] = {0, m, 0, m};
  const unsigned cy[4] = {0, 0, m, m};
  for (int k = 0; k < 4; ++k)
    for (const auto& e : d.elements)
      if (covers_cell(e, cx[k], cy[k])) {
        out[k] = e;
        break;
      }
  return out;
}

std::vector<unsigned> border_sizes(const Dissection& d, Side side) {
  std::vector<SquareElement> row;
  for (const auto& e : d.elements) {
    switch (side) {
      case Side::bottom:
        if (e.y == 0) row.push_back(e);
        break;
      case Side::top:
        if (e.y + e.s == d.n) row.push_back(e);
        break;
      case Side::left:
        if (e.x == 0) row.push_back(e);
        break;
      case Side::right:
        if (e.x + e.s == d.n) row.push_back(e);
        break;
    }
  }
  const bool horizontal = side == Side::bottom || side == Side::top;
  std::sort(row.begin(), row.end(),
            [horizontal](const SquareElement& a, const SquareElement& b) {
              return horizontal ? a.x < b.x : a.y < b.y;
            });
  std::vector<unsigned> sizes;
  sizes.reserve(row.size());
  for (const auto& e : row) sizes.push_back(e.s);
  return sizes;
}

Classification classify(const Dissection& d) {
  Classification c;
  c.order = unsigned(d.elements.size());
  bool seen[65] = {};
  c.perfect = true;
  for (const auto& e : d.elements) {
    if (e.s <= 64) {
      if (seen[e.s]) c.perfect = false;
      seen[e.s] = true;
    }
    if (touches_border(e, d.n)) ++c.border_touch_count;
  }
  c.trivial = !is_nontrivial(d);
  c.simple = !has_squared_subrectangle(d);
  return c;
}

std::string to_compact_string(const Dissection& d) {
  std::string out = "n=" + std::to_string(d.n);
  char buf[40];
  for (const auto& e : d.elements) {
    std::snprintf(buf, sizeof buf, " [%u %u %u]", e.x, e.y, e.s);
    out += buf;
  }
  return out;
}

}  // namespace sqsq
