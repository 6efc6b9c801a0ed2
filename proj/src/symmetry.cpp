#include "sqsq/symmetry.hpp"

#include <algorithm>

namespace sqsq {

namespace {

// (x, y) -> (a*x + b*y, c*x + d*y); translation back into [0,n]^2 is applied
// separately per element.
struct Mat2 {
  int a, b, c, d;
};

constexpr Mat2 kMats[8] = {
    {1, 0, 0, 1},    // id
    {0, -1, 1, 0},   // r90
    {-1, 0, 0, -1},  // r180
    {0, 1, -1, 0},   // r270
    {-1, 0, 0, 1},   // mh
    {1, 0, 0, -1},   // mv
    {0, 1, 1, 0},    // md
    {0, -1, -1, 0},  // ma
};

int find_op(const Mat2& m) {
  for (int i = 0; i < 8; ++i) {
    const Mat2& k = kMats[i];
    if (k.a == m.a && k.b == m.b && k.c == m.c && k.d == m.d) return i;
  }
  return 0;  // unreachable: products of the 8 stay in the set
}

}  // namespace

const char* to_string(SymmetryOp g) {
  static const char* names[8] = {"id", "r90", "r180", "r270",
                                 "mh", "mv",  "md",   "ma"};
  return names[int(g)];
}

SymmetryOp compose(SymmetryOp first, SymmetryOp then) {
  const Mat2 f = kMats[int(first)];
  const Mat2 t = kMats[int(then)];
  const Mat2 r = {t.a * f.a + t.b * f.c, t.a * f.b + t.b * f.d,
                  t.c * f.a + t.d * f.c, t.c * f.b + t.d * f.d};
  return SymmetryOp(find_op(r));
}

SymmetryOp inverse(SymmetryOp g) {
  for (SymmetryOp h : all_symmetry_ops)
    if (compose(g, h) == SymmetryOp::id) return h;
  return SymmetryOp::id;
}

SquareElement transform_element(const SquareElement& e, unsigned n,
                                SymmetryOp g) {
  const Mat2 m = kMats[int(g)];
  const int N = int(n);
  const auto fx = [&](int x, int y) { return m.a * x + m.b * y; };
  const auto fy = [&](int x, int y) { return m.c * x + m.d * y; };
  const int tx = -std::min(fx(0, 0), fx(N, N));
  const int ty = -std::min(fy(0, 0), fy(N, N));
  const int x1 = fx(int(e.x), int(e.y)), y1 = fy(int(e.x), int(e.y));
  const int x2 = fx(int(e.x + e.s), int(e.y + e.s));
  const int y2 = fy(int(e.x + e.s), int(e.y + e.s));
  return {unsigned(std::min(x1, x2) + tx), unsigned(std::min(y1, y2) + ty),
          e.s};
}

Dissection apply(const Dissection& d, SymmetryOp g) {
  Dissection out;
  out.n = d.n;
  out.elements.reserve(d.elements.size());
  for (const auto& e : d.elements)
    out.elements.push_back(transform_element(e, d.n, g));
  normalize_scanline(out);
  return out;
}

CanonicalKey scanline_key(const Dissection& d) {
  CanonicalKey k;
  k.bytes.reserve(1 + 3 * d.elements.size());
  k.bytes.push_back(char(d.n));
  for (const auto& e : d.elements) {
    k.bytes.push_back(char(e.y));
    k.bytes.push_back(char(e.x));
    k.bytes.push_back(char(e.s));
  }
  return k;
}

namespace {

std::pair<CanonicalKey, Dissection> canonical_pair(const Dissection& d) {
  Dissection best = apply(d, SymmetryOp::id);
  CanonicalKey best_key = scanline_key(best);
  for (int i = 1; i < 8; ++i) {
    Dissection t = apply(d, all_symmetry_ops[i]);
    CanonicalKey k = scanline_key(t);
    if (k < best_key) {
      best_key = std::move(k);
      best = std::move(t);
    }
  }
  return {std::move(best_key), std::move(best)};
}

}  // namespace

CanonicalKey canonical_key(const Dissection& d) {
  return canonical_pair(d).first;
}

Dissection canonical_form(const Dissection& d) {
  return canonical_pair(d).second;
}

unsigned orbit_size(const Dissection& d) {
  std::vector<std::string> keys;
  keys.reserve(8);
  for (SymmetryOp g : all_symmetry_ops)
    keys.push_back(scanline_key(apply(d, g)).bytes);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return unsigned(keys.size());
}

unsigned rotation_class_count(const Dissection& d) {
  std::string min_rot, min_ref;
  for (int i = 0; i < 4; ++i) {
    std::string k = scanline_key(apply(d, all_symmetry_ops[i])).bytes;
    if (min_rot.empty() || k < min_rot) min_rot = std::move(k);
  }
  for (int i = 4; i < 8; ++i) {
    std::string k = scanline_key(apply(d, all_symmetry_ops[i])).bytes;
    if (min_ref.empty() || k < min_ref) min_ref = std::move(k);
  }
  return min_rot == min_ref ? 1 : 2;
}

}  // namespace sqsq
