// Copyright 2026 The qpack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qpack/error.hpp"
#include "qpack/gf.hpp"

namespace qpack::geometry {

using gf::Field;
using gf::FieldElement;

/// A point of the affine space F_q^3. Ordered lexicographically.
using Point = std::array<FieldElement, 3>;

/// Dense index of a point in [0, q^3); agrees with the lexicographic order.
inline std::uint32_t point_index(const Field& f, const Point& x) {
  const std::uint32_t q = f.q();
  return (x[0].value * q + x[1].value) * q + x[2].value;
}

inline Point point_at(const Field& f, std::uint32_t index) {
  const std::uint32_t q = f.q();
  return {FieldElement{index / (q * q)}, FieldElement{(index / q) % q}, FieldElement{index % q}};
}

inline std::uint32_t num_points(const Field& f) { return f.q() * f.q() * f.q(); }

/// x + beta * d
inline Point affine_step(const Field& f, const Point& x, FieldElement beta, const Point& d) {
  Point out;
  for (int i = 0; i < 3; ++i) out[i] = f.add(x[i], f.mul(beta, d[i]));
  return out;
}

/// Direction of a line, scaled so its first nonzero coordinate is 1.
class SlopeVector {
 public:
  static SlopeVector canonical(const Field& f, const Point& direction) {
    int lead = 0;
    while (lead < 3 && direction[lead] == f.zero()) ++lead;
    if (lead == 3) throw ZeroSlope("slope vector is zero");
    const FieldElement scale = f.inv(direction[lead]);
    Point d;
    for (int i = 0; i < 3; ++i) d[i] = f.mul(scale, direction[i]);
    return SlopeVector(d, lead);
  }

  const Point& direction() const noexcept { return d_; }
  /// Index of the leading (unit) coordinate.
  int lead() const noexcept { return lead_; }
  FieldElement operator[](int i) const noexcept { return d_[i]; }

  friend bool operator==(const SlopeVector& a, const SlopeVector& b) { return a.d_ == b.d_; }
  friend auto operator<=>(const SlopeVector& a, const SlopeVector& b) { return a.d_ <=> b.d_; }

 private:
  SlopeVector(const Point& d, int lead) : d_(d), lead_(lead) {}

  Point d_;
  int lead_;
};

/// An affine line {beta * slope + base}. `base` is the smallest of its points,
/// so equal point sets give equal Line values.
struct Line {
  SlopeVector slope;
  Point base;

  friend bool operator==(const Line&, const Line&) = default;
  friend auto operator<=>(const Line& a, const Line& b) {
    if (auto c = a.slope <=> b.slope; c != 0) return c;
    return a.base <=> b.base;
  }
};

/// Order (s, t): s+1 points per line, t+1 lines per point.
struct OrderParams {
  std::uint64_t s_order = 0;
  std::uint64_t t_order = 0;

  friend bool operator==(const OrderParams&, const OrderParams&) = default;
};

inline Line canonical_line(const Field& f, const SlopeVector& slope, const Point& anchor) {
  // The leading slope coordinate sweeps all of F_q along the line while the
  // coordinates before it stay fixed, so the minimum point zeroes it.
  const FieldElement shift = f.neg(anchor[slope.lead()]);
  return Line{slope, affine_step(f, anchor, shift, slope.direction())};
}

inline Line canonical_line(const Field& f, const Point& direction, const Point& anchor) {
  return canonical_line(f, SlopeVector::canonical(f, direction), anchor);
}

/// The q points of a line in ascending order.
inline std::vector<Point> points_on(const Field& f, const Line& line) {
  std::vector<Point> pts;
  pts.reserve(f.q());
  for (auto beta : f.elements()) pts.push_back(affine_step(f, line.base, beta, line.slope.direction()));
  std::sort(pts.begin(), pts.end());
  return pts;
}

/// Membership test without enumerating the line.
inline bool on_line(const Field& f, const Line& line, const Point& x) {
  const int lead = line.slope.lead();
  const FieldElement beta = f.sub(x[lead], line.base[lead]);
  return affine_step(f, line.base, beta, line.slope.direction()) == x;
}

/// The unique common point of two lines, if there is exactly one.
/// Equal or parallel lines give nothing.
inline std::optional<Point> intersect(const Field& f, const Line& l1, const Line& l2) {
  if (l1.slope == l2.slope) return std::nullopt;
  const Point& s1 = l1.slope.direction();
  const Point& s2 = l2.slope.direction();
  Point rhs;
  for (int i = 0; i < 3; ++i) rhs[i] = f.sub(l2.base[i], l1.base[i]);
  // beta*s1 - gamma*s2 = rhs. Distinct canonical slopes are independent, so
  // some 2x2 minor is nonzero; solve on it and confirm the remaining row.
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const FieldElement det = f.sub(f.mul(s2[i], s1[j]), f.mul(s1[i], s2[j]));
      if (det == f.zero()) continue;
      // Cramer with columns (s1, -s2).
      const FieldElement beta =
          f.div(f.sub(f.mul(s2[i], rhs[j]), f.mul(rhs[i], s2[j])), det);
      const Point x = affine_step(f, l1.base, beta, s1);
      if (on_line(f, l2, x)) return x;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace qpack::geometry

template <>
struct std::hash<qpack::geometry::Line> {
  std::size_t operator()(const qpack::geometry::Line& l) const noexcept {
    std::size_t h = 0;
    for (auto e : l.slope.direction()) h = h * 1000003u + e.value;
    for (auto e : l.base) h = h * 1000003u + e.value;
    return h;
  }
};
