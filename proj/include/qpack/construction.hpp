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

/**
 * @file construction.hpp
 * @brief Moment-curve line classes of the affine space F_q^3.
 *
 * For nonzero lambda the lambda-moment curve is the set of directions
 * (1, lambda*a, lambda*a^2) with a ranging over the nonzero elements of F_q.
 * The line class of lambda holds every affine line whose direction lies on
 * that curve: q-1 directions times q^2 parallel lines each. Each class is a
 * triangle-free partial linear space of order (q-1, q-2) on all q^3 points,
 * distinct lambdas give disjoint classes, and the union of any set of classes
 * is still a partial linear space.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qpack/error.hpp"
#include "qpack/geometry.hpp"
#include "qpack/parallel.hpp"

namespace qpack::construction {

using geometry::Line;
using geometry::Point;
using geometry::SlopeVector;
using gf::Field;
using gf::FieldElement;

struct LineClass {
  FieldElement lambda;
  std::vector<Line> lines;  ///< sorted, canonical, (q-1) q^2 of them

  friend bool operator==(const LineClass&, const LineClass&) = default;
};

struct GeometryFamily {
  Field field;
  std::vector<LineClass> classes;  ///< ascending lambda

  std::size_t total_lines() const {
    std::size_t n = 0;
    for (const auto& c : classes) n += c.lines.size();
    return n;
  }

  friend bool operator==(const GeometryFamily&, const GeometryFamily&) = default;
};

/// Directions of the lambda-moment curve, sorted.
inline std::vector<SlopeVector> moment_curve(const Field& f, FieldElement lambda) {
  if (lambda == f.zero()) throw ZeroLambda("lambda must be nonzero");
  std::vector<SlopeVector> out;
  out.reserve(f.q() - 1);
  for (auto a : f.elements()) {
    if (a == f.zero()) continue;
    const FieldElement la = f.mul(lambda, a);
    out.push_back(SlopeVector::canonical(f, {f.one(), la, f.mul(la, a)}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline LineClass build_class(const Field& f, FieldElement lambda) {
  LineClass cls{lambda, {}};
  const auto slopes = moment_curve(f, lambda);
  const std::uint32_t npts = geometry::num_points(f);
  cls.lines.reserve(slopes.size() * f.q() * f.q());
  for (const auto& s : slopes) {
    // Keep an anchor only when it already is the canonical base of its line;
    // that yields each of the q^2 parallel lines exactly once.
    for (std::uint32_t idx = 0; idx < npts; ++idx) {
      const Point anchor = geometry::point_at(f, idx);
      Line l = geometry::canonical_line(f, s, anchor);
      if (l.base == anchor) cls.lines.push_back(std::move(l));
    }
  }
  std::sort(cls.lines.begin(), cls.lines.end());
  return cls;
}

/// Classes for the first `count` nonzero lambdas in canonical order
/// (all q-1 by default). Classes are built on up to `jobs` threads.
inline GeometryFamily build_family(const Field& f, std::optional<std::uint32_t> count = std::nullopt,
                                   unsigned jobs = 1) {
  const std::uint32_t n = count.value_or(f.q() - 1);
  if (n < 1 || n > f.q() - 1)
    throw CountOutOfRange("class count must lie in [1, " + std::to_string(f.q() - 1) + "]");
  GeometryFamily fam{f, std::vector<LineClass>(n)};
  parallel::for_each_index(n, jobs, [&](std::size_t i) {
    fam.classes[i] = build_class(f, FieldElement{static_cast<std::uint32_t>(i + 1)});
  });
  return fam;
}

}  // namespace qpack::construction
