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
 * @file bounds.hpp
 * @brief Upper bounds on s_r(K_{k+1}), the smallest minimum degree of an
 * r-Ramsey-minimal graph for the clique K_{k+1}.
 *
 * The moment-curve packing gives s_r(K_{k+1}) <= q^3 where q is the smallest
 * prime with q >= 4 k r ln k, provided the packing lemma's hypotheses
 * q-1 >= 3 r k ln k, q-2 >= 3 k (1 + ln r) and r <= q-1 hold. Bertrand's
 * postulate caps that at (8 k r ln k)^3.
 *
 * For comparison:
 *   fglps    8 k^6 r^3                         (fully explicit)
 *   hrs      C (r ln r)^3 (k ln k)^2, r < k^2   (C unspecified)
 *   bbl      C k^5 r^(5/2)                      (C unspecified)
 *   eq1      c_k r^2 ln r / ln ln r  ..  C_k r^2 (ln r)^(8 k^2)
 *
 * Unspecified constants default to 1, are flagged in every report, and never
 * take part in choosing a winner.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>

#include "qpack/error.hpp"
#include "qpack/gf.hpp"

namespace qpack::bounds {

namespace detail {
inline void require_domain(std::uint64_t k, std::uint64_t r) {
  if (k < 2) throw OutOfRange("k must be >= 2 (got " + std::to_string(k) + ")");
  if (r < 3) throw OutOfRange("r must be >= 3 (got " + std::to_string(r) + ")");
  if (k > 1'000'000 || r > 1'000'000) throw OutOfRange("k and r must be <= 1000000");
}
}  // namespace detail

/// 4 k r ln k
inline double threshold(std::uint64_t k, std::uint64_t r) {
  detail::require_domain(k, r);
  return 4.0 * double(k) * double(r) * std::log(double(k));
}

struct LemmaConditions {
  bool s_large = false;     ///< q-1 >= 3 r k ln k
  bool t_large = false;     ///< q-2 >= 3 k (1 + ln r)
  bool enough_classes = false;  ///< r <= q-1

  bool all() const noexcept { return s_large && t_large && enough_classes; }
  friend bool operator==(const LemmaConditions&, const LemmaConditions&) = default;
};

inline LemmaConditions lemma_conditions(std::uint64_t q, std::uint64_t k, std::uint64_t r) {
  if (q < 3) throw OutOfRange("q must be >= 3");
  const double kd = double(k), rd = double(r);
  LemmaConditions c;
  c.s_large = double(q - 1) >= 3.0 * rd * kd * std::log(kd);
  c.t_large = double(q - 2) >= 3.0 * kd * (1.0 + std::log(rd));
  c.enough_classes = r <= q - 1;
  return c;
}

enum class SearchMode { prime, prime_power };

/// Smallest prime (or, off the default path, prime power) >= 4 k r ln k.
inline std::uint64_t find_q(std::uint64_t k, std::uint64_t r, SearchMode mode = SearchMode::prime) {
  const double t = threshold(k, r);
  auto start = static_cast<std::uint64_t>(std::ceil(t));
  // ceil() on a value sitting a hair below an integer can undershoot.
  while (double(start) < t) ++start;
  const std::uint64_t q =
      mode == SearchMode::prime ? gf::next_prime_geq(start) : gf::next_prime_power_geq(start);
  if (double(q) < t) throw std::logic_error("q below threshold after rounding");
  if (double(q) > 2.0 * t) throw std::logic_error("q exceeds 8 k r ln k");
  if (r > q - 1) throw std::logic_error("fewer classes than colours");
  return q;
}

struct MainBound {
  std::uint64_t q = 0;
  std::uint64_t bound = 0;  ///< q^3
  double cap = 0;           ///< (8 k r ln k)^3
};

inline MainBound bound_main(std::uint64_t k, std::uint64_t r, SearchMode mode = SearchMode::prime) {
  const std::uint64_t q = find_q(k, r, mode);
  if (q > 2'642'245) throw OutOfRange("q^3 overflows 64 bits");
  if (!lemma_conditions(q, k, r).all())
    throw ConditionsFailed("packing lemma hypotheses fail for q = " + std::to_string(q));
  const double c = 2.0 * threshold(k, r);
  return {q, q * q * q, c * c * c};
}

inline std::uint64_t bound_fglps(std::uint64_t k, std::uint64_t r) {
  detail::require_domain(k, r);
  const std::uint64_t k3 = k * k * k;
  const long double exact = 8.0L * (long double)(k3) * k3 * r * r * r;
  if (exact > (long double)std::numeric_limits<std::uint64_t>::max())
    throw OutOfRange("8 k^6 r^3 overflows 64 bits");
  return 8 * k3 * k3 * r * r * r;
}

/// A bound whose leading constant the literature leaves unspecified.
struct ConstantBound {
  double value = 0;
  double constant = 1;
  bool constant_unspecified = true;
};

struct HrsBound {
  ConstantBound bound;
  bool applicable = false;  ///< r < k^2
};

inline HrsBound bound_hrs(std::uint64_t k, std::uint64_t r, double C = 1.0) {
  if (k < 2 || r < 2) throw OutOfRange("bound_hrs requires k >= 2 and r >= 2");
  if (!(C > 0)) throw OutOfRange("constant must be positive");
  const double kd = double(k), rd = double(r);
  const double a = rd * std::log(rd), b = kd * std::log(kd);
  return {{C * a * a * a * b * b, C, true}, r < k * k};
}

inline ConstantBound bound_bbl(std::uint64_t k, std::uint64_t r, double C = 1.0) {
  detail::require_domain(k, r);
  if (!(C > 0)) throw OutOfRange("constant must be positive");
  return {C * std::pow(double(k), 5.0) * std::pow(double(r), 2.5), C, true};
}

struct Eq1Range {
  ConstantBound lower;  ///< c_k r^2 ln r / ln ln r
  ConstantBound upper;  ///< C_k r^2 (ln r)^(8 k^2)
};

inline Eq1Range eq1_range(std::uint64_t k, std::uint64_t r, double c_k = 1.0, double C_k = 1.0) {
  if (k < 2) throw OutOfRange("k must be >= 2");
  if (r < 3) throw OutOfRange("r must exceed e so that ln ln r > 0");
  if (!(c_k > 0) || !(C_k > 0)) throw OutOfRange("constants must be positive");
  const double rd = double(r), lr = std::log(rd);
  return {{c_k * rd * rd * lr / std::log(lr), c_k, true},
          {C_k * rd * rd * std::pow(lr, 8.0 * double(k) * double(k)), C_k, true}};
}

struct Constants {
  double hrs = 1.0;
  double bbl = 1.0;
  double c_k = 1.0;
  double C_k = 1.0;
};

enum class Winner { main, fglps, tie };

inline const char* to_string(Winner w) {
  switch (w) {
    case Winner::main: return "bound_main";
    case Winner::fglps: return "bound_fglps";
    case Winner::tie: return "tie";
  }
  return "unknown";
}

struct BoundReport {
  std::uint64_t k = 0;
  std::uint64_t r = 0;
  double threshold = 0;
  std::uint64_t q = 0;
  std::uint64_t bound_main = 0;
  double cap_main = 0;
  std::uint64_t bound_fglps = 0;
  HrsBound hrs;
  ConstantBound bbl;
  Eq1Range eq1;
  LemmaConditions conditions;
  Winner winner = Winner::tie;  ///< among fully specified bounds only
};

inline BoundReport compare(std::uint64_t k, std::uint64_t r, const Constants& c = {}) {
  BoundReport rep;
  rep.k = k;
  rep.r = r;
  rep.threshold = threshold(k, r);
  const MainBound m = bound_main(k, r);
  rep.q = m.q;
  rep.bound_main = m.bound;
  rep.cap_main = m.cap;
  rep.bound_fglps = bound_fglps(k, r);
  rep.hrs = bound_hrs(k, r, c.hrs);
  rep.bbl = bound_bbl(k, r, c.bbl);
  rep.eq1 = eq1_range(k, r, c.c_k, c.C_k);
  rep.conditions = lemma_conditions(m.q, k, r);
  rep.winner = rep.bound_main < rep.bound_fglps   ? Winner::main
               : rep.bound_fglps < rep.bound_main ? Winner::fglps
                                                  : Winner::tie;
  return rep;
}

// ---------------------------------------------------------------------------
// Exponent analysis
// ---------------------------------------------------------------------------

/// high_t: order (q, q^alpha); high_s: order (q^alpha, q).
enum class Orientation { high_t, high_s };

inline const char* to_string(Orientation o) { return o == Orientation::high_t ? "high-t" : "high-s"; }

struct ExponentReport {
  double alpha = 1;
  Orientation orientation = Orientation::high_t;
  double k_exponent = 0;
  double r_exponent = 0;
  double total_degree = 0;
};

/// Exponents of the lower bound |P| = Omega(k^a r^b) forced on any packing of
/// triangle-free partial linear spaces of the given order shape.
inline ExponentReport exponent_analysis(double alpha, Orientation o) {
  if (!(alpha >= 1.0)) throw AlphaOutOfRange("alpha must be >= 1");
  ExponentReport e{alpha, o, 0, 0, 0};
  if (o == Orientation::high_t) {
    e.k_exponent = 2.0 + alpha;
    e.r_exponent = 2.0 + alpha;
  } else {
    e.k_exponent = 2.0 * alpha + 1.0;
    e.r_exponent = 2.0 + 1.0 / alpha;
  }
  e.total_degree = e.k_exponent + e.r_exponent;
  return e;
}

/// Minimum total degree over both orientations and every alpha in the grid;
/// ties keep the first grid entry.
inline std::pair<double, double> min_total_degree(std::span<const double> grid) {
  if (grid.empty()) throw AlphaOutOfRange("empty alpha grid");
  double best_alpha = 0, best = std::numeric_limits<double>::infinity();
  for (double a : grid) {
    for (auto o : {Orientation::high_t, Orientation::high_s}) {
      const double d = exponent_analysis(a, o).total_degree;
      if (d < best) {
        best = d;
        best_alpha = a;
      }
    }
  }
  return {best_alpha, best};
}

}  // namespace qpack::bounds
