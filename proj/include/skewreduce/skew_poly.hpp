/*
   Copyright 2026 The skewreduce authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SKEWREDUCE_SKEW_POLY_HPP
#define SKEWREDUCE_SKEW_POLY_HPP

#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "skewreduce/field.hpp"

namespace skewreduce {

/// Degree of the zero polynomial: a sentinel ordered below every integer that
/// can arise as a real degree, and far enough from INT_MIN that sums of a few
/// sentinels and degrees cannot wrap.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min() / 4;

inline constexpr bool is_neg_inf(int deg) { return deg <= kNegInfDegree / 2; }

/// Element of the skew polynomial ring F[x; sigma], where multiplication
/// follows x * a = sigma(a) * x.
///
/// Storage covers only the window between the lowest and highest nonzero
/// coefficient: window_[i] is the coefficient of x^(offset_ + i), and both
/// window ends are nonzero (the zero polynomial stores nothing). Arithmetic
/// therefore costs length, not degree: x^100000 + x^100001 is as cheap as
/// 1 + x, which is what makes accuracy-approximated reduction work.
///
/// Values are immutable in practice: every operation returns a new polynomial.
class SkewPoly {
 public:
  SkewPoly() = default;

  static SkewPoly zero(FieldPtr field) {
    return SkewPoly(std::move(field), 0, {});
  }
  static SkewPoly one(FieldPtr field);
  static SkewPoly constant(FieldPtr field, FieldElement c);
  static SkewPoly monomial(FieldPtr field, FieldElement c, int power);
  static SkewPoly variable(FieldPtr field) { return monomial(std::move(field), {1}, 1); }
  /// coeffs[i] is the coefficient of x^i; trailing/leading zeros are trimmed.
  static SkewPoly from_coeffs(FieldPtr field, std::vector<FieldElement> coeffs);
  /// window[i] is the coefficient of x^(offset + i).
  static SkewPoly from_window(FieldPtr field, int offset,
                              std::vector<FieldElement> window);

  const FieldPtr& field() const { return field_; }
  /// Stored coefficients, low to high; index i holds x^(low_index() + i).
  const std::vector<FieldElement>& window() const { return window_; }

  bool is_zero() const { return window_.empty(); }
  int degree() const {
    return window_.empty()
               ? kNegInfDegree
               : offset_ + static_cast<int>(window_.size()) - 1;
  }
  /// Power of the lowest nonzero coefficient; kNegInfDegree for zero.
  int low_index() const { return window_.empty() ? kNegInfDegree : offset_; }
  /// Number of coefficient positions from lowest to highest nonzero; 0 for 0.
  int length() const { return static_cast<int>(window_.size()); }
  /// Coefficient of x^i (absolute power).
  FieldElement coeff(int i) const {
    const int rel = i - offset_;
    return (window_.empty() || rel < 0 ||
            rel >= static_cast<int>(window_.size()))
               ? FieldElement{}
               : window_[static_cast<std::size_t>(rel)];
  }
  FieldElement leading_coeff() const {
    return window_.empty() ? FieldElement{} : window_.back();
  }

  friend bool operator==(const SkewPoly& a, const SkewPoly& b);
  friend bool operator!=(const SkewPoly& a, const SkewPoly& b) {
    return !(a == b);
  }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const SkewPoly& p) {
    return os << p.to_string();
  }

 private:
  SkewPoly(FieldPtr field, int offset, std::vector<FieldElement> window)
      : field_(std::move(field)), offset_(offset), window_(std::move(window)) {}

  FieldPtr field_;
  int offset_ = 0;
  std::vector<FieldElement> window_;
};

enum class MulStrategy { kNaive, kKaratsuba };
enum class DivisionSide { kRight, kLeft };

SkewPoly add(const SkewPoly& a, const SkewPoly& b);
SkewPoly sub(const SkewPoly& a, const SkewPoly& b);
SkewPoly negate(const SkewPoly& a);

/// Schoolbook product sum_{i,j} a_i * sigma^i(b_j) * x^{i+j}.
SkewPoly mul_naive(const SkewPoly& a, const SkewPoly& b);

/// Product under a pluggable strategy; every strategy returns exactly
/// mul_naive(a, b).
SkewPoly mul(const SkewPoly& a, const SkewPoly& b,
             MulStrategy strategy = MulStrategy::kNaive);

/// Length-aware product: with a = ta * x^(deg a - len a + 1) and likewise b,
/// computes [ta * sigma^(deg a - len a + 1)(tb)] shifted by the sum of the two
/// exponents. Cost depends on the lengths, not the degrees. Inputs must be
/// nonzero.
SkewPoly short_product(const SkewPoly& a, const SkewPoly& b,
                       MulStrategy strategy = MulStrategy::kNaive);

/// Accuracy approximation: keeps the t highest-power coefficients, zeroing
/// everything below. t = 0 gives zero; t >= len(a) gives a back.
SkewPoly truncate(const SkewPoly& a, int t);

/// a * x^k (no twist; x sits on the right).
SkewPoly shift_up(const SkewPoly& a, int k);

/// Coefficient-wise sigma^k; equals the conjugation x^k * a * x^{-k}.
SkewPoly coeffwise_frobenius(const SkewPoly& a, std::uint64_t k);

/// (c * x^delta) * b = sum_j c * sigma^delta(b_j) * x^(delta + j).
SkewPoly monomial_mul_left(FieldElement c, int delta, const SkewPoly& b);

/// b * (c * x^delta) = sum_i b_i * sigma^i(c) * x^(i + delta).
SkewPoly monomial_mul_right(const SkewPoly& b, FieldElement c, int delta);

struct DivisionResult {
  SkewPoly quotient;
  SkewPoly remainder;
};

/// Euclidean division. kRight: a = q*b + r; kLeft: a = b*q + r. In both cases
/// deg r < deg b, and (q, r) is unique.
DivisionResult divide(const SkewPoly& a, const SkewPoly& b, DivisionSide side);

/// Operator evaluation sum_i f_i * sigma^i(alpha). Additive and F_q-linear
/// in alpha.
FieldElement eval_operator(const SkewPoly& f, FieldElement alpha);

/// Monic polynomial of degree rank_{F_q}(points) vanishing on the F_q-span of
/// the given elements under operator evaluation.
SkewPoly annihilator(const FieldPtr& field,
                     const std::vector<FieldElement>& points);

/// The unique polynomial R with deg R < n and R(alpha_j) = y_j under operator
/// evaluation; the alpha_j must be linearly independent over F_q.
SkewPoly interpolate(
    const FieldPtr& field,
    const std::vector<std::pair<FieldElement, FieldElement>>& points);

inline SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
  return add(a, b);
}
inline SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) {
  return sub(a, b);
}
inline SkewPoly operator-(const SkewPoly& a) { return negate(a); }
inline SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
  return mul_naive(a, b);
}

}  // namespace skewreduce

#endif  // SKEWREDUCE_SKEW_POLY_HPP
