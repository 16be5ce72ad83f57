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

#include "skewreduce/skew_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skewreduce {
namespace {

const FieldPtr& common_field(const SkewPoly& a, const SkewPoly& b) {
  if (!a.field() || !b.field())
    throw std::invalid_argument("operation on a value without a field");
  if (a.field() != b.field() && !a.field()->same_field(*b.field()))
    throw std::invalid_argument("operands live in different fields");
  return a.field();
}

// trims both window ends, adjusting the offset
SkewPoly normalized(FieldPtr field, int offset,
                    std::vector<FieldElement> window) {
  std::size_t lo = 0;
  while (lo < window.size() && window[lo].value == 0) ++lo;
  if (lo == window.size()) return SkewPoly::zero(std::move(field));
  std::size_t hi = window.size();
  while (window[hi - 1].value == 0) --hi;
  if (lo > 0 || hi < window.size())
    window = std::vector<FieldElement>(
        window.begin() + static_cast<std::ptrdiff_t>(lo),
        window.begin() + static_cast<std::ptrdiff_t>(hi));
  return SkewPoly::from_window(std::move(field), offset + static_cast<int>(lo),
                               std::move(window));
}

}  // namespace

SkewPoly SkewPoly::one(FieldPtr field) { return constant(std::move(field), {1}); }

SkewPoly SkewPoly::constant(FieldPtr field, FieldElement c) {
  if (c.value == 0) return zero(std::move(field));
  return SkewPoly(std::move(field), 0, {c});
}

SkewPoly SkewPoly::monomial(FieldPtr field, FieldElement c, int power) {
  if (power < 0) throw std::invalid_argument("negative monomial power");
  if (c.value == 0) return zero(std::move(field));
  return SkewPoly(std::move(field), power, {c});
}

SkewPoly SkewPoly::from_coeffs(FieldPtr field,
                               std::vector<FieldElement> coeffs) {
  return from_window(std::move(field), 0, std::move(coeffs));
}

SkewPoly SkewPoly::from_window(FieldPtr field, int offset,
                               std::vector<FieldElement> window) {
  if (!field) throw std::invalid_argument("null field");
  if (offset < 0) throw std::invalid_argument("negative window offset");
  for (const auto& c : window)
    if (c.value >= field->order())
      throw std::out_of_range("coefficient out of field range");
  const bool canonical = window.empty() ||
                         (window.front().value != 0 && window.back().value != 0);
  if (canonical && !window.empty())
    return SkewPoly(std::move(field), offset, std::move(window));
  if (window.empty()) return SkewPoly(std::move(field), 0, {});
  return normalized(std::move(field), offset, std::move(window));
}

bool operator==(const SkewPoly& a, const SkewPoly& b) {
  if (!a.field_ || !b.field_) return a.window_.empty() && b.window_.empty();
  return a.field_->same_field(*b.field_) && a.offset_ == b.offset_ &&
         a.window_ == b.window_;
}

std::string SkewPoly::to_string() const {
  if (window_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = window_.size(); i-- > 0;) {
    if (window_[i].value == 0) continue;
    if (!first) os << " + ";
    first = false;
    const int power = offset_ + static_cast<int>(i);
    if (power == 0 || window_[i].value != 1) os << window_[i].value;
    if (power > 0) {
      os << "x";
      if (power > 1) os << "^" << power;
    }
  }
  return os.str();
}

SkewPoly add(const SkewPoly& a, const SkewPoly& b) {
  const FieldPtr& f = common_field(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int lo = std::min(a.low_index(), b.low_index());
  const int hi = std::max(a.degree(), b.degree());
  std::vector<FieldElement> w(static_cast<std::size_t>(hi - lo + 1));
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    w[static_cast<std::size_t>(i)] = f->add(a.coeff(lo + i), b.coeff(lo + i));
  return SkewPoly::from_window(f, lo, std::move(w));
}

SkewPoly sub(const SkewPoly& a, const SkewPoly& b) {
  const FieldPtr& f = common_field(a, b);
  if (b.is_zero()) return a;
  const int lo = a.is_zero() ? b.low_index() : std::min(a.low_index(), b.low_index());
  const int hi = a.is_zero() ? b.degree() : std::max(a.degree(), b.degree());
  std::vector<FieldElement> w(static_cast<std::size_t>(hi - lo + 1));
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    w[static_cast<std::size_t>(i)] = f->sub(a.coeff(lo + i), b.coeff(lo + i));
  return SkewPoly::from_window(f, lo, std::move(w));
}

SkewPoly negate(const SkewPoly& a) {
  if (!a.field() || a.is_zero()) return a;
  std::vector<FieldElement> w = a.window();
  for (auto& c : w) c = a.field()->neg(c);
  return SkewPoly::from_window(a.field(), a.low_index(), std::move(w));
}

SkewPoly mul_naive(const SkewPoly& a, const SkewPoly& b) {
  const FieldPtr& f = common_field(a, b);
  if (a.is_zero() || b.is_zero()) return SkewPoly::zero(f);
  const auto& aw = a.window();
  const auto& bw = b.window();
  const int base = a.low_index() + b.low_index();
  std::vector<FieldElement> w(aw.size() + bw.size() - 1);
  for (std::size_t i = 0; i < aw.size(); ++i) {
    if (aw[i].value == 0) continue;
    const std::uint64_t twist =
        static_cast<std::uint64_t>(a.low_index()) + i;
    for (std::size_t j = 0; j < bw.size(); ++j) {
      if (bw[j].value == 0) continue;
      const FieldElement term = f->mul(aw[i], f->frobenius(bw[j], twist));
      w[i + j] = f->add(w[i + j], term);
    }
  }
  return SkewPoly::from_window(f, base, std::move(w));
}

SkewPoly shift_up(const SkewPoly& a, int k) {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (a.is_zero() || k == 0) return a;
  return SkewPoly::from_window(a.field(), a.low_index() + k, a.window());
}

SkewPoly coeffwise_frobenius(const SkewPoly& a, std::uint64_t k) {
  if (a.is_zero()) return a;
  std::vector<FieldElement> w = a.window();
  for (auto& c : w) c = a.field()->frobenius(c, k);
  return SkewPoly::from_window(a.field(), a.low_index(), std::move(w));
}

SkewPoly monomial_mul_left(FieldElement c, int delta, const SkewPoly& b) {
  if (!b.field()) throw std::invalid_argument("null field");
  if (delta < 0) throw std::invalid_argument("negative shift");
  const FieldPtr& f = b.field();
  if (c.value == 0 || b.is_zero()) return SkewPoly::zero(f);
  std::vector<FieldElement> w(b.window().size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (b.window()[j].value == 0) continue;
    w[j] = f->mul(c, f->frobenius(b.window()[j],
                                  static_cast<std::uint64_t>(delta)));
  }
  return SkewPoly::from_window(f, b.low_index() + delta, std::move(w));
}

SkewPoly monomial_mul_right(const SkewPoly& b, FieldElement c, int delta) {
  if (!b.field()) throw std::invalid_argument("null field");
  if (delta < 0) throw std::invalid_argument("negative shift");
  const FieldPtr& f = b.field();
  if (c.value == 0 || b.is_zero()) return SkewPoly::zero(f);
  std::vector<FieldElement> w(b.window().size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (b.window()[i].value == 0) continue;
    const std::uint64_t twist = static_cast<std::uint64_t>(b.low_index()) + i;
    w[i] = f->mul(b.window()[i], f->frobenius(c, twist));
  }
  return SkewPoly::from_window(f, b.low_index() + delta, std::move(w));
}

namespace {

// Karatsuba over the central variable y = x^m: since sigma^m = id on F_{q^m},
// x^s commutes with every coefficient whenever m divides s, and the classic
// three-product recombination applies verbatim to block slices of the window.
// Slices are taken at absolute powers that are multiples of m.
SkewPoly window_slice(const SkewPoly& a, int lo_abs, int hi_abs) {
  if (a.is_zero()) return a;
  const int from = std::max(lo_abs, a.low_index());
  const int to = std::min(hi_abs, a.degree() + 1);
  if (from >= to) return SkewPoly::zero(a.field());
  const auto& w = a.window();
  const std::size_t begin = static_cast<std::size_t>(from - a.low_index());
  const std::size_t end = static_cast<std::size_t>(to - a.low_index());
  return SkewPoly::from_window(
      a.field(), from,
      std::vector<FieldElement>(w.begin() + static_cast<std::ptrdiff_t>(begin),
                                w.begin() + static_cast<std::ptrdiff_t>(end)));
}

SkewPoly mul_karatsuba_rec(const SkewPoly& a, const SkewPoly& b,
                           std::uint32_t m) {
  if (a.is_zero() || b.is_zero()) return SkewPoly::zero(a.field());
  const int lo = std::min(a.low_index(), b.low_index());
  const int span = std::max(a.degree(), b.degree()) - lo + 1;
  if (span <= static_cast<int>(std::max<std::uint32_t>(2 * m, 32)) ||
      a.length() <= static_cast<int>(m) || b.length() <= static_cast<int>(m))
    return mul_naive(a, b);

  // absolute split point: a multiple of m near the middle of the joint span
  const int mi = static_cast<int>(m);
  int split = lo + span / 2;
  split -= split % mi;
  if (split <= lo || split > std::max(a.degree(), b.degree()))
    return mul_naive(a, b);

  const SkewPoly a_lo = window_slice(a, 0, split);
  const SkewPoly b_lo = window_slice(b, 0, split);
  // high halves shifted down by the (central) split power
  auto down = [&](const SkewPoly& p) {
    SkewPoly high = window_slice(p, split, p.degree() + 1);
    if (high.is_zero()) return high;
    return SkewPoly::from_window(p.field(), high.low_index() - split,
                                 high.window());
  };
  const SkewPoly a_hi = down(a);
  const SkewPoly b_hi = down(b);

  const SkewPoly p0 = mul_karatsuba_rec(a_lo, b_lo, m);
  const SkewPoly p2 = mul_karatsuba_rec(a_hi, b_hi, m);
  const SkewPoly p1 =
      sub(sub(mul_karatsuba_rec(add(a_lo, a_hi), add(b_lo, b_hi), m), p0), p2);

  SkewPoly r = add(p0, shift_up(p1, split));
  return add(r, shift_up(p2, 2 * split));
}

}  // namespace

SkewPoly mul(const SkewPoly& a, const SkewPoly& b, MulStrategy strategy) {
  switch (strategy) {
    case MulStrategy::kNaive:
      return mul_naive(a, b);
    case MulStrategy::kKaratsuba: {
      const FieldPtr& f = common_field(a, b);
      if (a.is_zero() || b.is_zero()) return SkewPoly::zero(f);
      return mul_karatsuba_rec(a, b, f->extension_degree());
    }
  }
  throw std::invalid_argument("unknown multiplication strategy");
}

SkewPoly short_product(const SkewPoly& a, const SkewPoly& b,
                       MulStrategy strategy) {
  const FieldPtr& f = common_field(a, b);
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("short_product requires nonzero inputs");
  // a = ta x^ea, b = tb x^eb with ta, tb supported from power 0:
  // a b = [ta sigma^ea(tb)] x^(ea+eb)
  const int ea = a.low_index();
  const int eb = b.low_index();
  const SkewPoly ta = SkewPoly::from_window(f, 0, a.window());
  const SkewPoly tb_twisted = coeffwise_frobenius(
      SkewPoly::from_window(f, 0, b.window()), static_cast<std::uint64_t>(ea));
  return shift_up(mul(ta, tb_twisted, strategy), ea + eb);
}

SkewPoly truncate(const SkewPoly& a, int t) {
  if (t < 0) throw std::invalid_argument("negative truncation depth");
  if (a.is_zero() || t >= a.length()) return a;
  if (t == 0) return SkewPoly::zero(a.field());
  const int keep_from = a.degree() - t + 1;
  return SkewPoly::from_window(
      a.field(), keep_from,
      std::vector<FieldElement>(
          a.window().end() - static_cast<std::ptrdiff_t>(t), a.window().end()));
}

DivisionResult divide(const SkewPoly& a, const SkewPoly& b,
                      DivisionSide side) {
  const FieldPtr& f = common_field(a, b);
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const int db = b.degree();
  const std::uint32_t m = f->extension_degree();
  const FieldElement lb_inv = f->inv(b.leading_coeff());

  SkewPoly r = a;
  SkewPoly q = SkewPoly::zero(f);
  while (!r.is_zero() && r.degree() >= db) {
    const int d = r.degree() - db;
    FieldElement c;
    SkewPoly step;
    if (side == DivisionSide::kRight) {
      // leading term of (c x^d) * b is c * sigma^d(lc(b)) x^{d+db}
      c = f->mul(r.leading_coeff(),
                 f->inv(f->frobenius(b.leading_coeff(),
                                     static_cast<std::uint64_t>(d))));
      step = monomial_mul_left(c, d, b);
    } else {
      // leading term of b * (c x^d) is lc(b) * sigma^{db}(c) x^{db+d}
      const FieldElement target = f->mul(lb_inv, r.leading_coeff());
      const std::uint64_t inv_pow =
          (m - static_cast<std::uint64_t>(db) % m) % m;
      c = f->frobenius(target, inv_pow);
      step = monomial_mul_right(b, c, d);
    }
    q = add(q, SkewPoly::monomial(f, c, d));
    r = sub(r, step);
  }
  return {std::move(q), std::move(r)};
}

FieldElement eval_operator(const SkewPoly& f, FieldElement alpha) {
  if (!f.field()) throw std::invalid_argument("null field");
  const auto& ctx = *f.field();
  FieldElement acc{};
  const auto& w = f.window();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].value == 0) continue;
    const std::uint64_t power = static_cast<std::uint64_t>(f.low_index()) + i;
    acc = ctx.add(acc, ctx.mul(w[i], ctx.frobenius(alpha, power)));
  }
  return acc;
}

SkewPoly annihilator(const FieldPtr& field,
                     const std::vector<FieldElement>& points) {
  if (!field) throw std::invalid_argument("null field");
  SkewPoly acc = SkewPoly::one(field);
  const std::uint64_t qm1 = field->subfield_order() - 1;
  for (FieldElement v : points) {
    const FieldElement beta = eval_operator(acc, v);
    if (beta.value == 0) continue;  // v already in the kernel's span
    // (x - beta^{q-1}) * acc
    const FieldElement c = field->pow(beta, qm1);
    const SkewPoly shifted = monomial_mul_left({1}, 1, acc);
    acc = sub(shifted, mul_naive(SkewPoly::constant(field, c), acc));
  }
  return acc;
}

SkewPoly interpolate(
    const FieldPtr& field,
    const std::vector<std::pair<FieldElement, FieldElement>>& points) {
  if (!field) throw std::invalid_argument("null field");
  const std::size_t n = points.size();
  std::vector<std::vector<FieldElement>> moore(
      n, std::vector<FieldElement>(n));
  std::vector<FieldElement> rhs(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i)
      moore[j][i] = field->frobenius(points[j].first, i);
    rhs[j] = points[j].second;
  }
  const LinearSystemResult res = linear_solve(*field, std::move(moore), rhs);
  if (!res.consistent || res.rank != n)
    throw std::invalid_argument(
        "interpolation points are dependent over the fixed subfield");
  return SkewPoly::from_coeffs(field, res.solution);
}

}  // namespace skewreduce
