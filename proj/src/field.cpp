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

#include "skewreduce/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "skewreduce/random.hpp"

namespace skewreduce {
namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp,
                          std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

// --- dense polynomials over F_p, little-endian digit vectors ---------------
// Only used at construction time (modulus search, irreducibility, tables),
// so the quadratic algorithms are fine.

using FpPoly = std::vector<std::uint8_t>;

int fp_deg(const FpPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint8_t>((r[i + j] + a[i] * b[j]) % p);
  }
  fp_trim(r);
  return r;
}

// f must be monic
FpPoly fp_mod(FpPoly a, const FpPoly& f, std::uint32_t p) {
  const int df = fp_deg(f);
  int da = fp_deg(a);
  while (da >= df) {
    const std::uint32_t c = a[static_cast<std::size_t>(da)];
    if (c != 0) {
      for (int j = 0; j <= df; ++j) {
        auto& tgt = a[static_cast<std::size_t>(da - df + j)];
        tgt = static_cast<std::uint8_t>(
            (tgt + p * p - c * f[static_cast<std::size_t>(j)] % p) % p);
      }
    }
    --da;
  }
  fp_trim(a);
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f,
                 std::uint32_t p) {
  return fp_mod(fp_mul(a, b, p), f, p);
}

FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& f,
                 std::uint32_t p) {
  FpPoly r{1};
  base = fp_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = fp_mulmod(r, base, f, p);
    base = fp_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] = static_cast<std::uint8_t>((a[i] + p - b[i]) % p);
  fp_trim(a);
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint32_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    // make b monic so fp_mod applies
    const std::uint8_t lead = b.back();
    if (lead != 1) {
      // scale by lead^{-1} mod p
      std::uint32_t li = 1;
      for (std::uint32_t x = 1; x < p; ++x)
        if (x * lead % p == 1) {
          li = x;
          break;
        }
      for (auto& c : b) c = static_cast<std::uint8_t>(c * li % p);
    }
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<std::uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

// x^{p^d} == x mod f, and gcd(x^{p^{d/r}} - x, f) constant for prime r | d.
bool fp_is_irreducible(const FpPoly& f, std::uint32_t p) {
  const int d = fp_deg(f);
  if (d < 1) return false;
  if (d == 1) return true;
  const FpPoly x{0, 1};
  std::vector<FpPoly> frob(static_cast<std::size_t>(d) + 1);
  frob[0] = x;
  for (int k = 1; k <= d; ++k)
    frob[static_cast<std::size_t>(k)] =
        fp_powmod(frob[static_cast<std::size_t>(k - 1)], p, f, p);
  if (frob[static_cast<std::size_t>(d)] != x) return false;
  for (std::uint32_t r : prime_factors(static_cast<std::uint64_t>(d))) {
    FpPoly g = fp_gcd(fp_sub(frob[static_cast<std::size_t>(d) / r], x, p), f, p);
    if (fp_deg(g) != 0) return false;
  }
  return true;
}

FpPoly digits_of_value(std::uint64_t v, std::uint32_t p, std::uint32_t len) {
  FpPoly dg(len, 0);
  for (std::uint32_t i = 0; i < len && v > 0; ++i) {
    dg[i] = static_cast<std::uint8_t>(v % p);
    v /= p;
  }
  return dg;
}

std::uint64_t value_of_digits(const FpPoly& dg, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = dg.size(); i-- > 0;) v = v * p + dg[i];
  return v;
}

FpPoly canonical_irreducible(std::uint32_t p, std::uint32_t d) {
  const std::uint64_t bound = checked_pow(p, d, kMaxFieldOrder);
  for (std::uint64_t v = 0; v < bound; ++v) {
    FpPoly f = digits_of_value(v, p, d);
    f.resize(d + 1, 0);
    f[d] = 1;
    if (fp_is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

// --- FieldContext -----------------------------------------------------------

std::shared_ptr<const FieldContext> FieldContext::create(
    std::uint32_t p, std::uint32_t u, std::uint32_t m,
    std::optional<std::vector<std::uint8_t>> modulus,
    std::optional<FieldBackend> backend) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (u < 1 || m < 1) throw std::invalid_argument("u and m must be >= 1");
  const std::uint32_t d = u * m;
  const std::uint64_t order = checked_pow(p, d, kMaxFieldOrder);
  if (order > kMaxFieldOrder)
    throw std::invalid_argument("field order exceeds supported bound");

  auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
  ctx->p_ = p;
  ctx->u_ = u;
  ctx->m_ = m;
  ctx->d_ = d;
  ctx->q_ = checked_pow(p, u, kMaxFieldOrder);
  ctx->order_ = order;

  if (modulus) {
    FpPoly f = *modulus;
    if (fp_deg(f) != static_cast<int>(d) || f.size() != d + 1 || f[d] != 1)
      throw std::invalid_argument("modulus must be monic of degree u*m");
    for (auto c : f)
      if (c >= p) throw std::invalid_argument("modulus digit out of range");
    if (!fp_is_irreducible(f, p))
      throw std::invalid_argument("modulus is reducible");
    ctx->modulus_ = std::move(f);
  } else {
    ctx->modulus_ = canonical_irreducible(p, d);
  }

  if (backend) {
    if (*backend == FieldBackend::kZechLog && order > kZechTableBound)
      throw std::invalid_argument("field too large for Zech-log tables");
    ctx->backend_ = *backend;
  } else {
    ctx->backend_ = order <= kZechTableBound ? FieldBackend::kZechLog
                                             : FieldBackend::kPolynomialBasis;
  }

  ctx->build_tables();
  return ctx;
}

bool FieldContext::same_field(const FieldContext& other) const {
  return p_ == other.p_ && u_ == other.u_ && m_ == other.m_ &&
         modulus_ == other.modulus_;
}

FieldElement FieldContext::from_value(std::uint64_t v) const {
  if (v >= order_) throw std::out_of_range("element value out of range");
  return {static_cast<std::uint32_t>(v)};
}

std::uint8_t FieldContext::digit(FieldElement a, std::uint32_t idx) const {
  std::uint64_t v = a.value;
  for (std::uint32_t i = 0; i < idx; ++i) v /= p_;
  return static_cast<std::uint8_t>(v % p_);
}

std::vector<std::uint8_t> FieldContext::digits(FieldElement a) const {
  return digits_of_value(a.value, p_, d_);
}

FieldElement FieldContext::from_digits(
    const std::vector<std::uint8_t>& dg) const {
  if (dg.size() > d_) throw std::invalid_argument("too many digits");
  for (auto c : dg)
    if (c >= p_) throw std::invalid_argument("digit out of range");
  return {static_cast<std::uint32_t>(value_of_digits(dg, p_))};
}

FieldElement FieldContext::add(FieldElement a, FieldElement b) const {
  if (p_ == 2) return {a.value ^ b.value};
  std::uint64_t av = a.value, bv = b.value, r = 0, scale = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    r += (av % p_ + bv % p_) % p_ * scale;
    av /= p_;
    bv /= p_;
    scale *= p_;
  }
  return {static_cast<std::uint32_t>(r)};
}

FieldElement FieldContext::neg(FieldElement a) const {
  if (p_ == 2) return a;
  std::uint64_t av = a.value, r = 0, scale = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    r += (p_ - av % p_) % p_ * scale;
    av /= p_;
    scale *= p_;
  }
  return {static_cast<std::uint32_t>(r)};
}

FieldElement FieldContext::sub(FieldElement a, FieldElement b) const {
  if (p_ == 2) return {a.value ^ b.value};
  return add(a, neg(b));
}

FieldElement FieldContext::mul_polybasis(FieldElement a, FieldElement b) const {
  if (a.value == 0 || b.value == 0) return {};
  if (p_ == 2) {
    // carry-less multiply with on-the-fly reduction by the modulus
    std::uint32_t acc = 0, shifted = b.value;
    const std::uint32_t top = std::uint32_t{1} << d_;
    for (std::uint32_t bits = a.value; bits != 0; bits >>= 1) {
      if (bits & 1) acc ^= shifted;
      shifted <<= 1;
      if (shifted & top) shifted ^= modulus_bits_;
    }
    return {acc};
  }
  FpPoly prod = fp_mulmod(digits(a), digits(b), modulus_, p_);
  return {static_cast<std::uint32_t>(value_of_digits(prod, p_))};
}

FieldElement FieldContext::pow_polybasis(FieldElement a, std::uint64_t e) const {
  FieldElement r = one(), base = a;
  while (e > 0) {
    if (e & 1) r = mul_polybasis(r, base);
    base = mul_polybasis(base, base);
    e >>= 1;
  }
  return r;
}

FieldElement FieldContext::mul(FieldElement a, FieldElement b) const {
  if (backend_ == FieldBackend::kZechLog) {
    if (a.value == 0 || b.value == 0) return {};
    return {exp_[log_[a.value] + log_[b.value]]};
  }
  return mul_polybasis(a, b);
}

FieldElement FieldContext::inv(FieldElement a) const {
  if (a.value == 0) throw std::domain_error("inversion of zero");
  if (backend_ == FieldBackend::kZechLog) {
    const std::uint64_t g = order_ - 1;
    return {exp_[(g - log_[a.value]) % g]};
  }
  return pow_polybasis(a, order_ - 2);
}

FieldElement FieldContext::pow(FieldElement a, std::uint64_t e) const {
  if (backend_ != FieldBackend::kZechLog) return pow_polybasis(a, e);
  if (a.value == 0) return e == 0 ? one() : zero();
  const std::uint64_t g = order_ - 1;
  const std::uint64_t l = log_[a.value] % g;
  std::uint64_t le = 0;
  // l*(e mod g) without overflow: l < 2^20, e mod g < 2^20
  le = l * (e % g) % g;
  return {exp_[le]};
}

FieldElement FieldContext::frobenius(FieldElement a, std::uint64_t i) const {
  i %= m_;
  if (i == 0 || a.value == 0) return a;
  if (backend_ == FieldBackend::kZechLog) {
    const std::uint64_t g = order_ - 1;
    return {exp_[log_[a.value] * q_pow_mod_[i] % g]};
  }
  // apply the precomputed F_p-linear map for sigma^i
  const auto& tab = sigma_tab_[i];
  if (p_ == 2) {
    std::uint32_t acc = 0;
    std::uint32_t bits = a.value;
    for (std::uint32_t j = 0; bits != 0; ++j, bits >>= 1)
      if (bits & 1) acc ^= tab[j].value;
    return {acc};
  }
  FieldElement acc = zero();
  std::uint64_t v = a.value;
  for (std::uint32_t j = 0; j < d_ && v > 0; ++j, v /= p_) {
    std::uint8_t c = static_cast<std::uint8_t>(v % p_);
    for (std::uint8_t rep = 0; rep < c; ++rep) acc = add(acc, tab[j]);
  }
  return acc;
}

void FieldContext::build_tables() {
  if (p_ == 2) {
    std::uint32_t bits = 0;
    for (std::uint32_t j = 0; j <= d_; ++j)
      if (modulus_[j]) bits |= std::uint32_t{1} << j;
    modulus_bits_ = bits;
  }

  // sigma^i on the basis monomials, i < m. sigma^i(z^j) = (sigma^{i-1}(z^j))^q.
  sigma_tab_.assign(m_, std::vector<FieldElement>(d_));
  for (std::uint32_t j = 0; j < d_; ++j)
    sigma_tab_[0][j] = {static_cast<std::uint32_t>(
        checked_pow(p_, j, kMaxFieldOrder))};
  for (std::uint32_t i = 1; i < m_; ++i)
    for (std::uint32_t j = 0; j < d_; ++j)
      sigma_tab_[i][j] = pow_polybasis(sigma_tab_[i - 1][j], q_);

  // F_p-basis of the fixed field of sigma: kernel of (sigma - id)
  {
    std::vector<std::vector<std::uint8_t>> rows(d_,
                                                std::vector<std::uint8_t>(d_));
    // row e, column j: digit e of sigma(z^j) - z^j (zero map when sigma = id)
    for (std::uint32_t j = 0; j < d_; ++j) {
      const FieldElement diff =
          m_ > 1 ? sub(sigma_tab_[1][j], sigma_tab_[0][j]) : zero();
      for (std::uint32_t e = 0; e < d_; ++e) rows[e][j] = digit(diff, e);
    }
    // kernel via Gauss-Jordan over F_p
    std::vector<int> pivot_of_col(d_, -1);
    std::uint32_t prow = 0;
    auto inv_mod_p = [&](std::uint32_t x) {
      for (std::uint32_t y = 1; y < p_; ++y)
        if (x * y % p_ == 1) return y;
      return 0u;
    };
    for (std::uint32_t col = 0; col < d_ && prow < d_; ++col) {
      std::uint32_t sel = prow;
      while (sel < d_ && rows[sel][col] == 0) ++sel;
      if (sel == d_) continue;
      std::swap(rows[sel], rows[prow]);
      const std::uint32_t s = inv_mod_p(rows[prow][col]);
      for (auto& c : rows[prow]) c = static_cast<std::uint8_t>(c * s % p_);
      for (std::uint32_t r = 0; r < d_; ++r) {
        if (r == prow || rows[r][col] == 0) continue;
        const std::uint32_t f = rows[r][col];
        for (std::uint32_t c = 0; c < d_; ++c)
          rows[r][c] = static_cast<std::uint8_t>(
              (rows[r][c] + p_ * p_ - f * rows[prow][c] % p_) % p_);
      }
      pivot_of_col[col] = static_cast<int>(prow);
      ++prow;
    }
    subfield_basis_.clear();
    for (std::uint32_t freecol = 0; freecol < d_; ++freecol) {
      if (pivot_of_col[freecol] >= 0) continue;
      std::vector<std::uint8_t> vec(d_, 0);
      vec[freecol] = 1;
      for (std::uint32_t col = 0; col < d_; ++col) {
        if (pivot_of_col[col] < 0) continue;
        const std::uint32_t r = static_cast<std::uint32_t>(pivot_of_col[col]);
        vec[col] = static_cast<std::uint8_t>(
            (p_ - rows[r][freecol] % p_) % p_);
      }
      subfield_basis_.push_back(from_digits(vec));
    }
    if (subfield_basis_.size() != u_)
      throw std::logic_error("subfield basis has unexpected dimension");
  }

  if (backend_ != FieldBackend::kZechLog) return;

  // discrete-log tables
  const std::uint64_t g = order_ - 1;
  const auto factors = prime_factors(g);
  FieldElement gen = zero();
  for (std::uint64_t cand = 1; cand < order_; ++cand) {
    FieldElement c{static_cast<std::uint32_t>(cand)};
    bool ok = true;
    for (auto r : factors)
      if (pow_polybasis(c, g / r).value == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen = c;
      break;
    }
  }
  if (gen.value == 0 && g > 1)
    throw std::logic_error("no multiplicative generator found");
  if (g == 1) gen = one();

  exp_.assign(2 * g, 0);
  log_.assign(order_, 0);
  FieldElement cur = one();
  for (std::uint64_t i = 0; i < g; ++i) {
    exp_[i] = cur.value;
    log_[cur.value] = static_cast<std::uint32_t>(i);
    cur = mul_polybasis(cur, gen);
  }
  if (cur.value != 1) throw std::logic_error("generator order mismatch");
  for (std::uint64_t i = 0; i < g; ++i) exp_[g + i] = exp_[i];

  q_pow_mod_.assign(m_, 1);
  for (std::uint32_t i = 1; i < m_; ++i)
    q_pow_mod_[i] = q_pow_mod_[i - 1] * (q_ % g) % g;
}

// --- linear algebra ---------------------------------------------------------

LinearSystemResult linear_solve(const FieldContext& field,
                                std::vector<std::vector<FieldElement>> a,
                                std::vector<FieldElement> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("dimension mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");

  std::vector<int> pivot_of_col(cols, -1);
  std::size_t prow = 0;
  for (std::size_t col = 0; col < cols && prow < rows; ++col) {
    std::size_t sel = prow;
    while (sel < rows && a[sel][col].value == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[prow]);
    std::swap(b[sel], b[prow]);
    const FieldElement piv_inv = field.inv(a[prow][col]);
    for (std::size_t c = col; c < cols; ++c)
      a[prow][c] = field.mul(a[prow][c], piv_inv);
    b[prow] = field.mul(b[prow], piv_inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == prow || a[r][col].value == 0) continue;
      const FieldElement f = a[r][col];
      for (std::size_t c = col; c < cols; ++c)
        a[r][c] = field.sub(a[r][c], field.mul(f, a[prow][c]));
      b[r] = field.sub(b[r], field.mul(f, b[prow]));
    }
    pivot_of_col[col] = static_cast<int>(prow);
    ++prow;
  }

  LinearSystemResult res;
  res.rank = static_cast<std::uint32_t>(prow);
  for (std::size_t r = prow; r < rows; ++r)
    if (b[r].value != 0) {
      res.consistent = false;
      return res;
    }
  res.consistent = true;
  res.unique = res.rank == cols;
  res.solution.assign(cols, FieldElement{});
  for (std::size_t col = 0; col < cols; ++col)
    if (pivot_of_col[col] >= 0)
      res.solution[col] = b[static_cast<std::size_t>(pivot_of_col[col])];
  return res;
}

// --- FpEliminator -----------------------------------------------------------

void FpEliminator::reduce(std::vector<std::uint8_t>& row) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t lead = leads_[k];
    if (lead >= row.size() || row[lead] == 0) continue;
    const std::uint32_t f = row[lead];
    const auto& basis = rows_[k];
    for (std::size_t c = lead; c < row.size() && c < basis.size(); ++c)
      row[c] = static_cast<std::uint8_t>(
          (row[c] + p_ * p_ - f * basis[c] % p_) % p_);
  }
}

bool FpEliminator::insert(std::vector<std::uint8_t> row) {
  reduce(row);
  std::size_t lead = row.size();
  for (std::size_t c = 0; c < row.size(); ++c)
    if (row[c] != 0) {
      lead = c;
      break;
    }
  if (lead == row.size()) return false;
  // normalize leading digit to 1
  std::uint32_t li = 1;
  for (std::uint32_t y = 1; y < p_; ++y)
    if (row[lead] * y % p_ == 1) {
      li = y;
      break;
    }
  for (auto& c : row) c = static_cast<std::uint8_t>(c * li % p_);
  // back-reduce existing rows so the basis stays fully inter-reduced, which
  // keeps reduce() correct as a single ascending pass
  for (auto& basis : rows_) {
    if (lead >= basis.size() || basis[lead] == 0) continue;
    const std::uint32_t f = basis[lead];
    for (std::size_t c = lead; c < basis.size() && c < row.size(); ++c)
      basis[c] = static_cast<std::uint8_t>(
          (basis[c] + p_ * p_ - f * row[c] % p_) % p_);
  }
  // keep rows sorted by leading index so reduce() is a single pass
  std::size_t pos = 0;
  while (pos < leads_.size() && leads_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
  leads_.insert(leads_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
  return true;
}

bool FpEliminator::contains(std::vector<std::uint8_t> row) const {
  reduce(row);
  return std::all_of(row.begin(), row.end(),
                     [](std::uint8_t c) { return c == 0; });
}

// --- random independent sets ------------------------------------------------

std::vector<FieldElement> random_li_set(const FieldPtr& field, std::uint32_t n,
                                        std::uint64_t seed) {
  if (n > field->extension_degree())
    throw std::invalid_argument("cannot pick more than m independent elements");
  std::mt19937_64 rng(seed);
  FpEliminator span(field->characteristic());
  std::vector<FieldElement> out;
  while (out.size() < n) {
    const FieldElement cand = uniform_nonzero(*field, rng);
    if (span.contains(field->digits(cand))) continue;
    for (FieldElement beta : field->subfield_basis()) {
      const bool grew = span.insert(field->digits(field->mul(beta, cand)));
      if (!grew) throw std::logic_error("independence bookkeeping failed");
    }
    out.push_back(cand);
  }
  return out;
}

}  // namespace skewreduce
