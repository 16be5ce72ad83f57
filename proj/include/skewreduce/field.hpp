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

#ifndef SKEWREDUCE_FIELD_HPP
#define SKEWREDUCE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace skewreduce {

/// Element of F_{q^m}. The value is the base-p integer whose digits are the
/// polynomial-basis coordinates of the element, little-endian. 0 and 1 encode
/// the additive and multiplicative identities.
struct FieldElement {
  std::uint32_t value = 0;
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
};

enum class FieldBackend { kZechLog, kPolynomialBasis };

/// Largest field order for which full discrete-log tables are built.
inline constexpr std::uint64_t kZechTableBound = std::uint64_t{1} << 20;

/// Largest supported field order (encoding must fit 32 bits with headroom).
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 30;

/// The field F_{q^m} with q = p^u, together with the automorphism
/// sigma: a -> a^q and constant-time application of sigma^i.
///
/// Immutable after construction; all operations are re-entrant and safe to
/// share across threads.
class FieldContext {
 public:
  /// Builds a field context. When no modulus is given, the lexicographically
  /// least monic irreducible polynomial of degree u*m over F_p is selected
  /// (ordered by the base-p integer encoding of its non-leading coefficients).
  /// When no backend is given, Zech-log tables are used iff q^m fits the
  /// table bound; otherwise polynomial-basis arithmetic with precomputed
  /// sigma^i maps.
  static std::shared_ptr<const FieldContext> create(
      std::uint32_t p, std::uint32_t u, std::uint32_t m,
      std::optional<std::vector<std::uint8_t>> modulus = std::nullopt,
      std::optional<FieldBackend> backend = std::nullopt);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t subfield_exponent() const { return u_; }
  std::uint32_t extension_degree() const { return m_; }
  std::uint32_t degree_over_prime() const { return d_; }
  std::uint64_t subfield_order() const { return q_; }
  std::uint64_t order() const { return order_; }
  /// Modulus coefficients over F_p, little-endian, length u*m + 1, monic.
  const std::vector<std::uint8_t>& modulus() const { return modulus_; }
  FieldBackend backend() const { return backend_; }

  /// Structural equality: same (p, u, m, modulus). Backend is irrelevant to
  /// the encoded arithmetic.
  bool same_field(const FieldContext& other) const;

  FieldElement zero() const { return {}; }
  FieldElement one() const { return {1}; }
  FieldElement from_value(std::uint64_t v) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  /// sigma^i(a) = a^(q^i). Amortized O(1) per call: discrete logs are scaled
  /// by a precomputed q^i mod (q^m - 1), or a precomputed F_p-linear map for
  /// sigma^i is applied.
  FieldElement frobenius(FieldElement a, std::uint64_t i = 1) const;

  std::uint8_t digit(FieldElement a, std::uint32_t idx) const;
  std::vector<std::uint8_t> digits(FieldElement a) const;
  FieldElement from_digits(const std::vector<std::uint8_t>& dg) const;

  /// F_p-basis of the subfield fixed by sigma (that is, of F_q). Size u.
  const std::vector<FieldElement>& subfield_basis() const {
    return subfield_basis_;
  }

  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

 private:
  FieldContext() = default;
  void build_tables();

  FieldElement mul_polybasis(FieldElement a, FieldElement b) const;
  FieldElement pow_polybasis(FieldElement a, std::uint64_t e) const;

  std::uint32_t p_ = 0, u_ = 0, m_ = 0, d_ = 0;
  std::uint64_t q_ = 0, order_ = 0;
  std::vector<std::uint8_t> modulus_;
  FieldBackend backend_ = FieldBackend::kPolynomialBasis;

  // char-2 fast path
  std::uint32_t modulus_bits_ = 0;

  // Zech-log tables (backend kZechLog)
  std::vector<std::uint32_t> exp_;  // size 2*(order-1)
  std::vector<std::uint32_t> log_;  // size order, log_[0] unused
  std::vector<std::uint64_t> q_pow_mod_;  // q^i mod (order-1), i < m

  // sigma^i images of the basis monomials z^j, i < m, j < d
  std::vector<std::vector<FieldElement>> sigma_tab_;

  std::vector<FieldElement> subfield_basis_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

struct LinearSystemResult {
  bool consistent = false;
  std::vector<FieldElement> solution;  // one solution when consistent
  std::uint32_t rank = 0;
  bool unique = false;
};

/// Gaussian elimination with deterministic pivoting (first nonzero row in
/// column order). Free variables are set to zero in the returned solution.
LinearSystemResult linear_solve(const FieldContext& field,
                                std::vector<std::vector<FieldElement>> a,
                                std::vector<FieldElement> b);

/// Incremental row-echelon basis over F_p, used for F_q-independence checks.
class FpEliminator {
 public:
  explicit FpEliminator(std::uint32_t p) : p_(p) {}

  /// Reduces the row against the basis; inserts the residual when nonzero.
  /// Returns true when the rank grew.
  bool insert(std::vector<std::uint8_t> row);

  /// True iff the row lies in the span of the inserted rows.
  bool contains(std::vector<std::uint8_t> row) const;

  std::uint32_t rank() const { return static_cast<std::uint32_t>(rows_.size()); }

 private:
  void reduce(std::vector<std::uint8_t>& row) const;

  std::uint32_t p_;
  std::vector<std::vector<std::uint8_t>> rows_;  // each with leading 1
  std::vector<std::size_t> leads_;
};

/// n field elements linearly independent over F_q, deterministic per seed.
/// Requires n <= m.
std::vector<FieldElement> random_li_set(const FieldPtr& field, std::uint32_t n,
                                        std::uint64_t seed);

}  // namespace skewreduce

#endif  // SKEWREDUCE_FIELD_HPP
