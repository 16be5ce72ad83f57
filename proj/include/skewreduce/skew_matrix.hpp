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

#ifndef SKEWREDUCE_SKEW_MATRIX_HPP
#define SKEWREDUCE_SKEW_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "skewreduce/skew_poly.hpp"

namespace skewreduce {

/// Row vector over F[x; sigma].
class SkewVector {
 public:
  SkewVector(FieldPtr field, std::vector<SkewPoly> entries);
  static SkewVector zeros(FieldPtr field, int n);

  const FieldPtr& field() const { return field_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const SkewPoly& operator[](int i) const {
    return entries_[static_cast<std::size_t>(i)];
  }
  SkewPoly& operator[](int i) { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<SkewPoly>& entries() const { return entries_; }

  bool is_zero() const;

  friend bool operator==(const SkewVector& a, const SkewVector& b);

 private:
  FieldPtr field_;
  std::vector<SkewPoly> entries_;
};

/// Matrix over F[x; sigma], stored row-wise. Rows all share one width.
class SkewMatrix {
 public:
  SkewMatrix(FieldPtr field, std::vector<SkewVector> rows);
  static SkewMatrix zeros(FieldPtr field, int rows, int cols);
  static SkewMatrix identity(FieldPtr field, int n);

  const FieldPtr& field() const { return field_; }
  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const SkewVector& row(int i) const {
    return rows_[static_cast<std::size_t>(i)];
  }
  SkewVector& row(int i) { return rows_[static_cast<std::size_t>(i)]; }
  const SkewPoly& at(int i, int j) const { return row(i)[j]; }
  SkewPoly& at(int i, int j) { return row(i)[j]; }

  friend bool operator==(const SkewMatrix& a, const SkewMatrix& b);
  friend bool operator!=(const SkewMatrix& a, const SkewMatrix& b) {
    return !(a == b);
  }

 private:
  FieldPtr field_;
  int cols_ = 0;
  std::vector<SkewVector> rows_;
};

// --- degrees, leading positions, lengths ------------------------------------

/// max_i deg v_i; sentinel for the zero vector.
int vector_degree(const SkewVector& v);

/// Rightmost position attaining the vector degree. Throws on a zero vector.
int leading_position(const SkewVector& v);

/// Entry at the leading position.
const SkewPoly& leading_term(const SkewVector& v);

/// max over nonzero entries of (deg v - deg v_i + len v_i); 0 for the zero
/// vector.
int vector_length(const SkewVector& v);

/// Sum of row degrees; the sentinel when any row is zero.
int matrix_degree(const SkewMatrix& m);

/// max_i len(row_i).
int matrix_length(const SkewMatrix& m);

bool has_zero_row(const SkewMatrix& m);

/// Entry i keeps depth max(0, t - (deg v - deg v_i)); negative depths clamp
/// to zero, wiping entries that sit too far below the vector degree.
SkewVector truncate_vector(const SkewVector& v, int t);

/// Row-wise vector truncation.
SkewMatrix truncate_matrix(const SkewMatrix& m, int t);

/// True iff all rows are nonzero and their leading positions are pairwise
/// distinct.
bool is_weak_popov(const SkewMatrix& m);

// --- simple transformations and reducers ------------------------------------

/// One factor (I - scale * x^shift * E_{target,source}) of a transformation.
struct ElementaryFactor {
  int target = 0;
  int source = 0;
  FieldElement scale;
  int shift = 0;
  friend bool operator==(const ElementaryFactor&,
                         const ElementaryFactor&) = default;
};

/// Accumulated unimodular transformation: the matrix equals the ordered
/// product of the factors applied to the identity (factors[0] first).
struct TransformRecord {
  SkewMatrix matrix;
  std::vector<ElementaryFactor> factors;

  static TransformRecord identity(FieldPtr field, int n) {
    return {SkewMatrix::identity(std::move(field), n), {}};
  }
  friend bool operator==(const TransformRecord& a, const TransformRecord& b) {
    return a.matrix == b.matrix && a.factors == b.factors;
  }
};

/// Deterministic conflict choice: among all pairs of rows sharing a leading
/// position, take the smallest shared LP; there, source = row of smallest
/// (degree, index) and target = row of largest (degree, index). Returns
/// nullopt iff the matrix is in weak Popov form. Throws when a zero row is
/// present.
std::optional<std::pair<int, int>> find_conflict(const SkewMatrix& m);

/// Applies the simple transformation row_target -= scale * x^shift * row_source
/// determined by the conflict (target, source) to both m and the transform.
/// Returns the number of coefficient operations spent.
std::uint64_t apply_simple_transform(SkewMatrix& m, TransformRecord& u,
                                     int target, int source);

struct BaseCaseResult {
  TransformRecord transform;
  SkewMatrix reduced;
  std::uint64_t st_count = 0;
  std::uint64_t max_st_ops = 0;
};

/// Simple transformations until the matrix degree drops or weak Popov form is
/// reached, whichever comes first. At most r^2 transformations; on inputs of
/// length <= 1 each one costs O(r) coefficient operations.
BaseCaseResult reduce_basecase(const SkewMatrix& m);

/// Simple transformations all the way to weak Popov form. Reference oracle
/// and benchmark baseline.
BaseCaseResult naive_row_reduce(const SkewMatrix& m);

/// Plain cubic product; entry products use the length-aware short product so
/// the cost tracks operand lengths rather than degrees.
SkewMatrix mat_mul(const SkewMatrix& a, const SkewMatrix& b,
                   MulStrategy strategy = MulStrategy::kNaive);

/// Applies the recorded factors in order to a fresh copy of m.
SkewMatrix apply_factors(const std::vector<ElementaryFactor>& factors,
                         const SkewMatrix& m);

/// Applies the inverted factors in reverse order; undoes the transform.
SkewMatrix apply_inverse_factors(const TransformRecord& u, const SkewMatrix& m);

}  // namespace skewreduce

#endif  // SKEWREDUCE_SKEW_MATRIX_HPP
