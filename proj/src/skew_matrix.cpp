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

#include "skewreduce/skew_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace skewreduce {

SkewVector::SkewVector(FieldPtr field, std::vector<SkewPoly> entries)
    : field_(std::move(field)), entries_(std::move(entries)) {
  if (!field_) throw std::invalid_argument("null field");
  if (entries_.empty()) throw std::invalid_argument("empty vector");
  for (const auto& e : entries_)
    if (!e.field() || !e.field()->same_field(*field_))
      throw std::invalid_argument("entry from a different field");
}

SkewVector SkewVector::zeros(FieldPtr field, int n) {
  std::vector<SkewPoly> e(static_cast<std::size_t>(n), SkewPoly::zero(field));
  return SkewVector(std::move(field), std::move(e));
}

bool SkewVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const SkewPoly& p) { return p.is_zero(); });
}

bool operator==(const SkewVector& a, const SkewVector& b) {
  return a.entries_ == b.entries_;
}

SkewMatrix::SkewMatrix(FieldPtr field, std::vector<SkewVector> rows)
    : field_(std::move(field)), rows_(std::move(rows)) {
  if (!field_) throw std::invalid_argument("null field");
  if (rows_.empty()) throw std::invalid_argument("empty matrix");
  cols_ = rows_[0].size();
  for (const auto& r : rows_)
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
}

SkewMatrix SkewMatrix::zeros(FieldPtr field, int rows, int cols) {
  std::vector<SkewVector> r;
  r.reserve(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) r.push_back(SkewVector::zeros(field, cols));
  return SkewMatrix(std::move(field), std::move(r));
}

SkewMatrix SkewMatrix::identity(FieldPtr field, int n) {
  SkewMatrix m = zeros(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = SkewPoly::one(field);
  return m;
}

bool operator==(const SkewMatrix& a, const SkewMatrix& b) {
  return a.cols_ == b.cols_ && a.rows_ == b.rows_;
}

int vector_degree(const SkewVector& v) {
  int d = kNegInfDegree;
  for (int i = 0; i < v.size(); ++i) d = std::max(d, v[i].degree());
  return d;
}

int leading_position(const SkewVector& v) {
  const int d = vector_degree(v);
  if (is_neg_inf(d))
    throw std::domain_error("leading position of a zero vector");
  for (int i = v.size() - 1; i >= 0; --i)
    if (v[i].degree() == d) return i;
  throw std::logic_error("unreachable");
}

const SkewPoly& leading_term(const SkewVector& v) {
  return v[leading_position(v)];
}

int vector_length(const SkewVector& v) {
  const int d = vector_degree(v);
  if (is_neg_inf(d)) return 0;
  int len = 0;
  for (int i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    len = std::max(len, d - v[i].degree() + v[i].length());
  }
  return len;
}

int matrix_degree(const SkewMatrix& m) {
  int sum = 0;
  for (int i = 0; i < m.rows(); ++i) {
    const int d = vector_degree(m.row(i));
    if (is_neg_inf(d)) return kNegInfDegree;
    sum += d;
  }
  return sum;
}

int matrix_length(const SkewMatrix& m) {
  int len = 0;
  for (int i = 0; i < m.rows(); ++i)
    len = std::max(len, vector_length(m.row(i)));
  return len;
}

bool has_zero_row(const SkewMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    if (m.row(i).is_zero()) return true;
  return false;
}

SkewVector truncate_vector(const SkewVector& v, int t) {
  if (t < 0) throw std::invalid_argument("negative truncation depth");
  const int d = vector_degree(v);
  if (is_neg_inf(d)) return v;
  std::vector<SkewPoly> out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (int i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) {
      out.push_back(v[i]);
      continue;
    }
    const int depth = std::max(0, t - (d - v[i].degree()));
    out.push_back(truncate(v[i], depth));
  }
  return SkewVector(v.field(), std::move(out));
}

SkewMatrix truncate_matrix(const SkewMatrix& m, int t) {
  std::vector<SkewVector> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    rows.push_back(truncate_vector(m.row(i), t));
  return SkewMatrix(m.field(), std::move(rows));
}

bool is_weak_popov(const SkewMatrix& m) {
  std::unordered_set<int> seen;
  for (int i = 0; i < m.rows(); ++i) {
    if (m.row(i).is_zero()) return false;
    if (!seen.insert(leading_position(m.row(i))).second) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> find_conflict(const SkewMatrix& m) {
  if (has_zero_row(m))
    throw std::domain_error("conflict search on a matrix with a zero row");
  const int r = m.rows();
  std::vector<int> lp(static_cast<std::size_t>(r)), dg(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    lp[static_cast<std::size_t>(i)] = leading_position(m.row(i));
    dg[static_cast<std::size_t>(i)] = vector_degree(m.row(i));
  }
  int best_lp = m.cols();
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      if (lp[static_cast<std::size_t>(a)] == lp[static_cast<std::size_t>(b)])
        best_lp = std::min(best_lp, lp[static_cast<std::size_t>(a)]);
  if (best_lp == m.cols()) return std::nullopt;

  int source = -1, target = -1;
  for (int i = 0; i < r; ++i) {
    if (lp[static_cast<std::size_t>(i)] != best_lp) continue;
    const int d = dg[static_cast<std::size_t>(i)];
    if (source < 0 || d < dg[static_cast<std::size_t>(source)]) source = i;
    if (target < 0 || d >= dg[static_cast<std::size_t>(target)]) target = i;
  }
  return std::make_pair(target, source);
}

namespace {

// row_target -= scale * x^shift * row_source, counting coefficient work:
// one frobenius+multiply per stored coefficient of the scaled operand and one
// addition per coefficient position touched by the merge.
std::uint64_t row_axpy(SkewVector& rows_target, const SkewVector& rows_source,
                       FieldElement scale, int shift) {
  std::uint64_t ops = 0;
  for (int c = 0; c < rows_target.size(); ++c) {
    const SkewPoly& src = rows_source[c];
    if (src.is_zero()) continue;
    ops += 2 * static_cast<std::uint64_t>(src.length());
    const SkewPoly scaled = monomial_mul_left(scale, shift, src);
    ops += static_cast<std::uint64_t>(
        std::max(scaled.length(), rows_target[c].length()));
    rows_target[c] = sub(rows_target[c], scaled);
  }
  return ops;
}

}  // namespace

std::uint64_t apply_simple_transform(SkewMatrix& m, TransformRecord& u,
                                     int target, int source) {
  if (target == source)
    throw std::invalid_argument("simple transform needs distinct rows");
  const SkewVector& tr = m.row(target);
  const SkewVector& sr = m.row(source);
  const int lp = leading_position(tr);
  if (leading_position(sr) != lp)
    throw std::invalid_argument("rows do not share a leading position");
  const int dt = vector_degree(tr), ds = vector_degree(sr);
  if (dt < ds) throw std::invalid_argument("target row has smaller degree");

  const auto& field = *m.field();
  const int delta = dt - ds;
  const FieldElement lc_t = tr[lp].leading_coeff();
  const FieldElement lc_s = sr[lp].leading_coeff();
  const FieldElement alpha = field.mul(
      lc_t, field.inv(field.frobenius(lc_s, static_cast<std::uint64_t>(delta))));
  std::uint64_t ops = 3;

  ops += row_axpy(m.row(target), m.row(source), alpha, delta);
  ops += row_axpy(u.matrix.row(target), u.matrix.row(source), alpha, delta);
  u.factors.push_back({target, source, alpha, delta});
  return ops;
}

BaseCaseResult reduce_basecase(const SkewMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("reduction requires a square matrix");
  BaseCaseResult res{TransformRecord::identity(m.field(), m.rows()), m};
  const int n = matrix_degree(res.reduced);
  const std::uint64_t st_limit =
      static_cast<std::uint64_t>(m.rows()) * static_cast<std::uint64_t>(m.rows()) + 1;
  while (matrix_degree(res.reduced) == n && !is_weak_popov(res.reduced)) {
    const auto conflict = find_conflict(res.reduced);
    if (!conflict) break;  // weak Popov; loop guard re-checks
    const std::uint64_t ops = apply_simple_transform(
        res.reduced, res.transform, conflict->first, conflict->second);
    ++res.st_count;
    res.max_st_ops = std::max(res.max_st_ops, ops);
    if (res.st_count > st_limit)
      throw std::logic_error("simple transformation budget exceeded");
  }
  return res;
}

BaseCaseResult naive_row_reduce(const SkewMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("reduction requires a square matrix");
  BaseCaseResult res{TransformRecord::identity(m.field(), m.rows()), m};
  // every transformation strictly decreases (deg, sum of LPs); this bound is
  // a safety net against cycles, not a tight estimate
  const std::uint64_t limit =
      (static_cast<std::uint64_t>(std::max(0, matrix_degree(m))) + 2) *
      static_cast<std::uint64_t>(m.rows()) * static_cast<std::uint64_t>(m.rows() + 1);
  while (!is_weak_popov(res.reduced)) {
    const auto conflict = find_conflict(res.reduced);
    if (!conflict) break;
    const std::uint64_t ops = apply_simple_transform(
        res.reduced, res.transform, conflict->first, conflict->second);
    ++res.st_count;
    res.max_st_ops = std::max(res.max_st_ops, ops);
    if (res.st_count > limit)
      throw std::logic_error("row reduction failed to terminate");
  }
  return res;
}

SkewMatrix mat_mul(const SkewMatrix& a, const SkewMatrix& b,
                   MulStrategy strategy) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
  if (!a.field()->same_field(*b.field()))
    throw std::invalid_argument("operands live in different fields");
  SkewMatrix out = SkewMatrix::zeros(a.field(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const SkewPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const SkewPoly& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) = add(out.at(i, j), short_product(aik, bkj, strategy));
      }
    }
  }
  return out;
}

SkewMatrix apply_factors(const std::vector<ElementaryFactor>& factors,
                         const SkewMatrix& m) {
  SkewMatrix out = m;
  for (const auto& f : factors) {
    for (int c = 0; c < out.cols(); ++c) {
      const SkewPoly& src = out.at(f.source, c);
      if (src.is_zero()) continue;
      out.at(f.target, c) =
          sub(out.at(f.target, c), monomial_mul_left(f.scale, f.shift, src));
    }
  }
  return out;
}

SkewMatrix apply_inverse_factors(const TransformRecord& u,
                                 const SkewMatrix& m) {
  SkewMatrix out = m;
  for (auto it = u.factors.rbegin(); it != u.factors.rend(); ++it) {
    for (int c = 0; c < out.cols(); ++c) {
      const SkewPoly& src = out.at(it->source, c);
      if (src.is_zero()) continue;
      out.at(it->target, c) =
          add(out.at(it->target, c), monomial_mul_left(it->scale, it->shift, src));
    }
  }
  return out;
}

}  // namespace skewreduce
