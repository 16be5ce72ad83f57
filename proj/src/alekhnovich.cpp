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

#include "skewreduce/alekhnovich.hpp"

#include <stdexcept>
#include <utility>

namespace skewreduce {
namespace {

void require_square(const SkewMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("reduction requires a square matrix");
}

// degree drop measured with the zero-row sentinel collapsing to "infinite"
long long degree_drop(int before, int after) {
  if (is_neg_inf(after)) return 1LL << 40;
  return static_cast<long long>(before) - after;
}

TransformRecord compose(TransformRecord second, TransformRecord first,
                        MulStrategy strategy) {
  TransformRecord out{mat_mul(second.matrix, first.matrix, strategy),
                      std::move(first.factors)};
  out.factors.insert(out.factors.end(), second.factors.begin(),
                     second.factors.end());
  return out;
}

}  // namespace

ReductionResult reduce_iterated(const SkewMatrix& m, int t) {
  require_square(m);
  if (t < 1) throw std::invalid_argument("reduction target must be >= 1");

  ReductionResult res{TransformRecord::identity(m.field(), m.rows()), m, {}};
  long long remaining = t;
  while (remaining > 0 && !is_weak_popov(res.reduced)) {
    const int before = matrix_degree(res.reduced);
    BaseCaseResult step = reduce_basecase(res.reduced);
    res.stats.base_case_calls += 1;
    res.stats.absorb(step);
    // accumulate U by replaying the new factors on the running matrix
    res.transform.matrix =
        apply_factors(step.transform.factors, res.transform.matrix);
    res.transform.factors.insert(res.transform.factors.end(),
                                 step.transform.factors.begin(),
                                 step.transform.factors.end());
    remaining -= degree_drop(before, matrix_degree(step.reduced));
    res.reduced = std::move(step.reduced);
  }
  return res;
}

TransformRecord reduce_dc_transform(const SkewMatrix& m, int t,
                                    ReductionStats* stats,
                                    MulStrategy strategy) {
  require_square(m);
  if (t < 1) throw std::invalid_argument("reduction target must be >= 1");
  ReductionStats local;
  ReductionStats& st = stats ? *stats : local;

  if (t == 1) {
    BaseCaseResult base = reduce_basecase(truncate_matrix(m, 1));
    st.base_case_calls += 1;
    st.absorb(base);
    return std::move(base.transform);
  }

  const SkewMatrix window = truncate_matrix(m, t);
  TransformRecord u1 = reduce_dc_transform(window, t / 2, &st, strategy);
  const SkewMatrix m1 = mat_mul(u1.matrix, window, strategy);

  const long long drop = degree_drop(matrix_degree(window), matrix_degree(m1));
  const long long t2 = static_cast<long long>(t) - drop;
  // Budget exhausted, or the first half already reached weak Popov form
  // (in which case recursing would make no progress).
  if (t2 <= 0 || is_weak_popov(m1)) return u1;

  TransformRecord u2 =
      reduce_dc_transform(m1, static_cast<int>(t2), &st, strategy);
  return compose(std::move(u2), std::move(u1), strategy);
}

ReductionResult reduce_dc(const SkewMatrix& m, int t, MulStrategy strategy) {
  ReductionResult res{TransformRecord::identity(m.field(), m.rows()), m, {}};
  res.transform = reduce_dc_transform(m, t, &res.stats, strategy);
  res.reduced = mat_mul(res.transform.matrix, m, strategy);
  return res;
}

int orthogonality_defect(const SkewMatrix& m, DefectHint hint) {
  require_square(m);
  if (has_zero_row(m))
    throw std::domain_error("orthogonality defect of a rank-deficient matrix");

  bool triangular = true;
  for (int i = 0; i < m.rows() && triangular; ++i) {
    if (m.at(i, i).is_zero()) triangular = false;
    for (int j = 0; j < i && triangular; ++j)
      if (!m.at(i, j).is_zero()) triangular = false;
  }
  if (hint == DefectHint::kTriangular && !triangular)
    throw std::invalid_argument("matrix is not upper triangular");

  int det_degree = 0;
  if (triangular && hint != DefectHint::kViaReduction) {
    // degree is multiplicative, so deg det is the diagonal degree sum
    for (int i = 0; i < m.rows(); ++i) det_degree += m.at(i, i).degree();
  } else {
    // a weak-Popov form of M has defect zero, so its degree is deg det M
    det_degree = matrix_degree(naive_row_reduce(m).reduced);
  }
  const int defect = matrix_degree(m) - det_degree;
  if (defect < 0)
    throw std::logic_error("negative orthogonality defect");
  return defect;
}

ReductionResult reduce_to_wpf(const SkewMatrix& m, std::optional<int> t,
                              MulStrategy strategy, ReduceEngine engine) {
  require_square(m);
  if (is_weak_popov(m))
    return {TransformRecord::identity(m.field(), m.rows()), m, {}};

  const int defect = t ? *t : orthogonality_defect(m);
  const int budget = std::max(defect, 1);

  ReductionResult res{TransformRecord::identity(m.field(), m.rows()), m, {}};
  if (engine == ReduceEngine::kDivideConquer) {
    res.transform = reduce_dc_transform(m, budget, &res.stats, strategy);
    res.reduced = mat_mul(res.transform.matrix, m, strategy);
  } else {
    res = reduce_iterated(m, budget);
  }

  // The divide-&-conquer contract is disjunctive: the budget may be consumed
  // by degree drops with leading positions still colliding. At that point the
  // matrix degree already equals deg det, so base cases can only perform
  // degree-preserving transformations until weak Popov form.
  while (!is_weak_popov(res.reduced)) {
    BaseCaseResult fin = reduce_basecase(res.reduced);
    if (fin.st_count == 0)
      throw std::logic_error("finishing pass made no progress");
    res.stats.finishing_base_cases += 1;
    res.stats.absorb(fin);
    res.transform.matrix =
        apply_factors(fin.transform.factors, res.transform.matrix);
    res.transform.factors.insert(res.transform.factors.end(),
                                 fin.transform.factors.begin(),
                                 fin.transform.factors.end());
    res.reduced = std::move(fin.reduced);
  }
  return res;
}

}  // namespace skewreduce
