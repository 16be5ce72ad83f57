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

#ifndef SKEWREDUCE_ALEKHNOVICH_HPP
#define SKEWREDUCE_ALEKHNOVICH_HPP

#include <cstdint>
#include <optional>

#include "skewreduce/skew_matrix.hpp"

namespace skewreduce {

struct ReductionStats {
  std::uint64_t base_case_calls = 0;
  std::uint64_t finishing_base_cases = 0;
  std::uint64_t st_count = 0;
  std::uint64_t max_st_ops = 0;

  void absorb(const BaseCaseResult& r) {
    st_count += r.st_count;
    if (r.max_st_ops > max_st_ops) max_st_ops = r.max_st_ops;
  }
};

struct ReductionResult {
  TransformRecord transform;
  SkewMatrix reduced;
  ReductionStats stats;
};

/// Repeated base-case reduction with degree-drop accounting: base cases run
/// until weak Popov form is reached or the accumulated degree drop is >= t.
/// The returned transform U satisfies: U*M in weak Popov form, or
/// deg(U*M) <= deg M - t.
ReductionResult reduce_iterated(const SkewMatrix& m, int t);

/// Divide-&-conquer reducer. Works on accuracy approximations: the first half
/// of the budget is solved on M truncated to depth t, the remainder on the
/// partially reduced matrix. Under the deterministic conflict rule this
/// produces exactly the same transform as reduce_iterated. Internal products
/// run through mat_mul on length-bounded operands.
TransformRecord reduce_dc_transform(const SkewMatrix& m, int t,
                                    ReductionStats* stats = nullptr,
                                    MulStrategy strategy = MulStrategy::kNaive);

/// reduce_dc_transform plus the reduced product U*M.
ReductionResult reduce_dc(const SkewMatrix& m, int t,
                          MulStrategy strategy = MulStrategy::kNaive);

enum class DefectHint { kAuto, kTriangular, kViaReduction };

/// deg M - deg det M. For an upper-triangular matrix with nonzero diagonal
/// the determinant degree is the sum of diagonal degrees; otherwise it is
/// read off a weak-Popov form produced by the naive oracle (which has
/// defect zero). Always >= 0 for square full-rank input.
int orthogonality_defect(const SkewMatrix& m, DefectHint hint = DefectHint::kAuto);

enum class ReduceEngine { kDivideConquer, kIterated };

/// One-call reduction to weak Popov form: runs the chosen reducer with budget
/// t (default: the orthogonality defect) and, if the budget was consumed by
/// degree drops alone, finishes with degree-preserving base-case passes.
/// Returns (U, U*M) with U*M in weak Popov form and
/// deg(U*M) = deg M - defect(M).
ReductionResult reduce_to_wpf(const SkewMatrix& m,
                              std::optional<int> t = std::nullopt,
                              MulStrategy strategy = MulStrategy::kNaive,
                              ReduceEngine engine = ReduceEngine::kDivideConquer);

}  // namespace skewreduce

#endif  // SKEWREDUCE_ALEKHNOVICH_HPP
