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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "skewreduce/alekhnovich.hpp"
#include "skewreduce/bench.hpp"
#include "skewreduce/random.hpp"

using namespace skewreduce;

namespace {

SkewPoly poly(const FieldPtr& f, std::initializer_list<std::uint32_t> coeffs) {
  std::vector<FieldElement> c;
  for (auto v : coeffs) c.push_back({v});
  return SkewPoly::from_coeffs(f, std::move(c));
}

int max_entry_length(const SkewMatrix& m) {
  int len = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      len = std::max(len, m.at(i, j).length());
  return len;
}

std::vector<int> sorted_row_degrees(const SkewMatrix& m) {
  std::vector<int> degs;
  for (int i = 0; i < m.rows(); ++i) degs.push_back(vector_degree(m.row(i)));
  std::sort(degs.begin(), degs.end());
  return degs;
}

SkewMatrix nonsingular_random(const FieldPtr& f, std::mt19937_64& rng, int r,
                              int max_deg) {
  return random_full_rank_matrix(f, rng, r, max_deg);
}

}  // namespace

TEST_CASE("iterated reduction") {
  auto f = FieldContext::create(2, 1, 4);
  std::mt19937_64 rng(101);

  SUBCASE("t = 1 is a single base case") {
    for (int trial = 0; trial < 50; ++trial) {
      const SkewMatrix m = nonsingular_random(f, rng, 3, 10);
      const auto it = reduce_iterated(m, 1);
      const auto base = reduce_basecase(m);
      CHECK(it.transform == base.transform);
      CHECK(it.reduced == base.reduced);
    }
  }
  SUBCASE("weak Popov input is a fixpoint for any target") {
    const SkewMatrix id = SkewMatrix::identity(f, 3);
    for (int t : {1, 2, 9}) {
      const auto res = reduce_iterated(id, t);
      CHECK(res.transform.matrix == id);
      CHECK(res.transform.factors.empty());
    }
  }
  SUBCASE("the disjunctive contract holds") {
    for (int trial = 0; trial < 100; ++trial) {
      const SkewMatrix m = nonsingular_random(f, rng, 3, 12);
      const auto res = reduce_iterated(m, 3);
      const bool ok = is_weak_popov(res.reduced) ||
                      matrix_degree(res.reduced) <= matrix_degree(m) - 3;
      CHECK(ok);
      CHECK(mat_mul(res.transform.matrix, m) == res.reduced);
    }
  }
  SUBCASE("invalid targets throw") {
    CHECK_THROWS_AS(reduce_iterated(SkewMatrix::identity(f, 2), 0),
                    std::invalid_argument);
  }
}

TEST_CASE("divide-&-conquer reduction") {
  auto f4 = FieldContext::create(2, 1, 2);
  auto f64 = FieldContext::create(2, 1, 6);
  auto f16q4 = FieldContext::create(2, 2, 2);
  const FieldPtr fields[] = {f4, f64, f16q4};
  std::mt19937_64 rng(103);

  SUBCASE("t = 1 reduces the depth-1 approximation") {
    for (int trial = 0; trial < 50; ++trial) {
      const SkewMatrix m = nonsingular_random(f64, rng, 3, 10);
      ReductionStats stats;
      const auto dc = reduce_dc_transform(m, 1, &stats);
      const auto base = reduce_basecase(truncate_matrix(m, 1));
      CHECK(dc == base.transform);
      CHECK(stats.base_case_calls == 1);
    }
  }
  SUBCASE("matches the iterated reference exactly") {
    for (int trial = 0; trial < 150; ++trial) {
      const auto& f = fields[trial % 3];
      const int r = 2 + static_cast<int>(uniform_below(rng, 3));
      const SkewMatrix m = nonsingular_random(
          f, rng, r, 2 + static_cast<int>(uniform_below(rng, 50)));
      const int t = 1 + static_cast<int>(uniform_below(rng, 32));
      const auto it = reduce_iterated(m, t);
      const auto dc = reduce_dc(m, t);
      CHECK(it.transform.factors == dc.transform.factors);
      CHECK(it.transform.matrix == dc.transform.matrix);
      CHECK(it.reduced == dc.reduced);
    }
  }
  SUBCASE("accuracy approximation does not change the transform") {
    for (int trial = 0; trial < 100; ++trial) {
      const auto& f = fields[trial % 3];
      const SkewMatrix m = nonsingular_random(f, rng, 3, 30);
      const int t = 1 + static_cast<int>(uniform_below(rng, 20));
      CHECK(reduce_iterated(m, t).transform ==
            reduce_iterated(truncate_matrix(m, t), t).transform);
    }
  }
  SUBCASE("transform entries have length at most t") {
    for (int trial = 0; trial < 100; ++trial) {
      const auto& f = fields[trial % 3];
      const SkewMatrix m = nonsingular_random(f, rng, 3, 40);
      const int t = 1 + static_cast<int>(uniform_below(rng, 24));
      const auto dc = reduce_dc(m, t);
      CHECK(max_entry_length(dc.transform.matrix) <= t);
    }
  }
  SUBCASE("base cases consume degree drops") {
    for (int trial = 0; trial < 60; ++trial) {
      const SkewMatrix m = nonsingular_random(f64, rng, 3, 30);
      const int t = 1 + static_cast<int>(uniform_below(rng, 24));
      ReductionStats stats;
      reduce_dc_transform(m, t, &stats);
      CHECK(stats.base_case_calls <= static_cast<std::uint64_t>(t));
    }
  }
}

TEST_CASE("orthogonality defect") {
  auto f = FieldContext::create(2, 1, 4);
  SUBCASE("weak Popov matrices have defect zero") {
    CHECK(orthogonality_defect(SkewMatrix::identity(f, 3)) == 0);
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 30; ++trial) {
      const SkewMatrix m = nonsingular_random(f, rng, 3, 8);
      const auto res = naive_row_reduce(m);
      CHECK(orthogonality_defect(res.reduced, DefectHint::kViaReduction) == 0);
    }
  }
  SUBCASE("triangular hand instance") {
    SkewMatrix m = SkewMatrix::zeros(f, 2, 2);
    m.at(0, 0) = SkewPoly::variable(f);
    m.at(0, 1) = poly(f, {0, 0, 1});  // x^2
    m.at(1, 1) = SkewPoly::variable(f);
    CHECK(orthogonality_defect(m, DefectHint::kTriangular) == 1);
    CHECK(orthogonality_defect(m, DefectHint::kViaReduction) == 1);
    CHECK(orthogonality_defect(m) == 1);
  }
  SUBCASE("triangular hint validates shape") {
    SkewMatrix m = SkewMatrix::identity(f, 2);
    m.at(1, 0) = SkewPoly::variable(f);
    CHECK_THROWS_AS(orthogonality_defect(m, DefectHint::kTriangular),
                    std::invalid_argument);
  }
  SUBCASE("decoder-shaped matrices expose the defect on the diagonal") {
    std::mt19937_64 rng(109);
    auto big = FieldContext::create(2, 1, 8);
    for (int trial = 0; trial < 20; ++trial) {
      const SkewMatrix b = random_decoding_shaped_matrix(big, rng, 16, 2);
      int diag = 0;
      for (int i = 0; i < b.rows(); ++i) diag += b.at(i, i).degree();
      CHECK(orthogonality_defect(b, DefectHint::kTriangular) ==
            matrix_degree(b) - diag);
    }
  }
}

TEST_CASE("one-call reduction to weak Popov form") {
  auto f = FieldContext::create(2, 1, 6);
  std::mt19937_64 rng(113);

  SUBCASE("weak Popov input short-circuits to the identity") {
    const SkewMatrix id = SkewMatrix::identity(f, 3);
    const auto res = reduce_to_wpf(id);
    CHECK(res.transform.matrix == id);
    CHECK(res.reduced == id);
  }
  SUBCASE("triangular instances reduce with exact degree accounting") {
    for (int trial = 0; trial < 60; ++trial) {
      SkewMatrix m = random_matrix(f, rng, 3, 10);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < i; ++j) m.at(i, j) = SkewPoly::zero(f);
        if (m.at(i, i).is_zero()) m.at(i, i) = SkewPoly::one(f);
      }
      const int defect = orthogonality_defect(m);
      const auto res = reduce_to_wpf(m);
      CHECK(is_weak_popov(res.reduced));
      CHECK(matrix_degree(res.reduced) == matrix_degree(m) - defect);
      CHECK(mat_mul(res.transform.matrix, m) == res.reduced);
    }
  }
  SUBCASE("row degrees agree with the naive oracle up to permutation") {
    for (int trial = 0; trial < 40; ++trial) {
      const SkewMatrix m = nonsingular_random(f, rng, 3, 12);
      const auto fast = reduce_to_wpf(m, orthogonality_defect(m, DefectHint::kViaReduction));
      const auto oracle = naive_row_reduce(m);
      CHECK(is_weak_popov(fast.reduced));
      CHECK(sorted_row_degrees(fast.reduced) == sorted_row_degrees(oracle.reduced));
    }
  }
  SUBCASE("both engines drive to the same weak Popov matrix") {
    for (int trial = 0; trial < 30; ++trial) {
      const SkewMatrix m = nonsingular_random(f, rng, 3, 12);
      const auto dc = reduce_to_wpf(m, std::nullopt, MulStrategy::kNaive,
                                    ReduceEngine::kDivideConquer);
      const auto it = reduce_to_wpf(m, std::nullopt, MulStrategy::kNaive,
                                    ReduceEngine::kIterated);
      CHECK(dc.transform == it.transform);
      CHECK(dc.reduced == it.reduced);
    }
  }
  SUBCASE("a defect-zero matrix that is not weak Popov still reduces") {
    // constant full-rank matrix with colliding leading positions
    auto f9 = FieldContext::create(3, 1, 2);
    SkewMatrix m = SkewMatrix::zeros(f9, 2, 2);
    m.at(0, 0) = SkewPoly::one(f9);
    m.at(0, 1) = SkewPoly::one(f9);
    m.at(1, 0) = SkewPoly::one(f9);
    m.at(1, 1) = SkewPoly::constant(f9, {2});
    REQUIRE_FALSE(is_weak_popov(m));
    CHECK(orthogonality_defect(m, DefectHint::kViaReduction) == 0);
    const auto res = reduce_to_wpf(m);
    CHECK(is_weak_popov(res.reduced));
    CHECK(matrix_degree(res.reduced) == 0);
  }
}
