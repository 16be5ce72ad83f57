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

#include "skewreduce/bench.hpp"
#include "skewreduce/random.hpp"
#include "skewreduce/skew_matrix.hpp"

using namespace skewreduce;

namespace {

const FieldPtr& f2() {
  static FieldPtr f = FieldContext::create(2, 1, 1);
  return f;
}

SkewPoly poly(const FieldPtr& f, std::initializer_list<std::uint32_t> coeffs) {
  std::vector<FieldElement> c;
  for (auto v : coeffs) c.push_back({v});
  return SkewPoly::from_coeffs(f, std::move(c));
}

// (x^2+x, x^2+1) over (x^4, x^3+x^2+x+1): the running example matrix
SkewMatrix example_matrix() {
  const auto f = f2();
  return SkewMatrix(
      f, {SkewVector(f, {poly(f, {0, 1, 1}), poly(f, {1, 0, 1})}),
          SkewVector(f, {poly(f, {0, 0, 0, 0, 1}), poly(f, {1, 1, 1, 1})})});
}

std::vector<int> sorted_row_degrees(const SkewMatrix& m) {
  std::vector<int> degs;
  for (int i = 0; i < m.rows(); ++i) degs.push_back(vector_degree(m.row(i)));
  std::sort(degs.begin(), degs.end());
  return degs;
}

}  // namespace

TEST_CASE("vector statistics") {
  const SkewMatrix m = example_matrix();
  CHECK(vector_degree(m.row(0)) == 2);
  CHECK(leading_position(m.row(0)) == 1);  // rightmost position of degree 2
  CHECK(vector_degree(m.row(1)) == 4);
  CHECK(leading_position(m.row(1)) == 0);
  CHECK(leading_term(m.row(1)) == m.at(1, 0));
  CHECK(vector_length(m.row(1)) == 5);  // max(4-4+1, 4-3+4)
  CHECK(vector_length(m.row(0)) == 3);

  const auto f = f2();
  const SkewVector with_zero(f, {poly(f, {0, 0, 0, 0, 1}), SkewPoly::zero(f)});
  CHECK(vector_length(with_zero) == 1);  // zero entries do not count
  CHECK(leading_position(with_zero) == 0);
  CHECK_THROWS_AS(leading_position(SkewVector::zeros(f, 2)), std::domain_error);
}

TEST_CASE("matrix degree and length") {
  CHECK(matrix_degree(example_matrix()) == 6);
  CHECK(matrix_degree(SkewMatrix::identity(f2(), 3)) == 0);
  SkewMatrix z = SkewMatrix::zeros(f2(), 2, 2);
  z.at(0, 0) = SkewPoly::one(f2());
  CHECK(is_neg_inf(matrix_degree(z)));  // zero row flagged through the sentinel
  CHECK(has_zero_row(z));

  std::mt19937_64 rng(3);
  auto f = FieldContext::create(2, 1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const SkewMatrix m = random_matrix(f, rng, 3, 15);
    const int t = static_cast<int>(uniform_below(rng, 8));
    CHECK(matrix_length(truncate_matrix(m, t)) <= t);
  }
}

TEST_CASE("vector truncation reproduces the worked depths") {
  const SkewMatrix m = example_matrix();
  const SkewVector& deep = m.row(1);  // (x^4, x^3+x^2+x+1)
  const auto f = f2();
  const SkewVector at2 = truncate_vector(deep, 2);
  CHECK(at2[0] == poly(f, {0, 0, 0, 0, 1}));
  CHECK(at2[1] == poly(f, {0, 0, 0, 1}));
  const SkewVector at1 = truncate_vector(deep, 1);
  CHECK(at1[0] == poly(f, {0, 0, 0, 0, 1}));
  CHECK(at1[1].is_zero());  // depth clamps to zero below the vector degree
  CHECK(truncate_vector(deep, vector_length(deep)) == deep);
  CHECK(truncate_vector(deep, 40) == deep);
}

TEST_CASE("matrix truncation displays") {
  const SkewMatrix m = example_matrix();
  const auto f = f2();
  const SkewMatrix at2 = truncate_matrix(m, 2);
  CHECK(at2.at(0, 0) == poly(f, {0, 1, 1}));     // x^2+x
  CHECK(at2.at(0, 1) == poly(f, {0, 0, 1}));     // x^2
  CHECK(at2.at(1, 0) == poly(f, {0, 0, 0, 0, 1}));  // x^4
  CHECK(at2.at(1, 1) == poly(f, {0, 0, 0, 1}));  // x^3

  const SkewMatrix at1 = truncate_matrix(m, 1);
  CHECK(at1.at(0, 0) == poly(f, {0, 0, 1}));
  CHECK(at1.at(0, 1) == poly(f, {0, 0, 1}));
  CHECK(at1.at(1, 0) == poly(f, {0, 0, 0, 0, 1}));
  CHECK(at1.at(1, 1).is_zero());

  CHECK(truncate_matrix(m, 0) == SkewMatrix::zeros(f, 2, 2));
  CHECK(truncate_matrix(at2, 2) == at2);
}

TEST_CASE("weak Popov predicate") {
  CHECK(is_weak_popov(example_matrix()));
  CHECK(is_weak_popov(SkewMatrix::identity(f2(), 4)));
  const auto f = f2();
  const SkewVector row(f, {SkewPoly::one(f), SkewPoly::variable(f)});
  CHECK_FALSE(is_weak_popov(SkewMatrix(f, {row, row})));
  SkewMatrix z = SkewMatrix::zeros(f, 2, 2);
  z.at(0, 0) = SkewPoly::one(f);
  CHECK_FALSE(is_weak_popov(z));

  SUBCASE("depends only on degrees and leading positions") {
    std::mt19937_64 rng(5);
    auto big = FieldContext::create(2, 1, 4);
    for (int trial = 0; trial < 200; ++trial) {
      const SkewMatrix m = random_matrix(big, rng, 3, 10);
      if (has_zero_row(m)) continue;
      CHECK(is_weak_popov(m) == is_weak_popov(truncate_matrix(m, 1)));
    }
  }
}

TEST_CASE("conflict selection is deterministic") {
  const auto f = f2();
  CHECK_FALSE(find_conflict(example_matrix()).has_value());

  const auto one = SkewPoly::one(f);
  const auto x = SkewPoly::variable(f);
  SkewMatrix m(f, {SkewVector(f, {one, x}), SkewVector(f, {x, x})});
  const auto c = find_conflict(m);
  REQUIRE(c.has_value());
  CHECK(c->first == 1);   // larger degree... degrees tie, so larger index
  CHECK(c->second == 0);

  const SkewVector dup(f, {one, x});
  const auto cd = find_conflict(SkewMatrix(f, {dup, dup}));
  REQUIRE(cd.has_value());
  CHECK(*cd == std::make_pair(1, 0));

  SUBCASE("smallest shared leading position wins") {
    // conflicts at positions 0 (rows 1,2) and 1 (rows 0,3)
    SkewMatrix wide(f, {SkewVector(f, {one, x}),
                        SkewVector(f, {x, one}),
                        SkewVector(f, {poly(f, {0, 1, 1}), one}),
                        SkewVector(f, {one, poly(f, {0, 0, 1})})});
    const auto cw = find_conflict(wide);
    REQUIRE(cw.has_value());
    CHECK(leading_position(wide.row(cw->first)) ==
          leading_position(wide.row(cw->second)));
    CHECK(leading_position(wide.row(cw->first)) == 0);
    CHECK(*cw == std::make_pair(2, 1));  // degree 2 over degree 1
  }
  SUBCASE("zero rows are an error") {
    SkewMatrix z = SkewMatrix::zeros(f, 2, 2);
    z.at(0, 0) = one;
    CHECK_THROWS_AS(find_conflict(z), std::domain_error);
  }
}

TEST_CASE("simple transformations") {
  const auto f = f2();
  const auto one = SkewPoly::one(f);
  const auto x = SkewPoly::variable(f);

  SUBCASE("hand trace") {
    SkewMatrix m(f, {SkewVector(f, {one, x}), SkewVector(f, {x, x})});
    TransformRecord u = TransformRecord::identity(f, 2);
    apply_simple_transform(m, u, 1, 0);
    CHECK(m.at(1, 0) == poly(f, {1, 1}));  // x + 1
    CHECK(m.at(1, 1).is_zero());
    CHECK(is_weak_popov(m));
    REQUIRE(u.factors.size() == 1);
    CHECK(u.factors[0].shift == 0);
    CHECK(u.factors[0].scale == FieldElement{1});
  }
  SUBCASE("duplicate rows cancel with a constant factor") {
    const SkewVector dup(f, {one, x});
    SkewMatrix m(f, {dup, dup});
    TransformRecord u = TransformRecord::identity(f, 2);
    apply_simple_transform(m, u, 1, 0);
    CHECK(m.row(1).is_zero());
    CHECK(u.factors[0].shift == 0);
  }
  SUBCASE("precondition violations throw") {
    SkewMatrix m(f, {SkewVector(f, {one, x}), SkewVector(f, {x, one})});
    TransformRecord u = TransformRecord::identity(f, 2);
    CHECK_THROWS_AS(apply_simple_transform(m, u, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(apply_simple_transform(m, u, 1, 0), std::invalid_argument);
  }
  SUBCASE("each transformation lowers (degree, LP) lexicographically") {
    std::mt19937_64 rng(7);
    auto big = FieldContext::create(2, 1, 6);
    int applied = 0;
    while (applied < 1000) {
      SkewMatrix m = random_matrix(big, rng, 3, 10);
      if (has_zero_row(m)) continue;
      const auto c = find_conflict(m);
      if (!c) continue;
      const int deg_before = vector_degree(m.row(c->first));
      const int lp_before = leading_position(m.row(c->first));
      TransformRecord u = TransformRecord::identity(big, 3);
      apply_simple_transform(m, u, c->first, c->second);
      ++applied;
      const auto& changed = m.row(c->first);
      if (changed.is_zero()) continue;  // degree dropped to the sentinel
      const int deg_after = vector_degree(changed);
      const bool lowered =
          deg_after < deg_before ||
          (deg_after == deg_before && leading_position(changed) < lp_before);
      CHECK(lowered);
    }
  }
}

TEST_CASE("base-case reduction") {
  const auto f = f2();
  const auto one = SkewPoly::one(f);
  const auto x = SkewPoly::variable(f);

  SUBCASE("weak Popov input returns the identity") {
    const auto res = reduce_basecase(example_matrix());
    CHECK(res.transform.matrix == SkewMatrix::identity(f2(), 2));
    CHECK(res.transform.factors.empty());
    CHECK(res.st_count == 0);
  }
  SUBCASE("hand trace") {
    SkewMatrix m(f, {SkewVector(f, {one, x}), SkewVector(f, {x, x})});
    const auto res = reduce_basecase(m);
    SkewMatrix expect_u = SkewMatrix::identity(f, 2);
    expect_u.at(1, 0) = one;
    CHECK(res.transform.matrix == expect_u);
    CHECK(is_weak_popov(res.reduced));
    CHECK(mat_mul(res.transform.matrix, m) == res.reduced);
  }
  SUBCASE("unit-length inputs satisfy the contract within r^2 steps") {
    std::mt19937_64 rng(11);
    auto big = FieldContext::create(2, 1, 6);
    for (int trial = 0; trial < 300; ++trial) {
      const int r = 2 + static_cast<int>(uniform_below(rng, 4));
      const SkewMatrix m = random_unit_length_matrix(big, rng, r, 12);
      REQUIRE(matrix_length(m) <= 1);
      const auto res = reduce_basecase(m);
      CHECK(res.st_count <= static_cast<std::uint64_t>(r) * r);
      const bool contract = is_weak_popov(res.reduced) ||
                            matrix_degree(res.reduced) <= matrix_degree(m) - 1;
      CHECK(contract);
    }
  }
  SUBCASE("zero rows abort") {
    SkewMatrix z = SkewMatrix::zeros(f, 2, 2);
    z.at(0, 1) = x;
    CHECK_THROWS_AS(reduce_basecase(z), std::domain_error);
  }
}

TEST_CASE("full reduction oracle") {
  SUBCASE("weak Popov input returns the identity") {
    const auto res = naive_row_reduce(example_matrix());
    CHECK(res.transform.matrix == SkewMatrix::identity(f2(), 2));
  }
  SUBCASE("base cases composed to completion agree on row degrees") {
    std::mt19937_64 rng(13);
    auto big = FieldContext::create(2, 1, 6);
    for (int trial = 0; trial < 60; ++trial) {
      const SkewMatrix m = random_matrix(big, rng, 3, 10);
      if (has_zero_row(m)) continue;
      const auto oracle = naive_row_reduce(m);
      SkewMatrix work = m;
      for (int guard = 0; guard < 1000 && !is_weak_popov(work); ++guard)
        work = reduce_basecase(work).reduced;
      CHECK(is_weak_popov(work));
      CHECK(sorted_row_degrees(work) == sorted_row_degrees(oracle.reduced));
    }
  }
  SUBCASE("decoder-shaped input reduces to defect zero") {
    std::mt19937_64 rng(17);
    auto big = FieldContext::create(2, 1, 8);
    const SkewMatrix b = random_decoding_shaped_matrix(big, rng, 12, 2);
    const auto res = naive_row_reduce(b);
    CHECK(is_weak_popov(res.reduced));
    // weak Popov form has defect zero: degree equals determinant degree,
    // which the triangular input shows on its diagonal
    int diag = 0;
    for (int i = 0; i < b.rows(); ++i) diag += b.at(i, i).degree();
    CHECK(matrix_degree(res.reduced) == diag);
  }
}

TEST_CASE("matrix products") {
  std::mt19937_64 rng(19);
  auto big = FieldContext::create(2, 1, 6);
  SUBCASE("identity is neutral") {
    const SkewMatrix a = random_matrix(big, rng, 3, 8);
    CHECK(mat_mul(a, SkewMatrix::identity(big, 3)) == a);
    CHECK(mat_mul(SkewMatrix::identity(big, 3), a) == a);
  }
  SUBCASE("an elementary factor matrix reproduces its transformation") {
    for (int trial = 0; trial < 100; ++trial) {
      SkewMatrix m = random_matrix(big, rng, 3, 8);
      if (has_zero_row(m)) continue;
      const auto c = find_conflict(m);
      if (!c) continue;
      SkewMatrix before = m;
      TransformRecord u = TransformRecord::identity(big, 3);
      apply_simple_transform(m, u, c->first, c->second);
      CHECK(mat_mul(u.matrix, before) == m);
      CHECK(apply_factors(u.factors, before) == m);
    }
  }
  SUBCASE("associativity against column vectors") {
    for (int trial = 0; trial < 50; ++trial) {
      const SkewMatrix a = random_matrix(big, rng, 3, 6);
      const SkewMatrix b = random_matrix(big, rng, 3, 6);
      std::vector<SkewVector> col;
      for (int i = 0; i < 3; ++i)
        col.emplace_back(big, std::vector<SkewPoly>{random_poly(big, rng, 6)});
      const SkewMatrix v(big, col);
      CHECK(mat_mul(mat_mul(a, b), v) == mat_mul(a, mat_mul(b, v)));
    }
  }
  SUBCASE("dimension mismatch throws") {
    const SkewMatrix a = random_matrix(big, rng, 3, 4);
    std::vector<SkewVector> two;
    for (int i = 0; i < 2; ++i)
      two.emplace_back(big, std::vector<SkewPoly>{SkewPoly::one(big),
                                                  SkewPoly::one(big)});
    CHECK_THROWS_AS(mat_mul(a, SkewMatrix(big, two)), std::invalid_argument);
  }
}

TEST_CASE("transform records invert exactly") {
  std::mt19937_64 rng(23);
  auto big = FieldContext::create(2, 1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    SkewMatrix m = random_matrix(big, rng, 3, 10);
    if (has_zero_row(m)) continue;
    const auto res = naive_row_reduce(m);
    CHECK(apply_inverse_factors(res.transform, res.reduced) == m);
  }
}

TEST_CASE("row operations preserve the determinant degree") {
  std::mt19937_64 rng(29);
  auto big = FieldContext::create(2, 1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    // triangular instance with readable determinant degree
    SkewMatrix t = random_matrix(big, rng, 3, 6);
    int diag = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < i; ++j) t.at(i, j) = SkewPoly::zero(big);
      if (t.at(i, i).is_zero())
        t.at(i, i) = SkewPoly::monomial(big, {1},
                                        static_cast<int>(uniform_below(rng, 4)));
      diag += t.at(i, i).degree();
    }
    // scramble with inverse factors (row operations), then reduce back
    TransformRecord scramble{SkewMatrix::identity(big, 3), {}};
    for (int s = 0; s < 4; ++s)
      scramble.factors.push_back(
          {static_cast<int>(uniform_below(rng, 3)),
           static_cast<int>(uniform_below(rng, 3)),
           uniform_nonzero(*big, rng),
           static_cast<int>(uniform_below(rng, 3))});
    std::erase_if(scramble.factors,
                  [](const ElementaryFactor& f) { return f.target == f.source; });
    const SkewMatrix m = apply_inverse_factors(scramble, t);
    const auto res = naive_row_reduce(m);
    CHECK(matrix_degree(res.reduced) == diag);
  }
}
