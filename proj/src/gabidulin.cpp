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

#include "skewreduce/gabidulin.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "skewreduce/random.hpp"

namespace skewreduce {
namespace {

void validate(const CodeParams& p) {
  if (!p.field) throw std::invalid_argument("null field");
  if (p.n < 1 || p.n > static_cast<int>(p.field->extension_degree()))
    throw std::invalid_argument("code length must satisfy 1 <= n <= m");
  if (p.ell < 1) throw std::invalid_argument("interleaving degree must be >= 1");
  if (static_cast<int>(p.k.size()) != p.ell)
    throw std::invalid_argument("need one message length per row");
  for (int ki : p.k)
    if (ki < 1 || ki >= p.n)
      throw std::invalid_argument("message lengths must satisfy 1 <= k < n");
  if (static_cast<int>(p.locators.size()) != p.n)
    throw std::invalid_argument("need n locators");
  std::vector<std::vector<FieldElement>> row(1, p.locators);
  if (rank_over_base(p.field, row) != p.n)
    throw std::invalid_argument("locators are dependent over F_q");
}

}  // namespace

CodeParams CodeParams::make(FieldPtr field, int n, int ell, std::vector<int> k,
                            std::vector<FieldElement> locators) {
  CodeParams p{std::move(field), n, ell, std::move(k), std::move(locators)};
  validate(p);
  return p;
}

CodeParams CodeParams::make_random_locators(FieldPtr field, int n, int ell,
                                            std::vector<int> k,
                                            std::uint64_t seed) {
  auto locators = random_li_set(field, static_cast<std::uint32_t>(n), seed);
  return make(std::move(field), n, ell, std::move(k), std::move(locators));
}

std::vector<std::vector<FieldElement>> encode(
    const CodeParams& params, const std::vector<SkewPoly>& messages) {
  if (static_cast<int>(messages.size()) != params.ell)
    throw std::invalid_argument("need one message per interleaved row");
  for (int i = 0; i < params.ell; ++i)
    if (messages[static_cast<std::size_t>(i)].degree() >=
        params.k[static_cast<std::size_t>(i)])
      throw std::invalid_argument("message degree exceeds its bound");
  std::vector<std::vector<FieldElement>> code(
      static_cast<std::size_t>(params.ell),
      std::vector<FieldElement>(static_cast<std::size_t>(params.n)));
  for (int i = 0; i < params.ell; ++i)
    for (int j = 0; j < params.n; ++j)
      code[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          eval_operator(messages[static_cast<std::size_t>(i)],
                        params.locators[static_cast<std::size_t>(j)]);
  return code;
}

int rank_over_base(const FieldPtr& field,
                   const std::vector<std::vector<FieldElement>>& matrix) {
  if (!field) throw std::invalid_argument("null field");
  if (matrix.empty()) return 0;
  const auto& ctx = *field;
  const std::uint32_t u = ctx.subfield_exponent();
  const std::size_t ncols = matrix[0].size();
  // F_q-rank of the coordinate expansion equals ncols minus the F_q-dimension
  // of the right kernel {v in F_q^n : X v = 0}. Writing v_j over the F_p-basis
  // of F_q turns that kernel into an F_p system whose columns are indexed by
  // (j, basis element).
  FpEliminator rowspace(ctx.characteristic());
  std::uint32_t rank_p = 0;
  const auto& beta = ctx.subfield_basis();
  const std::uint32_t d = ctx.degree_over_prime();
  for (const auto& row : matrix) {
    if (row.size() != ncols) throw std::invalid_argument("ragged matrix");
    for (std::uint32_t e = 0; e < d; ++e) {
      std::vector<std::uint8_t> fp_row(ncols * u);
      bool nonzero = false;
      for (std::size_t j = 0; j < ncols; ++j)
        for (std::uint32_t b = 0; b < u; ++b) {
          const std::uint8_t dg = ctx.digit(ctx.mul(row[j], beta[b]), e);
          fp_row[j * u + b] = dg;
          nonzero |= dg != 0;
        }
      if (nonzero && rowspace.insert(std::move(fp_row))) ++rank_p;
    }
  }
  const std::uint32_t kernel_p = static_cast<std::uint32_t>(ncols * u) - rank_p;
  return static_cast<int>(ncols) - static_cast<int>(kernel_p / u);
}

ChannelOutput add_rank_error(
    const CodeParams& params,
    const std::vector<std::vector<FieldElement>>& codewords, int tau,
    std::uint64_t seed) {
  validate(params);
  if (static_cast<int>(codewords.size()) != params.ell)
    throw std::invalid_argument("codeword array has wrong row count");
  if (tau < 0 ||
      tau > std::min(params.n,
                     static_cast<int>(params.field->extension_degree())))
    throw std::invalid_argument("error rank out of range");

  ChannelOutput out;
  out.received = codewords;
  if (tau == 0) return out;

  const auto& ctx = *params.field;
  out.pattern.column_span =
      random_li_set(params.field, static_cast<std::uint32_t>(tau),
                    derive_seed(seed, 0));
  std::mt19937_64 rng(derive_seed(seed, 1));
  const auto& beta = ctx.subfield_basis();

  auto draw_subfield = [&]() {
    FieldElement acc{};
    for (FieldElement b : beta) {
      const auto c = uniform_below(rng, ctx.characteristic());
      for (std::uint64_t rep = 0; rep < c; ++rep) acc = ctx.add(acc, b);
    }
    return acc;
  };

  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto& pat = out.pattern;
    pat.row_vectors.assign(
        static_cast<std::size_t>(tau),
        std::vector<FieldElement>(static_cast<std::size_t>(params.n)));
    for (auto& bt : pat.row_vectors)
      for (auto& w : bt) w = draw_subfield();
    pat.row_mixing.assign(
        static_cast<std::size_t>(params.ell),
        std::vector<std::vector<FieldElement>>(
            static_cast<std::size_t>(tau),
            std::vector<FieldElement>(static_cast<std::size_t>(tau))));
    for (auto& ci : pat.row_mixing)
      for (auto& row : ci)
        for (auto& w : row) w = draw_subfield();

    std::vector<std::vector<FieldElement>> error(
        static_cast<std::size_t>(params.ell),
        std::vector<FieldElement>(static_cast<std::size_t>(params.n)));
    for (int i = 0; i < params.ell; ++i) {
      for (int t = 0; t < tau; ++t) {
        // A_{i,t} = sum_s a_s C_i[s][t], an element of the shared span
        FieldElement ait{};
        for (int s = 0; s < tau; ++s)
          ait = ctx.add(
              ait, ctx.mul(pat.column_span[static_cast<std::size_t>(s)],
                           pat.row_mixing[static_cast<std::size_t>(i)]
                                         [static_cast<std::size_t>(s)]
                                         [static_cast<std::size_t>(t)]));
        if (ait.value == 0) continue;
        for (int j = 0; j < params.n; ++j) {
          const FieldElement w =
              pat.row_vectors[static_cast<std::size_t>(t)]
                             [static_cast<std::size_t>(j)];
          if (w.value == 0) continue;
          error[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              ctx.add(error[static_cast<std::size_t>(i)]
                           [static_cast<std::size_t>(j)],
                      ctx.mul(ait, w));
        }
      }
    }
    if (rank_over_base(params.field, error) == tau) {
      for (int i = 0; i < params.ell; ++i)
        for (int j = 0; j < params.n; ++j)
          out.received[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              ctx.add(codewords[static_cast<std::size_t>(i)]
                               [static_cast<std::size_t>(j)],
                      error[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      return out;
    }
  }
  throw std::runtime_error("failed to realize the requested error rank");
}

DecodingInstance build_instance(
    const CodeParams& params,
    const std::vector<std::vector<FieldElement>>& received) {
  validate(params);
  if (static_cast<int>(received.size()) != params.ell)
    throw std::invalid_argument("received array has wrong row count");

  DecodingInstance inst;
  inst.field = params.field;
  inst.n = params.n;
  inst.ell = params.ell;
  inst.k = params.k;
  inst.locator_annihilator = annihilator(params.field, params.locators);
  for (int i = 0; i < params.ell; ++i) {
    const auto& row = received[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != params.n)
      throw std::invalid_argument("received row has wrong length");
    std::vector<std::pair<FieldElement, FieldElement>> points;
    points.reserve(row.size());
    for (int j = 0; j < params.n; ++j)
      points.emplace_back(params.locators[static_cast<std::size_t>(j)],
                          row[static_cast<std::size_t>(j)]);
    inst.syndromes.push_back(interpolate(params.field, points));
  }
  const int g0 = *std::max_element(params.k.begin(), params.k.end());
  inst.column_weights.assign(static_cast<std::size_t>(params.ell) + 1, 0);
  inst.column_weights[0] = g0;
  for (int i = 1; i <= params.ell; ++i)
    inst.column_weights[static_cast<std::size_t>(i)] =
        g0 - params.k[static_cast<std::size_t>(i - 1)];
  return inst;
}

SkewMatrix build_decoding_matrix(const DecodingInstance& inst) {
  const FieldPtr& f = inst.field;
  const int r = inst.ell + 1;
  SkewMatrix b = SkewMatrix::zeros(f, r, r);
  b.at(0, 0) = SkewPoly::monomial(f, {1}, inst.column_weights[0]);
  for (int i = 1; i < r; ++i) {
    const int gi = inst.column_weights[static_cast<std::size_t>(i)];
    b.at(0, i) = shift_up(inst.syndromes[static_cast<std::size_t>(i - 1)], gi);
    b.at(i, i) = shift_up(inst.locator_annihilator, gi);
  }
  return b;
}

std::string to_string(DecodeResult::Reason reason) {
  switch (reason) {
    case DecodeResult::Reason::kNone:
      return "none";
    case DecodeResult::Reason::kNoPivotRow:
      return "no-pivot-row";
    case DecodeResult::Reason::kInexactDivision:
      return "inexact-division";
    case DecodeResult::Reason::kDegreeBound:
      return "degree-bound";
  }
  return "unknown";
}

DecodeResult decode(const CodeParams& params,
                    const std::vector<std::vector<FieldElement>>& received,
                    MulStrategy strategy) {
  const auto start = std::chrono::steady_clock::now();
  DecodeResult out;

  const DecodingInstance inst = build_instance(params, received);
  const SkewMatrix b = build_decoding_matrix(inst);
  out.defect = orthogonality_defect(b, DefectHint::kTriangular);
  const ReductionResult red = reduce_to_wpf(b, out.defect, strategy);

  auto finish = [&](DecodeResult::Status st, DecodeResult::Reason why) {
    out.status = st;
    out.reason = why;
    out.wall_time_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    return out;
  };

  int pivot_row = -1;
  for (int i = 0; i < red.reduced.rows(); ++i)
    if (!red.reduced.row(i).is_zero() &&
        leading_position(red.reduced.row(i)) == 0) {
      pivot_row = i;
      break;
    }
  if (pivot_row < 0)
    return finish(DecodeResult::Status::kFailure,
                  DecodeResult::Reason::kNoPivotRow);
  const SkewVector& v = red.reduced.row(pivot_row);

  const FieldPtr& f = params.field;
  auto exact_right_shift = [&](const SkewPoly& a, int gamma,
                               SkewPoly& quotient) {
    if (gamma == 0) {
      quotient = a;
      return true;
    }
    if (a.is_zero()) {
      quotient = a;
      return true;
    }
    const DivisionResult d =
        divide(a, SkewPoly::monomial(f, {1}, gamma), DivisionSide::kRight);
    if (!d.remainder.is_zero()) return false;
    quotient = d.quotient;
    return true;
  };

  SkewPoly lambda = SkewPoly::zero(f);
  if (!exact_right_shift(v[0], inst.column_weights[0], lambda) ||
      lambda.is_zero())
    return finish(DecodeResult::Status::kFailure,
                  DecodeResult::Reason::kInexactDivision);
  out.lambda_degree = lambda.degree();

  std::vector<SkewPoly> messages;
  for (int i = 1; i <= params.ell; ++i) {
    SkewPoly omega = SkewPoly::zero(f);
    if (!exact_right_shift(v[i], inst.column_weights[static_cast<std::size_t>(i)],
                           omega))
      return finish(DecodeResult::Status::kFailure,
                    DecodeResult::Reason::kInexactDivision);
    SkewPoly fi = SkewPoly::zero(f);
    if (!omega.is_zero()) {
      const DivisionResult d = divide(omega, lambda, DivisionSide::kLeft);
      if (!d.remainder.is_zero())
        return finish(DecodeResult::Status::kFailure,
                      DecodeResult::Reason::kInexactDivision);
      fi = d.quotient;
    }
    if (fi.degree() >= params.k[static_cast<std::size_t>(i - 1)])
      return finish(DecodeResult::Status::kFailure,
                    DecodeResult::Reason::kDegreeBound);
    messages.push_back(std::move(fi));
  }
  out.messages = std::move(messages);
  return finish(DecodeResult::Status::kOk, DecodeResult::Reason::kNone);
}

}  // namespace skewreduce
