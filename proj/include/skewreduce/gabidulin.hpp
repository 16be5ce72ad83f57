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

#ifndef SKEWREDUCE_GABIDULIN_HPP
#define SKEWREDUCE_GABIDULIN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "skewreduce/alekhnovich.hpp"

namespace skewreduce {

/// Parameters of an interleaved Gabidulin code: ell codewords of length n,
/// evaluated at shared locators that are linearly independent over F_q.
struct CodeParams {
  FieldPtr field;
  int n = 0;
  int ell = 1;
  std::vector<int> k;                  // message lengths, one per row
  std::vector<FieldElement> locators;  // size n, F_q-independent

  /// Validates invariants (n <= m, ranks, 1 <= k_i < n) and returns the
  /// checked parameter set.
  static CodeParams make(FieldPtr field, int n, int ell, std::vector<int> k,
                         std::vector<FieldElement> locators);

  /// Same, with locators drawn deterministically from the seed.
  static CodeParams make_random_locators(FieldPtr field, int n, int ell,
                                         std::vector<int> k,
                                         std::uint64_t seed);
};

/// Evaluation encoding: codeword entry (i, j) is f_i applied to locator j
/// under operator evaluation. Requires deg f_i < k_i.
std::vector<std::vector<FieldElement>> encode(
    const CodeParams& params, const std::vector<SkewPoly>& messages);

/// Rank-tau error with one column space shared across the interleaved rows.
/// Row i receives (a * C_i) * B: the a_1..a_tau span the F_q-column space,
/// the shared row vectors b_1..b_tau (the rows of B) carry rank exactly tau,
/// and the per-row mixing matrices C_i recombine the span within each row.
struct ErrorPattern {
  std::vector<FieldElement> column_span;               // a_1..a_tau
  std::vector<std::vector<FieldElement>> row_vectors;  // b_t in F_q^n, shared
  // row_mixing[i][s][t] in F_q: row i uses A_{i,t} = sum_s a_s * C_i[s][t]
  std::vector<std::vector<std::vector<FieldElement>>> row_mixing;
};

struct ChannelOutput {
  std::vector<std::vector<FieldElement>> received;
  ErrorPattern pattern;
};

ChannelOutput add_rank_error(const CodeParams& params,
                             const std::vector<std::vector<FieldElement>>& codewords,
                             int tau, std::uint64_t seed);

/// F_q-rank of a matrix over F_{q^m}: every entry is expanded into its
/// coordinate vector over F_q and the stacked expansion is eliminated.
int rank_over_base(const FieldPtr& field,
                   const std::vector<std::vector<FieldElement>>& matrix);

/// Everything the receiver derives from a received array: row interpolations,
/// the locator annihilator, and the column weights.
struct DecodingInstance {
  FieldPtr field;
  int n = 0;
  int ell = 1;
  std::vector<int> k;
  std::vector<SkewPoly> syndromes;   // s_i, deg < n
  SkewPoly locator_annihilator;      // G, monic of degree n
  std::vector<int> column_weights;   // gamma_0..gamma_ell
};

/// gamma_0 = max_i k_i and gamma_i = gamma_0 - k_i, which makes the sought
/// minimal row attain its degree in column 0.
DecodingInstance build_instance(
    const CodeParams& params,
    const std::vector<std::vector<FieldElement>>& received);

/// The (ell+1) x (ell+1) upper-triangular decoding matrix: first row
/// (x^g0, s_1 x^g1, ..., s_ell x^gell), then G x^gi on the diagonal.
SkewMatrix build_decoding_matrix(const DecodingInstance& instance);

struct DecodeResult {
  enum class Status { kOk, kFailure };
  enum class Reason { kNone, kNoPivotRow, kInexactDivision, kDegreeBound };

  Status status = Status::kFailure;
  Reason reason = Reason::kNone;
  std::vector<SkewPoly> messages;  // filled on success
  int lambda_degree = -1;
  int defect = 0;
  double wall_time_ms = 0.0;
};

std::string to_string(DecodeResult::Reason reason);

/// Full decoding pipeline: build the instance and its matrix, reduce it to
/// weak Popov form with budget equal to the orthogonality defect, take the
/// unique row with leading position 0, strip the column shifts by exact right
/// division, and extract each message as the exact left quotient by the row's
/// first entry. Beyond-radius errors surface as an explicit failure value.
DecodeResult decode(const CodeParams& params,
                    const std::vector<std::vector<FieldElement>>& received,
                    MulStrategy strategy = MulStrategy::kNaive);

}  // namespace skewreduce

#endif  // SKEWREDUCE_GABIDULIN_HPP
