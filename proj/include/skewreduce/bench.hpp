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

#ifndef SKEWREDUCE_BENCH_HPP
#define SKEWREDUCE_BENCH_HPP

#include <random>
#include <string>
#include <vector>

#include "skewreduce/gabidulin.hpp"

namespace skewreduce {

inline constexpr const char* kBenchSchema = "skewreduce-bench-1";
inline constexpr const char* kRoundtripSchema = "skewreduce-roundtrip-1";

SkewPoly random_poly(const FieldPtr& field, std::mt19937_64& rng, int max_deg,
                     bool allow_zero = true);

SkewMatrix random_matrix(const FieldPtr& field, std::mt19937_64& rng, int r,
                         int max_deg);

/// Random square matrix that is full rank as a module basis (rows
/// independent over the ring). Rank-deficient draws are redrawn; they are
/// rare except over tiny fields.
SkewMatrix random_full_rank_matrix(const FieldPtr& field, std::mt19937_64& rng,
                                   int r, int max_deg);

/// Random matrix with every nonzero entry a monomial whose power equals its
/// row degree, so that the matrix has length <= 1.
SkewMatrix random_unit_length_matrix(const FieldPtr& field,
                                     std::mt19937_64& rng, int r, int max_deg);

/// A random decoder-shaped matrix: (ell+1) x (ell+1), first row
/// (x^g0, s_1 x^g1, ...), diagonal G x^gi with G monic of degree n.
/// Upper-triangular with defect about n.
SkewMatrix random_decoding_shaped_matrix(const FieldPtr& field,
                                         std::mt19937_64& rng, int n, int ell);

std::vector<SkewPoly> random_messages(const CodeParams& params,
                                      std::mt19937_64& rng);

struct BenchRecord {
  std::string algorithm;
  int r = 0;
  int size = 0;  // n for decode benches, degree scale / t for reductions
  int ell = 0;
  int rep = 0;
  std::uint64_t seed = 0;
  double wall_time_ms = 0.0;
  std::uint64_t base_case_count = 0;
  std::uint64_t st_count = 0;
};

std::string bench_csv_header();
std::string bench_csv_line(const BenchRecord& rec);

enum class ReduceAlgo { kDivideConquer, kIterated, kNaive };

/// One reduction of a decoder-shaped random matrix; the reported size is n.
BenchRecord run_reduce_bench(const FieldPtr& field, int n, int ell,
                             ReduceAlgo algo, std::uint64_t seed, int rep,
                             MulStrategy strategy = MulStrategy::kNaive);

/// One encode/channel/decode round trip at (n, ell) with m = n.
BenchRecord run_decode_bench(int n, int ell, std::uint64_t seed, int rep);

struct RoundtripConfig {
  std::uint32_t p = 2;
  std::uint32_t u = 1;
  std::uint32_t m = 24;
  int n = 24;
  int ell = 1;
  int k = 12;
  int tau = 6;
  int trials = 100;
  std::uint64_t seed = 1;
  int parallel = 1;
};

struct RoundtripReport {
  RoundtripConfig config;
  int successes = 0;
  double mean_wall_time_ms = 0.0;
  double max_wall_time_ms = 0.0;
  std::vector<std::string> trial_status;  // "ok" or a failure reason, by index

  double success_rate() const {
    return config.trials == 0
               ? 0.0
               : static_cast<double>(successes) / config.trials;
  }
};

/// Seeded encode -> rank error -> decode trials; trial i uses a seed derived
/// from (seed, i), so reports are reproducible and order-independent under
/// --parallel.
RoundtripReport run_roundtrip(const RoundtripConfig& config);

}  // namespace skewreduce

#endif  // SKEWREDUCE_BENCH_HPP
