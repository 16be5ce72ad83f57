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

#include "skewreduce/bench.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "skewreduce/random.hpp"

namespace skewreduce {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

SkewPoly random_poly(const FieldPtr& field, std::mt19937_64& rng, int max_deg,
                     bool allow_zero) {
  const std::uint64_t span = static_cast<std::uint64_t>(max_deg) + 1 + allow_zero;
  const int d = static_cast<int>(uniform_below(rng, span)) - (allow_zero ? 1 : 0);
  if (d < 0) return SkewPoly::zero(field);
  std::vector<FieldElement> c(static_cast<std::size_t>(d) + 1);
  for (auto& e : c) e = uniform_element(*field, rng);
  c.back() = uniform_nonzero(*field, rng);
  return SkewPoly::from_coeffs(field, std::move(c));
}

SkewMatrix random_matrix(const FieldPtr& field, std::mt19937_64& rng, int r,
                         int max_deg) {
  std::vector<SkewVector> rows;
  rows.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    std::vector<SkewPoly> entries;
    entries.reserve(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j)
      entries.push_back(random_poly(field, rng, max_deg));
    rows.emplace_back(field, std::move(entries));
  }
  SkewMatrix m(field, std::move(rows));
  if (has_zero_row(m)) {
    // keep the draw full length; patch the zero row with a monomial
    for (int i = 0; i < r; ++i)
      if (m.row(i).is_zero())
        m.at(i, static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(r)))) =
            SkewPoly::monomial(field, uniform_nonzero(*field, rng),
                               static_cast<int>(uniform_below(
                                   rng, static_cast<std::uint64_t>(max_deg) + 1)));
  }
  return m;
}

SkewMatrix random_full_rank_matrix(const FieldPtr& field, std::mt19937_64& rng,
                                   int r, int max_deg) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    SkewMatrix m = random_matrix(field, rng, r, max_deg);
    if (has_zero_row(m)) continue;
    // dependent rows surface as a zero row during full reduction
    try {
      naive_row_reduce(m);
    } catch (const std::domain_error&) {
      continue;
    }
    return m;
  }
  throw std::runtime_error("failed to draw a full-rank matrix");
}

SkewMatrix random_unit_length_matrix(const FieldPtr& field,
                                     std::mt19937_64& rng, int r, int max_deg) {
  std::vector<SkewVector> rows;
  for (int i = 0; i < r; ++i) {
    const int row_deg =
        static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_deg) + 1));
    std::vector<SkewPoly> entries;
    bool any = false;
    for (int j = 0; j < r; ++j) {
      const bool on = uniform_below(rng, 2) == 1;
      if (on) {
        entries.push_back(
            SkewPoly::monomial(field, uniform_nonzero(*field, rng), row_deg));
        any = true;
      } else {
        entries.push_back(SkewPoly::zero(field));
      }
    }
    if (!any)
      entries[uniform_below(rng, static_cast<std::uint64_t>(r))] =
          SkewPoly::monomial(field, uniform_nonzero(*field, rng), row_deg);
    rows.emplace_back(field, std::move(entries));
  }
  return SkewMatrix(field, std::move(rows));
}

SkewMatrix random_decoding_shaped_matrix(const FieldPtr& field,
                                         std::mt19937_64& rng, int n, int ell) {
  // monic G of degree n, syndromes of degree < n, zero column weights
  std::vector<FieldElement> g(static_cast<std::size_t>(n) + 1);
  for (auto& c : g) c = uniform_element(*field, rng);
  g.back() = {1};
  const SkewPoly locator_poly = SkewPoly::from_coeffs(field, std::move(g));

  const int r = ell + 1;
  SkewMatrix b = SkewMatrix::zeros(field, r, r);
  b.at(0, 0) = SkewPoly::one(field);
  for (int i = 1; i < r; ++i) {
    b.at(0, i) = random_poly(field, rng, n - 1, /*allow_zero=*/false);
    b.at(i, i) = locator_poly;
  }
  return b;
}

std::vector<SkewPoly> random_messages(const CodeParams& params,
                                      std::mt19937_64& rng) {
  std::vector<SkewPoly> out;
  out.reserve(static_cast<std::size_t>(params.ell));
  for (int i = 0; i < params.ell; ++i) {
    std::vector<FieldElement> c(
        static_cast<std::size_t>(params.k[static_cast<std::size_t>(i)]));
    for (auto& e : c) e = uniform_element(*params.field, rng);
    out.push_back(SkewPoly::from_coeffs(params.field, std::move(c)));
  }
  return out;
}

std::string bench_csv_header() {
  return "schema,algorithm,r,size,ell,rep,seed,wall_time_ms,base_case_count,"
         "st_count";
}

std::string bench_csv_line(const BenchRecord& rec) {
  std::ostringstream os;
  os << kBenchSchema << ',' << rec.algorithm << ',' << rec.r << ',' << rec.size
     << ',' << rec.ell << ',' << rec.rep << ',' << rec.seed << ','
     << rec.wall_time_ms << ',' << rec.base_case_count << ',' << rec.st_count;
  return os.str();
}

BenchRecord run_reduce_bench(const FieldPtr& field, int n, int ell,
                             ReduceAlgo algo, std::uint64_t seed, int rep,
                             MulStrategy strategy) {
  std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(rep)));
  const SkewMatrix b = random_decoding_shaped_matrix(field, rng, n, ell);
  const int defect = orthogonality_defect(b, DefectHint::kTriangular);

  BenchRecord rec;
  rec.r = b.rows();
  rec.size = n;
  rec.ell = ell;
  rec.rep = rep;
  rec.seed = seed;

  const auto start = std::chrono::steady_clock::now();
  switch (algo) {
    case ReduceAlgo::kDivideConquer: {
      rec.algorithm = "dc";
      ReductionStats stats;
      reduce_dc_transform(b, std::max(defect, 1), &stats, strategy);
      rec.base_case_count = stats.base_case_calls;
      rec.st_count = stats.st_count;
      break;
    }
    case ReduceAlgo::kIterated: {
      rec.algorithm = "iterated";
      const ReductionResult res = reduce_iterated(b, std::max(defect, 1));
      rec.base_case_count = res.stats.base_case_calls;
      rec.st_count = res.stats.st_count;
      break;
    }
    case ReduceAlgo::kNaive: {
      rec.algorithm = "naive";
      const BaseCaseResult res = naive_row_reduce(b);
      rec.st_count = res.st_count;
      break;
    }
  }
  rec.wall_time_ms = ms_since(start);
  return rec;
}

BenchRecord run_decode_bench(int n, int ell, std::uint64_t seed, int rep) {
  const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(rep));
  auto field = FieldContext::create(2, 1, static_cast<std::uint32_t>(n));
  const int k = std::max(1, n / 2);
  auto params = CodeParams::make_random_locators(
      field, n, ell, std::vector<int>(static_cast<std::size_t>(ell), k),
      derive_seed(trial_seed, 1));
  std::mt19937_64 rng(derive_seed(trial_seed, 2));
  const auto messages = random_messages(params, rng);
  const auto codewords = encode(params, messages);
  const int tau = std::max(0, ell * (n - k) / (ell + 1));
  const auto channel =
      add_rank_error(params, codewords, tau, derive_seed(trial_seed, 3));

  BenchRecord rec;
  rec.algorithm = "decode";
  rec.r = ell + 1;
  rec.size = n;
  rec.ell = ell;
  rec.rep = rep;
  rec.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  decode(params, channel.received);
  rec.wall_time_ms = ms_since(start);
  return rec;
}

RoundtripReport run_roundtrip(const RoundtripConfig& config) {
  if (config.trials < 0) throw std::invalid_argument("negative trial count");
  auto field = FieldContext::create(config.p, config.u, config.m);
  auto params = CodeParams::make_random_locators(
      field, config.n, config.ell,
      std::vector<int>(static_cast<std::size_t>(config.ell), config.k),
      derive_seed(config.seed, 0xA11CE));

  RoundtripReport report;
  report.config = config;
  report.trial_status.assign(static_cast<std::size_t>(config.trials), "");
  std::vector<double> wall(static_cast<std::size_t>(config.trials), 0.0);
  std::vector<char> success(static_cast<std::size_t>(config.trials), 0);

  auto run_trial = [&](int t) {
    std::mt19937_64 rng(derive_seed(config.seed, static_cast<std::uint64_t>(t)));
    const auto messages = random_messages(params, rng);
    const auto codewords = encode(params, messages);
    const auto channel = add_rank_error(
        params, codewords, config.tau,
        derive_seed(config.seed, 0x10000u + static_cast<std::uint64_t>(t)));
    const DecodeResult res = decode(params, channel.received);
    wall[static_cast<std::size_t>(t)] = res.wall_time_ms;
    const bool ok =
        res.status == DecodeResult::Status::kOk && res.messages == messages;
    success[static_cast<std::size_t>(t)] = ok ? 1 : 0;
    if (res.status != DecodeResult::Status::kOk)
      report.trial_status[static_cast<std::size_t>(t)] = to_string(res.reason);
    else
      report.trial_status[static_cast<std::size_t>(t)] =
          ok ? "ok" : "wrong-message";
  };

  const int workers = std::max(1, config.parallel);
  if (workers == 1) {
    for (int t = 0; t < config.trials; ++t) run_trial(t);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        for (int t = next.fetch_add(1); t < config.trials;
             t = next.fetch_add(1))
          run_trial(t);
      });
    for (auto& th : pool) th.join();
  }

  double total = 0.0;
  for (int t = 0; t < config.trials; ++t) {
    report.successes += success[static_cast<std::size_t>(t)];
    total += wall[static_cast<std::size_t>(t)];
    report.max_wall_time_ms =
        std::max(report.max_wall_time_ms, wall[static_cast<std::size_t>(t)]);
  }
  report.mean_wall_time_ms =
      config.trials > 0 ? total / config.trials : 0.0;
  return report;
}

}  // namespace skewreduce
