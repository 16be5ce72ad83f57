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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "skewreduce/bench.hpp"
#include "skewreduce/random.hpp"
#include "skewreduce/serialization.hpp"

namespace {

using namespace skewreduce;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SKEWREDUCE_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 1;
}

// q must be a prime power p^u
std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    bool prime = true;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (!prime || q % p != 0) continue;
    std::uint32_t u = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++u;
    }
    if (rest == 1) return {p, u};
    break;
  }
  throw CLI::ValidationError("--q", "q must be a prime power");
}

int cmd_roundtrip(const RoundtripConfig& config, double min_rate,
                  const std::string& out_path) {
  const RoundtripReport report = run_roundtrip(config);
  json failures = json::array();
  for (std::size_t t = 0; t < report.trial_status.size(); ++t)
    if (report.trial_status[t] != "ok")
      failures.push_back({{"trial", t}, {"status", report.trial_status[t]}});
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < config.u; ++i) q *= config.p;
  const json j = {{"schema", kRoundtripSchema},
                  {"q", q},
                  {"p", config.p},
                  {"u", config.u},
                  {"m", config.m},
                  {"n", config.n},
                  {"k", config.k},
                  {"ell", config.ell},
                  {"tau", config.tau},
                  {"trials", config.trials},
                  {"seed", config.seed},
                  {"successes", report.successes},
                  {"success_rate", report.success_rate()},
                  {"min_rate", min_rate},
                  {"failures", failures},
                  {"mean_wall_time_ms", report.mean_wall_time_ms},
                  {"max_wall_time_ms", report.max_wall_time_ms}};
  if (out_path.empty())
    std::cout << j.dump(2) << '\n';
  else
    save_json(out_path, j);
  return report.success_rate() >= min_rate ? kExitOk : kExitAssertion;
}

int cmd_reduce(const std::string& in_path, const std::string& t_spec,
               const std::string& algo, const std::string& out_prefix) {
  auto [field, m] = matrix_from_json(load_json(in_path));
  if (m.rows() != m.cols()) {
    std::cerr << "input matrix is not square\n";
    return kExitAssertion;
  }

  ReductionResult res{TransformRecord::identity(field, m.rows()), m, {}};
  int t = 0;
  if (algo != "naive" && t_spec != "auto") {
    t = std::stoi(t_spec);
    if (t < 1) {
      std::cerr << "--t must be >= 1 or auto\n";
      return kExitUsage;
    }
  }

  // with --t auto the reduction is driven to weak Popov form; an explicit t
  // exposes the raw disjunctive contract (weak Popov or degree drop >= t)
  if (algo == "dc") {
    res = t_spec == "auto"
              ? reduce_to_wpf(m, std::nullopt, MulStrategy::kNaive,
                              ReduceEngine::kDivideConquer)
              : reduce_dc(m, t);
  } else if (algo == "iterated") {
    res = t_spec == "auto"
              ? reduce_to_wpf(m, std::nullopt, MulStrategy::kNaive,
                              ReduceEngine::kIterated)
              : reduce_iterated(m, t);
  } else if (algo == "naive") {
    BaseCaseResult base = naive_row_reduce(m);
    res.transform = std::move(base.transform);
    res.reduced = std::move(base.reduced);
    res.stats.st_count = base.st_count;
  } else {
    std::cerr << "unknown --algo " << algo << '\n';
    return kExitUsage;
  }

  save_json(out_prefix + ".U.json", matrix_to_json(res.transform.matrix));
  save_json(out_prefix + ".reduced.json", matrix_to_json(res.reduced));
  const json summary = {{"schema", "skewreduce-reduce-1"},
                        {"weak_popov", is_weak_popov(res.reduced)},
                        {"degree_in", matrix_degree(m)},
                        {"degree_out", matrix_degree(res.reduced)},
                        {"t", t_spec},
                        {"algorithm", algo},
                        {"st_count", res.stats.st_count},
                        {"base_case_count", res.stats.base_case_calls}};
  std::cout << summary.dump(2) << '\n';
  return kExitOk;
}

int cmd_bench(const std::string& suite, std::vector<int> sizes, int reps,
              int ell, std::uint64_t seed, const std::string& csv_path,
              const std::string& mul) {
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1])
      throw CLI::ValidationError("--sizes", "sizes must be ascending");
  const MulStrategy strategy =
      mul == "karatsuba" ? MulStrategy::kKaratsuba : MulStrategy::kNaive;

  std::ostringstream out;
  out << bench_csv_header() << '\n';
  if (suite == "reduce") {
    auto field = FieldContext::create(2, 1, 10);
    for (int n : sizes)
      for (int rep = 0; rep < reps; ++rep) {
        out << bench_csv_line(run_reduce_bench(field, n, ell,
                                               ReduceAlgo::kDivideConquer, seed,
                                               rep, strategy))
            << '\n';
        out << bench_csv_line(
                   run_reduce_bench(field, n, ell, ReduceAlgo::kNaive, seed, rep))
            << '\n';
      }
  } else if (suite == "decode") {
    for (int n : sizes)
      for (int rep = 0; rep < reps; ++rep)
        out << bench_csv_line(run_decode_bench(n, ell, seed, rep)) << '\n';
  } else {
    std::cerr << "unknown --suite " << suite << '\n';
    return kExitUsage;
  }

  if (csv_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(csv_path);
    if (!f) {
      std::cerr << "cannot write " << csv_path << '\n';
      return kExitAssertion;
    }
    f << out.str();
  }
  return kExitOk;
}

int cmd_decode(const std::string& in_path, const std::string& out_path) {
  const InstanceFile inst = instance_from_json(load_json(in_path));
  const DecodeResult res = decode(inst.params, inst.received);
  const json j = decode_result_to_json(res);
  if (out_path.empty())
    std::cout << j.dump(2) << '\n';
  else
    save_json(out_path, j);
  return res.status == DecodeResult::Status::kOk ? kExitOk : kExitAssertion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skew polynomial row reduction and interleaved Gabidulin codec"};
  app.require_subcommand(1);

  // roundtrip
  RoundtripConfig rt;
  std::uint64_t rt_q = 2;
  double min_rate = 1.0;
  std::string rt_out;
  std::uint64_t rt_seed = 0;
  bool rt_seed_set = false;
  auto* roundtrip = app.add_subcommand(
      "roundtrip", "encode -> rank error channel -> decode trials");
  roundtrip->add_option("--q", rt_q, "subfield size, a prime power")
      ->default_val(2);
  roundtrip->add_option("--m", rt.m, "extension degree over F_q")->required();
  roundtrip->add_option("--n", rt.n, "code length (n <= m)")->required();
  roundtrip->add_option("--k", rt.k, "message length, shared by all rows")
      ->required();
  roundtrip->add_option("--ell", rt.ell, "interleaving degree")->default_val(1);
  roundtrip->add_option("--tau", rt.tau, "error rank")->required();
  roundtrip->add_option("--trials", rt.trials, "number of trials")
      ->default_val(100);
  auto* seed_opt = roundtrip->add_option("--seed", rt_seed, "PRNG seed");
  roundtrip->add_option("--min-rate", min_rate,
                        "success rate required for exit code 0");
  roundtrip->add_option("--parallel", rt.parallel, "worker threads")
      ->default_val(1);
  roundtrip->add_option("--out", rt_out, "write the JSON report here");
  roundtrip->callback([&]() { rt_seed_set = seed_opt->count() > 0; });

  // reduce
  std::string rd_in, rd_t = "auto", rd_algo = "dc", rd_out = "reduced";
  auto* reduce = app.add_subcommand("reduce", "row-reduce a matrix file");
  reduce->add_option("--in", rd_in, "matrix JSON file")->required();
  reduce->add_option("--t", rd_t, "degree-reduction target, or auto");
  reduce->add_option("--algo", rd_algo, "dc | iterated | naive");
  reduce->add_option("--out", rd_out, "output file prefix");

  // bench
  std::string bn_suite = "reduce", bn_csv, bn_mul = "naive";
  std::vector<int> bn_sizes{64, 128, 256};
  int bn_reps = 1, bn_ell = 2;
  std::uint64_t bn_seed = 0;
  bool bn_seed_set = false;
  auto* bench = app.add_subcommand("bench", "timing suites with CSV output");
  bench->add_option("--suite", bn_suite, "reduce | decode");
  bench->add_option("--sizes", bn_sizes, "ascending size list")->expected(-1);
  bench->add_option("--reps", bn_reps, "repetitions per size");
  bench->add_option("--ell", bn_ell, "interleaving degree");
  auto* bseed_opt = bench->add_option("--seed", bn_seed, "PRNG seed");
  bench->add_option("--csv", bn_csv, "write CSV here instead of stdout");
  bench->add_option("--mul", bn_mul, "naive | karatsuba");
  bench->callback([&]() { bn_seed_set = bseed_opt->count() > 0; });

  // decode
  std::string dc_in, dc_out;
  auto* decode_cmd =
      app.add_subcommand("decode", "decode an instance file");
  decode_cmd->add_option("--in", dc_in, "instance JSON file")->required();
  decode_cmd->add_option("--out", dc_out, "write the result JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (roundtrip->parsed()) {
      auto [p, u] = split_prime_power(rt_q);
      rt.p = p;
      rt.u = u;
      rt.seed = rt_seed_set ? rt_seed : default_seed();
      if (rt.n > static_cast<int>(rt.m) || rt.k < 1 || rt.k >= rt.n ||
          rt.tau < 0 || rt.tau > rt.n - rt.k) {
        std::cerr << "parameter sanity failed: need n <= m, 1 <= k < n, "
                     "0 <= tau <= n - k\n";
        return kExitUsage;
      }
      return cmd_roundtrip(rt, min_rate, rt_out);
    }
    if (reduce->parsed()) return cmd_reduce(rd_in, rd_t, rd_algo, rd_out);
    if (bench->parsed())
      return cmd_bench(bn_suite, bn_sizes, bn_reps, bn_ell,
                       bn_seed_set ? bn_seed : default_seed(), bn_csv, bn_mul);
    if (decode_cmd->parsed()) return cmd_decode(dc_in, dc_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitAssertion;
  }
  return kExitUsage;
}
