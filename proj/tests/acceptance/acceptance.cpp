// Copyright 2026 The Magion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "magion/analytics/entropy.hpp"
#include "magion/analytics/hamming.hpp"
#include "magion/cli/reproduce.hpp"
#include "magion/core/sampling.hpp"
#include "magion/inference/infer.hpp"
#include "magion/inference/pfhd.hpp"
#include "magion/io/checksum.hpp"
#include "magion/io/dataset.hpp"
#include "magion/io/trace_csv.hpp"
#include "magion/puf/ber.hpp"
#include "magion/puf/crp.hpp"

namespace fs = std::filesystem;
using namespace magion;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

const cli::CheckResult& find_check(const cli::ReproduceReport& r, const std::string& name) {
  return *std::find_if(r.checks.begin(), r.checks.end(), [&](const cli::CheckResult& c) { return c.name == name; });
}

Outcome from_checks(const cli::ReproduceReport& r, std::initializer_list<const char*> names) {
  Outcome o{true, ""};
  for (const char* n : names) {
    const auto& c = find_check(r, n);
    o.pass = o.pass && c.pass;
    o.detail += fmt::format("{}{}: {}", o.detail.empty() ? "" : "; ", n, c.detail);
  }
  return o;
}

Challenge random_challenge(RandomStream& rng, std::size_t n, std::size_t k) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + rng.below(n - i)]);
  all.resize(k);
  return Challenge(all);
}

Outcome monte_carlo(const PaperDataset& ds) {
  const DeviceLibrary libs[] = {ds.sample1_circuit_a(), ds.sample2_circuit_a()};
  RandomStream rng(606);
  int worst_case = 0;
  double worst_z = 0.0;
  bool ok = true;
  for (int i = 0; i < 50; ++i) {
    const auto& lib = libs[i % 2];
    const auto circuit = Circuit::from_library(lib);
    const auto ch = random_challenge(rng, lib.size(), 5);
    for (const auto& [trials, reps] : {std::pair{1, 100000}, std::pair{5, 10000}}) {
      const auto e = ber_empirical(circuit, lib, ch, trials, static_cast<std::size_t>(reps), rng);
      const double exact = ber_closed_form(lib, ch, trials);
      const double z = e.std_error > 0 ? std::abs(e.ber - exact) / e.std_error : (e.ber == exact ? 0.0 : INFINITY);
      if (z > worst_z) {
        worst_z = z;
        worst_case = i;
      }
      ok = ok && z < 4.0;
    }
  }

  // FHD of circuit A binary traces against the collision formula, sigma by bootstrap over traces.
  const auto lib = ds.sample1_circuit_a();
  const auto mapping = StateMapping::binary_direction();
  RandomStream trace_rng(607);
  const auto traces = degauss_series(Circuit::from_library(lib), 2000, trace_rng);
  const double mc = fhd_intra_from_counts(traces, mapping);
  const double expected = expected_fhd(symbol_distributions(lib, mapping));
  std::vector<std::vector<std::uint8_t>> symbols;
  for (const auto& t : traces) symbols.push_back(mapping.apply(t));
  RandomStream boot_rng(608);
  std::vector<double> boot;
  std::vector<std::size_t> rows(traces.size());
  for (int b = 0; b < 400; ++b) {
    for (auto& r : rows) r = boot_rng.below(traces.size());
    boot.push_back(fhd_intra_from_counts(symbols, rows, mapping.symbol_count()));
  }
  const double mean = std::accumulate(boot.begin(), boot.end(), 0.0) / static_cast<double>(boot.size());
  double var = 0.0;
  for (double x : boot) var += (x - mean) * (x - mean);
  const double sigma = std::sqrt(var / static_cast<double>(boot.size() - 1));
  const bool fhd_ok = std::abs(mc - expected) <= 3 * sigma && expected >= 0.49 && expected <= 0.50;

  return {ok && fhd_ok, fmt::format("100 BER comparisons, worst |z| = {:.2f} (challenge {}); FHD MC {:.4f} vs {:.4f}, "
                                    "3 sigma = {:.4f}",
                                    worst_z, worst_case, mc, expected, 3 * sigma)};
}

long long enumerate_crps(unsigned p, unsigned d, unsigned k) {
  long long total = 0;
  for (unsigned mask = 0; mask < (1u << (p + d)); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) == k) total += 1LL << __builtin_popcount(mask & ((1u << p) - 1));
  }
  return total;
}

Outcome properties(const PaperDataset& ds, const fs::path& scratch) {
  std::vector<std::string> failed;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) failed.emplace_back(what);
  };

  // FHD bounds and relabel invariance
  {
    RandomStream rng(700);
    const auto traces = degauss_series(Circuit::from_library(ds.sample2_circuit_a()), 200, rng);
    const double a = fhd_intra(traces, StateMapping::four_state()).mean_fhd;
    const double b = fhd_intra(traces, StateMapping::custom(MappingMode::FourState, {3, 2, 1, 0})).mean_fhd;
    expect(a >= 0 && a <= 1 && std::abs(a - b) < 1e-12, "fhd relabel");
  }
  // Entropy symmetry
  for (double p = 0.0; p <= 1.0; p += 0.001) {
    if (std::abs(shannon_entropy_bit(p) - shannon_entropy_bit(1 - p)) > 1e-12) {
      expect(false, "entropy symmetry");
      break;
    }
  }
  // BER monotone in T
  for (const auto& lib : {ds.sample1_circuit_a(), ds.sample2_circuit_a()}) {
    for (const auto& row : ds.crps) {
      for (int t = 1; t + 2 <= 99; t += 2) {
        if (ber_closed_form(lib, row.challenge, t + 2) > ber_closed_form(lib, row.challenge, t) + 1e-15) {
          expect(false, "ber monotone");
        }
      }
    }
  }
  // Mismatch identity
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; j <= 100; ++j) {
      const double a = i / 100.0;
      const double b = j / 100.0;
      if (std::abs(mismatch_probability(a, b) - (a * (1 - b) + b * (1 - a))) > 1e-12) expect(false, "mismatch identity");
    }
  }
  // enroll o sample fixed point
  {
    RandomStream rng(701);
    const auto lib = ds.sample2_circuit_a();
    const auto first = enroll(Circuit::from_library(lib), 20000, rng);
    const auto second = enroll(Circuit::from_library(first), 20000, rng);
    for (std::size_t i = 0; i < lib.size(); ++i) {
      const double p = first.profiles[i].p_sd();
      const double sigma = std::sqrt(2 * p * (1 - p) / 20000);
      expect(std::abs(second.profiles[i].p_sd() - p) <= 4 * sigma + 1e-12, "enroll fixed point");
      expect(second.profiles[i].bit_kind() == lib.profiles[i].bit_kind(), "enroll bit kind");
    }
  }
  // Seed determinism: byte-identical reruns
  {
    RandomStream a(702), b(702);
    const auto c = Circuit::from_library(ds.sample1_circuit_b());
    expect(traces_to_csv(degauss_series(c, 100, a)) == traces_to_csv(degauss_series(c, 100, b)), "trace determinism");
    const auto r1 = cli::reproduce_paper(ds, scratch / "run1", 20250101);
    const auto r2 = cli::reproduce_paper(ds, scratch / "run2", 20250101);
    for (std::size_t i = 0; i < r1.artifacts.size(); ++i) {
      expect(sha256_hex(read_file(r1.artifacts[i])) == sha256_hex(read_file(r2.artifacts[i])), "artifact determinism");
    }
  }
  // CRP count against enumeration
  for (unsigned p = 0; p <= 12; ++p) {
    for (unsigned d = 0; p + d <= 12; ++d) {
      for (unsigned k = 0; k <= p + d; ++k) expect(crp_count(p, d, k) == enumerate_crps(p, d, k), "crp enumeration");
    }
  }

  std::sort(failed.begin(), failed.end());
  failed.erase(std::unique(failed.begin(), failed.end()), failed.end());
  std::string detail = "fhd relabel, entropy symmetry, ber monotone, mismatch identity, enroll fixed point, "
                       "determinism, crp enumeration";
  if (!failed.empty()) {
    detail = "failed:";
    for (const auto& f : failed) detail += " " + f;
  }
  return {failed.empty(), detail};
}

Outcome inference(const PaperDataset& ds) {
  const auto s1 = ds.sample1_circuit_a();
  const auto s2 = ds.sample2_circuit_a();
  const auto ch = Challenge::parse("13,7,9,18,17");
  RandomStream rng(808);
  const auto study = simulate_inference(Circuit::from_library(s1), s1, s2, ch, 27, 10000, rng);
  const auto oracle = per_trial_accept_prob(s1, s1, s2, ch);
  const double z = std::abs(study.mean_per_trial - oracle.expected_per_trial) / study.per_trial_std_error;
  return {study.decided_sample1 >= 0.85 && z <= 3.0,
          fmt::format("accuracy {:.4f}, mean per-trial {:.4f} vs oracle {:.4f} (|z| = {:.2f}), "
                      "single-trial majority {:.4f}",
                      study.decided_sample1, study.mean_per_trial, oracle.expected_per_trial, z,
                      study.single_trial_majority)};
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path data_dir = argc > 1 ? fs::path(argv[1]) : default_data_dir();
  const fs::path scratch = fs::temp_directory_path() / "magion_acceptance";
  fs::remove_all(scratch);

  const auto ds = PaperDataset::load(data_dir);
  const auto report = cli::reproduce_paper(ds, scratch / "artifacts", 20250101);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 crp counts", [&] { return from_checks(report, {"crp-counts"}); }},
      {"AC2 closed-form BER vs reference CRPs", [&] { return from_checks(report, {"crp-table-ber"}); }},
      {"AC3 pFHD_inter vs reference CRPs", [&] { return from_checks(report, {"crp-table-pfhd"}); }},
      {"AC4 entropy and lock strength",
       [&] { return from_checks(report, {"entropy-per-bit", "entropy-means", "sequence-counts", "brute-force-years"}); }},
      {"AC5 recorded label replay", [&] { return from_checks(report, {"inference-replay"}); }},
      {"AC6 Monte-Carlo vs analytic", [&] { return monte_carlo(ds); }},
      {"AC7 property suite", [&] { return properties(ds, scratch); }},
      {"AC8 inference accuracy", [&] { return inference(ds); }},
  };

  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const Outcome o = fn();
    failures += !o.pass;
    fmt::print("{} {} | {}\n", o.pass ? "PASS" : "FAIL", name, o.detail);
    std::fflush(stdout);
  }
  fmt::print("{}/{} criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
