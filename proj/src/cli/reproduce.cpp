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

#include "magion/cli/reproduce.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>
#include <json.hpp>

#include "magion/analytics/entropy.hpp"
#include "magion/analytics/hamming.hpp"
#include "magion/core/sampling.hpp"
#include "magion/inference/infer.hpp"
#include "magion/inference/pfhd.hpp"
#include "magion/inference/select.hpp"
#include "magion/io/checksum.hpp"
#include "magion/io/plot_data.hpp"
#include "magion/io/trace_csv.hpp"
#include "magion/puf/ber.hpp"
#include "magion/puf/crp.hpp"

namespace magion::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string sig3(double x) { return fmt::format("{:.2e}", x); }

struct Writer {
  fs::path dir;
  ReproduceReport* report;

  void operator()(const std::string& name, const std::string& contents) const {
    write_file(dir / name, contents);
    report->artifacts.push_back(dir / name);
  }
};

void check(ReproduceReport& r, std::string name, bool pass, std::string detail) {
  r.checks.push_back({std::move(name), pass, std::move(detail)});
}

}  // namespace

bool ReproduceReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

ReproduceReport reproduce_paper(const PaperDataset& ds, const fs::path& out_dir, std::uint64_t seed) {
  ReproduceReport report;
  const Writer write{out_dir, &report};
  const auto s1 = ds.sample1_circuit_a();
  const auto s2 = ds.sample2_circuit_a();
  const auto s1b = ds.sample1_circuit_b();

  // CRP counts
  {
    struct Case { unsigned p, d, k; long expected; };
    const Case cases[] = {{0, 18, 5, 8568}, {static_cast<unsigned>(s1.pbit_count()), static_cast<unsigned>(s1.dbit_count()), 5, 41174},
                          {static_cast<unsigned>(s2.pbit_count()), static_cast<unsigned>(s2.dbit_count()), 5, 60858}};
    std::string csv = "P,D,k,crp_count\n";
    bool ok = true;
    for (const auto& c : cases) {
      const auto n = crp_count(c.p, c.d, c.k);
      csv += fmt::format("{},{},{},{}\n", c.p, c.d, c.k, n.str());
      ok = ok && n == c.expected;
    }
    write("crp_counts.csv", csv);
    check(report, "crp-counts", ok, "8568 / 41174 / 60858");
  }

  // Reference CRP table
  {
    std::vector<CrpCandidate> rows;
    int s1_ok = 0;
    int s2_ok = 0;
    std::string off;
    bool pfhd_ok = true;
    for (const auto& row : ds.crps) {
      rows.push_back(describe_crp(s1, s2, row.challenge));
      const auto& c = rows.back();
      bool r1 = true;
      bool r2 = true;
      for (std::size_t t = 0; t < kReportTrials.size(); ++t) {
        r1 = r1 && std::abs(100.0 * c.ber1[t] - row.ber1_pct[t]) <= 0.06;
        r2 = r2 && std::abs(100.0 * c.ber2[t] - row.ber2_pct[t]) <= 0.06;
      }
      s1_ok += r1;
      s2_ok += r2;
      if (!r1) off += fmt::format(" S1({})", row.challenge.to_string());
      if (!r2) off += fmt::format(" S2({})", row.challenge.to_string());
      pfhd_ok = pfhd_ok && std::abs(c.pfhd - row.pfhd) <= 0.002;
    }
    write("crp_table.csv", crp_table_csv(rows));
    const Challenge spot = Challenge::parse("5,11,12,14,15");
    const bool spot_ok = fmt::format("{:.3g}", 100.0 * ber_closed_form(s1, spot, 1)) == "0.64" &&
                         fmt::format("{:.3g}", 100.0 * ber_closed_form(s2, spot, 1)) == "18";
    check(report, "crp-table-ber", s1_ok >= 6 && s2_ok >= 6 && spot_ok,
          fmt::format("rows within 0.06 pp: sample1 {}/8, sample2 {}/8;{}", s1_ok, s2_ok,
                      off.empty() ? std::string(" none off") : " off:" + off));
    check(report, "crp-table-pfhd", pfhd_ok, "all rows within 0.002");

    write("select_crps.csv", crp_table_csv(select_crps(s1, s2, 5, 0.5, 0.01)));

    const Challenge five = Challenge::parse("7,9,13,17,18");
    std::vector<int> odd;
    for (int t = 1; t <= 27; t += 2) odd.push_back(t);
    write("ber_curve_sample1.csv", ber_curve_csv(ber_curve(s1, five, odd)));
    write("ber_curve_sample2.csv", ber_curve_csv(ber_curve(s2, five, odd)));
  }

  // Entropy and lock strength
  {
    const auto hb = total_entropy(s1b);
    const auto ha = total_entropy(s1);
    bool per_bit_ok = true;
    for (std::size_t i = 0; i < ds.circuit_b_direction.size(); ++i) {
      per_bit_ok = per_bit_ok && std::abs(hb.per_bit[i] - ds.circuit_b_direction[i].entropy) <= 0.001;
    }
    for (std::size_t i = 0; i < ds.circuit_a_direction.size(); ++i) {
      per_bit_ok = per_bit_ok && std::abs(ha.per_bit[i] - ds.circuit_a_direction[i].entropy) <= 0.001;
    }
    const DeviceLibrary both[] = {s1, s1b};
    const auto lock_ab = lock_strength(both, 1e9);
    const auto lock_100 = lock_strength(100 * 0.98, 100, 1e9);
    const double seq_b = static_cast<double>(sequence_count(hb.total));

    ordered_json j;
    auto circuit = [](const EntropyReport& r) {
      return ordered_json{{"dots", r.per_bit.size()}, {"per_bit", r.per_bit}, {"total", r.total},
                          {"mean", r.mean}, {"sequences", static_cast<double>(sequence_count(r.total))}};
    };
    j["circuit_b"] = circuit(hb);
    j["circuit_a"] = circuit(ha);
    j["circuits_a_and_b"] = {{"total", lock_ab.total_entropy}, {"sequences", static_cast<double>(lock_ab.sequences)}};
    j["lock_100_dots"] = {{"mean_entropy", 0.98},
                          {"sequences", static_cast<double>(lock_100.sequences)},
                          {"guesses_per_second", 1e9},
                          {"years", static_cast<double>(lock_100.years)}};
    write("entropy_report.json", j.dump(2) + "\n");

    check(report, "entropy-per-bit", per_bit_ok, "42 dots within 0.001");
    check(report, "entropy-means", std::abs(hb.mean - 0.97) <= 0.005 && std::abs(ha.mean - 0.99) <= 0.005,
          fmt::format("circuit B {:.4f}, circuit A {:.4f}", hb.mean, ha.mean));
    const bool counts_ok = sig3(seq_b) == "9.84e+06" && sig3(static_cast<double>(lock_ab.sequences)) == "2.21e+12" &&
                           sig3(static_cast<double>(lock_100.sequences)) == "3.17e+29";
    check(report, "sequence-counts", counts_ok,
          fmt::format("{} / {} / {}", sig3(seq_b), sig3(static_cast<double>(lock_ab.sequences)),
                      sig3(static_cast<double>(lock_100.sequences))));
    const double ratio = static_cast<double>(lock_100.years) / 1e13;
    check(report, "brute-force-years", ratio <= 1.1 && ratio >= 1.0 / 1.1, fmt::format("{:.3e} years", static_cast<double>(lock_100.years)));
  }

  // Inference replay
  {
    const Challenge challenge(ds.replay.positions);
    std::vector<std::vector<StateClass>> observations;
    for (const auto& row : ds.replay.labels) {
      std::vector<StateClass> obs;
      for (std::size_t i = 0; i < row.size(); ++i) {
        obs.push_back(observation_for_label(s1, s2, challenge.positions()[i], row[i]));
      }
      observations.push_back(std::move(obs));
    }
    const auto run = infer(observations, s1, s2, challenge);
    bool ok = run.trial_labels == ds.replay.labels && run.decision == Decision::Sample1;
    for (std::size_t t = 0; t < run.cumulative_prob.size(); ++t) {
      if (ds.replay.cumulative_pct[t]) ok = ok && std::abs(100.0 * run.cumulative_prob[t] - *ds.replay.cumulative_pct[t]) <= 0.1;
    }
    write("inference_replay.csv", inference_csv(run));
    check(report, "inference-replay", ok, fmt::format("final cumulative {:.2f}%", 100.0 * run.cumulative_prob.back()));
  }

  // FHD histograms
  {
    RandomStream rng(seed);
    const auto circuit_a = Circuit::from_library(s1);
    const auto traces_a = degauss_series(circuit_a, 2000, rng);
    const auto fhd_a = fhd_intra(traces_a, StateMapping::binary_direction());
    const double expected_a = expected_fhd(symbol_distributions(s1, StateMapping::binary_direction()));
    write("fhd_circuit_a_binary.csv", fhd_histogram_csv(fhd_a));

    const auto circuit_b = Circuit::from_library(s1b);
    const auto traces_b = degauss_series(circuit_b, 100, rng);
    write("traces_circuit_b.csv", traces_to_csv(traces_b));
    write("fhd_circuit_b_four_state.csv", fhd_histogram_csv(fhd_intra(traces_b, StateMapping::four_state())));
    write("fhd_circuit_b_binary.csv", fhd_histogram_csv(fhd_intra(traces_b, StateMapping::binary_direction())));

    check(report, "fhd-circuit-a",
          expected_a >= 0.49 && expected_a <= 0.50 && std::abs(fhd_a.mean_fhd - 0.493) <= 0.02 &&
              std::abs(fhd_a.mean_fhd - expected_a) <= 0.01,
          fmt::format("Monte-Carlo {:.4f}, analytic {:.4f}", fhd_a.mean_fhd, expected_a));
  }

  ordered_json summary = ordered_json::array();
  for (const auto& c : report.checks) summary.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  write("checks.json", summary.dump(2) + "\n");
  return report;
}

}  // namespace magion::cli
