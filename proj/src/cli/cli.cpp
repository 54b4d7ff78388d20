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

#include "magion/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include "magion/analytics/entropy.hpp"
#include "magion/analytics/hamming.hpp"
#include "magion/analytics/trng.hpp"
#include "magion/cli/reproduce.hpp"
#include "magion/core/error.hpp"
#include "magion/core/gating.hpp"
#include "magion/core/sampling.hpp"
#include "magion/core/tamper.hpp"
#include "magion/inference/infer.hpp"
#include "magion/inference/pfhd.hpp"
#include "magion/inference/select.hpp"
#include "magion/io/checksum.hpp"
#include "magion/io/dataset.hpp"
#include "magion/io/device_io.hpp"
#include "magion/io/library_io.hpp"
#include "magion/io/plot_data.hpp"
#include "magion/io/trace_csv.hpp"
#include "magion/puf/ber.hpp"
#include "magion/puf/crp.hpp"
#include "magion/puf/response.hpp"

namespace magion::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

fs::path resolve_output_dir(const std::string& flag_value, const fs::path& fallback) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') return env;
  return fallback;
}

fs::path resolve_library(const std::string& name_or_path, const fs::path& data_dir) {
  static const std::map<std::string, std::string, std::less<>> shorthands{
      {"sample1-a", "sample1_circuit_a.json"},
      {"sample2-a", "sample2_circuit_a.json"},
      {"sample1-b", "sample1_circuit_b.json"},
  };
  if (auto it = shorthands.find(name_or_path); it != shorthands.end()) return data_dir / "libraries" / it->second;
  return name_or_path;
}

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnsupportedProtocol:
    case ErrorCode::UnknownCircuit:
      return kUsage;
    case ErrorCode::InactiveDot:
      return kTamperDetected;
    default:
      return kDataError;
  }
}

// Options shared by every subcommand, filled in before dispatch.
struct Common {
  std::uint64_t seed = RunConfig{}.seed;
  int trials = 1;
  std::string format = "json";
  std::string data_dir = default_data_dir().string();
  std::string out;
};

void add_stochastic(CLI::App* cmd, Common& c, int default_trials) {
  cmd->preparse_callback([&c, default_trials](std::size_t) { c.trials = default_trials; });
  cmd->add_option("--seed", c.seed, "RNG seed")->default_str(std::to_string(c.seed));
  cmd->add_option("--trials", c.trials, "number of degauss trials")->default_str(std::to_string(default_trials));
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
}

// Writes to --out when given, else to the stream.
void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text;
  } else {
    write_file(c.out, text);
  }
}

std::string json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json library_summary(const DeviceLibrary& lib) {
  return {{"device_id", lib.device_id}, {"circuit_id", lib.circuit_id}, {"dots", lib.size()},
          {"pbits", lib.pbit_count()}, {"dbits", lib.dbit_count()}};
}

std::vector<StateClass> parse_classes(const std::string& text) {
  std::vector<StateClass> out;
  for (const auto& token : CLI::detail::split(text, ',')) out.push_back(parse_state_class(CLI::detail::trim_copy(token)));
  return out;
}

std::map<std::string, bool> parse_expectations(const std::vector<std::string>& items) {
  std::map<std::string, bool> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "expectation must be CIRCUIT=on|off: " + item);
    const std::string value = item.substr(eq + 1);
    if (value != "on" && value != "off") throw Error(ErrorCode::InvalidArgument, "expected on or off: " + item);
    out[item.substr(0, eq)] = value == "on";
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Magneto-ionic nanodot PUF/TRNG toolkit", "magion"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--data-dir", c.data_dir, "directory of shipped data")->capture_default_str();

  std::function<int()> action;
  const auto lib = [&](const std::string& name) { return load_library(resolve_library(name, c.data_dir)); };

  // simulate
  {
    auto* cmd = app.add_subcommand("simulate", "degauss a library's circuit repeatedly and emit the traces");
    auto library = std::make_shared<std::string>();
    cmd->add_option("--library", *library, "library file or shorthand")->required();
    cmd->add_option("--out", c.out, "output file");
    add_stochastic(cmd, c, 100);
    cmd->callback([&, library] {
      action = [&, library] {
        RandomStream rng(c.seed);
        const auto traces = degauss_series(Circuit::from_library(lib(*library)), static_cast<std::size_t>(c.trials), rng);
        if (c.format == "csv") {
          emit(c, out, traces_to_csv(traces));
        } else {
          ordered_json j = ordered_json::array();
          for (const auto& t : traces) {
            std::vector<int> codes;
            for (auto s : t.states) codes.push_back(static_cast<int>(s));
            j.push_back({{"trial", t.trial_index}, {"states", codes}});
          }
          emit(c, out, json_text(j));
        }
        return int{kSuccess};
      };
    });
  }

  // gate
  {
    auto* cmd = app.add_subcommand("gate", "apply a gating event to one circuit of a device file");
    struct Opts {
      std::string device, circuit;
      double voltage = -10.0, duration = 60.0;
      bool calibrated = false;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--device", o->device, "device file")->required();
    cmd->add_option("--circuit", o->circuit, "circuit id")->required();
    cmd->add_option("--voltage", o->voltage, "gate voltage in volts")->capture_default_str();
    cmd->add_option("--duration", o->duration, "gating time in minutes")->capture_default_str();
    cmd->add_flag("--calibrated", o->calibrated, "set p_sd from the shipped 30/60 min enrollments");
    cmd->add_option("--out", c.out, "output device file");
    cmd->callback([&, o] {
      action = [&, o] {
        const Device device = load_device(o->device);
        std::optional<GatingCalibration> cal;
        if (o->calibrated) cal = GatingCalibration::from_libraries({lib("sample2-a"), lib("sample1-a")});
        const Device gated = apply_gating(device, o->circuit, {o->voltage, o->duration}, cal ? &*cal : nullptr);
        emit(c, out, device_to_json(gated));
        return int{kSuccess};
      };
    });
  }

  // enroll
  {
    auto* cmd = app.add_subcommand("enroll", "estimate a library from repeated degauss trials of a device circuit");
    auto o = std::make_shared<std::pair<std::string, std::string>>();
    cmd->add_option("--device", o->first, "device file")->required();
    cmd->add_option("--circuit", o->second, "circuit id")->required();
    cmd->add_option("--out", c.out, "output library file");
    add_stochastic(cmd, c, 100);
    cmd->callback([&, o] {
      action = [&, o] {
        const Device device = load_device(o->first);
        RandomStream rng(c.seed);
        const auto enrolled = enroll(device.circuit(o->second), c.trials, rng, device.id());
        emit(c, out, library_to_json(enrolled, fmt::format("enrolled with seed {}", c.seed)));
        return int{kSuccess};
      };
    });
  }

  // analyze fhd | entropy
  {
    auto* cmd = app.add_subcommand("analyze", "randomness analytics");
    cmd->require_subcommand(1);
    auto mapping = std::make_shared<std::string>("binary");

    auto* fhd = cmd->add_subcommand("fhd", "intra-device fractional Hamming distance of a trace file");
    auto traces_path = std::make_shared<std::string>();
    fhd->add_option("--traces", *traces_path, "trace CSV")->required();
    fhd->add_option("--mapping", *mapping, "four | binary | binary-paired")->capture_default_str();
    fhd->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
    fhd->add_option("--out", c.out, "output file");
    fhd->callback([&, mapping, traces_path] {
      action = [&, mapping, traces_path] {
        const auto traces = load_traces(*traces_path);
        const auto result = fhd_intra(traces, parse_mapping(*mapping));
        if (c.format == "csv") {
          emit(c, out, fhd_histogram_csv(result));
        } else {
          emit(c, out, json_text({{"mean_fhd", result.mean_fhd}, {"pairs", result.pair_count},
                                  {"sequence_length", result.sequence_length}, {"histogram", result.histogram}}));
        }
        return int{kSuccess};
      };
    });

    auto* ent = cmd->add_subcommand("entropy", "per-bit Shannon entropy of a library");
    auto library = std::make_shared<std::string>();
    ent->add_option("--library", *library, "library file or shorthand")->required();
    ent->add_option("--mapping", *mapping, "binary | binary-paired")->capture_default_str();
    ent->add_option("--out", c.out, "output file");
    ent->callback([&, mapping, library] {
      action = [&, mapping, library] {
        const auto l = lib(*library);
        const auto m = parse_mapping(*mapping);
        const auto report = total_entropy(l, m);
        emit(c, out, json_text({{"library", library_summary(l)}, {"per_bit", report.per_bit}, {"total", report.total},
                                {"mean", report.mean}, {"expected_fhd", expected_fhd(symbol_distributions(l, m))},
                                {"sequences", static_cast<double>(sequence_count(report.total))}}));
        return int{kSuccess};
      };
    });
  }

  // trng extract
  {
    auto* cmd = app.add_subcommand("trng", "random bit extraction");
    cmd->require_subcommand(1);
    auto* ext = cmd->add_subcommand("extract", "degauss and emit direction bits with basic statistics");
    auto o = std::make_shared<std::pair<std::string, std::string>>("", "binary");
    ext->add_option("--library", o->first, "library file or shorthand")->required();
    ext->add_option("--mapping", o->second, "binary | binary-paired")->capture_default_str();
    ext->add_option("--out", c.out, "output file");
    add_stochastic(ext, c, 100);
    ext->callback([&, o] {
      action = [&, o] {
        RandomStream rng(c.seed);
        const auto traces = degauss_series(Circuit::from_library(lib(o->first)), static_cast<std::size_t>(c.trials), rng);
        const auto bits = extract_stream(traces, parse_mapping(o->second));
        if (c.format == "csv") {
          emit(c, out, to_bitstring(bits) + "\n");
        } else {
          const auto runs = runs_test(bits);
          emit(c, out, json_text({{"bits", to_bitstring(bits)}, {"length", bits.size()},
                                  {"monobit", monobit_statistic(bits)},
                                  {"runs", {{"count", runs.runs}, {"expected", runs.expected}, {"z", runs.z}}}}));
        }
        return int{kSuccess};
      };
    });
  }

  // lock strength
  {
    auto* cmd = app.add_subcommand("lock", "magneto-ionic lock");
    cmd->require_subcommand(1);
    auto* st = cmd->add_subcommand("strength", "sequence count and brute-force time");
    struct Opts {
      std::vector<std::string> libraries;
      double rate = 1e9;
      double mean_entropy = 0.0;
      std::size_t dots = 0;
    };
    auto o = std::make_shared<Opts>();
    st->add_option("--library", o->libraries, "libraries combined into the lock");
    st->add_option("--rate", o->rate, "guesses per second")->capture_default_str();
    st->add_option("--dots", o->dots, "hypothetical dot count");
    st->add_option("--mean-entropy", o->mean_entropy, "per-dot entropy for --dots");
    st->callback([&, o] {
      action = [&, o] {
        LockStrength s;
        if (!o->libraries.empty()) {
          std::vector<DeviceLibrary> libs;
          for (const auto& l : o->libraries) libs.push_back(lib(l));
          s = lock_strength(libs, o->rate);
        } else if (o->dots > 0) {
          s = lock_strength(o->mean_entropy * static_cast<double>(o->dots), o->dots, o->rate);
        } else {
          throw Error(ErrorCode::InvalidArgument, "give --library or --dots with --mean-entropy");
        }
        out << json_text({{"total_entropy", s.total_entropy}, {"dots", s.dots},
                          {"sequences", static_cast<double>(s.sequences)}, {"seconds", static_cast<double>(s.seconds)},
                          {"years", static_cast<double>(s.years)}});
        return int{kSuccess};
      };
    });
  }

  // puf crp-count | respond | verify | ber
  {
    auto* cmd = app.add_subcommand("puf", "challenge-response operations");
    cmd->require_subcommand(1);

    auto* count = cmd->add_subcommand("crp-count", "number of challenge-response pairs");
    auto pdk = std::make_shared<std::array<unsigned, 3>>();
    count->add_option("--P", (*pdk)[0], "p-bit count")->required();
    count->add_option("--D", (*pdk)[1], "d-bit count")->required();
    count->add_option("--k", (*pdk)[2], "challenge size")->required();
    count->callback([&, pdk] {
      action = [&, pdk] {
        out << crp_count((*pdk)[0], (*pdk)[1], (*pdk)[2]).str() << "\n";
        return int{kSuccess};
      };
    });

    struct Opts {
      std::string library, challenge, response;
      double noise = 0.0;
      int threshold = -1;
      std::size_t reps = 0;
    };
    auto o = std::make_shared<Opts>();

    auto* respond_cmd = cmd->add_subcommand("respond", "majority-voted response of a simulated device");
    respond_cmd->add_option("--library", o->library, "library file or shorthand")->required();
    respond_cmd->add_option("--challenge", o->challenge, "comma-separated dot positions")->required();
    respond_cmd->add_option("--noise", o->noise, "per-readout misread probability");
    add_stochastic(respond_cmd, c, 1);
    respond_cmd->callback([&, o] {
      action = [&, o] {
        const auto l = lib(o->library);
        const auto ch = Challenge::parse(o->challenge);
        RandomStream rng(c.seed);
        const auto r = respond(Circuit::from_library(l), ch, c.trials, rng, o->noise);
        if (c.format == "csv") {
          out << format_response(r) << "\n";
        } else {
          out << json_text({{"challenge", ch.to_string()}, {"trials", r.trials_used}, {"response", format_response(r)}});
        }
        return int{kSuccess};
      };
    });

    auto* verify_cmd = cmd->add_subcommand("verify", "compare a response with the enrolled majority states");
    verify_cmd->add_option("--library", o->library, "library file or shorthand")->required();
    verify_cmd->add_option("--challenge", o->challenge, "comma-separated dot positions")->required();
    verify_cmd->add_option("--response", o->response, "comma-separated SD/V classes")->required();
    verify_cmd->add_option("--threshold", o->threshold, "accepted mismatches (default k/2)");
    verify_cmd->callback([&, o] {
      action = [&, o] {
        const auto l = lib(o->library);
        const auto ch = Challenge::parse(o->challenge);
        const Response r{parse_classes(o->response), 1};
        const auto v = verify(r, l, ch, o->threshold < 0 ? std::nullopt : std::optional<int>(o->threshold));
        out << json_text({{"mismatches", v.mismatches}, {"threshold", v.threshold}, {"pass", v.pass}});
        return int{kSuccess};
      };
    });

    auto* ber_cmd = cmd->add_subcommand("ber", "bit error rate of a challenge under majority voting");
    ber_cmd->add_option("--library", o->library, "library file or shorthand")->required();
    ber_cmd->add_option("--challenge", o->challenge, "comma-separated dot positions")->required();
    ber_cmd->add_option("--noise", o->noise, "per-readout misread probability");
    ber_cmd->add_option("--empirical", o->reps, "Monte-Carlo repetitions (0 = closed form only)");
    add_stochastic(ber_cmd, c, 1);
    ber_cmd->callback([&, o] {
      action = [&, o] {
        const auto l = lib(o->library);
        const auto ch = Challenge::parse(o->challenge);
        ordered_json j{{"challenge", ch.to_string()}, {"trials", c.trials},
                       {"ber", ber_closed_form(l, ch, c.trials, o->noise)}};
        if (o->reps > 0) {
          RandomStream rng(c.seed);
          const auto e = ber_empirical(Circuit::from_library(l), l, ch, c.trials, o->reps, rng, o->noise);
          j["empirical"] = {{"ber", e.ber}, {"std_error", e.std_error}, {"bits", e.bits}};
        }
        if (c.format == "csv") {
          out << fmt::format("T,ber\n{},{:.6f}\n", c.trials, j["ber"].get<double>());
        } else {
          out << json_text(j);
        }
        return int{kSuccess};
      };
    });
  }

  // infer select | run
  {
    auto* cmd = app.add_subcommand("infer", "sample inference between two enrolled libraries");
    cmd->require_subcommand(1);
    struct Opts {
      std::string lib1 = "sample1-a", lib2 = "sample2-a", truth = "sample1-a", challenge = "13,7,9,18,17", replay;
      std::size_t k = 5;
      double target = 0.5, tolerance = 0.01;
      std::size_t runs = 0;
    };
    auto o = std::make_shared<Opts>();

    auto* sel = cmd->add_subcommand("select", "challenges whose pFHD_inter is close to a target");
    sel->add_option("--lib1", o->lib1)->capture_default_str();
    sel->add_option("--lib2", o->lib2)->capture_default_str();
    sel->add_option("--k", o->k, "challenge size")->capture_default_str();
    sel->add_option("--target", o->target, "pFHD_inter target")->capture_default_str();
    sel->add_option("--tolerance", o->tolerance)->capture_default_str();
    sel->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
    sel->add_option("--out", c.out, "output file");
    sel->callback([&, o] {
      action = [&, o] {
        const auto found = select_crps(lib(o->lib1), lib(o->lib2), o->k, o->target, o->tolerance);
        if (c.format == "csv") {
          emit(c, out, crp_table_csv(found));
        } else {
          ordered_json j = ordered_json::array();
          for (const auto& f : found) {
            j.push_back({{"challenge", f.challenge.to_string()}, {"pfhd", f.pfhd}, {"pbits1", f.pbits1},
                         {"pbits2", f.pbits2}, {"ber1", f.ber1}, {"ber2", f.ber2}});
          }
          emit(c, out, json_text(j));
        }
        return int{kSuccess};
      };
    });

    auto* runc = cmd->add_subcommand("run", "infer which library a device matches");
    runc->add_option("--lib1", o->lib1)->capture_default_str();
    runc->add_option("--lib2", o->lib2)->capture_default_str();
    runc->add_option("--truth", o->truth, "library of the simulated device")->capture_default_str();
    runc->add_option("--challenge", o->challenge)->capture_default_str();
    runc->add_option("--replay", o->replay, "CSV of recorded labels (trial,dot_...)");
    runc->add_option("--runs", o->runs, "independent simulated runs (summary only)");
    runc->add_option("--out", c.out, "output file");
    add_stochastic(runc, c, 27);
    runc->callback([&, o] {
      action = [&, o] {
        const auto l1 = lib(o->lib1);
        const auto l2 = lib(o->lib2);
        const auto ch = Challenge::parse(o->challenge);
        ch.require_within(std::min(l1.size(), l2.size()));
        RandomStream rng(c.seed);
        if (o->runs > 0) {
          const auto truth = lib(o->truth);
          const auto study = simulate_inference(Circuit::from_library(truth), l1, l2, ch, c.trials, o->runs, rng);
          const auto oracle = per_trial_accept_prob(truth, l1, l2, ch);
          emit(c, out, json_text({{"runs", study.runs}, {"trials", study.trials},
                                  {"decided_lib1", study.decided_sample1}, {"decided_lib2", study.decided_sample2},
                                  {"mean_per_trial", study.mean_per_trial},
                                  {"per_trial_std_error", study.per_trial_std_error},
                                  {"single_trial_majority", study.single_trial_majority},
                                  {"oracle_per_trial", oracle.expected_per_trial},
                                  {"oracle_majority", oracle.majority}}));
          return int{kSuccess};
        }
        InferenceRun result;
        if (!o->replay.empty()) {
          std::vector<std::vector<StateClass>> obs;
          for (const auto& t : load_traces(o->replay)) {
            std::vector<StateClass> row;
            for (std::size_t i = 0; i < t.states.size(); ++i) {
              row.push_back(observation_for_label(l1, l2, ch.positions().at(i), static_cast<int>(t.states[i])));
            }
            obs.push_back(std::move(row));
          }
          result = infer(obs, l1, l2, ch);
        } else {
          result = infer(observe(Circuit::from_library(lib(o->truth)), ch, c.trials, rng), l1, l2, ch);
        }
        if (c.format == "csv") {
          emit(c, out, inference_csv(result));
        } else {
          emit(c, out, json_text({{"labels", result.trial_labels}, {"per_trial", result.per_trial_prob},
                                  {"cumulative", result.cumulative_prob}, {"decision", to_string(result.decision)}}));
        }
        return int{kSuccess};
      };
    });
  }

  // tamper-check
  {
    auto* cmd = app.add_subcommand("tamper-check", "compare circuit activation with the expected state");
    auto o = std::make_shared<std::pair<std::string, std::vector<std::string>>>();
    cmd->add_option("--device", o->first, "device file")->required();
    cmd->add_option("--expect", o->second, "CIRCUIT=on|off (unlisted circuits are expected off)");
    cmd->callback([&, o] {
      action = [&, o] {
        const auto report = tamper_check(load_device(o->first), parse_expectations(o->second));
        out << json_text({{"clean", report.clean()}, {"violated", report.violated_circuits}});
        return report.clean() ? int{kSuccess} : int{kTamperDetected};
      };
    });
  }

  // reproduce-paper
  {
    auto* cmd = app.add_subcommand("reproduce-paper", "regenerate every published table and check it");
    cmd->add_option("--out", c.out, "artifact directory");
    cmd->add_option("--seed", c.seed)->capture_default_str();
    cmd->callback([&] {
      action = [&] {
        const auto dir = resolve_output_dir(c.out, "artifacts");
        const auto report = reproduce_paper(PaperDataset::load(c.data_dir), dir, c.seed);
        for (const auto& check : report.checks) {
          out << fmt::format("{} {}: {}\n", check.pass ? "PASS" : "FAIL", check.name, check.detail);
        }
        out << fmt::format("{} artifacts written to {}\n", report.artifacts.size(), dir.string());
        return report.all_pass() ? int{kSuccess} : int{kDataError};
      };
    });
  }

  // dataset rebuild
  {
    auto* cmd = app.add_subcommand("dataset", "shipped data maintenance");
    cmd->require_subcommand(1);
    auto* rb = cmd->add_subcommand("rebuild", "regenerate library files and the checksum manifest");
    rb->callback([&] {
      action = [&] {
        for (const auto& p : rebuild_dataset_files(c.data_dir)) out << p.string() << "\n";
        return int{kSuccess};
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    return action ? action() : int{kUsage};
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
}

}  // namespace magion::cli
