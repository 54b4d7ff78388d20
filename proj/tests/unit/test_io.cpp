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

#include <gtest/gtest.h>

#include <fstream>

#include "fixtures.hpp"
#include "magion/analytics/hamming.hpp"
#include "magion/core/error.hpp"
#include "magion/core/sampling.hpp"
#include "magion/io/checksum.hpp"
#include "magion/io/device_io.hpp"
#include "magion/io/plot_data.hpp"
#include "magion/io/trace_csv.hpp"
#include "magion/puf/ber.hpp"

namespace magion {
namespace {

namespace fs = std::filesystem;

ErrorCode parse_code(const std::string& text) {
  try {
    parse_library(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed";
  return ErrorCode::Io;
}

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  if (at != std::string::npos) s.replace(at, from.size(), to);
  return s;
}

TEST(Checksum, KnownDigest) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(LibraryIo, ShippedSample1) {
  const auto lib = testing::shipped("sample1_circuit_a.json");
  EXPECT_EQ(lib.size(), 18u);
  EXPECT_EQ(lib.pbit_count(), 7u);
  EXPECT_EQ(lib.dbit_count(), 11u);
  for (const auto& p : lib.profiles) {
    if (!p.is_pbit()) EXPECT_EQ(p.majority_state(), StateClass::Vortex);
  }
  EXPECT_EQ(lib.enrollment_trials, 100);
}

TEST(LibraryIo, ShippedSample2) {
  const auto lib = testing::shipped("sample2_circuit_a.json");
  EXPECT_EQ(lib.pbit_count(), 9u);
  EXPECT_EQ(lib.at(5).p_sd(), 1.0);
  EXPECT_FALSE(lib.at(5).is_pbit());
}

TEST(LibraryIo, ShippedFilesRoundTripByteIdentical) {
  for (const auto& entry : fs::directory_iterator(testing::data_dir() / "libraries")) {
    std::string notes;
    const std::string original = read_file(entry.path());
    const auto lib = parse_library(original, &notes);
    EXPECT_EQ(library_to_json(lib, notes), original) << entry.path();
  }
  const auto device_path = testing::data_dir() / "devices" / "sample1_design.json";
  EXPECT_EQ(device_to_json(load_device(device_path)), read_file(device_path));
}

TEST(LibraryIo, ShippedFilesMatchTables) {
  const auto& ds = testing::dataset();
  EXPECT_EQ(library_to_json(ds.sample1_circuit_a()), library_to_json(testing::shipped("sample1_circuit_a.json")));
  EXPECT_EQ(library_to_json(ds.sample2_circuit_a()), library_to_json(testing::shipped("sample2_circuit_a.json")));
}

TEST(LibraryIo, DistinctErrorCodes) {
  const std::string good = library_to_json(testing::make_library({0.2, 0.0}));
  EXPECT_NO_THROW(parse_library(good));
  EXPECT_EQ(parse_code("{not json"), ErrorCode::Schema);
  EXPECT_EQ(parse_code(replace_once(good, "\"version\": 1", "\"version\": 9")), ErrorCode::Schema);
  EXPECT_EQ(parse_code(replace_once(good, "\"p_sd\": 0.200000", "\"p_sd\": 1.200000")), ErrorCode::InvalidProfile);
  EXPECT_EQ(parse_code(replace_once(good, "\"p_v\": 0.800000", "\"p_v\": 0.700000")), ErrorCode::Invariant);
  EXPECT_EQ(parse_code(replace_once(good, "\"p_dir_rcw\": 0.500000", "\"p_dir_rcw\": 0.400000")), ErrorCode::Checksum);
}

TEST(LibraryIo, SaveLoadRoundTrip) {
  const auto dir = testing::scratch("library");
  const auto lib = testing::make_library({0.25, 0.0, 1.0, 0.911}, 0.61);
  save_library(lib, dir / "x.json", "note");
  std::string notes;
  const auto back = load_library(dir / "x.json", &notes);
  EXPECT_EQ(back.profiles, lib.profiles);
  EXPECT_EQ(notes, "note");
  EXPECT_THROW(load_library(dir / "missing.json"), Error);
}

TEST(Dataset, ManifestDetectsTampering) {
  const auto dir = testing::scratch("manifest");
  fs::copy(testing::data_dir(), dir, fs::copy_options::recursive);
  EXPECT_NO_THROW(verify_manifest(dir));
  {
    std::ofstream f(dir / "measured" / "reference_crps.csv", std::ios::app);
    f << "\n";
  }
  try {
    PaperDataset::load(dir);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Checksum);
  }
  EXPECT_NO_THROW(PaperDataset::load(dir, false));
}

TEST(Dataset, RebuildIsIdempotent) {
  const auto dir = testing::scratch("rebuild");
  fs::copy(testing::data_dir(), dir, fs::copy_options::recursive);
  const std::string before = read_file(dir / "SHA256SUMS");
  rebuild_dataset_files(dir);
  EXPECT_EQ(read_file(dir / "SHA256SUMS"), before);
}

TEST(Dataset, TablesShape) {
  const auto& ds = testing::dataset();
  EXPECT_EQ(ds.circuit_b_direction.size(), 24u);
  EXPECT_EQ(ds.circuit_a_direction.size(), 18u);
  EXPECT_EQ(ds.enrolled.size(), 18u);
  EXPECT_EQ(ds.crps.size(), 8u);
  EXPECT_EQ(ds.replay.labels.size(), 27u);
  EXPECT_TRUE(ds.sample1_circuit_b().synthetic);
}

TEST(TraceCsv, RoundTripAndValidation) {
  RandomStream rng(3);
  const auto traces = degauss_series(Circuit::from_library(testing::make_library({0.3, 0.6, 0.1})), 5, rng);
  const std::string csv = traces_to_csv(traces);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "trial,dot_1,dot_2,dot_3");
  const auto back = parse_traces_csv(csv);
  ASSERT_EQ(back.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(back[i].states, traces[i].states);
  EXPECT_EQ(traces_to_csv(back), csv);
  EXPECT_THROW(parse_traces_csv("trial,dot_1\n0,7\n"), Error);
  EXPECT_THROW(parse_traces_csv("trial,dot_1\n0,1,2\n"), Error);
}

TEST(PlotData, EmptyHistogramHeaderOnly) { EXPECT_EQ(fhd_histogram_csv(FhdResult{}), "bin_lo,bin_hi,count\n"); }

TEST(PlotData, HistogramBinsAndMean) {
  RandomStream rng(17);
  const auto traces = degauss_series(Circuit::from_library(testing::dataset().sample1_circuit_a()), 300, rng);
  const auto r = fhd_intra(traces, StateMapping::binary_direction());
  const std::string csv = fhd_histogram_csv(r);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 20);  // header + 19 bins
  EXPECT_NEAR(histogram_mean(r), r.mean_fhd, 1e-12);
  EXPECT_NEAR(r.mean_fhd, 0.493, 0.02);
}

TEST(PlotData, BerCurveMonotoneBothSamples) {
  const auto& ds = testing::dataset();
  const std::vector<int> odd{1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27};
  const auto c = Challenge::parse("7,9,13,17,18");
  for (const auto& lib : {ds.sample1_circuit_a(), ds.sample2_circuit_a()}) {
    const auto curve = ber_curve(lib, c, odd);
    for (std::size_t i = 1; i < curve.size(); ++i) EXPECT_LT(curve[i].ber, curve[i - 1].ber);
    const std::string csv = ber_curve_csv(curve);
    EXPECT_EQ(csv.substr(0, 6), "T,ber\n");
  }
}

}  // namespace
}  // namespace magion
