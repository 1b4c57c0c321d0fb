// Copyright 2026 The cloudac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Key-length sweep: stored-state memory accounting and genuine detection
// rate per (dataset, key length, seed) cell.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "cloudac/entities.hpp"
#include "cloudac/network.hpp"
#include "cloudac/scenario.hpp"

namespace cloudac::bench {

/// Cloud store plus KGC state, in bytes.
std::size_t measure_memory(const entities::RunResult& run);

/// Memory predicted from the scenario and payload sizes alone:
///   2L                                     KGC s, m
/// + L + sum(|D_r| + L + 8 + 32)            owner key, D^C*, digests (if any principal)
/// + per principal: |U_ID| + |U_ps| + 2L    genuine, TAMPER_*
///                  |U_ID| + |U_ps| + L     FORGED_PRIVATE_KEY (no session key)
///                  0                       WRONG_PASSWORD (purged), REPLAY_QUERY
std::size_t closed_form_memory(const netsim::ScenarioConfig& scenario,
                               std::span<const ByteString> payloads);

/// complete / total genuine users.
struct DetectionRate {
  std::size_t complete = 0;
  std::size_t total = 0;

  double value() const { return static_cast<double>(complete) / static_cast<double>(total); }
  /// Rounded half-up to 4 decimals with integer arithmetic, e.g. "0.9000".
  std::string to_string() const;
  friend bool operator==(const DetectionRate&, const DetectionRate&) = default;
};

/// Throws kUndefinedRate when the summary has no genuine users.
DetectionRate genuine_detection_rate(const netsim::OutcomeSummary& summary);

struct BenchRow {
  std::string dataset;
  int key_length_bits = 0;
  std::size_t memory_bytes = 0;
  std::size_t closed_form_bytes = 0;
  DetectionRate rate;
  std::uint64_t seed = 0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct SweepConfig {
  std::vector<std::string> datasets = {"cleveland", "hungarian", "swiss"};
  std::vector<int> key_lengths = {64, 128, 256, 512};
  std::vector<std::uint64_t> seeds = {0};
  std::size_t n_genuine = 10;
  std::vector<netsim::AdversaryConfig> adversaries = {
      {AdversaryClass::kWrongPassword, 1},    {AdversaryClass::kForgedPrivateKey, 1},
      {AdversaryClass::kTamperValidation, 1}, {AdversaryClass::kTamperCiphertext, 1},
      {AdversaryClass::kReplayQuery, 1},
  };
  std::filesystem::path data_dir;
};

struct DatasetInput {
  std::string name;
  std::vector<ByteString> payloads;
};

/// Loads the payloads of every configured dataset. Throws kIo naming the
/// path of a missing file and kConfiguration for an unsupported key length.
std::vector<DatasetInput> load_sweep_inputs(const SweepConfig& config);

/// One cell. The scenario seed is derive_seed(seed, cell_index).
BenchRow run_cell(const SweepConfig& config, const DatasetInput& input, int key_length_bits,
                  std::uint64_t seed, std::uint64_t cell_index);

/// Rows in (dataset, key length, seed) order. Reference implementation.
std::vector<BenchRow> run_sweep_serial(const SweepConfig& config,
                                       const std::vector<DatasetInput>& inputs);
/// Same rows as run_sweep_serial, cells spread over OpenMP threads.
std::vector<BenchRow> run_sweep_parallel(const SweepConfig& config,
                                         const std::vector<DatasetInput>& inputs);

inline constexpr const char* kCsvHeader =
    "dataset,key_length_bits,memory_bytes,genuine_detection_rate,seed";

/// Header plus one LF-terminated line per row.
std::string rows_to_csv(const std::vector<BenchRow>& rows);
/// Throws kIo when the file cannot be written.
void write_csv(const std::filesystem::path& path, const std::vector<BenchRow>& rows);

}  // namespace cloudac::bench
