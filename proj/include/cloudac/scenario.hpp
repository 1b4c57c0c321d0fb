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

// Whole-scenario execution, outcome aggregation and batches of independent
// trials.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cloudac/entities.hpp"
#include "cloudac/network.hpp"
#include "cloudac/transcript.hpp"

namespace cloudac::netsim {

struct ClassTally {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t integrity_failure = 0;

  std::size_t total() const noexcept { return accepted + rejected + integrity_failure; }
  friend bool operator==(const ClassTally&, const ClassTally&) = default;
};

struct OutcomeSummary {
  std::map<AdversaryClass, ClassTally> per_class;
  std::size_t access_granted = 0;  // principals whose access query was accepted

  const ClassTally& tally(AdversaryClass cls) const;
  std::size_t total() const;
  friend bool operator==(const OutcomeSummary&, const OutcomeSummary&) = default;
};

/// Counts every outcome of the transcript by class and kind.
OutcomeSummary summarize(const Transcript& transcript);

/// Human-readable summary, one line per class present plus a totals line,
/// e.g. "NONE ACCEPTED 10/10 REJECTED 0 INTEGRITY_FAILURE 0".
std::string format_summary(const OutcomeSummary& summary);

struct ScenarioResult {
  entities::RunResult run;
  OutcomeSummary summary;
};

/// Runs the scenario on explicit payloads.
ScenarioResult run_scenario(const ScenarioConfig& config, std::span<const ByteString> payloads,
                            const entities::FaultPlan& faults = {});

/// Runs the scenario on the payloads named by config.dataset, resolved
/// against `data_dir`.
ScenarioResult run_scenario(const ScenarioConfig& config, const std::filesystem::path& data_dir);

struct TrialResult {
  std::uint64_t seed = 0;
  OutcomeSummary summary;
  std::vector<PrincipalOutcome> outcomes;
  std::string transcript_digest;
  std::size_t replay_annotations = 0;
  std::size_t tamper_annotations = 0;

  friend bool operator==(const TrialResult&, const TrialResult&) = default;
};

/// `count` independent runs of `base`; trial i uses seed
/// derive_seed(master_seed, i). Reference implementation.
std::vector<TrialResult> run_trials_serial(const ScenarioConfig& base, std::size_t count,
                                           std::uint64_t master_seed,
                                           std::span<const ByteString> payloads);

/// Same results as run_trials_serial, trials spread over OpenMP threads.
std::vector<TrialResult> run_trials_parallel(const ScenarioConfig& base, std::size_t count,
                                             std::uint64_t master_seed,
                                             std::span<const ByteString> payloads);

/// Scenario file: {"n_genuine", "adversaries": [{"class", "count"}],
/// "dataset", "key_length_bits", "seed"}. Absent keys keep their defaults;
/// unknown keys, wrong types and invalid values throw kConfiguration.
ScenarioConfig parse_scenario_json(std::string_view text);
/// Reads and parses a scenario file. An unreadable file throws
/// kConfiguration.
ScenarioConfig load_scenario(const std::filesystem::path& path);
std::string scenario_to_json(const ScenarioConfig& config);

}  // namespace cloudac::netsim
