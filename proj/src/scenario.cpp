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

#include "cloudac/scenario.hpp"

#include <json.hpp>

#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>

#include "cloudac/dataset.hpp"
#include "cloudac/error.hpp"
#include "cloudac/rng.hpp"

namespace cloudac::netsim {

const ClassTally& OutcomeSummary::tally(AdversaryClass cls) const {
  static const ClassTally empty;
  auto it = per_class.find(cls);
  return it == per_class.end() ? empty : it->second;
}

std::size_t OutcomeSummary::total() const {
  std::size_t n = 0;
  for (const auto& [cls, t] : per_class) n += t.total();
  return n;
}

OutcomeSummary summarize(const Transcript& transcript) {
  OutcomeSummary summary;
  for (const auto& o : transcript.outcomes()) {
    ClassTally& t = summary.per_class[o.adversary];
    switch (o.kind) {
      case OutcomeKind::kAccepted: ++t.accepted; break;
      case OutcomeKind::kRejected: ++t.rejected; break;
      case OutcomeKind::kIntegrityFailure: ++t.integrity_failure; break;
    }
    if (o.access_granted) ++summary.access_granted;
  }
  return summary;
}

std::string format_summary(const OutcomeSummary& summary) {
  std::ostringstream out;
  std::size_t accepted = 0;
  for (AdversaryClass cls : kAllAdversaryClasses) {
    auto it = summary.per_class.find(cls);
    if (it == summary.per_class.end()) continue;
    const ClassTally& t = it->second;
    accepted += t.accepted;
    out << adversary_name(cls) << " ACCEPTED " << t.accepted << '/' << t.total() << " REJECTED "
        << t.rejected << " INTEGRITY_FAILURE " << t.integrity_failure << '\n';
  }
  out << "TOTAL ACCEPTED " << accepted << '/' << summary.total() << " ACCESS_GRANTED "
      << summary.access_granted << '\n';
  return out.str();
}

ScenarioResult run_scenario(const ScenarioConfig& config, std::span<const ByteString> payloads,
                            const entities::FaultPlan& faults) {
  ScenarioResult result;
  result.run = entities::run_protocol(config, payloads, faults);
  result.summary = summarize(result.run.transcript);
  return result;
}

ScenarioResult run_scenario(const ScenarioConfig& config, const std::filesystem::path& data_dir) {
  config.validate();
  auto payloads = dataset::load_payloads(dataset::resolve_source(config.dataset, data_dir));
  return run_scenario(config, payloads);
}

namespace {

TrialResult run_one_trial(const ScenarioConfig& base, std::uint64_t seed,
                          std::span<const ByteString> payloads) {
  ScenarioConfig config = base;
  config.seed = seed;
  ScenarioResult r = run_scenario(config, payloads);
  TrialResult t;
  t.seed = seed;
  t.summary = r.summary;
  t.outcomes = r.run.transcript.outcomes();
  t.transcript_digest = r.run.transcript.digest();
  for (const auto& m : r.run.transcript.messages()) {
    if (m.from != Role::kAdversary) continue;
    if (m.kind == "replay") ++t.replay_annotations;
    if (m.kind == "tamper") ++t.tamper_annotations;
  }
  return t;
}

}  // namespace

std::vector<TrialResult> run_trials_serial(const ScenarioConfig& base, std::size_t count,
                                           std::uint64_t master_seed,
                                           std::span<const ByteString> payloads) {
  base.validate();
  std::vector<TrialResult> results;
  results.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    results.push_back(run_one_trial(base, derive_seed(master_seed, i), payloads));
  }
  return results;
}

std::vector<TrialResult> run_trials_parallel(const ScenarioConfig& base, std::size_t count,
                                             std::uint64_t master_seed,
                                             std::span<const ByteString> payloads) {
  base.validate();
  std::vector<TrialResult> results(count);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      auto idx = static_cast<std::size_t>(i);
      results[idx] = run_one_trial(base, derive_seed(master_seed, idx), payloads);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

namespace {

using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::kConfiguration, "scenario: " + what);
}

std::size_t as_count(const ordered_json& v, const char* name) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) bad(std::string(name) + " must be an integer");
  if (v.is_number_integer() && v.get<std::int64_t>() < 0) bad(std::string(name) + " must be >= 0");
  return v.get<std::size_t>();
}

}  // namespace

ScenarioConfig parse_scenario_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("top level must be an object");

  ScenarioConfig config;
  for (const auto& [key, value] : doc.items()) {
    if (key == "n_genuine") {
      config.n_genuine = as_count(value, "n_genuine");
    } else if (key == "adversaries") {
      if (!value.is_array()) bad("adversaries must be an array");
      for (const auto& entry : value) {
        if (!entry.is_object()) bad("adversary entries must be objects");
        AdversaryConfig a;
        bool has_class = false;
        for (const auto& [k, v] : entry.items()) {
          if (k == "class") {
            if (!v.is_string()) bad("adversary class must be a string");
            a.cls = parse_adversary(v.get<std::string>());
            has_class = true;
          } else if (k == "count") {
            a.count = as_count(v, "count");
          } else {
            bad("unknown adversary key '" + k + "'");
          }
        }
        if (!has_class) bad("adversary entry without a class");
        config.adversaries.push_back(a);
      }
    } else if (key == "dataset") {
      if (!value.is_string()) bad("dataset must be a string");
      config.dataset = value.get<std::string>();
    } else if (key == "key_length_bits") {
      if (!value.is_number_integer()) bad("key_length_bits must be an integer");
      auto bits = value.get<std::int64_t>();
      if (bits < std::numeric_limits<int>::min() || bits > std::numeric_limits<int>::max()) {
        bad("key_length_bits out of range");
      }
      config.key_length_bits = static_cast<int>(bits);
    } else if (key == "seed") {
      if (!value.is_number_unsigned() &&
          !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
        bad("seed must be a non-negative integer");
      }
      config.seed = value.get<std::uint64_t>();
    } else {
      bad("unknown key '" + key + "'");
    }
  }
  config.validate();
  return config;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read scenario file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario_json(text.str());
}

std::string scenario_to_json(const ScenarioConfig& config) {
  ordered_json doc;
  doc["n_genuine"] = config.n_genuine;
  doc["adversaries"] = ordered_json::array();
  for (const auto& a : config.adversaries) {
    doc["adversaries"].push_back({{"class", std::string(adversary_name(a.cls))}, {"count", a.count}});
  }
  doc["dataset"] = config.dataset;
  doc["key_length_bits"] = config.key_length_bits;
  doc["seed"] = config.seed;
  return doc.dump(2) + "\n";
}

}  // namespace cloudac::netsim
