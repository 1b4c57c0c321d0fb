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

#include "cloudac/bench.hpp"

#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>

#include "cloudac/dataset.hpp"
#include "cloudac/error.hpp"
#include "cloudac/protocol.hpp"
#include "cloudac/rng.hpp"

namespace cloudac::bench {

std::size_t measure_memory(const entities::RunResult& run) {
  return run.store.accounting().total() + run.kgc_bytes;
}

std::size_t closed_form_memory(const netsim::ScenarioConfig& scenario,
                               std::span<const ByteString> payloads) {
  const std::size_t L = scenario.width();
  std::size_t total = 2 * L;
  if (scenario.total_principals() == 0) return total;

  total += L;
  for (const auto& d : payloads) total += d.size() + L + 8 + kDigestSize;

  const std::size_t credentials = entities::principal_id(0).size() + entities::kPasswordBytes;
  for (std::size_t i = 0; i < scenario.total_principals(); ++i) {
    switch (scenario.class_of(i)) {
      case AdversaryClass::kNone:
      case AdversaryClass::kTamperValidation:
      case AdversaryClass::kTamperCiphertext:
        total += credentials + 2 * L;
        break;
      case AdversaryClass::kForgedPrivateKey:
        total += credentials + L;
        break;
      case AdversaryClass::kWrongPassword:
      case AdversaryClass::kReplayQuery:
        break;
    }
  }
  return total;
}

std::string DetectionRate::to_string() const {
  if (total == 0) throw Error(ErrorCode::kUndefinedRate, "no genuine users");
  const std::uint64_t scaled = (std::uint64_t{complete} * 20000 + total) / (2 * std::uint64_t{total});
  char buf[32];
  std::snprintf(buf, sizeof buf, "%llu.%04llu", static_cast<unsigned long long>(scaled / 10000),
                static_cast<unsigned long long>(scaled % 10000));
  return buf;
}

DetectionRate genuine_detection_rate(const netsim::OutcomeSummary& summary) {
  const netsim::ClassTally& genuine = summary.tally(AdversaryClass::kNone);
  if (genuine.total() == 0) {
    throw Error(ErrorCode::kUndefinedRate, "genuine detection rate undefined with zero genuine users");
  }
  return {genuine.accepted, genuine.total()};
}

std::vector<DatasetInput> load_sweep_inputs(const SweepConfig& config) {
  for (int bits : config.key_lengths) protocol::width_for_key_length(bits);
  std::vector<DatasetInput> inputs;
  for (const auto& spec : config.datasets) {
    auto source = dataset::resolve_source(spec, config.data_dir);
    inputs.push_back({source.name, dataset::load_payloads(source)});
  }
  return inputs;
}

BenchRow run_cell(const SweepConfig& config, const DatasetInput& input, int key_length_bits,
                  std::uint64_t seed, std::uint64_t cell_index) {
  netsim::ScenarioConfig scenario;
  scenario.n_genuine = config.n_genuine;
  scenario.adversaries = config.adversaries;
  scenario.dataset = input.name;
  scenario.key_length_bits = key_length_bits;
  scenario.seed = derive_seed(seed, cell_index);

  netsim::ScenarioResult result = netsim::run_scenario(scenario, input.payloads);
  BenchRow row;
  row.dataset = input.name;
  row.key_length_bits = key_length_bits;
  row.memory_bytes = measure_memory(result.run);
  row.closed_form_bytes = closed_form_memory(scenario, input.payloads);
  row.rate = genuine_detection_rate(result.summary);
  row.seed = seed;
  return row;
}

namespace {

struct Cell {
  std::size_t input;
  int bits;
  std::uint64_t seed;
};

std::vector<Cell> enumerate(const SweepConfig& config, const std::vector<DatasetInput>& inputs) {
  std::vector<Cell> cells;
  for (std::size_t d = 0; d < inputs.size(); ++d) {
    for (int bits : config.key_lengths) {
      for (std::uint64_t seed : config.seeds) cells.push_back({d, bits, seed});
    }
  }
  return cells;
}

}  // namespace

std::vector<BenchRow> run_sweep_serial(const SweepConfig& config,
                                       const std::vector<DatasetInput>& inputs) {
  std::vector<Cell> cells = enumerate(config, inputs);
  std::vector<BenchRow> rows;
  rows.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    rows.push_back(run_cell(config, inputs[cells[i].input], cells[i].bits, cells[i].seed, i));
  }
  return rows;
}

std::vector<BenchRow> run_sweep_parallel(const SweepConfig& config,
                                         const std::vector<DatasetInput>& inputs) {
  std::vector<Cell> cells = enumerate(config, inputs);
  std::vector<BenchRow> rows(cells.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto n = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      const Cell& c = cells[static_cast<std::size_t>(i)];
      rows[static_cast<std::size_t>(i)] =
          run_cell(config, inputs[c.input], c.bits, c.seed, static_cast<std::uint64_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string rows_to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.dataset << ',' << r.key_length_bits << ',' << r.memory_bytes << ','
        << r.rate.to_string() << ',' << r.seed << '\n';
  }
  return out.str();
}

void write_csv(const std::filesystem::path& path, const std::vector<BenchRow>& rows) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << rows_to_csv(rows);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

}  // namespace cloudac::bench
