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

#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "cloudac/bench.hpp"
#include "cloudac/dataset.hpp"
#include "cloudac/scenario.hpp"

namespace cloudac::cli {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConfiguration:
    case ErrorCode::kInvalidArgument:
      return kExitConfig;
    case ErrorCode::kIo:
    case ErrorCode::kParse:
    case ErrorCode::kDeserialization:
      return kExitIo;
    default:
      return kExitRejected;
  }
}

namespace {

struct Options {
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::vector<int> key_lengths;
  std::vector<std::string> datasets;
  std::string scenario;
  std::string out;
  std::vector<std::string> adversaries;
  std::string data_dir;
  std::optional<std::size_t> genuine;
  bool serial = false;
};

std::vector<netsim::AdversaryConfig> parse_adversaries(const std::vector<std::string>& specs) {
  std::vector<netsim::AdversaryConfig> out;
  for (const auto& spec : specs) {
    auto eq = spec.find('=');
    std::string name = spec.substr(0, eq);
    std::size_t count = 1;
    if (eq != std::string::npos) {
      std::string digits = spec.substr(eq + 1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), count);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw Error(ErrorCode::kConfiguration,
                    "--adversary expects CLASS=COUNT with a non-negative count, got '" + spec + "'");
      }
    }
    out.push_back({parse_adversary(name), count});
  }
  return out;
}

std::filesystem::path data_dir_of(const Options& opt) {
  return opt.data_dir.empty() ? dataset::default_data_dir() : std::filesystem::path(opt.data_dir);
}

int key_length_of(const Options& opt) {
  if (opt.key_lengths.size() > 1) {
    throw Error(ErrorCode::kConfiguration, "this command takes a single --key-length");
  }
  return opt.key_lengths.empty() ? 256 : opt.key_lengths.front();
}

std::string dataset_of(const Options& opt, std::string fallback) {
  if (opt.datasets.size() > 1) {
    throw Error(ErrorCode::kConfiguration, "this command takes a single --dataset");
  }
  return opt.datasets.empty() ? fallback : opt.datasets.front();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

std::string short_hex(const ByteString& value) {
  std::string hex = to_hex(value);
  return hex.size() > 16 ? hex.substr(0, 16) + ".." : hex;
}

void print_outcome(std::ostream& out, const PrincipalOutcome& o) {
  out << to_string(o.user_id) << " (" << adversary_name(o.adversary) << "): ";
  switch (o.kind) {
    case OutcomeKind::kAccepted:
      out << "COMPLETE, recovered " << o.recovered.size() << " bytes\n";
      return;
    case OutcomeKind::kRejected:
      out << "REJECTED at " << phase_name(o.phase);
      break;
    case OutcomeKind::kIntegrityFailure:
      out << "INTEGRITY_FAILURE at " << phase_name(o.phase);
      break;
  }
  out << ": " << o.reason << (o.access_granted ? " (access was granted)" : "") << '\n';
}

int cmd_demo(const Options& opt, std::ostream& out) {
  netsim::ScenarioConfig config;
  config.seed = opt.seed;
  config.key_length_bits = key_length_of(opt);
  config.dataset = dataset_of(opt, "sample");
  config.adversaries = parse_adversaries(opt.adversaries);
  bool replay = false;
  for (const auto& a : config.adversaries) replay = replay || a.cls == AdversaryClass::kReplayQuery;
  // The demo principal is the adversary when one is named; a replayer still
  // needs a genuine user to eavesdrop on.
  config.n_genuine = opt.genuine.value_or(config.adversaries.empty() || replay ? 1 : 0);
  config.validate();

  auto payloads =
      dataset::load_payloads(dataset::resolve_source(config.dataset, data_dir_of(opt)));
  if (config.dataset != "sample" && !payloads.empty()) payloads.resize(1);
  netsim::ScenarioResult result = netsim::run_scenario(config, payloads);
  const Transcript& t = result.run.transcript;

  out << "cloudac demo: seed " << config.seed << ", " << config.key_length_bits
      << "-bit keys, dataset " << config.dataset << "\n";
  for (Phase phase : {Phase::kSetup, Phase::kKeygen, Phase::kEncryption, Phase::kAccessControl,
                      Phase::kValidation, Phase::kDataSharing}) {
    out << "== phase: " << phase_name(phase) << " ==\n";
    for (const auto& m : t.messages()) {
      if (m.phase != phase) continue;
      out << "  #" << m.step << ' ' << role_name(m.from) << " -> " << role_name(m.to) << " ["
          << channel_name(m.channel) << "] " << m.kind;
      for (const auto& [name, value] : m.fields) out << ' ' << name << '=' << short_hex(value);
      out << '\n';
    }
  }
  out << "== outcome ==\n";
  bool all_complete = !t.outcomes().empty();
  for (const auto& o : t.outcomes()) {
    print_outcome(out, o);
    all_complete = all_complete && o.kind == OutcomeKind::kAccepted;
  }
  out << "transcript sha256 " << t.digest() << '\n';
  if (!opt.out.empty()) write_file(opt.out, t.to_jsonl());
  return all_complete ? kExitOk : kExitRejected;
}

int cmd_run(const Options& opt, std::ostream& out) {
  if (opt.scenario.empty()) throw Error(ErrorCode::kConfiguration, "run requires --scenario");
  netsim::ScenarioConfig config = netsim::load_scenario(opt.scenario);
  if (opt.seed_given) config.seed = opt.seed;
  netsim::ScenarioResult result = netsim::run_scenario(config, data_dir_of(opt));
  if (!opt.out.empty()) write_file(opt.out, result.run.transcript.to_jsonl());
  out << netsim::format_summary(result.summary);
  out << "transcript sha256 " << result.run.transcript.digest() << '\n';
  return kExitOk;
}

int cmd_bench(const Options& opt, std::ostream& out) {
  bench::SweepConfig config;
  if (!opt.datasets.empty()) config.datasets = opt.datasets;
  if (!opt.key_lengths.empty()) config.key_lengths = opt.key_lengths;
  config.seeds = {opt.seed};
  if (opt.genuine) config.n_genuine = *opt.genuine;
  if (!opt.adversaries.empty()) config.adversaries = parse_adversaries(opt.adversaries);
  config.data_dir = data_dir_of(opt);

  auto inputs = bench::load_sweep_inputs(config);
  auto rows = opt.serial ? bench::run_sweep_serial(config, inputs)
                         : bench::run_sweep_parallel(config, inputs);
  if (opt.out.empty()) {
    out << bench::rows_to_csv(rows);
  } else {
    bench::write_csv(opt.out, rows);
    out << "wrote " << rows.size() << " rows to " << opt.out << '\n';
  }
  return kExitOk;
}

int cmd_parse_dataset(const Options& opt, std::ostream& out) {
  if (opt.datasets.empty()) throw Error(ErrorCode::kConfiguration, "parse-dataset requires --dataset");
  dataset::DatasetSource source = dataset::resolve_source(dataset_of(opt, ""), data_dir_of(opt));
  if (!source.variant) {
    throw Error(ErrorCode::kConfiguration, "parse-dataset needs a dataset file, not the sample");
  }
  auto records = dataset::load_dataset(source.path, *source.variant);
  out << source.name << ": " << records.size() << " records (" << source.path.string() << ")\n";
  auto tally = dataset::missing_tally(records);
  for (std::size_t i = 0; i < dataset::kFieldCount; ++i) {
    out << "  " << dataset::kFieldNames[i] << ": " << tally[i] << " missing\n";
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Access-control protocol simulator for cloud health-data sharing", "cloudac"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "Run seed (u64, default 0)");
    sub->add_option("--data-dir", opt.data_dir,
                    "Directory holding processed.*.data (default $CLOUDAC_DATA_DIR or "
                    "data/heart-disease)");
  };

  auto* demo = app.add_subcommand("demo", "One user, the owner and one payload through all six phases");
  add_common(demo);
  demo->add_option("--key-length", opt.key_lengths, "Key length in bits: 64, 128, 256 or 512 (default 256)");
  demo->add_option("--dataset", opt.datasets, "Payload source: sample (default), a variant, or variant:path");
  demo->add_option("--adversary", opt.adversaries, "Make the demo principal adversarial, CLASS=COUNT");
  demo->add_option("--genuine", opt.genuine, "Number of genuine users");
  demo->add_option("--out", opt.out, "Write the transcript (JSON lines) here");

  auto* run_cmd = app.add_subcommand("run", "Execute a scenario file and print the outcome summary");
  add_common(run_cmd);
  run_cmd->add_option("--scenario", opt.scenario, "Scenario JSON file")->required();
  run_cmd->add_option("--out", opt.out, "Write the transcript (JSON lines) here");

  auto* bench_cmd = app.add_subcommand("bench", "Key-length sweep over datasets, CSV output");
  add_common(bench_cmd);
  bench_cmd->add_option("--key-length", opt.key_lengths, "Key lengths to sweep (default all four)");
  bench_cmd->add_option("--dataset", opt.datasets, "Datasets to sweep (default cleveland, hungarian, swiss)");
  bench_cmd->add_option("--adversary", opt.adversaries,
                        "Adversary mix CLASS=COUNT (default one of each class)");
  bench_cmd->add_option("--genuine", opt.genuine, "Genuine users per cell (default 10)");
  bench_cmd->add_option("--out", opt.out, "CSV output path (default stdout)");
  bench_cmd->add_flag("--serial", opt.serial, "Use the single-threaded reference sweep");

  auto* parse_cmd = app.add_subcommand("parse-dataset", "Parse a dataset file and report counts");
  add_common(parse_cmd);
  parse_cmd->add_option("--dataset", opt.datasets, "Variant name or variant:path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << error_token(ErrorCode::kConfiguration) << ": " << e.what() << '\n';
    return kExitConfig;
  }
  for (auto* sub : {demo, bench_cmd, run_cmd, parse_cmd}) {
    if (sub->parsed() && sub->count("--seed") > 0) opt.seed_given = true;
  }

  try {
    if (demo->parsed()) return cmd_demo(opt, out);
    if (run_cmd->parsed()) return cmd_run(opt, out);
    if (bench_cmd->parsed()) return cmd_bench(opt, out);
    return cmd_parse_dataset(opt, out);
  } catch (const Error& e) {
    err << "error: " << error_token(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return kExitRejected;
  }
}

}  // namespace cloudac::cli
