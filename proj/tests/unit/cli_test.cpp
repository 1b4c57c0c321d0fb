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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "unit/support.hpp"

namespace cloudac::cli {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cloudac");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Cli, ExitCodeMapping) {
  EXPECT_EQ(exit_code_for(ErrorCode::kConfiguration), kExitConfig);
  EXPECT_EQ(exit_code_for(ErrorCode::kInvalidArgument), kExitConfig);
  EXPECT_EQ(exit_code_for(ErrorCode::kIo), kExitIo);
  EXPECT_EQ(exit_code_for(ErrorCode::kParse), kExitIo);
  EXPECT_EQ(exit_code_for(ErrorCode::kDeserialization), kExitIo);
  EXPECT_EQ(exit_code_for(ErrorCode::kOutOfOrder), kExitRejected);
}

TEST(Cli, DemoWalksAllPhases) {
  Invocation r = invoke({"demo", "--seed", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  for (const char* phase : {"setup", "keygen", "encryption", "access_control", "validation",
                            "data_sharing"}) {
    EXPECT_TRUE(contains(r.out, std::string("== phase: ") + phase + " ==")) << phase;
  }
  EXPECT_TRUE(contains(r.out, "== outcome =="));
  EXPECT_TRUE(contains(r.out, "user-000000 (NONE): COMPLETE"));
  EXPECT_TRUE(contains(r.out, "transcript sha256 "));
  EXPECT_EQ(invoke({"demo", "--seed", "3"}).out, r.out);
  EXPECT_NE(invoke({"demo", "--seed", "4"}).out, r.out);
}

TEST(Cli, DemoWritesTranscript) {
  testing_support::TempDir dir;
  auto path = dir.path() / "t.jsonl";
  Invocation r = invoke({"demo", "--key-length", "64", "--out", path.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  std::string text = slurp(path);
  EXPECT_EQ(text.rfind("{\"step\":1,", 0), 0u);
  EXPECT_EQ(text.back(), '\n');
}

TEST(Cli, AdversarialDemoExitsRejected) {
  Invocation r = invoke({"demo", "--adversary", "WRONG_PASSWORD=1"});
  EXPECT_EQ(r.code, kExitRejected);
  EXPECT_TRUE(contains(r.out, "REJECTED at setup"));
  Invocation replay = invoke({"demo", "--adversary", "REPLAY_QUERY=1"});
  EXPECT_EQ(replay.code, kExitRejected);
  EXPECT_TRUE(contains(replay.out, "REJECTED at validation"));
  EXPECT_TRUE(contains(replay.out, "(access was granted)"));
}

TEST(Cli, ConfigurationErrors) {
  EXPECT_EQ(invoke({"demo", "--key-length", "100"}).code, kExitConfig);
  EXPECT_EQ(invoke({"demo", "--bogus"}).code, kExitConfig);
  EXPECT_EQ(invoke({"demo", "--adversary", "EVE=1"}).code, kExitConfig);
  EXPECT_EQ(invoke({"run"}).code, kExitConfig);
  EXPECT_EQ(invoke({"run", "--scenario", "/nonexistent.json"}).code, kExitConfig);
  Invocation none = invoke({});
  EXPECT_EQ(none.code, kExitConfig);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, RunScenarioFile) {
  testing_support::TempDir dir;
  auto path = dir.write("s.json", R"({"n_genuine": 10, "adversaries": [{"class": "WRONG_PASSWORD", "count": 5}]})");
  Invocation r = invoke({"run", "--scenario", path.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "NONE ACCEPTED 10/10"));
  EXPECT_TRUE(contains(r.out, "WRONG_PASSWORD ACCEPTED 0/5 REJECTED 5"));
  auto bad = dir.write("bad.json", R"({"n_genuine": "ten"})");
  Invocation b = invoke({"run", "--scenario", bad.string()});
  EXPECT_EQ(b.code, kExitConfig);
  EXPECT_TRUE(contains(b.err, "error: "));
}

TEST(Cli, BenchCsv) {
  testing_support::TempDir dir;
  testing_support::write_uci_fixtures(dir);
  Invocation r = invoke({"bench", "--data-dir", dir.path().string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::size_t n = 0;
  std::getline(lines, line);
  EXPECT_EQ(line, "dataset,key_length_bits,memory_bytes,genuine_detection_rate,seed");
  while (std::getline(lines, line)) ++n;
  EXPECT_EQ(n, 12u);
  Invocation serial = invoke({"bench", "--data-dir", dir.path().string(), "--serial"});
  EXPECT_EQ(serial.out, r.out);

  auto csv = dir.path() / "out.csv";
  Invocation to_file = invoke({"bench", "--data-dir", dir.path().string(), "--out", csv.string()});
  EXPECT_EQ(to_file.code, kExitOk);
  EXPECT_EQ(slurp(csv), r.out);
}

TEST(Cli, BenchMissingDataIsIoError) {
  Invocation r = invoke({"bench", "--data-dir", "/nonexistent/heart"});
  EXPECT_EQ(r.code, kExitIo);
  EXPECT_TRUE(contains(r.err, "/nonexistent/heart"));
}

TEST(Cli, ParseDataset) {
  testing_support::TempDir dir;
  testing_support::write_uci_fixtures(dir);
  Invocation r = invoke({"parse-dataset", "--dataset", "cleveland", "--data-dir", dir.path().string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "cleveland: 12 records"));
  EXPECT_TRUE(contains(r.out, "  ca: 2 missing"));
  auto bad = dir.write("bad.data", "1,2,3\n");
  Invocation b = invoke({"parse-dataset", "--dataset", "swiss:" + bad.string()});
  EXPECT_EQ(b.code, kExitIo);
  EXPECT_TRUE(contains(b.err, "line 1"));
}

}  // namespace
}  // namespace cloudac::cli
