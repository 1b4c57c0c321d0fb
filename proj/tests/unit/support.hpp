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

// Shared helpers for the unit tests.

#pragma once

#include <gtest/gtest.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <string_view>

#include "cloudac/error.hpp"
#include "cloudac/primitives.hpp"

namespace testing_support {

inline cloudac::ByteString hex(std::string_view text) { return cloudac::from_hex(text); }

inline cloudac::ByteString noise(std::mt19937_64& gen, std::size_t n) {
  cloudac::ByteString out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(gen());
  return out;
}

/// Asserts that `fn` throws cloudac::Error with `code`.
inline void expect_error(cloudac::ErrorCode code, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected error " << cloudac::error_token(code);
  } catch (const cloudac::Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("cloudac-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

  std::filesystem::path write(const std::string& name, const std::string& content) const {
    auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }

 private:
  std::filesystem::path path_;
};

/// `rows` synthetic records in the UCI processed format; every fifth row
/// has missing "ca" and "thal".
inline std::string uci_rows(std::size_t rows, int offset = 0) {
  std::string out;
  for (std::size_t i = 0; i < rows; ++i) {
    int v = static_cast<int>(i) + offset;
    bool gap = i % 5 == 4;
    out += std::to_string(29 + v % 48) + ".0," + std::to_string(v % 2) + ".0," +
           std::to_string(1 + v % 4) + ".0," + std::to_string(94 + v % 106) + ".0," +
           std::to_string(126 + v % 438) + ".0,0.0,2.0," + std::to_string(71 + v % 131) +
           ".0,0.0," + std::to_string(v % 6) + "." + std::to_string(v % 10) + ",2.0," +
           (gap ? "?" : "0.0") + "," + (gap ? "?" : "3.0") + "," + std::to_string(v % 5) + "\n";
  }
  return out;
}

/// Writes processed.{cleveland,hungarian,switzerland}.data fixtures.
inline void write_uci_fixtures(const TempDir& dir, std::size_t cleveland = 12,
                               std::size_t hungarian = 9, std::size_t swiss = 7) {
  dir.write("processed.cleveland.data", uci_rows(cleveland));
  dir.write("processed.hungarian.data", uci_rows(hungarian, 100));
  dir.write("processed.switzerland.data", uci_rows(swiss, 200));
}

}  // namespace testing_support
