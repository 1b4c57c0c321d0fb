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

// Self-checks of the test oracles against published SHA-256 vectors and the
// vectors generated independently by make_golden.py.

#include <gtest/gtest.h>

#include <string>
#include <string_view>

#include "oracle/equation_oracle.hpp"
#include "oracle/golden_vectors.hpp"

namespace {

using oracle::Bytes;

std::string hex_of(const Bytes& b) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (auto c : b) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

Bytes text(std::string_view s) { return Bytes(s.begin(), s.end()); }

Bytes pattern(std::size_t n, unsigned start) {
  Bytes out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>((start + 7 * i) & 0xff);
  return out;
}

TEST(OracleSha256, PublishedVectors) {
  EXPECT_EQ(hex_of(oracle::sha256_bytes(text(""))),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(hex_of(oracle::sha256_bytes(text("abc"))),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(hex_of(oracle::sha256_bytes(
                text("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq"))),
            "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
  EXPECT_EQ(hex_of(oracle::sha256_bytes(Bytes(1000000, 'a'))),
            "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
}

TEST(OracleSha256, AllPaddingBoundaries) {
  // 55, 56 and 64 bytes straddle the one/two block padding split.
  for (std::size_t n : {55u, 56u, 63u, 64u, 65u}) {
    EXPECT_EQ(oracle::sha256_bytes(Bytes(n, 0x61)).size(), 32u);
  }
  EXPECT_EQ(hex_of(oracle::sha256_bytes(Bytes(64, 0x61))),
            "ffe054fe7ae0cb6dc65c3af9b61d5209f439851db43d0ba5997337df154668eb");
}

TEST(OracleGolden, PrimitivesAgree) {
  EXPECT_EQ(hex_of(oracle::sha256_bytes(text(""))), golden::kHashEmpty);
  EXPECT_EQ(hex_of(oracle::expand(text("abc"), 8)), golden::kExpandAbc8);
  EXPECT_EQ(hex_of(oracle::expand(text("abc"), 64)), golden::kExpandAbc64);
  EXPECT_EQ(hex_of(oracle::expand(text("abc"), 100)), golden::kExpandAbc100);
  EXPECT_EQ(hex_of(oracle::stream_cipher(text("key"), text("attack at dawn, bring the heart records"))),
            golden::kSymEncrypt);
  Bytes x = pattern(8, 200);
  EXPECT_EQ(hex_of(oracle::mod_reduce(x, Bytes(8, 0))), golden::kModZeroWidth8);
  Bytes one(8, 0);
  one[7] = 1;
  EXPECT_EQ(hex_of(oracle::mod_reduce(x, one)), golden::kModOneWidth8);
  EXPECT_EQ(hex_of(oracle::effective_modulus(Bytes(8, 0))), golden::kEffectiveZeroWidth8);
}

TEST(OracleGolden, EquationsAgree) {
  struct Row {
    std::size_t L;
    std::string_view reg, pk, q, sk, v1, v2;
  };
  const Row rows[] = {
      {8, golden::kRegistration8, golden::kPrivateKey8, golden::kQuery8, golden::kSessionKey8,
       golden::kV1_8, golden::kV2_8},
      {32, golden::kRegistration32, golden::kPrivateKey32, golden::kQuery32,
       golden::kSessionKey32, golden::kV1_32, golden::kV2_32},
      {64, golden::kRegistration64, golden::kPrivateKey64, golden::kQuery64,
       golden::kSessionKey64, golden::kV1_64, golden::kV2_64},
  };
  const Bytes uid = text("user-000042");
  const Bytes ups = pattern(16, 3);
  const Bytes a = {0xa5, 0x01, 0x00, 0x7f};
  for (const Row& row : rows) {
    const Bytes s = pattern(row.L, 11), m = pattern(row.L, 97), up = pattern(row.L, 55),
                r = pattern(row.L, 129);
    Bytes M = oracle::registration_digest(uid, ups, s, row.L);
    Bytes upk = oracle::private_key(m, up, s, a, row.L);
    Bytes usk = oracle::session_key(up, m, a, row.L);
    auto [v1, v2] = oracle::validation(uid, usk, s, r, upk, m, a, row.L);
    EXPECT_EQ(hex_of(M), row.reg) << row.L;
    EXPECT_EQ(hex_of(upk), row.pk) << row.L;
    EXPECT_EQ(hex_of(oracle::access_query(M, uid, upk, row.L)), row.q) << row.L;
    EXPECT_EQ(hex_of(usk), row.sk) << row.L;
    EXPECT_EQ(hex_of(v1), row.v1) << row.L;
    EXPECT_EQ(hex_of(v2), row.v2) << row.L;
  }
}

TEST(OracleGolden, PayloadEncryptionAgrees) {
  const Bytes s = pattern(32, 11), m = pattern(32, 97);
  std::string payload_hex(golden::kClevelandPayload);
  Bytes payload;
  for (std::size_t i = 0; i < payload_hex.size(); i += 2) {
    payload.push_back(static_cast<std::uint8_t>(std::stoi(payload_hex.substr(i, 2), nullptr, 16)));
  }
  Bytes de = oracle::encrypt_data(payload, s, m);
  EXPECT_EQ(hex_of(de), golden::kEncryptedPayload);
  EXPECT_EQ(oracle::decrypt_data(de, s, m), payload);
}

TEST(OracleArithmetic, SmallCases) {
  EXPECT_EQ(oracle::mul_mod_width({0x10}, {0x10}), Bytes{0x00});
  EXPECT_EQ(oracle::mul_mod_width({0x00, 0x03}, {0x00, 0x05}), (Bytes{0x00, 0x0f}));
  EXPECT_EQ(oracle::mod_reduce({0x00, 0x64}, {0x00, 0x07}), (Bytes{0x00, 0x02}));
  EXPECT_TRUE(oracle::less_than({0x00, 0x01}, {0x02}));
  EXPECT_FALSE(oracle::less_than({0x00, 0x01}, {0x01}));
  EXPECT_FALSE(oracle::less_than({0x02}, {0x00, 0x02}));
  EXPECT_EQ(oracle::frame({text("ab"), text("")}),
            (Bytes{0, 0, 0, 2, 'a', 'b', 0, 0, 0, 0}));
}

}  // namespace
