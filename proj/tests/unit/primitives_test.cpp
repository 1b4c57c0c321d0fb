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

#include "cloudac/primitives.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle/equation_oracle.hpp"
#include "oracle/golden_vectors.hpp"
#include "unit/support.hpp"

namespace cloudac {
namespace {

using testing_support::expect_error;
using testing_support::hex;
using testing_support::noise;

TEST(Hash, EmptyInputMatchesReferenceDigest) {
  EXPECT_EQ(to_hex(hash({})), golden::kHashEmpty);
  EXPECT_EQ(hash({}), oracle::sha256_bytes({}));
}

TEST(Hash, AgreesWithReferenceImplementation) {
  std::mt19937_64 gen(1);
  for (std::size_t n : {1u, 55u, 56u, 63u, 64u, 65u, 119u, 1000u}) {
    ByteString x = noise(gen, n);
    EXPECT_EQ(hash(x), oracle::sha256_bytes(x)) << "length " << n;
  }
  EXPECT_EQ(to_hex(hash(to_bytes("abc"))), golden::kHashAbc);
}

TEST(Hash, DeterministicAndFixedWidth) {
  ByteString x = to_bytes("heart");
  EXPECT_EQ(hash(x), hash(x));
  EXPECT_EQ(hash(x).size(), kDigestSize);
}

TEST(Hash, SingleBitFlipChangesDigest) {
  std::mt19937_64 gen(2);
  int collisions = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    ByteString x = noise(gen, 1 + gen() % 64);
    ByteString y = x;
    std::size_t bit = gen() % (y.size() * 8);
    y[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    collisions += hash(x) == hash(y) ? 1 : 0;
  }
  EXPECT_EQ(collisions, 0);
}

TEST(Expand, Width32IsTheDigest) {
  ByteString x = to_bytes("abc");
  EXPECT_EQ(expand(x, 32), hash(x));
}

TEST(Expand, NarrowWidthIsDigestPrefix) {
  ByteString x = to_bytes("abc");
  ByteString d = hash(x);
  EXPECT_EQ(expand(x, 8), ByteString(d.begin(), d.begin() + 8));
  EXPECT_EQ(to_hex(expand(x, 8)), golden::kExpandAbc8);
}

TEST(Expand, WideWidthChainsCounterBlocks) {
  ByteString x = to_bytes("abc");
  ByteString wide = expand(x, 64);
  ByteString first = hash(frame_concat({ByteView(x), ByteView(encode_u32(0))}));
  EXPECT_EQ(ByteString(wide.begin(), wide.begin() + 32), first);
  EXPECT_EQ(to_hex(wide), golden::kExpandAbc64);
  EXPECT_EQ(to_hex(expand(x, 100)), golden::kExpandAbc100);
}

TEST(Expand, MatchesOracleAcrossWidths) {
  std::mt19937_64 gen(3);
  for (std::size_t width : {1u, 7u, 8u, 16u, 31u, 32u, 33u, 64u, 65u, 97u, 128u}) {
    ByteString x = noise(gen, gen() % 40);
    EXPECT_EQ(expand(x, width), oracle::expand(x, width)) << "width " << width;
  }
}

TEST(Expand, ZeroWidthIsRejected) {
  expect_error(ErrorCode::kInvalidWidth, [] { expand(to_bytes("x"), 0); });
}

TEST(FrameConcat, EncodesLengthPrefixes) {
  ByteString out = frame_concat({ByteView(to_bytes("AB")), ByteView(to_bytes("C"))});
  EXPECT_EQ(out, hex("00000002414200000001" "43"));
}

TEST(FrameConcat, DistinguishesSplitPoints) {
  auto a = frame_concat({ByteView(to_bytes("A")), ByteView(to_bytes("BC"))});
  auto b = frame_concat({ByteView(to_bytes("AB")), ByteView(to_bytes("C"))});
  EXPECT_NE(a, b);
}

TEST(FrameConcat, RoundTripsThroughParse) {
  std::vector<ByteString> fields = {to_bytes(""), to_bytes("x"), hex("00ff00"), ByteString(300, 7)};
  EXPECT_EQ(parse_frames(frame_concat(fields)), fields);
}

TEST(FrameConcat, EmptyListIsRejected) {
  expect_error(ErrorCode::kInvalidArgument, [] { frame_concat(std::vector<ByteString>{}); });
}

TEST(FrameConcat, RandomSplitsNeverCollide) {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 500; ++trial) {
    ByteString base = noise(gen, 2 + gen() % 20);
    std::set<ByteString> outputs;
    std::set<std::vector<ByteString>> lists;
    for (int k = 0; k < 10; ++k) {
      std::vector<ByteString> fields;
      std::size_t pos = 0;
      while (pos < base.size()) {
        std::size_t take = 1 + gen() % (base.size() - pos);
        fields.emplace_back(base.begin() + static_cast<std::ptrdiff_t>(pos),
                            base.begin() + static_cast<std::ptrdiff_t>(pos + take));
        pos += take;
      }
      lists.insert(fields);
      outputs.insert(frame_concat(fields));
    }
    EXPECT_EQ(outputs.size(), lists.size());
  }
}

TEST(ParseFrames, RejectsMalformedInput) {
  expect_error(ErrorCode::kCorruptCiphertext, [] { parse_frames(hex("000000")); });
  expect_error(ErrorCode::kCorruptCiphertext, [] { parse_frames(hex("0000000541")); });
  expect_error(ErrorCode::kCorruptCiphertext, [] { parse_frames({}); });
}

TEST(Xor, BasicCases) {
  EXPECT_EQ(xor_bytes(hex("ff"), hex("0f")), hex("f0"));
  std::mt19937_64 gen(5);
  for (std::size_t w : {1u, 8u, 32u, 64u}) {
    ByteString x = noise(gen, w);
    ByteString y = noise(gen, w);
    EXPECT_EQ(xor_bytes(x, x), ByteString(w, 0));
    EXPECT_EQ(xor_bytes(xor_bytes(x, y), y), x);
  }
}

TEST(Xor, WidthMismatchIsAnError) {
  expect_error(ErrorCode::kWidthMismatch, [] { xor_bytes(hex("00"), hex("0000")); });
}

TEST(ModReduce, SmallExample) { EXPECT_EQ(mod_reduce(hex("05"), hex("03")), hex("02")); }

TEST(ModReduce, DegenerateModuliAreRederived) {
  ByteString x = hex("c8cfd6dde4ebf2f9");
  for (const ByteString& src : {hex("0000000000000000"), hex("0000000000000001")}) {
    ByteString eff = effective_modulus(src);
    EXPECT_NE(eff, src);
    EXPECT_GT(compare_be(eff, hex("0000000000000001")), 0);
    EXPECT_LT(compare_be(mod_reduce(x, src), eff), 0);
  }
  EXPECT_EQ(to_hex(mod_reduce(x, hex("0000000000000000"))), golden::kModZeroWidth8);
  EXPECT_EQ(to_hex(mod_reduce(x, hex("0000000000000001"))), golden::kModOneWidth8);
  EXPECT_EQ(to_hex(effective_modulus(hex("0000000000000000"))), golden::kEffectiveZeroWidth8);
}

TEST(ModReduce, SingleByteDegenerateModulusTerminates) {
  for (int v = 0; v < 256; ++v) {
    ByteString x{static_cast<std::uint8_t>(v)};
    EXPECT_LT(compare_be(mod_reduce(x, hex("00")), effective_modulus(hex("00"))), 0);
    EXPECT_LT(compare_be(mod_reduce(x, hex("01")), effective_modulus(hex("01"))), 0);
  }
}

TEST(ModReduce, AgreesWithBigIntegerOracle) {
  std::mt19937_64 gen(6);
  for (std::size_t width : {1u, 3u, 8u, 16u, 32u, 64u}) {
    for (int trial = 0; trial < 300; ++trial) {
      ByteString x = noise(gen, width);
      ByteString m = noise(gen, width);
      // Small moduli exercise the high-quotient path.
      if (trial % 3 == 0) std::fill(m.begin(), m.end() - 1, 0);
      ByteString r = mod_reduce(x, m);
      ASSERT_EQ(r, oracle::mod_reduce(x, m)) << "width " << width;
      ASSERT_TRUE(oracle::less_than(r, effective_modulus(m)));
    }
  }
}

TEST(ModReduce, WidthMismatchIsAnError) {
  expect_error(ErrorCode::kWidthMismatch, [] { mod_reduce(hex("05"), hex("0003")); });
}

TEST(MulModWidth, IdentityAnnihilatorAndWrap) {
  std::mt19937_64 gen(7);
  ByteString x = noise(gen, 32);
  ByteString one(32, 0);
  one.back() = 1;
  EXPECT_EQ(mul_mod_width(x, one), x);
  EXPECT_EQ(mul_mod_width(x, ByteString(32, 0)), ByteString(32, 0));
  EXPECT_EQ(mul_mod_width(hex("10"), hex("10")), hex("00"));
}

TEST(MulModWidth, AgreesWithBigIntegerOracle) {
  std::mt19937_64 gen(8);
  for (std::size_t width : {1u, 2u, 8u, 16u, 32u, 64u}) {
    for (int trial = 0; trial < 200; ++trial) {
      ByteString x = noise(gen, width);
      ByteString y = noise(gen, width);
      ASSERT_EQ(mul_mod_width(x, y), oracle::mul_mod_width(x, y));
    }
  }
}

TEST(SymEncrypt, RoundTripsAndPreservesLength) {
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 1000; ++trial) {
    ByteString key = noise(gen, 1 + gen() % 40);
    ByteString p = noise(gen, gen() % 200);
    ByteString c = sym_encrypt(key, p);
    ASSERT_EQ(c.size(), p.size());
    ASSERT_EQ(sym_decrypt(key, c), p);
  }
}

TEST(SymEncrypt, EmptyPlaintext) { EXPECT_TRUE(sym_encrypt(to_bytes("k"), {}).empty()); }

TEST(SymEncrypt, DistinctKeysGiveDistinctCiphertexts) {
  std::mt19937_64 gen(10);
  int equal = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    ByteString p = noise(gen, 16);
    ByteString k1 = noise(gen, 16);
    ByteString k2 = noise(gen, 16);
    if (k1 == k2) continue;
    equal += sym_encrypt(k1, p) == sym_encrypt(k2, p) ? 1 : 0;
  }
  EXPECT_EQ(equal, 0);
}

TEST(SymEncrypt, MatchesOracleAndGolden) {
  ByteString p = to_bytes("attack at dawn, bring the heart records");
  EXPECT_EQ(to_hex(sym_encrypt(to_bytes("key"), p)), golden::kSymEncrypt);
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    ByteString key = noise(gen, 1 + gen() % 40);
    ByteString data = noise(gen, gen() % 300);
    EXPECT_EQ(sym_encrypt(key, data), oracle::stream_cipher(key, data));
  }
}

TEST(SymEncrypt, EmptyKeyIsRejected) {
  expect_error(ErrorCode::kInvalidArgument, [] { sym_encrypt({}, to_bytes("x")); });
}

TEST(Hex, RoundTripAndValidation) {
  ByteString x = hex("00A1ff");
  EXPECT_EQ(to_hex(x), "00a1ff");
  expect_error(ErrorCode::kInvalidArgument, [] { from_hex("abc"); });
  expect_error(ErrorCode::kInvalidArgument, [] { from_hex("zz"); });
}

TEST(Encoding, BigEndianCounters) {
  EXPECT_EQ(encode_u32(0x01020304), hex("01020304"));
  EXPECT_EQ(encode_u64(0x0102030405060708ULL), hex("0102030405060708"));
}

TEST(CompareBe, OrdersBigEndian) {
  EXPECT_LT(compare_be(hex("00ff"), hex("0100")), 0);
  EXPECT_EQ(compare_be(hex("0100"), hex("0100")), 0);
  EXPECT_GT(compare_be(hex("0101"), hex("0100")), 0);
}

}  // namespace
}  // namespace cloudac
