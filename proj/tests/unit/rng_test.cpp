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

#include "cloudac/rng.hpp"

#include <gtest/gtest.h>

#include "oracle/golden_vectors.hpp"
#include "unit/support.hpp"

namespace cloudac {
namespace {

TEST(Rng, EqualSeedsGiveEqualStreams) {
  Rng a(42), b(42);
  EXPECT_EQ(a.bytes(100), b.bytes(100));
}

TEST(Rng, SuccessiveCallsReturnConsecutiveSegments) {
  Rng a(9), b(9);
  ByteString first = a.bytes(5);
  ByteString second = a.bytes(13);
  ByteString whole = b.bytes(18);
  EXPECT_EQ(ByteString(whole.begin(), whole.begin() + 5), first);
  EXPECT_EQ(ByteString(whole.begin() + 5, whole.end()), second);
  EXPECT_EQ(a.position(), 18u);
}

TEST(Rng, DifferentSeedsDiffer) { EXPECT_NE(Rng(0).bytes(32), Rng(1).bytes(32)); }

TEST(Rng, BytesAreLeastSignificantFirstFromMt19937_64) {
  // 14514284786278117030 is the first output of mt19937_64 seeded with 5489.
  Rng rng(5489);
  EXPECT_EQ(rng.next_u64(), 14514284786278117030ULL);
  Rng again(5489);
  ByteString b = again.bytes(8);
  EXPECT_EQ(to_hex(b), "a6aef6f61c196dc9");
}

TEST(Rng, BelowStaysInRange) {
  Rng rng(3);
  for (std::uint64_t bound : {1ULL, 2ULL, 7ULL, 256ULL, 1000003ULL}) {
    for (int i = 0; i < 200; ++i) EXPECT_LT(rng.below(bound), bound);
  }
  testing_support::expect_error(ErrorCode::kInvalidArgument, [&] { rng.below(0); });
}

TEST(RandomBytes, ZeroWidthIsRejected) {
  Rng rng(0);
  testing_support::expect_error(ErrorCode::kInvalidWidth, [&] { random_bytes(rng, 0); });
  EXPECT_EQ(random_bytes(rng, 17).size(), 17u);
}

TEST(DeriveSeed, MatchesReferenceVectors) {
  EXPECT_EQ(derive_seed(7, 0), golden::kDeriveSeed7_0);
  EXPECT_EQ(derive_seed(7, 1), golden::kDeriveSeed7_1);
  EXPECT_EQ(derive_seed(7, 1000), golden::kDeriveSeed7_1000);
  EXPECT_NE(derive_seed(7, 0), derive_seed(8, 0));
}

}  // namespace
}  // namespace cloudac
