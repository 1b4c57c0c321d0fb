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

#include "cloudac/error.hpp"

namespace cloudac {

std::uint8_t Rng::next_byte() {
  if (buffered_ == 0) {
    buffer_ = engine_();
    buffered_ = 8;
  }
  auto b = static_cast<std::uint8_t>(buffer_);
  buffer_ >>= 8;
  --buffered_;
  ++position_;
  return b;
}

ByteString Rng::bytes(std::size_t width) {
  ByteString out(width);
  for (auto& b : out) b = next_byte();
  return out;
}

std::uint64_t Rng::next_u64() {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{next_byte()} << (8 * i);
  return v;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "Rng::below: bound must be > 0");
  // Rejection keeps the result unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    std::uint64_t v = next_u64();
    if (v < limit) return v % bound;
  }
}

ByteString random_bytes(Rng& rng, std::size_t width) {
  if (width == 0) throw Error(ErrorCode::kInvalidWidth, "random_bytes: width must be >= 1");
  return rng.bytes(width);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
  ByteString a = encode_u64(master_seed);
  ByteString b = encode_u64(index);
  ByteString digest = hash(frame_concat({ByteView(a), ByteView(b)}));
  std::uint64_t seed = 0;
  for (int i = 0; i < 8; ++i) seed = (seed << 8) | digest[i];
  return seed;
}

}  // namespace cloudac
