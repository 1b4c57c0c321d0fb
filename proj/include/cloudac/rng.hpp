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

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "cloudac/primitives.hpp"

namespace cloudac {

/// Seeded byte stream. Owned by exactly one logical thread; never share.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the
/// standard, so a seed reproduces the same bytes on every platform. Each
/// 64-bit draw is split into eight octets, least significant first; bytes
/// left over from a draw are served before the engine advances again.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  /// Number of bytes handed out so far.
  std::uint64_t position() const noexcept { return position_; }

  ByteString bytes(std::size_t width);
  std::uint64_t next_u64();
  /// Value in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint8_t next_byte();

  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t buffer_ = 0;
  int buffered_ = 0;
  std::uint64_t position_ = 0;
};

/// Next `width` bytes of the stream. width == 0 throws kInvalidWidth.
ByteString random_bytes(Rng& rng, std::size_t width);

/// Independent seed for sub-run `index` of a master seed:
/// first 8 bytes (big-endian) of hash(frame_concat([u64be(master), u64be(index)])).
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

}  // namespace cloudac
