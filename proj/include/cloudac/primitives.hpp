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

// Byte-string algebra shared by every protocol equation: hashing, width
// expansion, length-prefixed framing, XOR, big-endian modular reduction,
// truncated multiplication and a hash-counter stream cipher.
//
// None of this is production cryptography. The stream cipher is
// deterministic and unauthenticated, and nothing here is constant time.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cloudac {

using ByteString = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline constexpr std::size_t kDigestSize = 32;

ByteString to_bytes(std::string_view text);
std::string to_string(ByteView bytes);

/// Lowercase hex, two characters per octet.
std::string to_hex(ByteView bytes);
/// Inverse of to_hex; accepts either case. Throws kInvalidArgument on odd
/// length or a non-hex character.
ByteString from_hex(std::string_view hex);

/// 4-byte big-endian encoding used for every counter in this module.
ByteString encode_u32(std::uint32_t value);
ByteString encode_u64(std::uint64_t value);

/// SHA-256.
ByteString hash(ByteView data);

/// Maps `data` onto exactly `target_width` bytes. Widths up to 32 take a
/// prefix of hash(data); wider outputs chain
/// hash(frame_concat([data, u32be(i)])) for i = 0, 1, ... and truncate.
ByteString expand(ByteView data, std::size_t target_width);

/// Length-prefixed concatenation (4-byte big-endian length per field).
/// Injective over field lists, unlike raw concatenation.
ByteString frame_concat(std::span<const ByteString> fields);
ByteString frame_concat(std::initializer_list<ByteView> fields);

/// Inverse of frame_concat. Throws kCorruptCiphertext when the input is not
/// an exact sequence of frames.
std::vector<ByteString> parse_frames(ByteView framed);

/// Octet-wise XOR of equal-width operands. Mismatched widths throw
/// kWidthMismatch; nothing is truncated or padded.
ByteString xor_bytes(ByteView x, ByteView y);

/// The modulus actually used by mod_reduce for `modulus_src`: the source
/// itself when it reads as an integer > 1, otherwise the first
/// expand(frame_concat([modulus_src, u32be(c)]), L) for c = 1, 2, ... whose
/// integer value exceeds 1.
ByteString effective_modulus(ByteView modulus_src);

/// int(x) mod int(effective_modulus(modulus_src)), big-endian, width L.
ByteString mod_reduce(ByteView x, ByteView modulus_src);

/// int(x) * int(y) mod 2^(8L), width L.
ByteString mul_mod_width(ByteView x, ByteView y);

/// Hash-counter stream cipher: keystream block i is
/// hash(frame_concat([key, u32be(i)])). Encryption and decryption coincide.
ByteString sym_encrypt(ByteView key, ByteView plaintext);
ByteString sym_decrypt(ByteView key, ByteView ciphertext);

/// Big-endian comparison of equal-width byte strings.
int compare_be(ByteView x, ByteView y);

}  // namespace cloudac
