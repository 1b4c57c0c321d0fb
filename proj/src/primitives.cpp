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

#include <openssl/evp.h>

#include <algorithm>
#include <limits>

#include "cloudac/error.hpp"

namespace cloudac {

ByteString to_bytes(std::string_view text) {
  return ByteString(text.begin(), text.end());
}

std::string to_string(ByteView bytes) {
  return std::string(bytes.begin(), bytes.end());
}

std::string to_hex(ByteView bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

ByteString from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "hex string has odd length");
  }
  ByteString out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = hex_value(hex[2 * i]);
    int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(ErrorCode::kInvalidArgument, "non-hex character in input");
    }
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

ByteString encode_u32(std::uint32_t value) {
  return {static_cast<std::uint8_t>(value >> 24), static_cast<std::uint8_t>(value >> 16),
          static_cast<std::uint8_t>(value >> 8), static_cast<std::uint8_t>(value)};
}

ByteString encode_u64(std::uint64_t value) {
  ByteString out(8);
  for (int i = 7; i >= 0; --i) {
    out[i] = static_cast<std::uint8_t>(value);
    value >>= 8;
  }
  return out;
}

ByteString hash(ByteView data) {
  ByteString digest(kDigestSize);
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != kDigestSize) {
    throw Error(ErrorCode::kInvalidArgument, "SHA-256 computation failed");
  }
  return digest;
}

namespace {

void append_frame(ByteString& out, ByteView field) {
  if (field.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kInvalidArgument, "field too large to frame");
  }
  ByteString prefix = encode_u32(static_cast<std::uint32_t>(field.size()));
  out.insert(out.end(), prefix.begin(), prefix.end());
  out.insert(out.end(), field.begin(), field.end());
}

// Keystream and expansion blocks share this shape.
ByteString counter_block(ByteView seed, std::uint32_t counter) {
  ByteString c = encode_u32(counter);
  return hash(frame_concat({seed, ByteView(c)}));
}

}  // namespace

ByteString expand(ByteView data, std::size_t target_width) {
  if (target_width == 0) {
    throw Error(ErrorCode::kInvalidWidth, "expand: target width must be >= 1");
  }
  if (target_width <= kDigestSize) {
    ByteString digest = hash(data);
    digest.resize(target_width);
    return digest;
  }
  ByteString out;
  out.reserve(target_width + kDigestSize);
  for (std::uint32_t i = 0; out.size() < target_width; ++i) {
    ByteString block = counter_block(data, i);
    out.insert(out.end(), block.begin(), block.end());
  }
  out.resize(target_width);
  return out;
}

ByteString frame_concat(std::span<const ByteString> fields) {
  if (fields.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "frame_concat: empty field list");
  }
  std::size_t total = 0;
  for (const auto& f : fields) total += 4 + f.size();
  ByteString out;
  out.reserve(total);
  for (const auto& f : fields) append_frame(out, f);
  return out;
}

ByteString frame_concat(std::initializer_list<ByteView> fields) {
  if (fields.size() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "frame_concat: empty field list");
  }
  std::size_t total = 0;
  for (const auto& f : fields) total += 4 + f.size();
  ByteString out;
  out.reserve(total);
  for (const auto& f : fields) append_frame(out, f);
  return out;
}

std::vector<ByteString> parse_frames(ByteView framed) {
  std::vector<ByteString> fields;
  std::size_t pos = 0;
  while (pos < framed.size()) {
    if (framed.size() - pos < 4) {
      throw Error(ErrorCode::kCorruptCiphertext, "truncated frame length prefix");
    }
    std::uint32_t len = (std::uint32_t{framed[pos]} << 24) | (std::uint32_t{framed[pos + 1]} << 16) |
                        (std::uint32_t{framed[pos + 2]} << 8) | std::uint32_t{framed[pos + 3]};
    pos += 4;
    if (len > framed.size() - pos) {
      throw Error(ErrorCode::kCorruptCiphertext, "frame length exceeds remaining input");
    }
    fields.emplace_back(framed.begin() + pos, framed.begin() + pos + len);
    pos += len;
  }
  if (fields.empty()) {
    throw Error(ErrorCode::kCorruptCiphertext, "no frames in input");
  }
  return fields;
}

ByteString xor_bytes(ByteView x, ByteView y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kWidthMismatch, "xor: operand widths " + std::to_string(x.size()) +
                                               " and " + std::to_string(y.size()) + " differ");
  }
  ByteString out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] ^ y[i];
  return out;
}

int compare_be(ByteView x, ByteView y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kWidthMismatch, "compare: operand widths differ");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
  }
  return 0;
}

namespace {

// Unsigned integer as little-endian 32-bit limbs. Only what mod_reduce needs.
class Limbs {
 public:
  static Limbs from_be(ByteView bytes, std::size_t limb_count) {
    Limbs out;
    out.v_.assign(limb_count, 0);
    std::size_t n = bytes.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t bit = 8 * (n - 1 - i);
      out.v_[bit / 32] |= std::uint32_t{bytes[i]} << (bit % 32);
    }
    return out;
  }

  ByteString to_be(std::size_t width) const {
    ByteString out(width, 0);
    for (std::size_t i = 0; i < width; ++i) {
      std::size_t bit = 8 * (width - 1 - i);
      out[i] = static_cast<std::uint8_t>(v_[bit / 32] >> (bit % 32));
    }
    return out;
  }

  // this = (this << 1) | bit
  void shift_in(bool bit) {
    std::uint32_t carry = bit ? 1u : 0u;
    for (auto& limb : v_) {
      std::uint32_t next = limb >> 31;
      limb = (limb << 1) | carry;
      carry = next;
    }
  }

  bool geq(const Limbs& other) const {
    for (std::size_t i = v_.size(); i-- > 0;) {
      if (v_[i] != other.v_[i]) return v_[i] > other.v_[i];
    }
    return true;
  }

  void sub(const Limbs& other) {
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) {
      std::uint64_t lhs = v_[i];
      std::uint64_t rhs = std::uint64_t{other.v_[i]} + borrow;
      borrow = lhs < rhs ? 1 : 0;
      v_[i] = static_cast<std::uint32_t>(lhs + (borrow << 32) - rhs);
    }
  }

 private:
  std::vector<std::uint32_t> v_;
};

bool exceeds_one(ByteView x) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i] != 0) return true;
  }
  return !x.empty() && x.back() > 1;
}

}  // namespace

ByteString effective_modulus(ByteView modulus_src) {
  if (modulus_src.empty()) {
    throw Error(ErrorCode::kInvalidWidth, "modulus must have width >= 1");
  }
  if (exceeds_one(modulus_src)) return ByteString(modulus_src.begin(), modulus_src.end());
  for (std::uint32_t counter = 1;; ++counter) {
    ByteString c = encode_u32(counter);
    ByteString candidate = expand(frame_concat({modulus_src, ByteView(c)}), modulus_src.size());
    if (exceeds_one(candidate)) return candidate;
  }
}

ByteString mod_reduce(ByteView x, ByteView modulus_src) {
  if (x.size() != modulus_src.size()) {
    throw Error(ErrorCode::kWidthMismatch, "mod_reduce: operand widths differ");
  }
  const std::size_t width = x.size();
  ByteString modulus = effective_modulus(modulus_src);
  // One spare limb absorbs the shift before the conditional subtraction.
  const std::size_t limbs = (width + 3) / 4 + 1;
  Limbs m = Limbs::from_be(modulus, limbs);
  Limbs r = Limbs::from_be(ByteString{}, limbs);
  for (std::size_t i = 0; i < width; ++i) {
    for (int b = 7; b >= 0; --b) {
      r.shift_in(((x[i] >> b) & 1) != 0);
      if (r.geq(m)) r.sub(m);
    }
  }
  return r.to_be(width);
}

ByteString mul_mod_width(ByteView x, ByteView y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kWidthMismatch, "mul_mod_width: operand widths differ");
  }
  const std::size_t n = x.size();
  // Little-endian accumulation, keeping only the low n octets.
  std::vector<std::uint32_t> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t xi = x[n - 1 - i];
    if (xi == 0) continue;
    std::uint32_t carry = 0;
    for (std::size_t j = 0; i + j < n; ++j) {
      std::uint32_t t = acc[i + j] + xi * y[n - 1 - j] + carry;
      acc[i + j] = t & 0xff;
      carry = t >> 8;
    }
  }
  ByteString out(n);
  for (std::size_t k = 0; k < n; ++k) out[n - 1 - k] = static_cast<std::uint8_t>(acc[k]);
  return out;
}

ByteString sym_encrypt(ByteView key, ByteView plaintext) {
  if (key.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "sym_encrypt: key must be non-empty");
  }
  ByteString out(plaintext.begin(), plaintext.end());
  const std::size_t blocks = (out.size() + kDigestSize - 1) / kDigestSize;
  if (blocks > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kInvalidArgument, "sym_encrypt: plaintext too long");
  }
  for (std::size_t b = 0; b < blocks; ++b) {
    ByteString ks = counter_block(key, static_cast<std::uint32_t>(b));
    const std::size_t base = b * kDigestSize;
    const std::size_t n = std::min(kDigestSize, out.size() - base);
    for (std::size_t i = 0; i < n; ++i) out[base + i] ^= ks[i];
  }
  return out;
}

ByteString sym_decrypt(ByteView key, ByteView ciphertext) {
  return sym_encrypt(key, ciphertext);
}

}  // namespace cloudac
