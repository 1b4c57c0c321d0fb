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

#include "cloudac/protocol.hpp"

#include <string>

#include "cloudac/error.hpp"

namespace cloudac::protocol {

namespace {

void require_non_empty(ByteView value, const char* what) {
  if (value.empty()) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must be non-empty");
  }
}

void require_width(ByteView value, std::size_t width, const char* what) {
  if (value.size() != width) {
    throw Error(ErrorCode::kWidthMismatch, std::string(what) + " has width " +
                                               std::to_string(value.size()) + ", expected " +
                                               std::to_string(width));
  }
}

const ByteString& data_label() {
  static const ByteString label = to_bytes("DATA");
  return label;
}

const ByteString& kgc_label() {
  static const ByteString label = to_bytes("KGC");
  return label;
}

// expand(hash(s || m), n), the mask applied on top of the payload cipher.
ByteString payload_mask(ByteView s, ByteView m, std::size_t n) {
  return expand(hash(frame_concat({s, m})), n);
}

}  // namespace

bool is_supported_key_length(int key_length_bits) {
  return key_length_bits == 64 || key_length_bits == 128 || key_length_bits == 256 ||
         key_length_bits == 512;
}

std::size_t width_for_key_length(int key_length_bits) {
  if (!is_supported_key_length(key_length_bits)) {
    throw Error(ErrorCode::kConfiguration,
                "unsupported key length " + std::to_string(key_length_bits) +
                    " (expected one of 64, 128, 256, 512)");
  }
  return static_cast<std::size_t>(key_length_bits) / 8;
}

SystemParams SystemParams::generate(Rng& rng, std::size_t width) {
  SystemParams params;
  params.width = width;
  params.s = random_bytes(rng, width);
  do {
    params.m = random_bytes(rng, width);
  } while (params.m == params.s);
  return params;
}

RegistrationDigest registration_digest(ByteView user_id, ByteView password, ByteView s,
                                       std::size_t width) {
  require_non_empty(user_id, "user id");
  require_non_empty(password, "password");
  require_non_empty(s, "security parameter");
  ByteString bound = expand(hash(frame_concat({user_id, s})), width);
  return {xor_bytes(bound, expand(password, width))};
}

ByteString derive_private_key(ByteView m, ByteView public_key, ByteView s, ByteView attribute,
                              std::size_t width) {
  require_non_empty(s, "security parameter");
  require_non_empty(attribute, "attribute");
  require_width(m, width, "master key");
  require_width(public_key, width, "public key");
  ByteString modulus_src = xor_bytes(public_key, expand(frame_concat({s, attribute}), width));
  return mod_reduce(m, modulus_src);
}

ByteString derive_data_key(ByteView m, ByteView s) {
  return hash(frame_concat({m, s, ByteView(data_label())}));
}

ByteString derive_kgc_key(ByteView m) {
  return hash(frame_concat({m, ByteView(kgc_label())}));
}

ByteString encrypt_data(ByteView payload, ByteView s, ByteView m) {
  if (payload.empty()) throw Error(ErrorCode::kEmptyPayload, "payload must be non-empty");
  ByteString inner = sym_encrypt(derive_data_key(m, s), payload);
  return xor_bytes(inner, payload_mask(s, m, payload.size()));
}

ByteString wrap_ciphertext(ByteView encrypted, ByteView owner_private_key, ByteView data_key) {
  return sym_encrypt(data_key, frame_concat({encrypted, owner_private_key}));
}

AccessQuery access_query(const RegistrationDigest& digest, ByteView user_id,
                         ByteView private_key, std::size_t width) {
  require_non_empty(user_id, "user id");
  require_non_empty(private_key, "private key");
  require_width(digest.value, width, "registration digest");
  ByteString binding = expand(hash(frame_concat({user_id, private_key})), width);
  return {mul_mod_width(digest.value, binding)};
}

ByteString derive_session_key(ByteView public_key, ByteView m, ByteView attribute,
                              std::size_t width) {
  require_non_empty(public_key, "public key");
  require_non_empty(m, "master key");
  require_non_empty(attribute, "attribute");
  ByteString attr_digest = hash(frame_concat({m, attribute}));
  ByteString sealed =
      sym_encrypt(derive_kgc_key(m), frame_concat({public_key, ByteView(attr_digest)}));
  return expand(sealed, width);
}

ValidationPair validation_messages(ByteView user_id, ByteView session_key, ByteView s,
                                   ByteView nonce, ByteView private_key, ByteView m,
                                   ByteView attribute, std::size_t width) {
  require_non_empty(user_id, "user id");
  require_non_empty(session_key, "session key");
  require_non_empty(private_key, "private key");
  require_non_empty(attribute, "attribute");
  require_width(nonce, width, "nonce");
  ValidationPair pair;
  pair.nonce = ByteString(nonce.begin(), nonce.end());
  pair.v1 = mod_reduce(expand(hash(frame_concat({user_id, session_key, s})), width), nonce);
  pair.v2 = mod_reduce(expand(hash(frame_concat({user_id, private_key, m})), width),
                       expand(attribute, width));
  return pair;
}

Unwrapped unwrap_ciphertext(ByteView wrapped, ByteView data_key) {
  ByteString framed = sym_decrypt(data_key, wrapped);
  std::vector<ByteString> fields = parse_frames(framed);
  if (fields.size() != 2) {
    throw Error(ErrorCode::kCorruptCiphertext,
                "expected 2 framed fields, found " + std::to_string(fields.size()));
  }
  return {std::move(fields[0]), std::move(fields[1])};
}

ByteString decrypt_data(ByteView encrypted, ByteView s, ByteView m) {
  if (encrypted.empty()) return {};
  ByteString inner = xor_bytes(encrypted, payload_mask(s, m, encrypted.size()));
  return sym_decrypt(derive_data_key(m, s), inner);
}

CipherBundle seal_payload(ByteView payload, ByteView s, ByteView m, ByteView owner_private_key) {
  CipherBundle bundle;
  bundle.encrypted = encrypt_data(payload, s, m);
  bundle.wrapped = wrap_ciphertext(bundle.encrypted, owner_private_key, derive_data_key(m, s));
  bundle.payload_digest = hash(payload);
  return bundle;
}

}  // namespace cloudac::protocol
