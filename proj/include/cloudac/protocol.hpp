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

// Stateless protocol computations. Every paired check (registration digest,
// access query, validation pair) runs the same function on both sides, so an
// honest exchange matches byte for byte.
//
// Notation used in comments: `||` is frame_concat, `^` is xor_bytes,
// `mod` is mod_reduce, `*` is mul_mod_width and L is the configured width
// in bytes (key_length_bits / 8).

#pragma once

#include <cstddef>
#include <cstdint>

#include "cloudac/primitives.hpp"
#include "cloudac/rng.hpp"

namespace cloudac::protocol {

/// Width in bytes for a key length in bits; only 64, 128, 256 and 512 are
/// accepted.
std::size_t width_for_key_length(int key_length_bits);
bool is_supported_key_length(int key_length_bits);

/// KGC-held system secrets. s != m.
struct SystemParams {
  ByteString s;
  ByteString m;
  std::size_t width = 0;

  static SystemParams generate(Rng& rng, std::size_t width);
};

struct Credentials {
  ByteString user_id;
  ByteString password;
};

/// Keys issued by the KGC to one principal. `attribute` is a bit-vector.
struct KeyMaterial {
  ByteString public_key;
  ByteString attribute;
  ByteString private_key;
  ByteString session_key;  // empty until an access grant
};

/// D^E, the wrapped D^C, and hash(D) for end-to-end tamper detection.
struct CipherBundle {
  ByteString encrypted;
  ByteString wrapped;
  ByteString payload_digest;
};

struct AccessQuery {
  ByteString q;
  friend bool operator==(const AccessQuery&, const AccessQuery&) = default;
};

struct ValidationPair {
  ByteString v1;
  ByteString v2;
  ByteString nonce;
  /// Compares v1 and v2 only; the nonce is an input, not part of the check.
  bool matches(const ValidationPair& other) const { return v1 == other.v1 && v2 == other.v2; }
};

struct RegistrationDigest {
  ByteString value;
  friend bool operator==(const RegistrationDigest&, const RegistrationDigest&) = default;
};

/// M = expand(hash(U_ID || s), L) ^ expand(U_ps, L)
RegistrationDigest registration_digest(ByteView user_id, ByteView password, ByteView s,
                                       std::size_t width);

/// U_pk = m mod (U^P ^ expand(s || a, L))
ByteString derive_private_key(ByteView m, ByteView public_key, ByteView s, ByteView attribute,
                              std::size_t width);

/// K_D = hash(m || s || "DATA"). Keys the payload cipher.
ByteString derive_data_key(ByteView m, ByteView s);

/// K_K = hash(m || "KGC"). Keys the session-key derivation.
ByteString derive_kgc_key(ByteView m);

/// D^E = sym_encrypt(K_D, D) ^ expand(hash(s || m), |D|). Length preserving.
/// Empty payloads throw kEmptyPayload.
ByteString encrypt_data(ByteView payload, ByteView s, ByteView m);

/// D^C = sym_encrypt(K_D, D^E || O_pk)
ByteString wrap_ciphertext(ByteView encrypted, ByteView owner_private_key, ByteView data_key);

/// q = M * expand(hash(U_ID || U_pk), L)
AccessQuery access_query(const RegistrationDigest& digest, ByteView user_id,
                         ByteView private_key, std::size_t width);

/// U_sk = expand(sym_encrypt(K_K, U^P || hash(m || a)), L)
ByteString derive_session_key(ByteView public_key, ByteView m, ByteView attribute,
                              std::size_t width);

/// v1 = expand(hash(U_ID || U_sk || s), L) mod r
/// v2 = expand(hash(U_ID || U_pk || m), L) mod expand(a, L)
ValidationPair validation_messages(ByteView user_id, ByteView session_key, ByteView s,
                                   ByteView nonce, ByteView private_key, ByteView m,
                                   ByteView attribute, std::size_t width);

struct Unwrapped {
  ByteString encrypted;
  ByteString owner_private_key;
};

/// Inverse of wrap_ciphertext. Anything other than exactly two frames after
/// decryption throws kCorruptCiphertext.
Unwrapped unwrap_ciphertext(ByteView wrapped, ByteView data_key);

/// D* = sym_decrypt(K_D, D^E* ^ expand(hash(s || m), |D^E*|)). Integrity is
/// the caller's job (compare hash(D*) against the bundle digest).
ByteString decrypt_data(ByteView encrypted, ByteView s, ByteView m);

/// Full owner-side encryption: D^E, D^C and hash(D).
CipherBundle seal_payload(ByteView payload, ByteView s, ByteView m, ByteView owner_private_key);

}  // namespace cloudac::protocol
