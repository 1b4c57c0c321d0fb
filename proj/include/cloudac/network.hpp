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

// Deterministic in-memory network. Two channel kinds:
//   PUBLIC  - every delivery is visible to the active adversary, which may
//             substitute a modified copy;
//   PRIVATE - ideal: never observed, never modified.
// Delivery is FIFO per channel. Every send is logged to the transcript
// before any adversary acts on it, and each adversarial action adds an
// ADVERSARY entry that references the original by step.

#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cloudac/primitives.hpp"
#include "cloudac/rng.hpp"
#include "cloudac/transcript.hpp"

namespace cloudac::netsim {

struct AdversaryConfig {
  AdversaryClass cls = AdversaryClass::kNone;
  std::size_t count = 0;
};

/// One simulated deployment. `dataset` names the payload source
/// ("sample", "cleveland", "hungarian", "swiss", or "<variant>:<path>").
struct ScenarioConfig {
  std::size_t n_genuine = 1;
  std::vector<AdversaryConfig> adversaries;
  std::string dataset = "sample";
  int key_length_bits = 256;
  std::uint64_t seed = 0;

  std::size_t width() const;
  std::size_t total_principals() const;
  /// Adversary class of principal `index`: genuine users first, then each
  /// adversary entry in order.
  AdversaryClass class_of(std::size_t index) const;
  /// Throws kConfiguration on an unsupported key length, a NONE entry in the
  /// adversary list, or replay adversaries without a genuine user to observe.
  void validate() const;
};

/// Result of an adversary acting on one in-flight message.
struct Interception {
  Message delivered;
  bool modified = false;
  std::string action;                 // "tamper" or "replay"
  std::string target_field;           // tampered field
  std::size_t target_index = 0;       // tampered byte offset within the field
  std::uint64_t replayed_step = 0;    // source step of a replayed message
};

/// Message-level adversary behaviour, applied to PUBLIC deliveries only.
///   TAMPER_VALIDATION  flips (xor 0xff) one rng-chosen byte of v1 || v2 in a
///                      "validation" message;
///   TAMPER_CIPHERTEXT  flips one rng-chosen byte of D_C in a "data" message;
///   REPLAY_QUERY       replaces an "access_query" with the earliest observed
///                      query for the same U_ID;
///   everything else passes through unchanged. WRONG_PASSWORD and
///   FORGED_PRIVATE_KEY act on the principal's credentials instead (see
///   forge_credential).
Interception apply_adversary(AdversaryClass cls, const Message& message, Rng& rng,
                             std::span<const Message> observed);

/// Principal-level forgery: WRONG_PASSWORD returns the password with one
/// rng-chosen bit flipped; FORGED_PRIVATE_KEY returns random bytes of the
/// key's width. Other classes return the input unchanged.
ByteString forge_credential(AdversaryClass cls, ByteView genuine, Rng& rng);

class Network {
 public:
  explicit Network(Transcript& transcript) : transcript_(&transcript) {}

  /// Registers a live endpoint. Sends to unattached roles throw kRouting.
  void attach(Role role) { live_.insert(role); }

  /// The adversary acting on PUBLIC deliveries until changed. The rng is
  /// borrowed and must outlive its use here.
  void set_adversary(AdversaryClass cls, Rng* rng) {
    adversary_ = cls;
    rng_ = rng;
  }
  AdversaryClass adversary() const noexcept { return adversary_; }

  /// Logs the message (assigning its step) and queues it on its channel.
  std::uint64_t send(Message message);

  /// Pops the oldest queued message on `channel`. PUBLIC messages are
  /// recorded as observed and handed to the active adversary; a modified
  /// copy is logged as an ADVERSARY entry and returned in its place.
  Message deliver(Channel channel);

  /// send() followed by deliver() on the same channel.
  Message transmit(Message message);

  /// Records a principal-level adversary action (e.g. a forged credential).
  void annotate(Phase phase, Role to, std::string kind,
                std::vector<std::pair<std::string, ByteString>> fields);

  std::size_t pending(Channel channel) const;
  const std::vector<Message>& observed() const noexcept { return observed_; }

 private:
  Transcript* transcript_;
  std::set<Role> live_;
  std::deque<Message> public_queue_;
  std::deque<Message> private_queue_;
  std::vector<Message> observed_;
  AdversaryClass adversary_ = AdversaryClass::kNone;
  Rng* rng_ = nullptr;
};

}  // namespace cloudac::netsim
