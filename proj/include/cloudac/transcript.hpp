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

// Messages, outcomes and the ordered run log shared by the network
// simulator and the protocol agents.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cloudac/primitives.hpp"

namespace cloudac {

enum class Role { kUser, kOwner, kCloud, kKgc, kAdversary };
enum class Channel { kPublic, kPrivate };

enum class Phase { kSetup, kKeygen, kEncryption, kAccessControl, kValidation, kDataSharing };

enum class AdversaryClass {
  kNone,
  kWrongPassword,
  kForgedPrivateKey,
  kTamperValidation,
  kTamperCiphertext,
  kReplayQuery,
};

inline constexpr AdversaryClass kAllAdversaryClasses[] = {
    AdversaryClass::kNone,           AdversaryClass::kWrongPassword,
    AdversaryClass::kForgedPrivateKey, AdversaryClass::kTamperValidation,
    AdversaryClass::kTamperCiphertext, AdversaryClass::kReplayQuery,
};

std::string_view role_name(Role role);
std::string_view channel_name(Channel channel);
std::string_view phase_name(Phase phase);
std::string_view adversary_name(AdversaryClass cls);
/// Inverse of adversary_name; throws kConfiguration for unknown names.
AdversaryClass parse_adversary(std::string_view name);

/// A protocol message. Field order is preserved for serialization.
struct Message {
  std::uint64_t step = 0;
  Phase phase = Phase::kSetup;
  Role from = Role::kUser;
  Role to = Role::kCloud;
  Channel channel = Channel::kPrivate;
  std::string kind;
  std::vector<std::pair<std::string, ByteString>> fields;

  /// Throws kInvalidArgument if the field is absent.
  const ByteString& field(std::string_view name) const;
  bool has_field(std::string_view name) const;
  ByteString* mutable_field(std::string_view name);
  Message& with(std::string name, ByteString value);
};

enum class OutcomeKind { kAccepted, kRejected, kIntegrityFailure };

std::string_view outcome_name(OutcomeKind kind);

struct Mismatch {
  std::string name;
  ByteString observed;  // value presented by the principal
  ByteString expected;  // value recomputed by the verifier

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// Final result for one principal of a run.
struct PrincipalOutcome {
  std::size_t principal = 0;
  AdversaryClass adversary = AdversaryClass::kNone;
  ByteString user_id;
  OutcomeKind kind = OutcomeKind::kAccepted;
  Phase phase = Phase::kDataSharing;  // phase where the run ended
  std::string reason;
  bool access_granted = false;  // cloud accepted the access query
  std::vector<Mismatch> mismatches;
  ByteString recovered;  // D* on success

  friend bool operator==(const PrincipalOutcome&, const PrincipalOutcome&) = default;
};

/// Ordered log of one run. Steps are assigned on append and strictly
/// increase.
class Transcript {
 public:
  const Message& append(Message message);

  const std::vector<Message>& messages() const noexcept { return messages_; }
  const std::vector<PrincipalOutcome>& outcomes() const noexcept { return outcomes_; }
  void add_outcome(PrincipalOutcome outcome) { outcomes_.push_back(std::move(outcome)); }
  /// Stable-sorts outcomes by principal index.
  void sort_outcomes();

  /// Locates a logged message by step.
  const Message* find(std::uint64_t step) const;

  /// One JSON object per line:
  /// {"step":n,"phase":"...","from":"...","to":"...","channel":"PUBLIC|PRIVATE",
  ///  "kind":"...","fields":{name:hex}}
  void write_jsonl(std::ostream& out) const;
  std::string to_jsonl() const;
  /// hex(SHA-256(to_jsonl())).
  std::string digest() const;

 private:
  std::uint64_t next_step_ = 1;
  std::vector<Message> messages_;
  std::vector<PrincipalOutcome> outcomes_;
};

std::string message_to_json(const Message& message);

}  // namespace cloudac
