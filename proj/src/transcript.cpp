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

#include "cloudac/transcript.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "cloudac/error.hpp"

namespace cloudac {

std::string_view role_name(Role role) {
  switch (role) {
    case Role::kUser: return "USER";
    case Role::kOwner: return "OWNER";
    case Role::kCloud: return "CLOUD";
    case Role::kKgc: return "KGC";
    case Role::kAdversary: return "ADVERSARY";
  }
  return "?";
}

std::string_view channel_name(Channel channel) {
  return channel == Channel::kPublic ? "PUBLIC" : "PRIVATE";
}

std::string_view phase_name(Phase phase) {
  switch (phase) {
    case Phase::kSetup: return "setup";
    case Phase::kKeygen: return "keygen";
    case Phase::kEncryption: return "encryption";
    case Phase::kAccessControl: return "access_control";
    case Phase::kValidation: return "validation";
    case Phase::kDataSharing: return "data_sharing";
  }
  return "?";
}

std::string_view adversary_name(AdversaryClass cls) {
  switch (cls) {
    case AdversaryClass::kNone: return "NONE";
    case AdversaryClass::kWrongPassword: return "WRONG_PASSWORD";
    case AdversaryClass::kForgedPrivateKey: return "FORGED_PRIVATE_KEY";
    case AdversaryClass::kTamperValidation: return "TAMPER_VALIDATION";
    case AdversaryClass::kTamperCiphertext: return "TAMPER_CIPHERTEXT";
    case AdversaryClass::kReplayQuery: return "REPLAY_QUERY";
  }
  return "?";
}

AdversaryClass parse_adversary(std::string_view name) {
  for (AdversaryClass cls : kAllAdversaryClasses) {
    if (adversary_name(cls) == name) return cls;
  }
  throw Error(ErrorCode::kConfiguration, "unknown adversary class '" + std::string(name) + "'");
}

std::string_view outcome_name(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kAccepted: return "ACCEPTED";
    case OutcomeKind::kRejected: return "REJECTED";
    case OutcomeKind::kIntegrityFailure: return "INTEGRITY_FAILURE";
  }
  return "?";
}

const ByteString& Message::field(std::string_view name) const {
  for (const auto& [key, value] : fields) {
    if (key == name) return value;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "message '" + kind + "' has no field '" + std::string(name) + "'");
}

bool Message::has_field(std::string_view name) const {
  for (const auto& entry : fields) {
    if (entry.first == name) return true;
  }
  return false;
}

ByteString* Message::mutable_field(std::string_view name) {
  for (auto& [key, value] : fields) {
    if (key == name) return &value;
  }
  return nullptr;
}

Message& Message::with(std::string name, ByteString value) {
  fields.emplace_back(std::move(name), std::move(value));
  return *this;
}

const Message& Transcript::append(Message message) {
  message.step = next_step_++;
  messages_.push_back(std::move(message));
  return messages_.back();
}

const Message* Transcript::find(std::uint64_t step) const {
  // Steps are dense and start at 1.
  if (step == 0 || step > messages_.size()) return nullptr;
  return &messages_[step - 1];
}

std::string message_to_json(const Message& message) {
  nlohmann::ordered_json fields = nlohmann::ordered_json::object();
  for (const auto& [name, value] : message.fields) fields[name] = to_hex(value);
  nlohmann::ordered_json j;
  j["step"] = message.step;
  j["phase"] = phase_name(message.phase);
  j["from"] = role_name(message.from);
  j["to"] = role_name(message.to);
  j["channel"] = channel_name(message.channel);
  j["kind"] = message.kind;
  j["fields"] = std::move(fields);
  return j.dump();
}

void Transcript::write_jsonl(std::ostream& out) const {
  for (const auto& m : messages_) out << message_to_json(m) << '\n';
}

std::string Transcript::to_jsonl() const {
  std::ostringstream out;
  write_jsonl(out);
  return out.str();
}

std::string Transcript::digest() const {
  std::string text = to_jsonl();
  return to_hex(hash(ByteView(reinterpret_cast<const std::uint8_t*>(text.data()), text.size())));
}

void Transcript::sort_outcomes() {
  std::stable_sort(outcomes_.begin(), outcomes_.end(),
                   [](const PrincipalOutcome& a, const PrincipalOutcome& b) {
                     return a.principal < b.principal;
                   });
}

}  // namespace cloudac
