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

#include "cloudac/network.hpp"

#include "cloudac/error.hpp"
#include "cloudac/protocol.hpp"

namespace cloudac::netsim {

std::size_t ScenarioConfig::width() const {
  return protocol::width_for_key_length(key_length_bits);
}

std::size_t ScenarioConfig::total_principals() const {
  std::size_t total = n_genuine;
  for (const auto& a : adversaries) total += a.count;
  return total;
}

AdversaryClass ScenarioConfig::class_of(std::size_t index) const {
  if (index < n_genuine) return AdversaryClass::kNone;
  index -= n_genuine;
  for (const auto& a : adversaries) {
    if (index < a.count) return a.cls;
    index -= a.count;
  }
  throw Error(ErrorCode::kInvalidArgument, "principal index out of range");
}

void ScenarioConfig::validate() const {
  if (!protocol::is_supported_key_length(key_length_bits)) {
    throw Error(ErrorCode::kConfiguration,
                "key_length_bits must be one of 64, 128, 256, 512 (got " +
                    std::to_string(key_length_bits) + ")");
  }
  bool replay = false;
  for (const auto& a : adversaries) {
    if (a.cls == AdversaryClass::kNone) {
      throw Error(ErrorCode::kConfiguration,
                  "adversary entries must name an adversarial class; use n_genuine for honest users");
    }
    replay = replay || (a.cls == AdversaryClass::kReplayQuery && a.count > 0);
  }
  if (replay && n_genuine == 0) {
    throw Error(ErrorCode::kConfiguration,
                "REPLAY_QUERY needs at least one genuine user whose query it can observe");
  }
}

namespace {

Interception unchanged(const Message& message) {
  Interception out;
  out.delivered = message;
  return out;
}

Interception flip_one_byte(const Message& message, Rng& rng,
                           std::initializer_list<std::string_view> targets) {
  std::size_t total = 0;
  for (auto name : targets) {
    if (message.has_field(name)) total += message.field(name).size();
  }
  if (total == 0) return unchanged(message);
  std::size_t pick = rng.below(total);
  Interception out = unchanged(message);
  for (auto name : targets) {
    ByteString* value = out.delivered.mutable_field(name);
    if (value == nullptr) continue;
    if (pick < value->size()) {
      (*value)[pick] ^= 0xff;
      out.modified = true;
      out.action = "tamper";
      out.target_field = std::string(name);
      out.target_index = pick;
      return out;
    }
    pick -= value->size();
  }
  return out;
}

}  // namespace

Interception apply_adversary(AdversaryClass cls, const Message& message, Rng& rng,
                             std::span<const Message> observed) {
  if (message.channel != Channel::kPublic) return unchanged(message);
  switch (cls) {
    case AdversaryClass::kTamperValidation:
      if (message.kind == "validation") return flip_one_byte(message, rng, {"v1", "v2"});
      break;
    case AdversaryClass::kTamperCiphertext:
      if (message.kind == "data") return flip_one_byte(message, rng, {"D_C"});
      break;
    case AdversaryClass::kReplayQuery:
      if (message.kind == "access_query" && message.has_field("U_ID")) {
        for (const auto& seen : observed) {
          if (seen.kind == "access_query" && seen.step < message.step &&
              seen.from == Role::kUser && seen.has_field("U_ID") &&
              seen.field("U_ID") == message.field("U_ID")) {
            Interception out = unchanged(message);
            out.delivered.fields = seen.fields;
            out.modified = true;
            out.action = "replay";
            out.replayed_step = seen.step;
            return out;
          }
        }
      }
      break;
    case AdversaryClass::kNone:
    case AdversaryClass::kWrongPassword:
    case AdversaryClass::kForgedPrivateKey:
      break;
  }
  return unchanged(message);
}

ByteString forge_credential(AdversaryClass cls, ByteView genuine, Rng& rng) {
  ByteString out(genuine.begin(), genuine.end());
  if (out.empty()) return out;
  switch (cls) {
    case AdversaryClass::kWrongPassword: {
      std::uint64_t bit = rng.below(out.size() * 8);
      out[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
      break;
    }
    case AdversaryClass::kForgedPrivateKey: {
      // Redraw until it differs; a collision would make the forgery honest.
      ByteString forged;
      do {
        forged = rng.bytes(out.size());
      } while (forged == out);
      out = std::move(forged);
      break;
    }
    default:
      break;
  }
  return out;
}

std::uint64_t Network::send(Message message) {
  if (!live_.contains(message.to)) {
    throw Error(ErrorCode::kRouting, "no live endpoint for role " +
                                         std::string(role_name(message.to)) + " (message '" +
                                         message.kind + "')");
  }
  const Message& logged = transcript_->append(std::move(message));
  std::uint64_t step = logged.step;
  (logged.channel == Channel::kPublic ? public_queue_ : private_queue_).push_back(logged);
  return step;
}

Message Network::deliver(Channel channel) {
  auto& queue = channel == Channel::kPublic ? public_queue_ : private_queue_;
  if (queue.empty()) {
    throw Error(ErrorCode::kRouting,
                "deliver: no queued message on " + std::string(channel_name(channel)) + " channel");
  }
  Message message = std::move(queue.front());
  queue.pop_front();
  if (channel == Channel::kPrivate) return message;

  Message delivered = message;
  if (adversary_ != AdversaryClass::kNone && rng_ != nullptr) {
    Interception hit = apply_adversary(adversary_, message, *rng_, observed_);
    if (hit.modified) {
      Message note;
      note.phase = message.phase;
      note.from = Role::kAdversary;
      note.to = message.to;
      note.channel = Channel::kPublic;
      note.kind = hit.action;
      note.with("ref_step", encode_u64(message.step));
      if (hit.action == "tamper") {
        note.with("field", to_bytes(hit.target_field));
        note.with("index", encode_u32(static_cast<std::uint32_t>(hit.target_index)));
      } else {
        note.with("source_step", encode_u64(hit.replayed_step));
      }
      for (const auto& f : hit.delivered.fields) note.fields.push_back(f);
      transcript_->append(std::move(note));
      delivered = std::move(hit.delivered);
    }
  }
  observed_.push_back(std::move(message));
  return delivered;
}

Message Network::transmit(Message message) {
  Channel channel = message.channel;
  send(std::move(message));
  return deliver(channel);
}

void Network::annotate(Phase phase, Role to, std::string kind,
                       std::vector<std::pair<std::string, ByteString>> fields) {
  Message note;
  note.phase = phase;
  note.from = Role::kAdversary;
  note.to = to;
  note.channel = Channel::kPublic;
  note.kind = std::move(kind);
  note.fields = std::move(fields);
  transcript_->append(std::move(note));
}

std::size_t Network::pending(Channel channel) const {
  return channel == Channel::kPublic ? public_queue_.size() : private_queue_.size();
}

}  // namespace cloudac::netsim
