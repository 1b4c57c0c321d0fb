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

// The four protocol agents (user, data owner, cloud server, KGC) and the
// driver that walks them through the six phases over a netsim::Network.
//
// Message sequence for one user (channel in brackets):
//
//   setup           USER  -> CLOUD  enroll {U_ID, U_ps}              [private]
//                   KGC   -> USER   provision {s, m}                 [private]
//                   USER  -> CLOUD  registration_request {U_ID, M}   [public]
//                   CLOUD -> USER   registration_result              [public]
//   keygen          KGC   -> USER   key_material {U_P, a, U_pk}      [private]
//                   KGC   -> CLOUD  private_key {U_ID, U_pk}         [private]
//   access_control  USER  -> CLOUD  access_query {U_ID, q}           [public]
//                   CLOUD -> USER   access_result                    [public]
//                   CLOUD -> KGC    access_granted {U_ID}            [private]
//                   USER  -> KGC    session_request {U_ID, U_P, a}   [private]
//                   KGC   -> USER   session_key {U_sk}               [private]
//                   KGC   -> CLOUD  session_key {U_ID, U_sk}         [private]
//   validation      USER  -> CLOUD  validation_params {U_ID, r, a}   [private]
//                   USER  -> CLOUD  validation {U_ID, v1, v2}        [public]
//                   CLOUD -> USER   validation_result                [public]
//   data_sharing    USER  -> CLOUD  data_request {U_ID, record}      [public]
//                   CLOUD -> USER   data {record, D_C, digest, owner_fingerprint}
//                                                                    [public]
//
// The owner is provisioned and keyed by the KGC the same way (without cloud
// enrollment) and uploads every payload in the encryption phase.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cloudac/network.hpp"
#include "cloudac/primitives.hpp"
#include "cloudac/protocol.hpp"
#include "cloudac/rng.hpp"
#include "cloudac/transcript.hpp"

namespace cloudac::entities {

enum class AgentPhase {
  kInit,
  kRegistered,
  kKeyed,
  kEncrypted,
  kAccessGranted,
  kVerified,
  kComplete,
  kRejected,
};

std::string_view agent_phase_name(AgentPhase phase);

/// Role plus lifecycle phase. Transitions follow the protocol order for the
/// role; anything else throws kOutOfOrder. REJECTED and COMPLETE are
/// terminal.
class AgentState {
 public:
  explicit AgentState(Role role) : role_(role) {}

  Role role() const noexcept { return role_; }
  AgentPhase phase() const noexcept { return phase_; }

  static bool allowed(Role role, AgentPhase from, AgentPhase to);
  void advance(AgentPhase next);
  void require(AgentPhase expected, std::string_view operation) const;

 private:
  Role role_;
  AgentPhase phase_ = AgentPhase::kInit;
};

struct StoredPrincipal {
  ByteString user_id;
  ByteString password;
  ByteString private_key;  // U_pk*
  ByteString session_key;  // U_sk*
};

struct StoredBundle {
  ByteString wrapped;  // D^C*
  ByteString payload_digest;
};

/// Byte counts per stored category.
struct StoreAccounting {
  std::size_t credentials = 0;
  std::size_t private_keys = 0;
  std::size_t session_keys = 0;
  std::size_t owner_key = 0;
  std::size_t ciphertexts = 0;
  std::size_t digests = 0;

  std::size_t total() const {
    return credentials + private_keys + session_keys + owner_key + ciphertexts + digests;
  }
};

/// The cloud server's persistent state. Every starred value is the exact
/// byte string received when it was stored.
class CloudStore {
 public:
  /// Throws kDuplicateIdentity if U_ID is already enrolled.
  void enroll(ByteView user_id, ByteView password);
  void remove(ByteView user_id);
  bool contains(ByteView user_id) const;
  /// Throws kUnknownPrincipal if U_ID is not enrolled.
  const StoredPrincipal& principal(ByteView user_id) const;
  StoredPrincipal& mutable_principal(ByteView user_id);

  void set_owner_key(ByteView owner_private_key);
  const ByteString& owner_key() const noexcept { return owner_key_; }

  std::size_t add_bundle(StoredBundle bundle);
  const std::vector<StoredBundle>& bundles() const noexcept { return bundles_; }
  std::vector<StoredBundle>& mutable_bundles() noexcept { return bundles_; }

  std::size_t principal_count() const noexcept { return principals_.size(); }
  StoreAccounting accounting() const;

 private:
  std::map<ByteString, StoredPrincipal> principals_;
  ByteString owner_key_;
  std::vector<StoredBundle> bundles_;
};

class Kgc {
 public:
  Kgc() : state_(Role::kKgc) {}

  void generate_params(Rng& rng, std::size_t width);
  const protocol::SystemParams& params() const noexcept { return params_; }

  /// Samples U^P (L bytes) and a (kAttributeBytes) and derives U_pk.
  protocol::KeyMaterial issue_key_material(Rng& rng) const;

  void record_grant(ByteView user_id) { grants_.insert(ByteString(user_id.begin(), user_id.end())); }
  bool has_grant(ByteView user_id) const;
  /// Consumes the grant for U_ID; throws kOutOfOrder without one.
  ByteString issue_session_key(ByteView user_id, ByteView public_key, ByteView attribute);

  /// Bytes of persistent KGC state (s and m).
  std::size_t stored_bytes() const noexcept { return params_.s.size() + params_.m.size(); }

  static constexpr std::size_t kAttributeBytes = 4;

 private:
  AgentState state_;
  protocol::SystemParams params_;
  std::set<ByteString> grants_;
};

class CloudServer {
 public:
  CloudServer() : state_(Role::kCloud) {}

  void provision(const protocol::SystemParams& params) { params_ = params; }
  const protocol::SystemParams& params() const noexcept { return params_; }

  CloudStore& store() noexcept { return store_; }
  const CloudStore& store() const noexcept { return store_; }

  /// M recomputed from U_ID* and U_ps*.
  protocol::RegistrationDigest expected_digest(ByteView user_id) const;
  /// q~ recomputed from stored values; throws kUnknownPrincipal when U_pk* is
  /// missing.
  protocol::AccessQuery expected_query(ByteView user_id) const;

  void mark_verified(ByteView user_id, bool verified);
  bool is_verified(ByteView user_id) const;

 private:
  AgentState state_;
  protocol::SystemParams params_;
  CloudStore store_;
  std::set<ByteString> verified_;
};

/// A user principal. Adversarial principals carry their class; honest users
/// have kNone.
class UserAgent {
 public:
  UserAgent(std::size_t index, protocol::Credentials credentials, AdversaryClass adversary);

  std::size_t index() const noexcept { return index_; }
  AdversaryClass adversary() const noexcept { return adversary_; }
  const protocol::Credentials& credentials() const noexcept { return credentials_; }
  AgentState& state() noexcept { return state_; }
  const AgentState& state() const noexcept { return state_; }

  protocol::SystemParams params;
  protocol::KeyMaterial keys;
  protocol::RegistrationDigest digest;  // M~
  ByteString recovered;                 // D* after data sharing
  bool access_granted = false;

 private:
  std::size_t index_;
  protocol::Credentials credentials_;
  AdversaryClass adversary_;
  AgentState state_;
};

class OwnerAgent {
 public:
  OwnerAgent() : state_(Role::kOwner) {}

  AgentState& state() noexcept { return state_; }
  const AgentState& state() const noexcept { return state_; }

  protocol::SystemParams params;
  protocol::KeyMaterial keys;

 private:
  AgentState state_;
};

/// Test hooks that perturb an otherwise honest run.
struct FaultPlan {
  /// Principals whose U_sk* is replaced with fresh random bytes right after
  /// the access grant (a desynchronised session key).
  std::vector<std::size_t> stale_session_key;
};

/// One protocol deployment: the agents, the network and the run's Rng.
/// The phase methods mirror the protocol; call them in order.
class ProtocolRun {
 public:
  ProtocolRun(std::size_t width, Rng& rng, Transcript& transcript);

  std::size_t width() const noexcept { return width_; }
  netsim::Network& network() noexcept { return network_; }
  Kgc& kgc() noexcept { return kgc_; }
  CloudServer& cloud() noexcept { return cloud_; }
  OwnerAgent& owner() noexcept { return owner_; }
  Transcript& transcript() noexcept { return *transcript_; }

  /// KGC generates (s, m) and provisions the cloud server.
  void system_setup();
  /// KGC provisions the owner and issues O_pk (owner is never enrolled at
  /// the cloud).
  void owner_setup();
  void owner_keygen();

  /// Returns false (and records an outcome) on rejection.
  bool setup_phase(UserAgent& user);
  void keygen_phase(UserAgent& user);
  /// Owner seals and uploads each payload. Empty payloads throw kEmptyPayload.
  void encryption_phase(std::span<const ByteString> payloads);
  bool access_control_phase(UserAgent& user);
  bool validation_phase(UserAgent& user);
  /// Fetches bundle `record` and decrypts it. Returns true when D* passes
  /// the integrity checks.
  bool data_sharing_phase(UserAgent& user, std::size_t record);

  /// Replay attack by an eavesdropper posing as the user named in its
  /// credentials: sends a bogus query for that identity, lets the
  /// public-channel adversary substitute the observed genuine one, then
  /// attempts validation without the session key.
  void replay_attack(UserAgent& replayer);

  void apply_faults(const FaultPlan& faults) { faults_ = faults; }

 private:
  void reject(UserAgent& user, Phase phase, std::string reason,
              std::vector<Mismatch> mismatches = {});
  void finish(UserAgent& user, OutcomeKind kind, std::string reason,
              std::vector<Mismatch> mismatches = {});
  bool serve_access(UserAgent& user, const Message& query);
  bool serve_validation(UserAgent& user, const Message& params, const Message& validation);
  Message make(Phase phase, Role from, Role to, Channel channel, std::string kind) const;
  bool has_fault(const std::vector<std::size_t>& list, std::size_t principal) const;

  std::size_t width_;
  Rng* rng_;
  Transcript* transcript_;
  netsim::Network network_;
  Kgc kgc_;
  CloudServer cloud_;
  OwnerAgent owner_;
  FaultPlan faults_;
};

/// Built-in payload used when a scenario names no dataset: the first row of
/// the processed Cleveland file, serialized as a record payload.
ByteString sample_payload();

/// U_ID for principal `index`: "user-" followed by six decimal digits.
ByteString principal_id(std::size_t index);
inline constexpr std::size_t kPasswordBytes = 16;

struct RunResult {
  Transcript transcript;
  protocol::SystemParams params;
  CloudStore store;
  std::size_t kgc_bytes = 0;
};

/// Executes the scenario end to end. Genuine users run first, then each
/// adversary entry in order. Principal i requests payload i mod |payloads|.
/// With zero principals only the KGC system setup runs.
RunResult run_protocol(const netsim::ScenarioConfig& scenario,
                       std::span<const ByteString> payloads, const FaultPlan& faults = {});

}  // namespace cloudac::entities
