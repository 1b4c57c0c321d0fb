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

#include "cloudac/entities.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <utility>

#include "cloudac/dataset.hpp"
#include "cloudac/error.hpp"

namespace cloudac::entities {

namespace {

const ByteString& status_bytes(bool accepted) {
  static const ByteString yes = to_bytes("accepted");
  static const ByteString no = to_bytes("rejected");
  return accepted ? yes : no;
}

std::uint32_t decode_u32(ByteView bytes) {
  if (bytes.size() != 4) throw Error(ErrorCode::kInvalidArgument, "expected a 4-byte index");
  return (std::uint32_t{bytes[0]} << 24) | (std::uint32_t{bytes[1]} << 16) |
         (std::uint32_t{bytes[2]} << 8) | std::uint32_t{bytes[3]};
}

ByteString copy(ByteView v) { return ByteString(v.begin(), v.end()); }

}  // namespace

std::string_view agent_phase_name(AgentPhase phase) {
  switch (phase) {
    case AgentPhase::kInit: return "INIT";
    case AgentPhase::kRegistered: return "REGISTERED";
    case AgentPhase::kKeyed: return "KEYED";
    case AgentPhase::kEncrypted: return "ENCRYPTED";
    case AgentPhase::kAccessGranted: return "ACCESS_GRANTED";
    case AgentPhase::kVerified: return "VERIFIED";
    case AgentPhase::kComplete: return "COMPLETE";
    case AgentPhase::kRejected: return "REJECTED";
  }
  return "?";
}

bool AgentState::allowed(Role role, AgentPhase from, AgentPhase to) {
  using P = AgentPhase;
  if (from == P::kRejected || from == P::kComplete) return false;
  switch (role) {
    case Role::kUser:
      if (to == P::kRejected) return true;
      return (from == P::kInit && to == P::kRegistered) ||
             (from == P::kRegistered && to == P::kKeyed) ||
             (from == P::kKeyed && to == P::kAccessGranted) ||
             (from == P::kAccessGranted && to == P::kVerified) ||
             (from == P::kVerified && to == P::kComplete);
    case Role::kAdversary:
      // A replayer skips registration and keygen; it only ever holds a
      // replayed grant.
      if (to == P::kRejected) return true;
      return from == P::kInit && to == P::kAccessGranted;
    case Role::kOwner:
      return (from == P::kInit && to == P::kRegistered) ||
             (from == P::kRegistered && to == P::kKeyed) ||
             (from == P::kKeyed && to == P::kEncrypted) ||
             (from == P::kEncrypted && to == P::kEncrypted);
    case Role::kCloud:
    case Role::kKgc:
      return false;
  }
  return false;
}

void AgentState::advance(AgentPhase next) {
  if (!allowed(role_, phase_, next)) {
    throw Error(ErrorCode::kOutOfOrder, std::string(role_name(role_)) + ": cannot move from " +
                                            std::string(agent_phase_name(phase_)) + " to " +
                                            std::string(agent_phase_name(next)));
  }
  phase_ = next;
}

void AgentState::require(AgentPhase expected, std::string_view operation) const {
  if (phase_ != expected) {
    throw Error(ErrorCode::kOutOfOrder,
                std::string(operation) + " requires " + std::string(role_name(role_)) + " in " +
                    std::string(agent_phase_name(expected)) + ", found " +
                    std::string(agent_phase_name(phase_)));
  }
}

void CloudStore::enroll(ByteView user_id, ByteView password) {
  ByteString key = copy(user_id);
  if (principals_.contains(key)) {
    throw Error(ErrorCode::kDuplicateIdentity, "U_ID " + to_hex(user_id) + " is already enrolled");
  }
  StoredPrincipal entry;
  entry.user_id = key;
  entry.password = copy(password);
  principals_.emplace(std::move(key), std::move(entry));
}

void CloudStore::remove(ByteView user_id) { principals_.erase(copy(user_id)); }

bool CloudStore::contains(ByteView user_id) const { return principals_.contains(copy(user_id)); }

const StoredPrincipal& CloudStore::principal(ByteView user_id) const {
  auto it = principals_.find(copy(user_id));
  if (it == principals_.end()) {
    throw Error(ErrorCode::kUnknownPrincipal, "U_ID " + to_hex(user_id) + " is not enrolled");
  }
  return it->second;
}

StoredPrincipal& CloudStore::mutable_principal(ByteView user_id) {
  return const_cast<StoredPrincipal&>(std::as_const(*this).principal(user_id));
}

void CloudStore::set_owner_key(ByteView owner_private_key) { owner_key_ = copy(owner_private_key); }

std::size_t CloudStore::add_bundle(StoredBundle bundle) {
  bundles_.push_back(std::move(bundle));
  return bundles_.size() - 1;
}

StoreAccounting CloudStore::accounting() const {
  StoreAccounting acc;
  for (const auto& [id, p] : principals_) {
    acc.credentials += p.user_id.size() + p.password.size();
    acc.private_keys += p.private_key.size();
    acc.session_keys += p.session_key.size();
  }
  acc.owner_key = owner_key_.size();
  for (const auto& b : bundles_) {
    acc.ciphertexts += b.wrapped.size();
    acc.digests += b.payload_digest.size();
  }
  return acc;
}

void Kgc::generate_params(Rng& rng, std::size_t width) {
  params_ = protocol::SystemParams::generate(rng, width);
}

protocol::KeyMaterial Kgc::issue_key_material(Rng& rng) const {
  protocol::KeyMaterial km;
  km.public_key = random_bytes(rng, params_.width);
  km.attribute = random_bytes(rng, kAttributeBytes);
  km.private_key =
      protocol::derive_private_key(params_.m, km.public_key, params_.s, km.attribute, params_.width);
  return km;
}

bool Kgc::has_grant(ByteView user_id) const { return grants_.contains(copy(user_id)); }

ByteString Kgc::issue_session_key(ByteView user_id, ByteView public_key, ByteView attribute) {
  auto it = grants_.find(copy(user_id));
  if (it == grants_.end()) {
    throw Error(ErrorCode::kOutOfOrder,
                "session key requested for U_ID " + to_hex(user_id) + " without an access grant");
  }
  grants_.erase(it);
  return protocol::derive_session_key(public_key, params_.m, attribute, params_.width);
}

protocol::RegistrationDigest CloudServer::expected_digest(ByteView user_id) const {
  const StoredPrincipal& p = store_.principal(user_id);
  return protocol::registration_digest(p.user_id, p.password, params_.s, params_.width);
}

protocol::AccessQuery CloudServer::expected_query(ByteView user_id) const {
  const StoredPrincipal& p = store_.principal(user_id);
  if (p.private_key.empty()) {
    throw Error(ErrorCode::kUnknownPrincipal, "no stored U_pk for U_ID " + to_hex(user_id));
  }
  return protocol::access_query(expected_digest(user_id), p.user_id, p.private_key,
                                params_.width);
}

void CloudServer::mark_verified(ByteView user_id, bool verified) {
  if (verified) {
    verified_.insert(copy(user_id));
  } else {
    verified_.erase(copy(user_id));
  }
}

bool CloudServer::is_verified(ByteView user_id) const { return verified_.contains(copy(user_id)); }

UserAgent::UserAgent(std::size_t index, protocol::Credentials credentials,
                     AdversaryClass adversary)
    : index_(index),
      credentials_(std::move(credentials)),
      adversary_(adversary),
      state_(adversary == AdversaryClass::kReplayQuery ? Role::kAdversary : Role::kUser) {}

ProtocolRun::ProtocolRun(std::size_t width, Rng& rng, Transcript& transcript)
    : width_(width), rng_(&rng), transcript_(&transcript), network_(transcript) {
  for (Role r : {Role::kUser, Role::kOwner, Role::kCloud, Role::kKgc}) network_.attach(r);
}

Message ProtocolRun::make(Phase phase, Role from, Role to, Channel channel,
                          std::string kind) const {
  Message m;
  m.phase = phase;
  m.from = from;
  m.to = to;
  m.channel = channel;
  m.kind = std::move(kind);
  return m;
}

bool ProtocolRun::has_fault(const std::vector<std::size_t>& list, std::size_t principal) const {
  return std::find(list.begin(), list.end(), principal) != list.end();
}

void ProtocolRun::reject(UserAgent& user, Phase phase, std::string reason,
                         std::vector<Mismatch> mismatches) {
  user.state().advance(AgentPhase::kRejected);
  PrincipalOutcome out;
  out.principal = user.index();
  out.adversary = user.adversary();
  out.user_id = user.credentials().user_id;
  out.kind = OutcomeKind::kRejected;
  out.phase = phase;
  out.reason = std::move(reason);
  out.access_granted = user.access_granted;
  out.mismatches = std::move(mismatches);
  transcript_->add_outcome(std::move(out));
}

void ProtocolRun::finish(UserAgent& user, OutcomeKind kind, std::string reason,
                         std::vector<Mismatch> mismatches) {
  user.state().advance(kind == OutcomeKind::kAccepted ? AgentPhase::kComplete
                                                      : AgentPhase::kRejected);
  PrincipalOutcome out;
  out.principal = user.index();
  out.adversary = user.adversary();
  out.user_id = user.credentials().user_id;
  out.kind = kind;
  out.phase = Phase::kDataSharing;
  out.reason = std::move(reason);
  out.access_granted = user.access_granted;
  out.mismatches = std::move(mismatches);
  if (kind == OutcomeKind::kAccepted) out.recovered = user.recovered;
  transcript_->add_outcome(std::move(out));
}

void ProtocolRun::system_setup() {
  kgc_.generate_params(*rng_, width_);
  const auto& p = kgc_.params();
  Message got = network_.transmit(make(Phase::kSetup, Role::kKgc, Role::kCloud, Channel::kPrivate,
                                       "provision")
                                      .with("s", p.s)
                                      .with("m", p.m));
  cloud_.provision({got.field("s"), got.field("m"), width_});
}

void ProtocolRun::owner_setup() {
  owner_.state().require(AgentPhase::kInit, "owner setup");
  const auto& p = kgc_.params();
  Message got = network_.transmit(make(Phase::kSetup, Role::kKgc, Role::kOwner, Channel::kPrivate,
                                       "provision")
                                      .with("s", p.s)
                                      .with("m", p.m));
  owner_.params = {got.field("s"), got.field("m"), width_};
  owner_.state().advance(AgentPhase::kRegistered);
}

void ProtocolRun::owner_keygen() {
  owner_.state().require(AgentPhase::kRegistered, "owner keygen");
  protocol::KeyMaterial km = kgc_.issue_key_material(*rng_);
  Message got = network_.transmit(make(Phase::kKeygen, Role::kKgc, Role::kOwner,
                                       Channel::kPrivate, "key_material")
                                      .with("O_P", km.public_key)
                                      .with("a", km.attribute)
                                      .with("O_pk", km.private_key));
  owner_.keys.public_key = got.field("O_P");
  owner_.keys.attribute = got.field("a");
  owner_.keys.private_key = got.field("O_pk");
  Message stored = network_.transmit(
      make(Phase::kKeygen, Role::kKgc, Role::kCloud, Channel::kPrivate, "owner_key")
          .with("O_pk", km.private_key));
  cloud_.store().set_owner_key(stored.field("O_pk"));
  owner_.state().advance(AgentPhase::kKeyed);
}

bool ProtocolRun::setup_phase(UserAgent& user) {
  user.state().require(AgentPhase::kInit, "setup");
  const auto& cred = user.credentials();

  Message enroll = network_.transmit(
      make(Phase::kSetup, Role::kUser, Role::kCloud, Channel::kPrivate, "enroll")
          .with("U_ID", cred.user_id)
          .with("U_ps", cred.password));
  cloud_.store().enroll(enroll.field("U_ID"), enroll.field("U_ps"));

  const auto& p = kgc_.params();
  Message prov = network_.transmit(make(Phase::kSetup, Role::kKgc, Role::kUser, Channel::kPrivate,
                                        "provision")
                                       .with("s", p.s)
                                       .with("m", p.m));
  user.params = {prov.field("s"), prov.field("m"), width_};

  ByteString password = cred.password;
  if (user.adversary() == AdversaryClass::kWrongPassword) {
    password = netsim::forge_credential(user.adversary(), cred.password, *rng_);
    network_.annotate(Phase::kSetup, Role::kCloud, "forge",
                      {{"U_ID", cred.user_id}, {"target", to_bytes("U_ps")}});
  }
  user.digest = protocol::registration_digest(cred.user_id, password, user.params.s, width_);

  Message req = network_.transmit(make(Phase::kSetup, Role::kUser, Role::kCloud, Channel::kPublic,
                                       "registration_request")
                                      .with("U_ID", cred.user_id)
                                      .with("M", user.digest.value));
  const ByteString& uid = req.field("U_ID");
  protocol::RegistrationDigest expected = cloud_.expected_digest(uid);
  bool ok = expected.value == req.field("M");
  network_.transmit(make(Phase::kSetup, Role::kCloud, Role::kUser, Channel::kPublic,
                         "registration_result")
                        .with("U_ID", uid)
                        .with("status", status_bytes(ok)));
  if (!ok) {
    cloud_.store().remove(uid);
    reject(user, Phase::kSetup, "registration digest mismatch",
           {{"M", req.field("M"), expected.value}});
    return false;
  }
  user.state().advance(AgentPhase::kRegistered);
  return true;
}

void ProtocolRun::keygen_phase(UserAgent& user) {
  user.state().require(AgentPhase::kRegistered, "keygen");
  protocol::KeyMaterial km = kgc_.issue_key_material(*rng_);
  Message got = network_.transmit(make(Phase::kKeygen, Role::kKgc, Role::kUser,
                                       Channel::kPrivate, "key_material")
                                      .with("U_P", km.public_key)
                                      .with("a", km.attribute)
                                      .with("U_pk", km.private_key));
  user.keys.public_key = got.field("U_P");
  user.keys.attribute = got.field("a");
  user.keys.private_key = got.field("U_pk");
  Message stored = network_.transmit(
      make(Phase::kKeygen, Role::kKgc, Role::kCloud, Channel::kPrivate, "private_key")
          .with("U_ID", user.credentials().user_id)
          .with("U_pk", km.private_key));
  cloud_.store().mutable_principal(stored.field("U_ID")).private_key = stored.field("U_pk");
  user.state().advance(AgentPhase::kKeyed);
}

void ProtocolRun::encryption_phase(std::span<const ByteString> payloads) {
  if (owner_.state().phase() != AgentPhase::kEncrypted) {
    owner_.state().require(AgentPhase::kKeyed, "encryption");
  }
  for (std::size_t r = 0; r < payloads.size(); ++r) {
    protocol::CipherBundle bundle = protocol::seal_payload(
        payloads[r], owner_.params.s, owner_.params.m, owner_.keys.private_key);
    Message got = network_.transmit(
        make(Phase::kEncryption, Role::kOwner, Role::kCloud, Channel::kPublic, "upload")
            .with("record", encode_u32(static_cast<std::uint32_t>(r)))
            .with("D_C", bundle.wrapped)
            .with("digest", bundle.payload_digest));
    cloud_.store().add_bundle({got.field("D_C"), got.field("digest")});
    owner_.state().advance(AgentPhase::kEncrypted);
  }
}

bool ProtocolRun::serve_access(UserAgent& user, const Message& query) {
  const ByteString& uid = query.field("U_ID");
  protocol::AccessQuery expected = cloud_.expected_query(uid);
  bool ok = expected.q == query.field("q");
  network_.transmit(make(Phase::kAccessControl, Role::kCloud, Role::kUser, Channel::kPublic,
                         "access_result")
                        .with("U_ID", uid)
                        .with("status", status_bytes(ok)));
  if (!ok) {
    reject(user, Phase::kAccessControl, "access query mismatch",
           {{"q", query.field("q"), expected.q}});
    return false;
  }
  user.access_granted = true;
  user.state().advance(AgentPhase::kAccessGranted);

  Message grant = network_.transmit(make(Phase::kAccessControl, Role::kCloud, Role::kKgc,
                                         Channel::kPrivate, "access_granted")
                                        .with("U_ID", uid));
  kgc_.record_grant(grant.field("U_ID"));

  // A replayer holds neither U^P nor a, so it cannot ask for a session key.
  if (user.state().role() != Role::kUser) return true;

  Message req = network_.transmit(make(Phase::kAccessControl, Role::kUser, Role::kKgc,
                                       Channel::kPrivate, "session_request")
                                      .with("U_ID", uid)
                                      .with("U_P", user.keys.public_key)
                                      .with("a", user.keys.attribute));
  ByteString session =
      kgc_.issue_session_key(req.field("U_ID"), req.field("U_P"), req.field("a"));
  Message to_user = network_.transmit(make(Phase::kAccessControl, Role::kKgc, Role::kUser,
                                           Channel::kPrivate, "session_key")
                                          .with("U_sk", session));
  user.keys.session_key = to_user.field("U_sk");
  Message to_cloud = network_.transmit(make(Phase::kAccessControl, Role::kKgc, Role::kCloud,
                                            Channel::kPrivate, "session_key")
                                           .with("U_ID", uid)
                                           .with("U_sk", session));
  cloud_.store().mutable_principal(to_cloud.field("U_ID")).session_key = to_cloud.field("U_sk");

  if (has_fault(faults_.stale_session_key, user.index())) {
    ByteString& stored = cloud_.store().mutable_principal(uid).session_key;
    ByteString stale;
    do {
      stale = random_bytes(*rng_, width_);
    } while (stale == stored);
    stored = std::move(stale);
  }
  return true;
}

bool ProtocolRun::access_control_phase(UserAgent& user) {
  user.state().require(AgentPhase::kKeyed, "access control");
  const auto& uid = user.credentials().user_id;
  ByteString key = user.keys.private_key;
  if (user.adversary() == AdversaryClass::kForgedPrivateKey) {
    key = netsim::forge_credential(user.adversary(), key, *rng_);
    network_.annotate(Phase::kAccessControl, Role::kCloud, "forge",
                      {{"U_ID", uid}, {"target", to_bytes("U_pk")}});
  }
  protocol::AccessQuery q = protocol::access_query(user.digest, uid, key, width_);
  Message got = network_.transmit(make(Phase::kAccessControl, Role::kUser, Role::kCloud,
                                       Channel::kPublic, "access_query")
                                      .with("U_ID", uid)
                                      .with("q", q.q));
  return serve_access(user, got);
}

bool ProtocolRun::serve_validation(UserAgent& user, const Message& params,
                                   const Message& validation) {
  const ByteString& uid = validation.field("U_ID");
  std::vector<Mismatch> mismatches;
  if (params.field("U_ID") != uid) {
    mismatches.push_back({"U_ID", uid, params.field("U_ID")});
  } else {
    const StoredPrincipal& stored = cloud_.store().principal(uid);
    const auto& p = cloud_.params();
    protocol::ValidationPair expected;
    if (!stored.session_key.empty()) {
      expected = protocol::validation_messages(uid, stored.session_key, p.s, params.field("r"),
                                               stored.private_key, p.m, params.field("a"),
                                               width_);
    }
    if (expected.v1 != validation.field("v1")) {
      mismatches.push_back({"v1", validation.field("v1"), expected.v1});
    }
    if (expected.v2 != validation.field("v2")) {
      mismatches.push_back({"v2", validation.field("v2"), expected.v2});
    }
  }
  bool ok = mismatches.empty();
  network_.transmit(make(Phase::kValidation, Role::kCloud, Role::kUser, Channel::kPublic,
                         "validation_result")
                        .with("U_ID", uid)
                        .with("status", status_bytes(ok)));
  if (!ok) {
    reject(user, Phase::kValidation, "validation mismatch", std::move(mismatches));
    return false;
  }
  cloud_.mark_verified(uid, true);
  user.state().advance(AgentPhase::kVerified);
  return true;
}

bool ProtocolRun::validation_phase(UserAgent& user) {
  user.state().require(AgentPhase::kAccessGranted, "validation");
  const auto& uid = user.credentials().user_id;
  ByteString r = random_bytes(*rng_, width_);
  protocol::ValidationPair pair = protocol::validation_messages(
      uid, user.keys.session_key, user.params.s, r, user.keys.private_key, user.params.m,
      user.keys.attribute, width_);
  Message params = network_.transmit(make(Phase::kValidation, Role::kUser, Role::kCloud,
                                          Channel::kPrivate, "validation_params")
                                         .with("U_ID", uid)
                                         .with("r", r)
                                         .with("a", user.keys.attribute));
  Message validation = network_.transmit(make(Phase::kValidation, Role::kUser, Role::kCloud,
                                              Channel::kPublic, "validation")
                                             .with("U_ID", uid)
                                             .with("v1", pair.v1)
                                             .with("v2", pair.v2));
  return serve_validation(user, params, validation);
}

bool ProtocolRun::data_sharing_phase(UserAgent& user, std::size_t record) {
  user.state().require(AgentPhase::kVerified, "data sharing");
  const auto& uid = user.credentials().user_id;
  Message req = network_.transmit(make(Phase::kDataSharing, Role::kUser, Role::kCloud,
                                       Channel::kPublic, "data_request")
                                      .with("U_ID", uid)
                                      .with("record", encode_u32(static_cast<std::uint32_t>(record))));

  const ByteString& req_uid = req.field("U_ID");
  if (!cloud_.is_verified(req_uid)) {
    throw Error(ErrorCode::kOutOfOrder, "data request from unverified U_ID " + to_hex(req_uid));
  }
  cloud_.mark_verified(req_uid, false);
  std::uint32_t index = decode_u32(req.field("record"));
  const auto& bundles = cloud_.store().bundles();
  if (index >= bundles.size()) {
    throw Error(ErrorCode::kInvalidArgument, "record " + std::to_string(index) +
                                                 " out of range (" +
                                                 std::to_string(bundles.size()) + " stored)");
  }
  const StoredBundle& bundle = bundles[index];
  Message data = network_.transmit(
      make(Phase::kDataSharing, Role::kCloud, Role::kUser, Channel::kPublic, "data")
          .with("record", req.field("record"))
          .with("D_C", bundle.wrapped)
          .with("digest", bundle.payload_digest)
          .with("owner_fingerprint", hash(cloud_.store().owner_key())));

  protocol::Unwrapped unwrapped;
  try {
    unwrapped = protocol::unwrap_ciphertext(
        data.field("D_C"), protocol::derive_data_key(user.params.m, user.params.s));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kCorruptCiphertext) throw;
    finish(user, OutcomeKind::kIntegrityFailure, std::string("corrupt ciphertext: ") + e.what());
    return false;
  }
  ByteString fingerprint = hash(unwrapped.owner_private_key);
  if (fingerprint != data.field("owner_fingerprint")) {
    finish(user, OutcomeKind::kIntegrityFailure, "owner key fingerprint mismatch",
           {{"owner_fingerprint", fingerprint, data.field("owner_fingerprint")}});
    return false;
  }
  ByteString recovered = protocol::decrypt_data(unwrapped.encrypted, user.params.s, user.params.m);
  ByteString digest = hash(recovered);
  if (digest != data.field("digest")) {
    finish(user, OutcomeKind::kIntegrityFailure, "payload digest mismatch",
           {{"digest", digest, data.field("digest")}});
    return false;
  }
  user.recovered = std::move(recovered);
  finish(user, OutcomeKind::kAccepted, "complete");
  return true;
}

void ProtocolRun::replay_attack(UserAgent& replayer) {
  replayer.state().require(AgentPhase::kInit, "replay");
  const auto& uid = replayer.credentials().user_id;
  Message got = network_.transmit(make(Phase::kAccessControl, Role::kAdversary, Role::kCloud,
                                       Channel::kPublic, "access_query")
                                      .with("U_ID", uid)
                                      .with("q", random_bytes(*rng_, width_)));
  if (!serve_access(replayer, got)) return;

  // Without U_sk, U_pk and the real attribute the best the replayer can do
  // is guess.
  Message params = network_.transmit(make(Phase::kValidation, Role::kAdversary, Role::kCloud,
                                          Channel::kPrivate, "validation_params")
                                         .with("U_ID", uid)
                                         .with("r", random_bytes(*rng_, width_))
                                         .with("a", random_bytes(*rng_, Kgc::kAttributeBytes)));
  Message validation = network_.transmit(make(Phase::kValidation, Role::kAdversary, Role::kCloud,
                                              Channel::kPublic, "validation")
                                             .with("U_ID", uid)
                                             .with("v1", random_bytes(*rng_, width_))
                                             .with("v2", random_bytes(*rng_, width_)));
  serve_validation(replayer, params, validation);
}

ByteString sample_payload() {
  return dataset::record_to_payload(dataset::parse_row(dataset::kClevelandFirstRow));
}

ByteString principal_id(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "user-%06zu", index);
  return to_bytes(buf);
}

RunResult run_protocol(const netsim::ScenarioConfig& scenario,
                       std::span<const ByteString> payloads, const FaultPlan& faults) {
  scenario.validate();
  const std::size_t width = scenario.width();
  const std::size_t total = scenario.total_principals();
  if (total > 0 && payloads.empty()) {
    throw Error(ErrorCode::kConfiguration, "scenario has principals but no payloads");
  }

  Rng rng(scenario.seed);
  RunResult result;
  {
    ProtocolRun run(width, rng, result.transcript);
    run.apply_faults(faults);
    run.system_setup();

    if (total > 0) {
      std::vector<UserAgent> users;
      users.reserve(total);
      std::size_t replayers = 0;
      for (std::size_t i = 0; i < total; ++i) {
        AdversaryClass cls = scenario.class_of(i);
        if (cls == AdversaryClass::kReplayQuery) {
          std::size_t victim = replayers++ % scenario.n_genuine;
          users.emplace_back(i, protocol::Credentials{principal_id(victim), {}}, cls);
        } else {
          users.emplace_back(i, protocol::Credentials{principal_id(i), rng.bytes(kPasswordBytes)},
                             cls);
        }
      }

      auto& net = run.network();
      run.owner_setup();
      for (auto& u : users) {
        if (u.state().role() != Role::kUser) continue;
        net.set_adversary(u.adversary(), &rng);
        run.setup_phase(u);
      }
      net.set_adversary(AdversaryClass::kNone, nullptr);
      run.owner_keygen();
      for (auto& u : users) {
        if (u.state().role() == Role::kUser && u.state().phase() == AgentPhase::kRegistered) {
          run.keygen_phase(u);
        }
      }
      run.encryption_phase(payloads);

      for (auto& u : users) {
        net.set_adversary(u.adversary(), &rng);
        if (u.state().role() == Role::kAdversary) {
          run.replay_attack(u);
        } else if (u.state().phase() == AgentPhase::kKeyed) {
          if (run.access_control_phase(u) && run.validation_phase(u)) {
            run.data_sharing_phase(u, u.index() % payloads.size());
          }
        }
      }
      net.set_adversary(AdversaryClass::kNone, nullptr);
    }

    result.transcript.sort_outcomes();
    result.params = run.kgc().params();
    result.store = run.cloud().store();
    result.kgc_bytes = run.kgc().stored_bytes();
  }
  return result;
}

}  // namespace cloudac::entities
