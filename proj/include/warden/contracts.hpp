// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <warden/chain_types.hpp>
#include <warden/trie.hpp>
#include <warden/vm.hpp>

#include <optional>

namespace warden {

// The proxy escrows a reserved transaction and its ether, verifies a logged
// event against a committed digest, and releases the reservation to whoever
// proves the event first. The hub announces new proxies to executors.

enum class ReservedKind : uint8_t {
    FundTransfer = 0,
    FunctionInvocation = 1,
    ContractCreation = 2,
};

/// The reserved transaction held in escrow: recipient/value/payload plus its
/// release kind. The payload is call data for an invocation and a creation
/// payload for a creation.
struct ReservedTransaction {
    ReservedKind kind = ReservedKind::FundTransfer;
    std::optional<Address> recipient;
    uint64_t value = 0;
    Bytes payload;

    bool operator==(const ReservedTransaction&) const = default;
};

enum class ProxyState : uint8_t {
    Deployed = 0,
    Funded = 1,
    Registered = 2,
    Triggered = 3,
    Closed = 4,
};

/// Construction-time proxy parameters; immutable after deployment.
struct ProxyConfig {
    uint64_t service_fee = 0;
    Address expected_emitter;
    Hash32 event_commitment;
    ReservedTransaction reserved;

    bool operator==(const ProxyConfig&) const = default;
};

/// Adversary-supplied proof of one logged event: nothing in here is trusted
/// before verification.
struct ProofBundle {
    uint64_t block_number = 0;
    Bytes block_data;  // RLP-encoded header
    trie::MerkleProof proof;
    uint64_t receipt_index = 0;
    uint64_t log_index = 0;

    bool operator==(const ProofBundle&) const = default;
};

// Handler ids.
inline constexpr std::string_view kProxyHandler = "proxy";
inline constexpr std::string_view kHubHandler = "hub";
inline constexpr std::string_view kEventEmitterHandler = "event_emitter";
inline constexpr std::string_view kSentinelHandler = "sentinel";
inline constexpr std::string_view kReverterHandler = "reverter";

// Call signatures.
inline constexpr std::string_view kSigCharge = "charge()";
inline constexpr std::string_view kSigNewService = "newService(address)";
inline constexpr std::string_view kSigMarkRegistered = "markRegistered()";
inline constexpr std::string_view kSigEventVerify =
    "eventVerify(uint256,bytes,bytes[],uint256,uint256)";
inline constexpr std::string_view kSigClose = "close()";
inline constexpr std::string_view kSigEmitLog = "emitLog(bytes32[],bytes)";
inline constexpr std::string_view kSigSetSentinel = "setSentinel(bytes)";
inline constexpr std::string_view kSigNewServiceLog = "NewService(address)";

// Revert reasons surfaced in status-0 receipts.
namespace reason {
inline constexpr std::string_view kWrongState = "WrongState";
inline constexpr std::string_view kInsufficientFunding = "InsufficientFunding";
inline constexpr std::string_view kAlreadyRegistered = "AlreadyRegistered";
inline constexpr std::string_view kBlockOutOfWindow = "BlockOutOfWindow";
inline constexpr std::string_view kBlockMismatch = "BlockMismatch";
inline constexpr std::string_view kProofInvalid = "ProofInvalid";
inline constexpr std::string_view kLogMismatch = "LogMismatch";
inline constexpr std::string_view kNotOwner = "NotOwner";
}  // namespace reason

/// Commitment over one full expected log entry.
Hash32 log_commitment(const LogEntry& entry);

// Client-side payload builders.
Bytes encode_proxy_init(const ProxyConfig& config);
Bytes encode_proxy_creation(const ProxyConfig& config);
Bytes encode_charge_call();
Bytes encode_new_service_call(const Address& proxy);
Bytes encode_event_verify_call(const ProofBundle& bundle);
Bytes encode_close_call();
Bytes encode_emit_log_call(const std::vector<Hash32>& topics, ByteView data);

/// Registers the proxy and hub handlers.
void install_warden_handlers(HandlerRegistry& registry);

/// Registers the scenario support handlers: an event emitter standing in for
/// the observed dapp contract, a sentinel release target, and a reverter.
void install_scenario_handlers(HandlerRegistry& registry);

/// Full-node view of a proxy's public configuration and lifecycle state,
/// read straight from contract storage.
struct ProxyView {
    Address owner;
    ProxyConfig config;
    ProxyState state = ProxyState::Deployed;
    uint64_t funded_amount = 0;
};

ProxyView read_proxy(const State& state, const Address& proxy);
ProxyState read_proxy_state(const State& state, const Address& proxy);

/// Proxies recorded by a hub, in registration order.
std::vector<Address> read_hub_registry(const State& state, const Address& hub);

}  // namespace warden
