// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <warden/chain.hpp>
#include <warden/contracts.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace warden {

struct InvalidScript : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EventNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WindowExpired : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One proxy an executor monitors: the commitment and emitter let it
/// recognize the prescribed event by hashing observed logs.
struct WatchEntry {
    Address proxy;
    Address expected_emitter;
    Hash32 commitment;

    bool operator==(const WatchEntry&) const = default;
};

struct MatchTriple {
    Address proxy;
    uint64_t receipt_index = 0;
    uint64_t log_index = 0;

    bool operator==(const MatchTriple&) const = default;
};

/// All (proxy, receipt, log) triples in `block` whose log entry digests to a
/// watched commitment with a matching emitter; receipt order, then log order.
std::vector<MatchTriple> scan_block_for_matches(const Block& block,
    const std::vector<WatchEntry>& watchlist);

/// Constructs a bundle from full-node chain access that will pass the
/// proxy's verification when submitted unmodified in the next block.
/// Throws EventNotFound when `event_block` holds no matching log and
/// WindowExpired when the block would fall outside the lookback window at
/// execution time.
ProofBundle build_proof_bundle(const Chain& chain, const Address& proxy,
    uint64_t event_block);

// --- scenario configuration ---

enum class StepKind {
    DeployProxy,
    Charge,
    Register,
    EmitEventAtBlock,
    Close,
    DisableExecutor,
    AdvanceBlocks,
};

struct ScenarioStep {
    uint64_t block = 0;
    StepKind kind = StepKind::AdvanceBlocks;
    std::optional<std::string> emit_from;  // emit override: emitter actor
    std::optional<std::vector<Hash32>> topics;
    std::optional<Bytes> data;
    std::string target_actor;  // disable-executor
    uint64_t count = 0;        // advance-blocks
    std::optional<uint64_t> amount;  // charge override

    bool operator==(const ScenarioStep&) const = default;
};

enum class ActorKind { User, Executor, Eoa, Emitter, Contract };

struct ActorDecl {
    ActorKind kind = ActorKind::Eoa;
    std::string name;
    uint64_t funds = 0;
    uint64_t delay = 0;   // executors: blocks between observation and submission
    std::string handler;  // contract actors

    bool operator==(const ActorDecl&) const = default;
};

/// Reservation in scenario terms; recipients are actor names resolved at
/// simulation setup.
struct ReservedSpec {
    ReservedKind kind = ReservedKind::FundTransfer;
    std::string recipient;
    uint64_t value = 0;
    std::string call_signature;
    Bytes call_arg;
    std::string handler;
    Bytes init;

    bool operator==(const ReservedSpec&) const = default;
};

struct ServiceSpec {
    std::string owner;
    uint64_t fee = 0;
    ReservedSpec reserved;

    bool operator==(const ServiceSpec&) const = default;
};

struct EventSpec {
    std::string emitter;
    std::vector<Hash32> topics;
    Bytes data;

    bool operator==(const EventSpec&) const = default;
};

enum class ExpectKind { ReleaseStatus, Winner, TriggeredBlock };

struct Expectation {
    ExpectKind kind = ExpectKind::ReleaseStatus;
    std::string text;
    uint64_t number = 0;

    bool operator==(const Expectation&) const = default;
};

struct ScenarioConfig {
    std::string name = "scenario";
    uint64_t seed = 0;
    uint64_t window = 256;
    uint64_t block_interval = 15;
    double gas_to_ether = 1.67e-8;
    double ether_to_usd = 175.0;
    GasSchedule gas;
    std::vector<ActorDecl> actors;
    std::optional<ServiceSpec> service;
    std::optional<EventSpec> event;
    std::vector<ScenarioStep> script;
    std::vector<Expectation> expectations;
};

// --- scenario report ---

enum class ReleaseStatus { Released, NotTriggered, Closed };

std::string_view to_string(ReleaseStatus status);
std::optional<ReleaseStatus> release_status_from_string(std::string_view text);

struct TimelineEntry {
    uint64_t block = 0;
    std::string actor;
    std::string action;
    std::string outcome;  // "ok", a revert reason, or a drop note
    uint64_t gas = 0;

    bool operator==(const TimelineEntry&) const = default;
};

struct ScenarioReport {
    std::string scenario;
    uint64_t seed = 0;
    uint64_t window = 0;
    ReleaseStatus release_status = ReleaseStatus::NotTriggered;
    std::string winner;
    std::optional<uint64_t> event_block;
    std::optional<uint64_t> triggered_block;
    std::vector<TimelineEntry> timeline;
    std::map<std::string, uint64_t> per_function_gas;
    std::map<std::string, int64_t> executor_profits;
    double gas_to_ether = 1.67e-8;
    double ether_to_usd = 175.0;

    bool operator==(const ScenarioReport&) const = default;
};

/// Deterministic end-to-end run: scripted user steps drive the chain while
/// executors watch hub announcements, recognize logged events by digest, and
/// race to submit proofs. Throws InvalidScript on semantic config errors.
ScenarioReport run_scenario(const ScenarioConfig& config);

/// Deterministic address of a declared actor.
Address actor_address(std::string_view name);
/// Fixed address the hub contract occupies in every scenario.
Address hub_address();

}  // namespace warden
