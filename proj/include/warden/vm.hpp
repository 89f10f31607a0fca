// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <warden/chain_types.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace warden {

/// External state-change request originated by an EOA. An absent recipient
/// marks a contract creation.
struct Transaction {
    Address sender;
    std::optional<Address> recipient;
    uint64_t value = 0;
    Bytes data;
    uint64_t gas_limit = 0;

    bool operator==(const Transaction&) const = default;
};

/// Contract-internal state-change request, always rooted in a transaction.
struct Message {
    Address from;
    std::optional<Address> to;
    uint64_t value = 0;
    Bytes data;

    bool operator==(const Message&) const = default;
};

enum class TxKind { FundTransfer, FunctionInvocation, ContractCreation };

/// Metering prices; all entries positive. Gas price is fixed at 1 and gas is
/// burned, never redistributed.
struct GasSchedule {
    uint64_t base_tx = 21000;
    uint64_t per_data_octet = 16;
    uint64_t per_storage_write = 5000;
    uint64_t per_log = 1125;
    uint64_t per_message = 700;
    uint64_t per_contract_created = 32000;
    uint64_t per_proof_octet_verified = 6;
};

struct ContractState {
    std::string handler_id;
    std::map<Bytes, Bytes> storage;

    bool operator==(const ContractState&) const = default;
};

struct Account {
    uint64_t balance = 0;
    uint64_t nonce = 0;
    std::optional<ContractState> contract;  // nullopt marks an EOA

    bool is_contract() const { return contract.has_value(); }
    bool operator==(const Account&) const = default;
};

using State = std::map<Address, Account>;

/// Submission-level rejection: the transaction never executes and produces
/// no receipt.
struct SubmissionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownSender : SubmissionError {
    using SubmissionError::SubmissionError;
};
struct InsufficientBalance : SubmissionError {
    using SubmissionError::SubmissionError;
};
struct Unclassifiable : SubmissionError {
    using SubmissionError::SubmissionError;
};

/// Handler failure. Rolls back every effect of the enclosing scope except
/// gas; surfaces as a status-0 receipt at transaction level.
struct Revert : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gas limit exhausted. Aborts the whole transaction regardless of the frame
/// it occurs in; handlers must not catch it.
struct OutOfGas : std::runtime_error {
    OutOfGas() : std::runtime_error{"out of gas"} {}
};

enum class MessageStatus { Ok, Reverted, InsufficientContractBalance, UnknownTarget };

struct MessageResult {
    MessageStatus status = MessageStatus::Ok;
    std::string revert_reason;
    std::optional<Address> created;

    bool ok() const { return status == MessageStatus::Ok; }
};

/// Execution audit trail, one stream per block.
enum class TraceKind { TransactionStart, MessageSend, ContractCreated, LogEmitted, TransactionEnd };

struct TraceEvent {
    TraceKind kind;
    size_t tx_index = 0;
    int depth = 0;
    Address from;
    std::optional<Address> to;
    uint64_t value = 0;
    bool ok = true;
};

class HostContext;

using ConstructFn = std::function<void(HostContext&, ByteView init_args)>;
using CallFn = std::function<void(HostContext&, const Message&)>;

/// Native deterministic contract program, registered by name.
struct ContractHandler {
    ConstructFn construct;
    CallFn call;
};

class HandlerRegistry {
public:
    void add(std::string id, ContractHandler handler);
    const ContractHandler* find(const std::string& id) const;
    bool contains(const std::string& id) const { return find(id) != nullptr; }

private:
    std::map<std::string, ContractHandler> handlers_;
};

/// Block-scoped execution inputs supplied by the chain driver. `blockhash`
/// must implement the bounded lookback window relative to the block being
/// built.
struct BlockContext {
    uint64_t number = 0;
    uint64_t timestamp = 0;
    std::function<std::optional<Hash32>(uint64_t)> blockhash;
    uint64_t cumulative_gas = 0;
    size_t next_tx_index = 0;
};

namespace detail {
struct ExecEnv;
}

/// Host interface available to contract handlers during execution.
class HostContext {
public:
    const Address& self() const { return self_; }
    const Message& message() const { return msg_; }
    uint64_t block_number() const;
    uint64_t block_timestamp() const;

    /// Bounded lookup of a past header digest; empty outside the window.
    std::optional<Hash32> blockhash(uint64_t number) const;

    uint64_t balance(const Address& account) const;

    /// Reads a key of this contract's storage; absent keys read as empty.
    Bytes storage_read(ByteView key) const;
    void storage_write(ByteView key, ByteView value);

    void emit_log(std::vector<Hash32> topics, Bytes data);

    /// Dispatches a contract-internal message: a value transfer, a call, or
    /// (with an absent `to`) a contract creation. A failed message rolls back
    /// only its own effects; the caller decides whether to tolerate it.
    MessageResult send_message(const Message& msg);

    /// Meters proof verification work.
    void charge_proof_octets(size_t octets);

    [[noreturn]] void revert(std::string_view reason) const {
        throw Revert{std::string{reason}};
    }

private:
    friend struct detail::ExecEnv;
    HostContext(detail::ExecEnv& env, const Address& self, const Message& msg, int depth)
        : env_(env), self_(self), msg_(msg), depth_(depth) {}

    detail::ExecEnv& env_;
    Address self_;
    const Message& msg_;
    int depth_;
};

/// Exactly one category per the recipient/value/data shape; throws
/// Unclassifiable for shapes outside the taxonomy (e.g. a zero-value
/// EOA-to-EOA transfer with empty data, or a value-bearing creation).
TxKind classify(const State& state, const Transaction& tx);

/// Deterministic contract address: last 20 octets of the digest of
/// [creator, nonce].
Address derive_address(const Address& creator, uint64_t nonce);

// Call convention: a 4-octet selector (leading octets of the signature
// digest) followed by an RLP argument list.
Bytes selector(std::string_view signature);
Bytes encode_call(std::string_view signature, std::vector<rlp::Item> args);
struct CallData {
    Bytes selector;
    std::vector<rlp::Item> args;
};
CallData parse_call(ByteView data);  // throws Revert on malformed call data

// Creation convention: the data payload is the RLP list
// [handler id, init args].
Bytes encode_creation(std::string_view handler_id, ByteView init_args);
std::pair<std::string, Bytes> parse_creation(ByteView data);  // throws Revert

class Vm {
public:
    Vm(HandlerRegistry registry, GasSchedule schedule);

    /// Executes one transaction against `state`. Throws a SubmissionError
    /// before touching state when the sender is unknown, cannot cover
    /// value + gasLimit, or the transaction is unclassifiable; otherwise
    /// always yields a receipt (status 0 on handler failure, with every
    /// effect except gas rolled back).
    Receipt execute_transaction(State& state, const Transaction& tx, BlockContext& block);

    const GasSchedule& schedule() const { return schedule_; }
    const HandlerRegistry& registry() const { return registry_; }

    /// Audit trail accumulated across execute_transaction calls.
    const std::vector<TraceEvent>& trace() const { return trace_; }
    std::vector<TraceEvent> drain_trace();

private:
    HandlerRegistry registry_;
    GasSchedule schedule_;
    std::vector<TraceEvent> trace_;
};

}  // namespace warden
