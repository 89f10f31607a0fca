// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#include <warden/vm.hpp>

#include <warden/keccak.hpp>

namespace warden {

namespace {

constexpr int kMaxCallDepth = 64;

struct GasMeter {
    uint64_t limit = 0;
    uint64_t used = 0;

    void charge(uint64_t amount) {
        if (amount > limit - used) {
            used = limit;
            throw OutOfGas{};
        }
        used += amount;
    }
};

}  // namespace

namespace detail {

struct ExecEnv {
    State& state;
    const HandlerRegistry& registry;
    const GasSchedule& schedule;
    BlockContext& block;
    GasMeter meter;
    std::vector<LogEntry> logs;
    std::vector<TraceEvent>& trace;
    size_t tx_index;

    HostContext make_context(const Address& self, const Message& msg, int depth) {
        return HostContext{*this, self, msg, depth};
    }

    void record(TraceKind kind, int depth, const Address& from, std::optional<Address> to,
        uint64_t value, bool ok = true) {
        trace.push_back({kind, tx_index, depth, from, std::move(to), value, ok});
    }

    Account& account(const Address& addr) { return state.at(addr); }

    void run_call(const Address& target, const Message& msg, int depth) {
        const ContractHandler* handler = registry.find(account(target).contract->handler_id);
        if (handler == nullptr || !handler->call)
            throw Revert{"handler has no call entry"};
        HostContext ctx = make_context(target, msg, depth);
        handler->call(ctx, msg);
    }

    Address run_creation(const Address& creator, const Message& msg, int depth) {
        const auto [handler_id, init_args] = parse_creation(msg.data);
        const ContractHandler* handler = registry.find(handler_id);
        if (handler == nullptr)
            throw Revert{"unknown handler: " + handler_id};

        Account& creator_account = account(creator);
        const Address created = derive_address(creator, creator_account.nonce);
        if (state.contains(created))
            throw Revert{"address collision"};
        if (msg.to.has_value())
            throw Revert{"creation message must have no target"};

        // Contract accounts bump their nonce per creation performed; the EOA
        // transaction-level bump happens once in execute_transaction.
        if (creator_account.is_contract())
            ++creator_account.nonce;

        meter.charge(schedule.per_contract_created);
        state[created] = Account{0, 0, ContractState{handler_id, {}}};
        record(TraceKind::ContractCreated, depth, creator, created, 0);

        if (handler->construct) {
            const Message created_msg{creator, created, 0, msg.data};
            HostContext ctx = make_context(created, created_msg, depth);
            handler->construct(ctx, init_args);
        }
        return created;
    }

    MessageResult send(const Address& from, const Message& msg, int depth) {
        meter.charge(schedule.per_message);
        if (depth > kMaxCallDepth)
            return {MessageStatus::Reverted, "call depth exceeded", {}};

        if (!msg.to.has_value()) {
            if (msg.value != 0)
                return {MessageStatus::Reverted, "value-bearing creation forbidden", {}};
            if (msg.data.empty())
                return {MessageStatus::UnknownTarget, "creation payload is empty", {}};
        } else {
            if (account(from).balance < msg.value)
                return {MessageStatus::InsufficientContractBalance, "", {}};
            const auto target = state.find(*msg.to);
            const bool target_is_contract =
                target != state.end() && target->second.is_contract();
            if (!msg.data.empty() && !target_is_contract)
                return {MessageStatus::UnknownTarget, "", {}};
        }

        const State snapshot = state;
        const size_t log_mark = logs.size();
        try {
            MessageResult result;
            if (!msg.to.has_value()) {
                result.created = run_creation(from, msg, depth);
            } else {
                account(from).balance -= msg.value;
                state[*msg.to].balance += msg.value;  // creates a fresh EOA on demand
                if (!msg.data.empty())
                    run_call(*msg.to, msg, depth);
            }
            record(TraceKind::MessageSend, depth, from, msg.to, msg.value);
            return result;
        } catch (const Revert& r) {
            state = snapshot;
            logs.resize(log_mark);
            record(TraceKind::MessageSend, depth, from, msg.to, msg.value, false);
            return {MessageStatus::Reverted, r.what(), {}};
        }
    }
};

}  // namespace detail

uint64_t HostContext::block_number() const {
    return env_.block.number;
}

uint64_t HostContext::block_timestamp() const {
    return env_.block.timestamp;
}

std::optional<Hash32> HostContext::blockhash(uint64_t number) const {
    return env_.block.blockhash ? env_.block.blockhash(number) : std::nullopt;
}

uint64_t HostContext::balance(const Address& account) const {
    const auto it = env_.state.find(account);
    return it == env_.state.end() ? 0 : it->second.balance;
}

Bytes HostContext::storage_read(ByteView key) const {
    const auto& storage = env_.state.at(self_).contract->storage;
    const auto it = storage.find(to_bytes(key));
    return it == storage.end() ? Bytes{} : it->second;
}

void HostContext::storage_write(ByteView key, ByteView value) {
    env_.meter.charge(env_.schedule.per_storage_write);
    env_.state.at(self_).contract->storage[to_bytes(key)] = to_bytes(value);
}

void HostContext::emit_log(std::vector<Hash32> topics, Bytes data) {
    env_.meter.charge(env_.schedule.per_log);
    env_.logs.push_back({self_, std::move(topics), std::move(data)});
    env_.record(TraceKind::LogEmitted, depth_, self_, std::nullopt, 0);
}

MessageResult HostContext::send_message(const Message& msg) {
    if (msg.from != self_)
        throw Revert{"message sender must be the executing contract"};
    return env_.send(self_, msg, depth_ + 1);
}

void HostContext::charge_proof_octets(size_t octets) {
    env_.meter.charge(octets * env_.schedule.per_proof_octet_verified);
}

void HandlerRegistry::add(std::string id, ContractHandler handler) {
    handlers_[std::move(id)] = std::move(handler);
}

const ContractHandler* HandlerRegistry::find(const std::string& id) const {
    const auto it = handlers_.find(id);
    return it == handlers_.end() ? nullptr : &it->second;
}

TxKind classify(const State& state, const Transaction& tx) {
    if (tx.recipient.has_value()) {
        const auto it = state.find(*tx.recipient);
        const bool recipient_is_contract = it != state.end() && it->second.is_contract();
        if (recipient_is_contract) {
            if (!tx.data.empty())
                return TxKind::FunctionInvocation;
            throw Unclassifiable{"contract recipient requires call data"};
        }
        if (tx.value > 0)
            return TxKind::FundTransfer;
        throw Unclassifiable{"zero-value transfer with empty effect"};
    }
    if (tx.data.empty())
        throw Unclassifiable{"creation requires a payload"};
    if (tx.value != 0)
        throw Unclassifiable{"value-bearing creation forbidden"};
    return TxKind::ContractCreation;
}

Address derive_address(const Address& creator, uint64_t nonce) {
    const Bytes encoded = rlp::encode(rlp::Item::list({
        rlp::Item::bytes(ByteView{creator.bytes}),
        rlp::Item::uint(nonce),
    }));
    const Hash32 digest = keccak256(encoded);
    Address out;
    std::copy(digest.bytes.begin() + 12, digest.bytes.end(), out.bytes.begin());
    return out;
}

Bytes selector(std::string_view signature) {
    const Hash32 digest = keccak256(signature);
    return {digest.bytes.begin(), digest.bytes.begin() + 4};
}

Bytes encode_call(std::string_view signature, std::vector<rlp::Item> args) {
    Bytes out = selector(signature);
    const Bytes encoded_args = rlp::encode(rlp::Item::list(std::move(args)));
    out.insert(out.end(), encoded_args.begin(), encoded_args.end());
    return out;
}

CallData parse_call(ByteView data) {
    if (data.size() < 4)
        throw Revert{"call data shorter than a selector"};
    CallData call;
    call.selector = to_bytes(data.subspan(0, 4));
    try {
        call.args = rlp::decode(data.subspan(4)).as_list();
    } catch (const rlp::RlpError& e) {
        throw Revert{std::string{"malformed call arguments: "} + e.what()};
    }
    return call;
}

Bytes encode_creation(std::string_view handler_id, ByteView init_args) {
    return rlp::encode(rlp::Item::list({
        rlp::Item::bytes(ByteView{
            reinterpret_cast<const uint8_t*>(handler_id.data()), handler_id.size()}),
        rlp::Item::bytes(init_args),
    }));
}

std::pair<std::string, Bytes> parse_creation(ByteView data) {
    try {
        const rlp::Item item = rlp::decode(data);
        const auto& fields = item.as_list();
        if (fields.size() != 2)
            throw Revert{"creation payload must be [handler, init]"};
        const Bytes& id = fields[0].as_bytes();
        return {std::string{id.begin(), id.end()}, fields[1].as_bytes()};
    } catch (const rlp::RlpError& e) {
        throw Revert{std::string{"malformed creation payload: "} + e.what()};
    }
}

Vm::Vm(HandlerRegistry registry, GasSchedule schedule)
    : registry_(std::move(registry)), schedule_(schedule) {}

Receipt Vm::execute_transaction(State& state, const Transaction& tx, BlockContext& block) {
    const auto sender_it = state.find(tx.sender);
    if (sender_it == state.end())
        throw UnknownSender{"sender account does not exist"};
    if (sender_it->second.is_contract())
        throw UnknownSender{"sender is not an external account"};

    const TxKind kind = classify(state, tx);

    if (sender_it->second.balance < tx.value ||
        sender_it->second.balance - tx.value < tx.gas_limit)
        throw InsufficientBalance{"balance below value plus gas limit"};

    detail::ExecEnv env{
        state, registry_, schedule_, block, GasMeter{tx.gas_limit}, {}, trace_,
        block.next_tx_index++};
    env.record(TraceKind::TransactionStart, 0, tx.sender, tx.recipient, tx.value);

    const State snapshot = state;
    Receipt receipt;
    receipt.status = 1;
    try {
        env.meter.charge(schedule_.base_tx);
        env.meter.charge(schedule_.per_data_octet * tx.data.size());

        const Message msg{tx.sender, tx.recipient, tx.value, tx.data};
        switch (kind) {
        case TxKind::FundTransfer:
            env.account(tx.sender).balance -= tx.value;
            state[*tx.recipient].balance += tx.value;
            break;
        case TxKind::FunctionInvocation:
            env.account(tx.sender).balance -= tx.value;
            env.account(*tx.recipient).balance += tx.value;
            env.run_call(*tx.recipient, msg, 0);
            break;
        case TxKind::ContractCreation:
            env.run_creation(tx.sender, msg, 0);
            break;
        }
        receipt.logs = std::move(env.logs);
    } catch (const Revert& r) {
        state = snapshot;
        receipt.status = 0;
        receipt.revert_reason = r.what();
    } catch (const OutOfGas&) {
        state = snapshot;
        receipt.status = 0;
        receipt.revert_reason = "out of gas";
    } catch (const rlp::RlpError& e) {
        state = snapshot;
        receipt.status = 0;
        receipt.revert_reason = std::string{"malformed data: "} + e.what();
    } catch (const std::invalid_argument& e) {
        state = snapshot;
        receipt.status = 0;
        receipt.revert_reason = std::string{"invalid data: "} + e.what();
    }

    // Gas burn and the origination nonce survive any rollback.
    Account& sender = state.at(tx.sender);
    sender.nonce += 1;
    sender.balance -= env.meter.used;
    receipt.gas_used = env.meter.used;
    block.cumulative_gas += env.meter.used;
    receipt.cumulative_gas_used = block.cumulative_gas;
    env.record(TraceKind::TransactionEnd, 0, tx.sender, tx.recipient, tx.value,
        receipt.status == 1);
    return receipt;
}

std::vector<TraceEvent> Vm::drain_trace() {
    std::vector<TraceEvent> out = std::move(trace_);
    trace_.clear();
    return out;
}

}  // namespace warden
