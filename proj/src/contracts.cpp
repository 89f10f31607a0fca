// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#include <warden/contracts.hpp>

#include <warden/keccak.hpp>

namespace warden {

namespace {

// Proxy storage slots.
constexpr std::string_view kSlotOwner = "owner";
constexpr std::string_view kSlotFee = "fee";
constexpr std::string_view kSlotEmitter = "emitter";
constexpr std::string_view kSlotCommitment = "commit";
constexpr std::string_view kSlotState = "state";
constexpr std::string_view kSlotKind = "et.kind";
constexpr std::string_view kSlotRecipient = "et.to";
constexpr std::string_view kSlotValue = "et.value";
constexpr std::string_view kSlotPayload = "et.payload";
constexpr std::string_view kSlotFunded = "funded";

// Hub storage: one growing blob of 20-octet proxy addresses.
constexpr std::string_view kSlotRegistry = "registry";

ByteView key(std::string_view slot) {
    return ByteView{reinterpret_cast<const uint8_t*>(slot.data()), slot.size()};
}

Bytes uint_bytes(uint64_t v) {
    return rlp::Item::to_big_compact(v);
}

uint64_t read_uint(const HostContext& ctx, std::string_view slot) {
    return rlp::Item::from_big_compact(ctx.storage_read(key(slot)));
}

ProxyState read_state(const HostContext& ctx) {
    return static_cast<ProxyState>(read_uint(ctx, kSlotState));
}

void write_state(HostContext& ctx, ProxyState state) {
    ctx.storage_write(key(kSlotState), uint_bytes(static_cast<uint64_t>(state)));
}

ReservedTransaction read_reserved(const HostContext& ctx) {
    ReservedTransaction reserved;
    reserved.kind = static_cast<ReservedKind>(read_uint(ctx, kSlotKind));
    const Bytes to = ctx.storage_read(key(kSlotRecipient));
    if (!to.empty())
        reserved.recipient = address_from_bytes(to);
    reserved.value = read_uint(ctx, kSlotValue);
    reserved.payload = ctx.storage_read(key(kSlotPayload));
    return reserved;
}

// eventVerify step 1: anchor the supplied header bytes to the chain and pull
// receiptsRoot out of the fixed header slot.
Hash32 verify_block(HostContext& ctx, uint64_t block_number, const Bytes& block_data) {
    const auto anchored = ctx.blockhash(block_number);
    if (!anchored.has_value())
        ctx.revert(reason::kBlockOutOfWindow);
    if (keccak256(block_data) != *anchored)
        ctx.revert(reason::kBlockMismatch);
    try {
        const rlp::Item header = rlp::decode(block_data);
        const auto& fields = header.as_list();
        if (fields.size() != 8)
            ctx.revert(reason::kBlockMismatch);
        return hash_from_bytes(fields[kHeaderReceiptsRootIndex].as_bytes());
    } catch (const Revert&) {
        throw;
    } catch (const std::exception&) {
        ctx.revert(reason::kBlockMismatch);
    }
}

// eventVerify step 2: walk the proof down to the receipt bytes.
Bytes verify_proof(HostContext& ctx, const Hash32& receipts_root, uint64_t receipt_index,
    const trie::MerkleProof& proof) {
    try {
        return trie::verify(receipts_root, receipt_index, proof);
    } catch (const trie::TrieError&) {
        ctx.revert(reason::kProofInvalid);
    }
}

// eventVerify step 3: pick the claimed log out of the receipt and match it
// against the committed digest and emitter.
void verify_log(HostContext& ctx, const Bytes& receipt_octets, uint64_t log_index,
    const Address& expected_emitter, const Hash32& commitment) {
    try {
        const rlp::Item receipt = rlp::decode(receipt_octets);
        const auto& fields = receipt.as_list();
        if (fields.size() != 4)
            ctx.revert(reason::kLogMismatch);
        const auto& logs = fields[kReceiptLogsIndex].as_list();
        if (log_index >= logs.size())
            ctx.revert(reason::kLogMismatch);
        const rlp::Item& entry = logs[log_index];
        const auto& entry_fields = entry.as_list();
        if (entry_fields.size() != 3)
            ctx.revert(reason::kLogMismatch);
        if (!equal(entry_fields[0].as_bytes(), ByteView{expected_emitter.bytes}))
            ctx.revert(reason::kLogMismatch);
        if (keccak256(rlp::encode(entry)) != commitment)
            ctx.revert(reason::kLogMismatch);
    } catch (const Revert&) {
        throw;
    } catch (const std::exception&) {
        ctx.revert(reason::kLogMismatch);
    }
}

// Kind-dispatched release of the reservation. A failing release target does
// not undo the trigger; the outcome lands in the execution trace.
void msg_release(HostContext& ctx, const ReservedTransaction& reserved) {
    switch (reserved.kind) {
    case ReservedKind::FundTransfer:
        ctx.send_message({ctx.self(), *reserved.recipient, reserved.value, {}});
        break;
    case ReservedKind::FunctionInvocation:
        ctx.send_message({ctx.self(), *reserved.recipient, reserved.value, reserved.payload});
        break;
    case ReservedKind::ContractCreation:
        ctx.send_message({ctx.self(), std::nullopt, 0, reserved.payload});
        break;
    }
}

void proxy_construct(HostContext& ctx, ByteView init_args) {
    rlp::Item init{};
    try {
        init = rlp::decode(init_args);
    } catch (const rlp::RlpError&) {
        ctx.revert("malformed proxy init");
    }
    const auto& fields = init.as_list();
    if (fields.size() != 7)
        ctx.revert("proxy init must have 7 fields");

    const uint64_t kind = fields[3].to_uint();
    if (kind > static_cast<uint64_t>(ReservedKind::ContractCreation))
        ctx.revert("unknown reservation kind");
    const Bytes& recipient = fields[4].as_bytes();
    if (!recipient.empty() && recipient.size() != 20)
        ctx.revert("reservation recipient must be 20 octets");
    if (fields[2].as_bytes().size() != 32)
        ctx.revert("commitment must be 32 octets");

    // The reservation must satisfy the same shape rules the vm uses to
    // classify transactions.
    const uint64_t reserved_value = fields[5].to_uint();
    const bool has_payload = !fields[6].as_bytes().empty();
    switch (static_cast<ReservedKind>(kind)) {
    case ReservedKind::FundTransfer:
        if (recipient.empty() || reserved_value == 0)
            ctx.revert("fund transfer reservation needs recipient and value");
        break;
    case ReservedKind::FunctionInvocation:
        if (recipient.empty() || !has_payload)
            ctx.revert("invocation reservation needs recipient and payload");
        break;
    case ReservedKind::ContractCreation:
        if (!recipient.empty() || !has_payload)
            ctx.revert("creation reservation needs payload and no recipient");
        break;
    }

    ctx.storage_write(key(kSlotOwner), ByteView{ctx.message().from.bytes});
    ctx.storage_write(key(kSlotFee), fields[0].as_bytes());
    ctx.storage_write(key(kSlotEmitter), fields[1].as_bytes());
    ctx.storage_write(key(kSlotCommitment), fields[2].as_bytes());
    ctx.storage_write(key(kSlotKind), fields[3].as_bytes());
    ctx.storage_write(key(kSlotRecipient), recipient);
    ctx.storage_write(key(kSlotValue), fields[5].as_bytes());
    ctx.storage_write(key(kSlotPayload), fields[6].as_bytes());
    write_state(ctx, ProxyState::Deployed);
}

void proxy_call(HostContext& ctx, const Message& msg) {
    const CallData call = parse_call(msg.data);

    if (call.selector == selector(kSigCharge)) {
        if (read_state(ctx) != ProxyState::Deployed)
            ctx.revert(reason::kWrongState);
        const uint64_t required = read_uint(ctx, kSlotFee) + read_uint(ctx, kSlotValue);
        if (msg.value < required)
            ctx.revert(reason::kInsufficientFunding);
        write_state(ctx, ProxyState::Funded);
        ctx.storage_write(key(kSlotFunded), uint_bytes(msg.value));
        return;
    }

    if (call.selector == selector(kSigMarkRegistered)) {
        if (read_state(ctx) != ProxyState::Funded)
            ctx.revert(reason::kWrongState);
        write_state(ctx, ProxyState::Registered);
        return;
    }

    if (call.selector == selector(kSigEventVerify)) {
        if (read_state(ctx) != ProxyState::Registered)
            ctx.revert(reason::kWrongState);
        if (call.args.size() != 5)
            ctx.revert("eventVerify expects 5 arguments");

        ProofBundle bundle;
        bundle.block_number = call.args[0].to_uint();
        bundle.block_data = call.args[1].as_bytes();
        for (const rlp::Item& node : call.args[2].as_list())
            bundle.proof.nodes.push_back(node.as_bytes());
        bundle.receipt_index = call.args[3].to_uint();
        bundle.log_index = call.args[4].to_uint();

        size_t proof_octets = bundle.block_data.size();
        for (const Bytes& node : bundle.proof.nodes)
            proof_octets += node.size();
        ctx.charge_proof_octets(proof_octets);

        const Hash32 receipts_root = verify_block(ctx, bundle.block_number, bundle.block_data);
        const Bytes receipt_octets =
            verify_proof(ctx, receipts_root, bundle.receipt_index, bundle.proof);
        verify_log(ctx, receipt_octets, bundle.log_index,
            address_from_bytes(ctx.storage_read(key(kSlotEmitter))),
            hash_from_bytes(ctx.storage_read(key(kSlotCommitment))));

        write_state(ctx, ProxyState::Triggered);
        msg_release(ctx, read_reserved(ctx));
        const auto fee_result =
            ctx.send_message({ctx.self(), msg.from, read_uint(ctx, kSlotFee), {}});
        if (!fee_result.ok())
            ctx.revert("fee transfer failed");
        return;
    }

    if (call.selector == selector(kSigClose)) {
        const Address owner = address_from_bytes(ctx.storage_read(key(kSlotOwner)));
        if (msg.from != owner)
            ctx.revert(reason::kNotOwner);
        const ProxyState state = read_state(ctx);
        if (state != ProxyState::Funded && state != ProxyState::Registered)
            ctx.revert(reason::kWrongState);
        write_state(ctx, ProxyState::Closed);
        const auto refund = ctx.send_message({ctx.self(), owner, ctx.balance(ctx.self()), {}});
        if (!refund.ok())
            ctx.revert("refund failed");
        return;
    }

    ctx.revert("unknown selector");
}

void hub_call(HostContext& ctx, const Message& msg) {
    const CallData call = parse_call(msg.data);
    if (call.selector != selector(kSigNewService))
        ctx.revert("unknown selector");
    if (call.args.size() != 1)
        ctx.revert("newService expects 1 argument");
    const Address proxy = address_from_bytes(call.args[0].as_bytes());

    Bytes registry = ctx.storage_read(key(kSlotRegistry));
    for (size_t off = 0; off + 20 <= registry.size(); off += 20) {
        if (equal(ByteView{registry}.subspan(off, 20), ByteView{proxy.bytes}))
            ctx.revert(reason::kAlreadyRegistered);
    }

    const auto marked = ctx.send_message(
        {ctx.self(), proxy, 0, encode_call(kSigMarkRegistered, {})});
    if (!marked.ok())
        ctx.revert(marked.revert_reason.empty() ? "registration failed"
                                                : marked.revert_reason);

    registry.insert(registry.end(), proxy.bytes.begin(), proxy.bytes.end());
    ctx.storage_write(key(kSlotRegistry), registry);
    ctx.emit_log({keccak256(kSigNewServiceLog)},
        rlp::encode_bytes(ByteView{proxy.bytes}));
}

void emitter_call(HostContext& ctx, const Message& msg) {
    const CallData call = parse_call(msg.data);
    if (call.selector != selector(kSigEmitLog))
        ctx.revert("unknown selector");
    if (call.args.size() != 2)
        ctx.revert("emitLog expects 2 arguments");
    std::vector<Hash32> topics;
    for (const rlp::Item& t : call.args[0].as_list())
        topics.push_back(hash_from_bytes(t.as_bytes()));
    ctx.emit_log(std::move(topics), call.args[1].as_bytes());
}

void sentinel_call(HostContext& ctx, const Message& msg) {
    const CallData call = parse_call(msg.data);
    if (call.selector != selector(kSigSetSentinel))
        ctx.revert("unknown selector");
    if (call.args.size() != 1)
        ctx.revert("setSentinel expects 1 argument");
    ctx.storage_write(key("sentinel"), call.args[0].as_bytes());
}

}  // namespace

Hash32 log_commitment(const LogEntry& entry) {
    return keccak256(encode_log(entry));
}

Bytes encode_proxy_init(const ProxyConfig& config) {
    return rlp::encode(rlp::Item::list({
        rlp::Item::uint(config.service_fee),
        rlp::Item::bytes(ByteView{config.expected_emitter.bytes}),
        rlp::Item::bytes(ByteView{config.event_commitment.bytes}),
        rlp::Item::uint(static_cast<uint64_t>(config.reserved.kind)),
        config.reserved.recipient
            ? rlp::Item::bytes(ByteView{config.reserved.recipient->bytes})
            : rlp::Item::bytes(Bytes{}),
        rlp::Item::uint(config.reserved.value),
        rlp::Item::bytes(config.reserved.payload),
    }));
}

Bytes encode_proxy_creation(const ProxyConfig& config) {
    return encode_creation(kProxyHandler, encode_proxy_init(config));
}

Bytes encode_charge_call() {
    return encode_call(kSigCharge, {});
}

Bytes encode_new_service_call(const Address& proxy) {
    return encode_call(kSigNewService, {rlp::Item::bytes(ByteView{proxy.bytes})});
}

Bytes encode_event_verify_call(const ProofBundle& bundle) {
    std::vector<rlp::Item> nodes;
    nodes.reserve(bundle.proof.nodes.size());
    for (const Bytes& node : bundle.proof.nodes)
        nodes.push_back(rlp::Item::bytes(node));
    return encode_call(kSigEventVerify, {
        rlp::Item::uint(bundle.block_number),
        rlp::Item::bytes(bundle.block_data),
        rlp::Item::list(std::move(nodes)),
        rlp::Item::uint(bundle.receipt_index),
        rlp::Item::uint(bundle.log_index),
    });
}

Bytes encode_close_call() {
    return encode_call(kSigClose, {});
}

Bytes encode_emit_log_call(const std::vector<Hash32>& topics, ByteView data) {
    std::vector<rlp::Item> topic_items;
    topic_items.reserve(topics.size());
    for (const Hash32& t : topics)
        topic_items.push_back(rlp::Item::bytes(ByteView{t.bytes}));
    return encode_call(kSigEmitLog,
        {rlp::Item::list(std::move(topic_items)), rlp::Item::bytes(data)});
}

void install_warden_handlers(HandlerRegistry& registry) {
    registry.add(std::string{kProxyHandler}, {proxy_construct, proxy_call});
    registry.add(std::string{kHubHandler}, {{}, hub_call});
}

void install_scenario_handlers(HandlerRegistry& registry) {
    registry.add(std::string{kEventEmitterHandler}, {{}, emitter_call});
    registry.add(std::string{kSentinelHandler}, {
        [](HostContext& ctx, ByteView init) { ctx.storage_write(key("init"), init); },
        sentinel_call,
    });
    registry.add(std::string{kReverterHandler}, {
        [](HostContext& ctx, ByteView) { ctx.revert("constructor reverted"); },
        [](HostContext& ctx, const Message&) { ctx.revert("target reverted"); },
    });
}

namespace {

Bytes storage_of(const State& state, const Address& contract, std::string_view slot) {
    const auto it = state.find(contract);
    if (it == state.end() || !it->second.is_contract())
        throw std::invalid_argument{"not a contract account"};
    const auto& storage = it->second.contract->storage;
    const auto entry = storage.find(to_bytes(key(slot)));
    return entry == storage.end() ? Bytes{} : entry->second;
}

}  // namespace

ProxyView read_proxy(const State& state, const Address& proxy) {
    ProxyView view;
    view.owner = address_from_bytes(storage_of(state, proxy, kSlotOwner));
    view.config.service_fee =
        rlp::Item::from_big_compact(storage_of(state, proxy, kSlotFee));
    view.config.expected_emitter =
        address_from_bytes(storage_of(state, proxy, kSlotEmitter));
    view.config.event_commitment =
        hash_from_bytes(storage_of(state, proxy, kSlotCommitment));
    view.config.reserved.kind = static_cast<ReservedKind>(
        rlp::Item::from_big_compact(storage_of(state, proxy, kSlotKind)));
    const Bytes recipient = storage_of(state, proxy, kSlotRecipient);
    if (!recipient.empty())
        view.config.reserved.recipient = address_from_bytes(recipient);
    view.config.reserved.value =
        rlp::Item::from_big_compact(storage_of(state, proxy, kSlotValue));
    view.config.reserved.payload = storage_of(state, proxy, kSlotPayload);
    view.state = static_cast<ProxyState>(
        rlp::Item::from_big_compact(storage_of(state, proxy, kSlotState)));
    view.funded_amount = rlp::Item::from_big_compact(storage_of(state, proxy, kSlotFunded));
    return view;
}

ProxyState read_proxy_state(const State& state, const Address& proxy) {
    return static_cast<ProxyState>(
        rlp::Item::from_big_compact(storage_of(state, proxy, kSlotState)));
}

std::vector<Address> read_hub_registry(const State& state, const Address& hub) {
    const Bytes registry = storage_of(state, hub, kSlotRegistry);
    std::vector<Address> out;
    for (size_t off = 0; off + 20 <= registry.size(); off += 20)
        out.push_back(address_from_bytes(ByteView{registry}.subspan(off, 20)));
    return out;
}

}  // namespace warden
