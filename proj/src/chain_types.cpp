// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#include <warden/chain_types.hpp>

#include <warden/keccak.hpp>

namespace warden {

namespace {

rlp::Item fixed_bytes(ByteView v) {
    return rlp::Item::bytes(v);
}

const Bytes& bloom_placeholder() {
    static const Bytes bloom(256, 0x00);
    return bloom;
}

}  // namespace

rlp::Item log_item(const LogEntry& entry) {
    std::vector<rlp::Item> topics;
    topics.reserve(entry.topics.size());
    for (const Hash32& t : entry.topics)
        topics.push_back(fixed_bytes(ByteView{t.bytes}));
    return rlp::Item::list({
        fixed_bytes(ByteView{entry.emitter.bytes}),
        rlp::Item::list(std::move(topics)),
        rlp::Item::bytes(entry.data),
    });
}

Bytes encode_log(const LogEntry& entry) {
    return rlp::encode(log_item(entry));
}

LogEntry decode_log(const rlp::Item& item) {
    const auto& fields = item.as_list();
    if (fields.size() != 3)
        throw rlp::MalformedRlp{"log entry must have 3 fields"};
    LogEntry entry;
    entry.emitter = address_from_bytes(fields[0].as_bytes());
    for (const rlp::Item& t : fields[1].as_list())
        entry.topics.push_back(hash_from_bytes(t.as_bytes()));
    entry.data = fields[2].as_bytes();
    return entry;
}

Bytes encode_receipt(const Receipt& receipt) {
    std::vector<rlp::Item> logs;
    logs.reserve(receipt.logs.size());
    for (const LogEntry& log : receipt.logs)
        logs.push_back(log_item(log));
    return rlp::encode(rlp::Item::list({
        rlp::Item::uint(receipt.status),
        rlp::Item::uint(receipt.cumulative_gas_used),
        rlp::Item::bytes(bloom_placeholder()),
        rlp::Item::list(std::move(logs)),
    }));
}

Receipt decode_receipt(ByteView data) {
    const rlp::Item item = rlp::decode(data);
    const auto& fields = item.as_list();
    if (fields.size() != 4)
        throw rlp::MalformedRlp{"receipt must have 4 fields"};
    Receipt receipt;
    receipt.status = fields[0].to_uint();
    receipt.cumulative_gas_used = fields[1].to_uint();
    if (fields[2].as_bytes().size() != 256)
        throw rlp::MalformedRlp{"bloom placeholder must be 256 octets"};
    for (const rlp::Item& log : fields[kReceiptLogsIndex].as_list())
        receipt.logs.push_back(decode_log(log));
    return receipt;
}

Bytes encode_header(const BlockHeader& header) {
    return rlp::encode(rlp::Item::list({
        fixed_bytes(ByteView{header.parent_digest.bytes}),
        fixed_bytes(ByteView{header.ommers_placeholder.bytes}),
        fixed_bytes(ByteView{header.coinbase_placeholder.bytes}),
        fixed_bytes(ByteView{header.state_placeholder.bytes}),
        fixed_bytes(ByteView{header.tx_root_placeholder.bytes}),
        fixed_bytes(ByteView{header.receipts_root.bytes}),
        rlp::Item::uint(header.number),
        rlp::Item::uint(header.timestamp),
    }));
}

BlockHeader decode_header(ByteView data) {
    const rlp::Item item = rlp::decode(data);
    const auto& fields = item.as_list();
    if (fields.size() != 8)
        throw rlp::MalformedRlp{"header must have 8 fields"};
    BlockHeader header;
    header.parent_digest = hash_from_bytes(fields[0].as_bytes());
    header.ommers_placeholder = hash_from_bytes(fields[1].as_bytes());
    header.coinbase_placeholder = address_from_bytes(fields[2].as_bytes());
    header.state_placeholder = hash_from_bytes(fields[3].as_bytes());
    header.tx_root_placeholder = hash_from_bytes(fields[4].as_bytes());
    header.receipts_root = hash_from_bytes(fields[kHeaderReceiptsRootIndex].as_bytes());
    header.number = fields[6].to_uint();
    header.timestamp = fields[7].to_uint();
    return header;
}

Hash32 header_digest(const BlockHeader& header) {
    return keccak256(encode_header(header));
}

}  // namespace warden
