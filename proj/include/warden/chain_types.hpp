// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <warden/bytes.hpp>
#include <warden/rlp.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace warden {

/// Event written into a transaction receipt: [emitter, topics, data].
struct LogEntry {
    Address emitter;
    std::vector<Hash32> topics;
    Bytes data;

    bool operator==(const LogEntry&) const = default;
};

/// Transaction receipt. Wire layout is the 4-item list
/// [status, cumulativeGasUsed, logsBloomPlaceholder, logs], which pins the
/// logs at list index 3. The 256-octet zero bloom placeholder materializes
/// only in the encoding.
struct Receipt {
    uint64_t status = 0;  // 1 success, 0 reverted
    uint64_t cumulative_gas_used = 0;
    std::vector<LogEntry> logs;

    // Execution metadata, not part of the wire form.
    uint64_t gas_used = 0;
    std::string revert_reason;
};

/// Index of the logs field inside the encoded receipt list.
inline constexpr size_t kReceiptLogsIndex = 3;

/// Block header. Wire layout is the 8-item list in field order, which places
/// receiptsRoot at list index 5; the zero placeholders exist to pad the
/// layout to that offset.
struct BlockHeader {
    Hash32 parent_digest;
    Hash32 ommers_placeholder;
    Address coinbase_placeholder;
    Hash32 state_placeholder;
    Hash32 tx_root_placeholder;
    Hash32 receipts_root;
    uint64_t number = 0;
    uint64_t timestamp = 0;

    bool operator==(const BlockHeader&) const = default;
};

/// Index of receiptsRoot inside the encoded header list.
inline constexpr size_t kHeaderReceiptsRootIndex = 5;

rlp::Item log_item(const LogEntry& entry);
Bytes encode_log(const LogEntry& entry);
LogEntry decode_log(const rlp::Item& item);  // throws rlp::MalformedRlp on bad shape

Bytes encode_receipt(const Receipt& receipt);
Receipt decode_receipt(ByteView data);

Bytes encode_header(const BlockHeader& header);
BlockHeader decode_header(ByteView data);

/// Header identity: keccak256 of the canonical header encoding.
Hash32 header_digest(const BlockHeader& header);

}  // namespace warden
