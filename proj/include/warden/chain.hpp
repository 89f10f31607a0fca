// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <warden/chain_types.hpp>
#include <warden/trie.hpp>
#include <warden/vm.hpp>

#include <optional>
#include <vector>

namespace warden {

struct UnknownBlock : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Block {
    BlockHeader header;
    std::vector<Transaction> transactions;
    std::vector<Receipt> receipts;
    std::vector<TraceEvent> trace;  // execution audit, not part of the wire form
};

/// Fate of one submitted transaction within append_block.
struct TxOutcome {
    bool included = false;
    size_t receipt_index = 0;
    std::string drop_reason;
};

struct ChainConfig {
    uint64_t blockhash_window = 256;
    uint64_t block_interval = 15;  // simulated seconds per block
};

/// Deterministic canonical chain: blocks append in order, no forks. Single
/// writer; finalized blocks are safe for concurrent readers.
class Chain {
public:
    Chain(Vm vm, ChainConfig config, State genesis_state);

    /// Executes the transactions in order, builds the receipts and their
    /// trie, links and appends the block. Submission-invalid transactions
    /// are dropped from the block (they produce no receipt); handler
    /// failures are included as status-0 receipts.
    const Block& append_block(const std::vector<Transaction>& txs,
        std::vector<TxOutcome>* outcomes = nullptr);

    /// Header digest of block `number` iff current − W ≤ number < current.
    std::optional<Hash32> blockhash(uint64_t number, uint64_t current) const;

    const Block& get_block(uint64_t number) const;  // throws UnknownBlock
    const Block& head() const { return blocks_.back(); }

    /// Receipt trie of a block; nullptr when the block has no receipts.
    const trie::ReceiptTrie* receipt_trie(uint64_t number) const;

    const State& state() const { return state_; }
    const Vm& vm() const { return vm_; }
    uint64_t window() const { return config_.blockhash_window; }

    /// Full block encoding for fixtures: [header, transactions, receipts].
    static Bytes encode_block(const Block& block);
    static Block decode_block(ByteView data);

private:
    Vm vm_;
    ChainConfig config_;
    State state_;
    std::vector<Block> blocks_;
    std::vector<Hash32> header_digests_;
    std::vector<std::optional<trie::ReceiptTrie>> tries_;
};

}  // namespace warden
