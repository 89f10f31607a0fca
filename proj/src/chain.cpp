// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#include <warden/chain.hpp>

#include <warden/keccak.hpp>

namespace warden {

namespace {

rlp::Item transaction_item(const Transaction& tx) {
    return rlp::Item::list({
        rlp::Item::bytes(ByteView{tx.sender.bytes}),
        tx.recipient ? rlp::Item::bytes(ByteView{tx.recipient->bytes})
                     : rlp::Item::bytes(Bytes{}),
        rlp::Item::uint(tx.value),
        rlp::Item::bytes(tx.data),
        rlp::Item::uint(tx.gas_limit),
    });
}

Transaction transaction_from_item(const rlp::Item& item) {
    const auto& fields = item.as_list();
    if (fields.size() != 5)
        throw rlp::MalformedRlp{"transaction must have 5 fields"};
    Transaction tx;
    tx.sender = address_from_bytes(fields[0].as_bytes());
    if (!fields[1].as_bytes().empty())
        tx.recipient = address_from_bytes(fields[1].as_bytes());
    tx.value = fields[2].to_uint();
    tx.data = fields[3].as_bytes();
    tx.gas_limit = fields[4].to_uint();
    return tx;
}

}  // namespace

Chain::Chain(Vm vm, ChainConfig config, State genesis_state)
    : vm_(std::move(vm)), config_(config), state_(std::move(genesis_state)) {
    Block genesis;
    genesis.header.receipts_root = trie::empty_trie_root();
    blocks_.push_back(std::move(genesis));
    header_digests_.push_back(header_digest(blocks_.back().header));
    tries_.emplace_back(std::nullopt);
}

const Block& Chain::append_block(const std::vector<Transaction>& txs,
    std::vector<TxOutcome>* outcomes) {
    Block block;
    block.header.number = head().header.number + 1;
    block.header.timestamp = head().header.timestamp + config_.block_interval;
    block.header.parent_digest = header_digests_.back();

    BlockContext ctx;
    ctx.number = block.header.number;
    ctx.timestamp = block.header.timestamp;
    ctx.blockhash = [this, current = block.header.number](uint64_t n) {
        return blockhash(n, current);
    };

    if (outcomes)
        outcomes->clear();
    for (const Transaction& tx : txs) {
        try {
            Receipt receipt = vm_.execute_transaction(state_, tx, ctx);
            block.transactions.push_back(tx);
            block.receipts.push_back(std::move(receipt));
            if (outcomes)
                outcomes->push_back({true, block.receipts.size() - 1, {}});
        } catch (const SubmissionError& e) {
            if (outcomes)
                outcomes->push_back({false, 0, e.what()});
        }
    }

    if (block.receipts.empty()) {
        block.header.receipts_root = trie::empty_trie_root();
        tries_.emplace_back(std::nullopt);
    } else {
        std::vector<Bytes> encoded;
        encoded.reserve(block.receipts.size());
        for (const Receipt& r : block.receipts)
            encoded.push_back(encode_receipt(r));
        tries_.emplace_back(trie::ReceiptTrie::build(encoded));
        block.header.receipts_root = tries_.back()->root();
    }

    block.trace = vm_.drain_trace();
    blocks_.push_back(std::move(block));
    header_digests_.push_back(header_digest(blocks_.back().header));
    return blocks_.back();
}

std::optional<Hash32> Chain::blockhash(uint64_t number, uint64_t current) const {
    if (number >= current)
        return std::nullopt;  // a block cannot reference itself or the future
    if (number + config_.blockhash_window < current)
        return std::nullopt;
    if (number >= header_digests_.size())
        return std::nullopt;
    return header_digests_[number];
}

const Block& Chain::get_block(uint64_t number) const {
    if (number >= blocks_.size())
        throw UnknownBlock{"block " + std::to_string(number) + " beyond head"};
    return blocks_[number];
}

const trie::ReceiptTrie* Chain::receipt_trie(uint64_t number) const {
    if (number >= tries_.size())
        throw UnknownBlock{"block " + std::to_string(number) + " beyond head"};
    return tries_[number] ? &*tries_[number] : nullptr;
}

Bytes Chain::encode_block(const Block& block) {
    std::vector<rlp::Item> txs;
    txs.reserve(block.transactions.size());
    for (const Transaction& tx : block.transactions)
        txs.push_back(transaction_item(tx));

    std::vector<rlp::Item> receipts;
    receipts.reserve(block.receipts.size());
    for (const Receipt& r : block.receipts)
        receipts.push_back(rlp::Item::bytes(encode_receipt(r)));

    return rlp::encode(rlp::Item::list({
        rlp::Item::bytes(encode_header(block.header)),
        rlp::Item::list(std::move(txs)),
        rlp::Item::list(std::move(receipts)),
    }));
}

Block Chain::decode_block(ByteView data) {
    const rlp::Item item = rlp::decode(data);
    const auto& fields = item.as_list();
    if (fields.size() != 3)
        throw rlp::MalformedRlp{"block must have 3 fields"};
    Block block;
    block.header = decode_header(fields[0].as_bytes());
    for (const rlp::Item& tx : fields[1].as_list())
        block.transactions.push_back(transaction_from_item(tx));
    for (const rlp::Item& r : fields[2].as_list())
        block.receipts.push_back(decode_receipt(r.as_bytes()));
    return block;
}

}  // namespace warden
