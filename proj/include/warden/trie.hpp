// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <warden/bytes.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace warden::trie {

struct TrieError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyReceipts : TrieError {
    using TrieError::TrieError;
};
struct UnknownIndex : TrieError {
    using TrieError::TrieError;
};
struct RootMismatch : TrieError {
    using TrieError::TrieError;
};
struct LinkMismatch : TrieError {
    using TrieError::TrieError;
};
struct PathMismatch : TrieError {
    using TrieError::TrieError;
};
struct MalformedNode : TrieError {
    using TrieError::TrieError;
};

/// Key nibbles, one octet per nibble, values 0-15, high nibble first.
using Nibbles = std::vector<uint8_t>;

/// Proof path from the root node down to the leaf, as raw node encodings.
struct MerkleProof {
    std::vector<Bytes> nodes;

    bool operator==(const MerkleProof&) const = default;
};

/// Key of receipt `index`: the nibble sequence of the RLP encoding of the
/// minimal big-endian index.
Nibbles key_nibbles(uint64_t index);

/// Hexary trie over the receipts of one block. Branch and Leaf nodes only:
/// every shared nibble becomes a Branch, the unconsumed key tail lives in the
/// Leaf. Nodes are stored and referenced by the Keccak-256 digest of their
/// RLP encoding. Immutable once built.
class ReceiptTrie {
public:
    /// Builds from the ordered list of RLP-encoded receipts; receipt i is
    /// keyed by key_nibbles(i). Throws EmptyReceipts on empty input.
    static ReceiptTrie build(const std::vector<Bytes>& encoded_receipts);

    const Hash32& root() const { return root_; }
    size_t size() const { return size_; }
    const std::map<Hash32, Bytes>& store() const { return store_; }

    /// Root-to-leaf node path for an inserted index. Throws UnknownIndex.
    MerkleProof prove(uint64_t index) const;

private:
    ReceiptTrie() = default;

    Hash32 root_;
    size_t size_ = 0;
    std::map<Hash32, Bytes> store_;
};

/// Adversarial-input-safe check that `proof` binds a receipt encoding to
/// `index` under `root`; returns that encoding. Throws RootMismatch,
/// LinkMismatch, PathMismatch or MalformedNode.
Bytes verify(const Hash32& root, uint64_t index, const MerkleProof& proof);

/// Proofs interchange as an RLP list of node encodings, bit-exact.
Bytes serialize_proof(const MerkleProof& proof);
MerkleProof parse_proof(ByteView data);  // throws MalformedNode

/// Sentinel root for a block with no receipts: keccak256 of the empty RLP list.
Hash32 empty_trie_root();

}  // namespace warden::trie
