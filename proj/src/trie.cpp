// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#include <warden/trie.hpp>

#include <warden/keccak.hpp>
#include <warden/rlp.hpp>

#include <array>
#include <optional>

namespace warden::trie {

namespace {

Nibbles to_nibbles(ByteView data) {
    Nibbles out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(b >> 4);
        out.push_back(b & 0x0f);
    }
    return out;
}

// Leaf paths pack to octets behind a leading length-parity nibble: an odd
// remainder gets [1], an even one [0, 0] so the total nibble count is even.
Bytes pack_path(const Nibbles& path) {
    Nibbles padded;
    padded.reserve(path.size() + 2);
    if (path.size() % 2 == 1) {
        padded.push_back(1);
    } else {
        padded.push_back(0);
        padded.push_back(0);
    }
    padded.insert(padded.end(), path.begin(), path.end());

    Bytes out(padded.size() / 2);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<uint8_t>(padded[2 * i] << 4 | padded[2 * i + 1]);
    return out;
}

Nibbles unpack_path(ByteView packed) {
    if (packed.empty())
        throw MalformedNode{"leaf path is empty"};
    const Nibbles raw = to_nibbles(packed);
    const uint8_t parity = raw[0];
    size_t skip;
    if (parity == 1) {
        skip = 1;
    } else if (parity == 0) {
        if (raw.size() < 2 || raw[1] != 0)
            throw MalformedNode{"leaf path pad nibble must be zero"};
        skip = 2;
    } else {
        throw MalformedNode{"leaf path parity nibble out of range"};
    }
    Nibbles path{raw.begin() + static_cast<ptrdiff_t>(skip), raw.end()};
    if (path.size() % 2 != parity)
        throw MalformedNode{"leaf path parity mismatch"};
    return path;
}

struct Entry {
    Nibbles key;
    const Bytes* value;
};

Bytes encode_leaf(const Nibbles& remainder, const Bytes& value) {
    return rlp::encode(rlp::Item::list({
        rlp::Item::bytes(pack_path(remainder)),
        rlp::Item::bytes(value),
    }));
}

Bytes encode_branch(const std::array<std::optional<Hash32>, 16>& children, const Bytes* value) {
    std::vector<rlp::Item> items;
    items.reserve(17);
    for (const auto& child : children) {
        if (child)
            items.push_back(rlp::Item::bytes(ByteView{child->bytes}));
        else
            items.push_back(rlp::Item::bytes(Bytes{}));
    }
    items.push_back(value ? rlp::Item::bytes(*value) : rlp::Item::bytes(Bytes{}));
    return rlp::encode(rlp::Item::list(std::move(items)));
}

Hash32 insert_node(std::map<Hash32, Bytes>& store, Bytes encoding) {
    const Hash32 digest = keccak256(encoding);
    store.emplace(digest, std::move(encoding));
    return digest;
}

Hash32 build_subtree(std::map<Hash32, Bytes>& store, const std::vector<Entry>& entries,
    size_t depth) {
    if (entries.size() == 1) {
        const Entry& e = entries.front();
        Nibbles remainder{e.key.begin() + static_cast<ptrdiff_t>(depth), e.key.end()};
        return insert_node(store, encode_leaf(remainder, *e.value));
    }

    std::array<std::vector<Entry>, 16> groups;
    const Bytes* branch_value = nullptr;
    for (const Entry& e : entries) {
        if (e.key.size() == depth) {
            // Unreachable for RLP-encoded index keys (they are prefix-free),
            // kept for structural generality.
            branch_value = e.value;
            continue;
        }
        groups[e.key[depth]].push_back(e);
    }

    std::array<std::optional<Hash32>, 16> children;
    for (int nib = 0; nib < 16; ++nib) {
        if (!groups[nib].empty())
            children[nib] = build_subtree(store, groups[nib], depth + 1);
    }
    return insert_node(store, encode_branch(children, branch_value));
}

// Decoded branch shape used by prove(); verify() re-decodes adversarial input
// with its own checks.
struct DecodedNode {
    rlp::Item item;

    bool is_branch() const { return item.as_list().size() == 17; }
    bool is_leaf() const { return item.as_list().size() == 2; }
};

}  // namespace

Nibbles key_nibbles(uint64_t index) {
    return to_nibbles(rlp::encode_uint(index));
}

ReceiptTrie ReceiptTrie::build(const std::vector<Bytes>& encoded_receipts) {
    if (encoded_receipts.empty())
        throw EmptyReceipts{"receipt trie requires at least one receipt"};

    std::vector<Entry> entries;
    entries.reserve(encoded_receipts.size());
    for (size_t i = 0; i < encoded_receipts.size(); ++i)
        entries.push_back({key_nibbles(i), &encoded_receipts[i]});

    ReceiptTrie trie;
    trie.size_ = encoded_receipts.size();
    trie.root_ = build_subtree(trie.store_, entries, 0);
    return trie;
}

MerkleProof ReceiptTrie::prove(uint64_t index) const {
    const Nibbles key = key_nibbles(index);
    MerkleProof proof;

    Hash32 digest = root_;
    size_t pos = 0;
    for (;;) {
        const auto it = store_.find(digest);
        if (it == store_.end())
            throw UnknownIndex{"node missing from store"};
        proof.nodes.push_back(it->second);

        const rlp::Item node = rlp::decode(it->second);
        const auto& fields = node.as_list();
        if (fields.size() == 2) {
            const Nibbles remainder = unpack_path(fields[0].as_bytes());
            if (!std::equal(remainder.begin(), remainder.end(), key.begin() + pos, key.end()))
                throw UnknownIndex{"no receipt at index"};
            return proof;
        }
        if (pos >= key.size())
            throw UnknownIndex{"key exhausted at branch"};
        const Bytes& child = fields[key[pos]].as_bytes();
        if (child.empty())
            throw UnknownIndex{"no receipt at index"};
        digest = hash_from_bytes(child);
        ++pos;
    }
}

Bytes verify(const Hash32& root, uint64_t index, const MerkleProof& proof) {
    if (proof.nodes.empty())
        throw MalformedNode{"proof has no nodes"};
    if (keccak256(proof.nodes.front()) != root)
        throw RootMismatch{"first node does not hash to the root"};

    const Nibbles key = key_nibbles(index);
    size_t pos = 0;

    for (size_t i = 0; i + 1 < proof.nodes.size(); ++i) {
        rlp::Item node{};
        try {
            node = rlp::decode(proof.nodes[i]);
        } catch (const rlp::RlpError&) {
            throw MalformedNode{"node is not canonical RLP"};
        }
        if (!node.is_list() || node.as_list().size() != 17)
            throw MalformedNode{"non-terminal node is not a branch"};
        const auto& fields = node.as_list();
        for (const rlp::Item& f : fields) {
            if (!f.is_bytes())
                throw MalformedNode{"branch field is not a byte string"};
        }
        if (pos >= key.size())
            throw PathMismatch{"key exhausted before the leaf"};
        const Bytes& child = fields[key[pos]].as_bytes();
        if (child.empty())
            throw LinkMismatch{"branch has no child at the key nibble"};
        if (child.size() != 32)
            throw MalformedNode{"child reference is not a 32-octet digest"};
        if (keccak256(proof.nodes[i + 1]) != hash_from_bytes(child))
            throw LinkMismatch{"child digest does not match the next node"};
        ++pos;
    }

    rlp::Item leaf{};
    try {
        leaf = rlp::decode(proof.nodes.back());
    } catch (const rlp::RlpError&) {
        throw MalformedNode{"node is not canonical RLP"};
    }
    if (!leaf.is_list() || leaf.as_list().size() != 2)
        throw MalformedNode{"terminal node is not a leaf"};
    const auto& fields = leaf.as_list();
    if (!fields[0].is_bytes() || !fields[1].is_bytes())
        throw MalformedNode{"leaf field is not a byte string"};

    const Nibbles remainder = unpack_path(fields[0].as_bytes());
    if (!std::equal(remainder.begin(), remainder.end(), key.begin() + pos, key.end()))
        throw PathMismatch{"consumed nibbles plus remainder do not spell the key"};
    return fields[1].as_bytes();
}

Bytes serialize_proof(const MerkleProof& proof) {
    std::vector<rlp::Item> items;
    items.reserve(proof.nodes.size());
    for (const Bytes& node : proof.nodes)
        items.push_back(rlp::Item::bytes(node));
    return rlp::encode(rlp::Item::list(std::move(items)));
}

MerkleProof parse_proof(ByteView data) {
    rlp::Item item{};
    try {
        item = rlp::decode(data);
    } catch (const rlp::RlpError&) {
        throw MalformedNode{"proof is not canonical RLP"};
    }
    if (!item.is_list())
        throw MalformedNode{"proof must be a list of node encodings"};
    MerkleProof proof;
    for (const rlp::Item& node : item.as_list()) {
        if (!node.is_bytes())
            throw MalformedNode{"proof node must be a byte string"};
        proof.nodes.push_back(node.as_bytes());
    }
    return proof;
}

Hash32 empty_trie_root() {
    return keccak256(rlp::encode(rlp::Item::list({})));
}

}  // namespace warden::trie
