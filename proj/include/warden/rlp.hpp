// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <warden/bytes.hpp>

#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

namespace warden::rlp {

struct RlpError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Truncated payload, trailing octets, a length prefix past the input end,
/// or an item accessed with the wrong kind.
struct MalformedRlp : RlpError {
    using RlpError::RlpError;
};

/// Input that only decodes under a non-canonical form: a single octet below
/// 0x80 wrapped as a length-1 string, a long-form length that fits the short
/// form, or a length with leading zero octets. Rejected strictly because node
/// and header identity is the digest of the encoding.
struct NonCanonical : RlpError {
    using RlpError::RlpError;
};

/// Recursive value: a byte string or an ordered list of items.
class Item {
public:
    Item() : value_(Bytes{}) {}

    static Item bytes(Bytes v) { return Item{std::move(v)}; }
    static Item bytes(ByteView v) { return Item{to_bytes(v)}; }
    static Item list(std::vector<Item> items) { return Item{std::move(items)}; }
    /// Minimal big-endian integer; zero is the empty byte string.
    static Item uint(uint64_t n) { return Item{to_big_compact(n)}; }

    bool is_bytes() const { return std::holds_alternative<Bytes>(value_); }
    bool is_list() const { return !is_bytes(); }

    const Bytes& as_bytes() const;
    const std::vector<Item>& as_list() const;
    uint64_t to_uint() const;  // strict: rejects leading zeros and >8 octets

    bool operator==(const Item&) const = default;

    static Bytes to_big_compact(uint64_t n);
    /// Inverse of to_big_compact; throws NonCanonical on a leading zero octet
    /// and MalformedRlp when the value exceeds 64 bits.
    static uint64_t from_big_compact(ByteView v);

private:
    explicit Item(Bytes v) : value_(std::move(v)) {}
    explicit Item(std::vector<Item> v) : value_(std::move(v)) {}

    std::variant<Bytes, std::vector<Item>> value_;
};

/// Canonical encoding; total over all items.
Bytes encode(const Item& item);

/// Strict canonical decoding of exactly one item consuming all input.
/// Nesting is bounded at 64 levels; deeper input is rejected as malformed.
Item decode(ByteView data);

inline Bytes encode_bytes(ByteView v) { return encode(Item::bytes(v)); }
inline Bytes encode_uint(uint64_t n) { return encode(Item::uint(n)); }

}  // namespace warden::rlp
