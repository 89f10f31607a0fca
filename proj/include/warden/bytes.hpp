// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace warden {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

/// 20-octet account identifier.
struct Address {
    std::array<uint8_t, 20> bytes{};

    auto operator<=>(const Address&) const = default;
    bool is_zero() const {
        return std::all_of(bytes.begin(), bytes.end(), [](uint8_t b) { return b == 0; });
    }
};

/// 32-octet digest value.
struct Hash32 {
    std::array<uint8_t, 32> bytes{};

    auto operator<=>(const Hash32&) const = default;
    bool is_zero() const {
        return std::all_of(bytes.begin(), bytes.end(), [](uint8_t b) { return b == 0; });
    }
};

inline Bytes to_bytes(ByteView v) {
    return Bytes{v.begin(), v.end()};
}

inline bool equal(ByteView a, ByteView b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_hex(ByteView data);
inline std::string to_hex(const Address& a) { return to_hex(ByteView{a.bytes}); }
inline std::string to_hex(const Hash32& h) { return to_hex(ByteView{h.bytes}); }

/// Parses hex with optional 0x prefix; throws std::invalid_argument on bad input.
Bytes from_hex(std::string_view hex);

Address address_from_bytes(ByteView v);  // throws std::invalid_argument unless 20 octets
Hash32 hash_from_bytes(ByteView v);      // throws std::invalid_argument unless 32 octets

}  // namespace warden
