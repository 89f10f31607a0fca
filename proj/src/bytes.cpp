// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#include <warden/bytes.hpp>

#include <stdexcept>

namespace warden {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}
}  // namespace

std::string to_hex(ByteView data) {
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out += kHexDigits[b >> 4];
        out += kHexDigits[b & 0x0f];
    }
    return out;
}

Bytes from_hex(std::string_view hex) {
    if (hex.starts_with("0x") || hex.starts_with("0X"))
        hex.remove_prefix(2);
    if (hex.size() % 2 != 0)
        throw std::invalid_argument{"hex string has odd length"};
    Bytes out;
    out.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2) {
        const int hi = hex_value(hex[i]);
        const int lo = hex_value(hex[i + 1]);
        if (hi < 0 || lo < 0)
            throw std::invalid_argument{"invalid hex digit"};
        out.push_back(static_cast<uint8_t>(hi << 4 | lo));
    }
    return out;
}

Address address_from_bytes(ByteView v) {
    if (v.size() != 20)
        throw std::invalid_argument{"address must be 20 octets"};
    Address a;
    std::copy(v.begin(), v.end(), a.bytes.begin());
    return a;
}

Hash32 hash_from_bytes(ByteView v) {
    if (v.size() != 32)
        throw std::invalid_argument{"digest must be 32 octets"};
    Hash32 h;
    std::copy(v.begin(), v.end(), h.bytes.begin());
    return h;
}

}  // namespace warden
