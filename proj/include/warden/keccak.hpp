// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <warden/bytes.hpp>

namespace warden {

/// Keccak-256 with the original Keccak padding (domain byte 0x01, not the
/// standardized SHA-3 0x06). Single digest function for node identity,
/// header digests, commitments and call selectors.
Hash32 keccak256(ByteView data);

inline Hash32 keccak256(std::string_view s) {
    return keccak256(ByteView{reinterpret_cast<const uint8_t*>(s.data()), s.size()});
}

}  // namespace warden
