// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#include <warden/keccak.hpp>

#include <bit>
#include <cstring>

namespace warden {

namespace {

constexpr uint64_t kRoundConstants[24] = {
    0x0000000000000001, 0x0000000000008082, 0x800000000000808a, 0x8000000080008000,
    0x000000000000808b, 0x0000000080000001, 0x8000000080008081, 0x8000000000008009,
    0x000000000000008a, 0x0000000000000088, 0x0000000080008009, 0x000000008000000a,
    0x000000008000808b, 0x800000000000008b, 0x8000000000008089, 0x8000000000008003,
    0x8000000000008002, 0x8000000000000080, 0x000000000000800a, 0x800000008000000a,
    0x8000000080008081, 0x8000000000008080, 0x0000000080000001, 0x8000000080008008,
};

// Rotation offsets indexed [x][y]; lane (x, y) lives at state index x + 5y.
constexpr int kRotation[5][5] = {
    {0, 36, 3, 41, 18},
    {1, 44, 10, 45, 2},
    {62, 6, 43, 15, 61},
    {28, 55, 25, 21, 56},
    {27, 20, 39, 8, 14},
};

void keccak_f1600(uint64_t st[25]) {
    for (int round = 0; round < 24; ++round) {
        // theta
        uint64_t c[5];
        for (int x = 0; x < 5; ++x)
            c[x] = st[x] ^ st[x + 5] ^ st[x + 10] ^ st[x + 15] ^ st[x + 20];
        for (int x = 0; x < 5; ++x) {
            const uint64_t d = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
            for (int y = 0; y < 5; ++y)
                st[x + 5 * y] ^= d;
        }
        // rho + pi
        uint64_t b[25];
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                b[y + 5 * ((2 * x + 3 * y) % 5)] = std::rotl(st[x + 5 * y], kRotation[x][y]);
        // chi
        for (int y = 0; y < 5; ++y)
            for (int x = 0; x < 5; ++x)
                st[x + 5 * y] = b[x + 5 * y] ^ (~b[(x + 1) % 5 + 5 * y] & b[(x + 2) % 5 + 5 * y]);
        // iota
        st[0] ^= kRoundConstants[round];
    }
}

uint64_t load_le64(const uint8_t* p) {
    uint64_t v;
    std::memcpy(&v, p, 8);
    return v;  // little-endian host
}

void absorb_block(uint64_t st[25], const uint8_t* block) {
    for (int i = 0; i < 17; ++i)
        st[i] ^= load_le64(block + 8 * i);
    keccak_f1600(st);
}

}  // namespace

Hash32 keccak256(ByteView data) {
    constexpr size_t kRate = 136;
    uint64_t st[25] = {};

    size_t offset = 0;
    while (data.size() - offset >= kRate) {
        absorb_block(st, data.data() + offset);
        offset += kRate;
    }

    uint8_t last[kRate] = {};
    const size_t tail = data.size() - offset;
    if (tail > 0)
        std::memcpy(last, data.data() + offset, tail);
    last[tail] ^= 0x01;
    last[kRate - 1] ^= 0x80;
    absorb_block(st, last);

    Hash32 out;
    for (int i = 0; i < 4; ++i)
        std::memcpy(out.bytes.data() + 8 * i, &st[i], 8);
    return out;
}

}  // namespace warden
