// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#include <warden/keccak.hpp>

#include <gtest/gtest.h>

using namespace warden;

// Expected digests computed with tests/oracles/keccak_oracle.py, which is
// validated against the published empty-input digest before use.

TEST(keccak, empty_input)
{
    EXPECT_EQ(to_hex(keccak256(ByteView{})),
        "c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470");
}

TEST(keccak, abc)
{
    EXPECT_EQ(to_hex(keccak256("abc")),
        "4e03657aea45a94fc7d47ba826c8d667c0d1e6e33a64a036ec44f58fa12d6c45");
}

TEST(keccak, quick_brown_fox)
{
    EXPECT_EQ(to_hex(keccak256("The quick brown fox jumps over the lazy dog")),
        "4d741b6f1eb29cb2a9b9911c82f56fa8d73b04959d3d9d222895df6c0b28aa15");
}

TEST(keccak, rate_boundaries)
{
    const Bytes b135(135, 0x00);
    const Bytes b136(136, 0x00);
    const Bytes b137(137, 0x00);
    EXPECT_EQ(to_hex(keccak256(b135)),
        "29e3704feeca7fb9ba229f0fa04d9b36449cf3ad6e1d85d9cfff3a10df9abc3e");
    EXPECT_EQ(to_hex(keccak256(b136)),
        "3a5912a7c5faa06ee4fe906253e339467a9ce87d533c65be3c15cb231cdb25f9");
    EXPECT_EQ(to_hex(keccak256(b137)),
        "bee7fbb405cb0d91a8775e338c4a5e4b5d6b2d051f687fa942043cffdc73bd28");
}

TEST(keccak, dog)
{
    EXPECT_EQ(to_hex(keccak256("dog")),
        "41791102999c339c844880b23950704cc43aa840f3739e365323cda4dfa89e7a");
}

TEST(keccak, string_view_overload_matches_bytes)
{
    const Bytes raw{'a', 'b', 'c'};
    EXPECT_EQ(keccak256("abc"), keccak256(ByteView{raw}));
}
