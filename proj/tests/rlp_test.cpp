// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#include <warden/rlp.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace warden;
using rlp::Item;

namespace {

Item str(std::string_view s) {
    return Item::bytes(ByteView{reinterpret_cast<const uint8_t*>(s.data()), s.size()});
}

std::string encode_hex(const Item& item) {
    return to_hex(rlp::encode(item));
}

// Random item generator for roundtrip properties. Leaf lengths are skewed
// small with occasional jumps to the kilobyte range.
Item random_item(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> kind(0, depth >= 8 ? 1 : 3);
    if (kind(rng) <= 1) {
        std::uniform_int_distribution<int> len_class(0, 9);
        size_t len;
        const int cls = len_class(rng);
        if (cls < 6)
            len = std::uniform_int_distribution<size_t>(0, 8)(rng);
        else if (cls < 9)
            len = std::uniform_int_distribution<size_t>(9, 80)(rng);
        else
            len = std::uniform_int_distribution<size_t>(81, 1024)(rng);
        Bytes v(len);
        for (auto& b : v)
            b = static_cast<uint8_t>(rng());
        return Item::bytes(std::move(v));
    }
    std::uniform_int_distribution<size_t> count(0, 5);
    std::vector<Item> items;
    const size_t n = count(rng);
    items.reserve(n);
    for (size_t i = 0; i < n; ++i)
        items.push_back(random_item(rng, depth + 1));
    return Item::list(std::move(items));
}

}  // namespace

// Encodings cross-checked against tests/oracles/rlp_oracle.py.

TEST(rlp, encode_byte_strings)
{
    EXPECT_EQ(encode_hex(str("")), "80");
    EXPECT_EQ(encode_hex(str("dog")), "83646f67");
    EXPECT_EQ(encode_hex(Item::bytes(Bytes{0x0f})), "0f");
    EXPECT_EQ(encode_hex(Item::bytes(Bytes{0x80})), "8180");

    std::string expected55 = "b7";
    for (int i = 0; i < 55; ++i)
        expected55 += "61";
    EXPECT_EQ(encode_hex(Item::bytes(Bytes(55, 'a'))), expected55);
}

TEST(rlp, encode_length_boundaries)
{
    const auto b55 = rlp::encode(Item::bytes(Bytes(55, 'a')));
    ASSERT_EQ(b55.size(), 56u);
    EXPECT_EQ(b55[0], 0xb7);

    const auto b56 = rlp::encode(Item::bytes(Bytes(56, 'b')));
    ASSERT_EQ(b56.size(), 58u);
    EXPECT_EQ(b56[0], 0xb8);
    EXPECT_EQ(b56[1], 56);

    const auto b1024 = rlp::encode(Item::bytes(Bytes(1024, 'c')));
    EXPECT_EQ(b1024[0], 0xb9);
    EXPECT_EQ(b1024[1], 0x04);
    EXPECT_EQ(b1024[2], 0x00);
}

TEST(rlp, encode_lists)
{
    EXPECT_EQ(encode_hex(Item::list({})), "c0");
    EXPECT_EQ(encode_hex(Item::list({str("cat"), str("dog")})), "c88363617483646f67");
    // [[], [[]]]
    const Item nested = Item::list({Item::list({}), Item::list({Item::list({})})});
    EXPECT_EQ(encode_hex(nested), "c3c0c1c0");

    // 55-octet payload stays short form; 56 switches to long form.
    EXPECT_EQ(rlp::encode(Item::list({Item::bytes(Bytes(54, 'x'))}))[0], 0xf7);
    const auto long_list = rlp::encode(Item::list({Item::bytes(Bytes(55, 'x'))}));
    EXPECT_EQ(long_list[0], 0xf8);
    EXPECT_EQ(long_list[1], 56);
}

TEST(rlp, encode_uint)
{
    EXPECT_EQ(to_hex(rlp::encode_uint(0)), "80");
    EXPECT_EQ(to_hex(rlp::encode_uint(15)), "0f");
    EXPECT_EQ(to_hex(rlp::encode_uint(1024)), "820400");
}

TEST(rlp, decode_basics)
{
    EXPECT_EQ(rlp::decode(from_hex("80")), str(""));
    EXPECT_EQ(rlp::decode(from_hex("83646f67")), str("dog"));
    EXPECT_EQ(rlp::decode(from_hex("c0")), Item::list({}));
    EXPECT_EQ(rlp::decode(from_hex("c88363617483646f67")), Item::list({str("cat"), str("dog")}));
}

TEST(rlp, decode_rejects_noncanonical_single_octet)
{
    // 0x00 must encode as itself, never as a length-1 string.
    EXPECT_THROW(rlp::decode(from_hex("8100")), rlp::NonCanonical);
    EXPECT_THROW(rlp::decode(from_hex("817f")), rlp::NonCanonical);
    EXPECT_NO_THROW(rlp::decode(from_hex("8180")));
}

TEST(rlp, decode_rejects_noncanonical_lengths)
{
    // Long form for a payload that fits the short form.
    Bytes five_long = from_hex("b8056161616161");
    EXPECT_THROW(rlp::decode(five_long), rlp::NonCanonical);
    EXPECT_THROW(rlp::decode(from_hex("f803c28180")), rlp::NonCanonical);
    // Leading zero octet in a long length.
    Bytes padded = from_hex("b90038");
    padded.insert(padded.end(), 56, 'b');
    EXPECT_THROW(rlp::decode(padded), rlp::NonCanonical);
}

TEST(rlp, decode_rejects_malformed)
{
    EXPECT_THROW(rlp::decode(ByteView{}), rlp::MalformedRlp);
    // List payload truncated.
    EXPECT_THROW(rlp::decode(from_hex("c88363617483")), rlp::MalformedRlp);
    // String payload truncated.
    EXPECT_THROW(rlp::decode(from_hex("83646f")), rlp::MalformedRlp);
    // Trailing octets.
    EXPECT_THROW(rlp::decode(from_hex("c0c0")), rlp::MalformedRlp);
    EXPECT_THROW(rlp::decode(from_hex("8080")), rlp::MalformedRlp);
    // Length prefix exceeding input.
    EXPECT_THROW(rlp::decode(from_hex("b9")), rlp::MalformedRlp);
    // Element overrunning its list payload.
    EXPECT_THROW(rlp::decode(from_hex("c28365")), rlp::MalformedRlp);
}

TEST(rlp, decode_rejects_excessive_nesting)
{
    Bytes deep(100, 0xc1);
    deep.back() = 0xc0;
    EXPECT_THROW(rlp::decode(deep), rlp::MalformedRlp);
}

TEST(rlp, uint_strictness)
{
    EXPECT_EQ(rlp::decode(from_hex("820400")).to_uint(), 1024u);
    EXPECT_EQ(rlp::decode(from_hex("80")).to_uint(), 0u);
    EXPECT_THROW(Item::from_big_compact(from_hex("000400")), rlp::NonCanonical);
    EXPECT_THROW(Item::from_big_compact(from_hex("010203040506070809")), rlp::MalformedRlp);
    EXPECT_EQ(Item::from_big_compact(from_hex("ffffffffffffffff")), UINT64_MAX);
}

TEST(rlp, roundtrip_random_items)
{
    std::mt19937_64 rng{0x524c50};
    for (int i = 0; i < 2000; ++i) {
        const Item item = random_item(rng, 0);
        const Bytes encoded = rlp::encode(item);
        EXPECT_EQ(rlp::decode(encoded), item);
    }
}

TEST(rlp, prefix_mutation_never_silently_aliases)
{
    // Mutating the leading prefix octet must either fail decoding or produce
    // a different item; it can never re-decode to the original.
    std::mt19937_64 rng{0xa11a5};
    int decoded_differently = 0;
    for (int i = 0; i < 400; ++i) {
        const Item item = random_item(rng, 0);
        Bytes encoded = rlp::encode(item);
        Bytes mutated = encoded;
        mutated[0] ^= static_cast<uint8_t>(1 + rng() % 255);
        try {
            const Item other = rlp::decode(mutated);
            EXPECT_NE(other, item);
            ++decoded_differently;
        } catch (const rlp::RlpError&) {
        }
    }
    // Not a requirement, just a sanity signal that both branches are hit.
    EXPECT_GE(decoded_differently, 0);
}

TEST(rlp, list_payload_partitions_unambiguously)
{
    // Sequentially decoding a list payload recovers exactly the element
    // encodings, so concatenation is prefix-free in context.
    std::mt19937_64 rng{0x7157};
    for (int i = 0; i < 200; ++i) {
        std::vector<Item> elems;
        for (size_t k = 0; k < 4; ++k)
            elems.push_back(random_item(rng, 6));
        const Item list = Item::list(elems);
        const Item back = rlp::decode(rlp::encode(list));
        ASSERT_TRUE(back.is_list());
        ASSERT_EQ(back.as_list().size(), elems.size());
        for (size_t k = 0; k < elems.size(); ++k)
            EXPECT_EQ(rlp::encode(back.as_list()[k]), rlp::encode(elems[k]));
    }
}

TEST(rlp, wrong_kind_access_throws)
{
    EXPECT_THROW(Item::list({}).as_bytes(), rlp::MalformedRlp);
    EXPECT_THROW(str("x").as_list(), rlp::MalformedRlp);
    EXPECT_THROW(Item::list({}).to_uint(), rlp::MalformedRlp);
}
