// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#include <warden/rlp.hpp>

namespace warden::rlp {

namespace {

constexpr int kMaxDepth = 64;

void append_length_prefix(Bytes& out, size_t length, uint8_t offset) {
    if (length <= 55) {
        out.push_back(static_cast<uint8_t>(offset + length));
        return;
    }
    uint8_t be[8];
    int n = 0;
    for (size_t t = length; t != 0; t >>= 8)
        be[n++] = static_cast<uint8_t>(t);
    out.push_back(static_cast<uint8_t>(offset + 55 + n));
    while (n > 0)
        out.push_back(be[--n]);
}

void encode_into(Bytes& out, const Item& item) {
    if (item.is_bytes()) {
        const Bytes& v = item.as_bytes();
        if (v.size() == 1 && v[0] < 0x80) {
            out.push_back(v[0]);
            return;
        }
        append_length_prefix(out, v.size(), 0x80);
        out.insert(out.end(), v.begin(), v.end());
        return;
    }
    Bytes payload;
    for (const Item& child : item.as_list())
        encode_into(payload, child);
    append_length_prefix(out, payload.size(), 0xc0);
    out.insert(out.end(), payload.begin(), payload.end());
}

class Decoder {
public:
    explicit Decoder(ByteView data) : data_(data) {}

    Item decode_all() {
        Item item = decode_item(0);
        if (pos_ != data_.size())
            throw MalformedRlp{"trailing octets after item"};
        return item;
    }

private:
    Item decode_item(int depth) {
        if (depth > kMaxDepth)
            throw MalformedRlp{"nesting too deep"};
        const uint8_t tag = take();
        if (tag <= 0x7f)
            return Item::bytes(Bytes{tag});
        if (tag <= 0xb7) {
            const size_t len = tag - 0x80;
            ByteView payload = take_payload(len);
            if (len == 1 && payload[0] < 0x80)
                throw NonCanonical{"single octet below 0x80 must encode as itself"};
            return Item::bytes(payload);
        }
        if (tag <= 0xbf)
            return Item::bytes(take_payload(read_long_length(tag - 0xb7)));
        if (tag <= 0xf7)
            return decode_list(tag - 0xc0, depth);
        return decode_list(read_long_length(tag - 0xf7), depth);
    }

    Item decode_list(size_t payload_len, int depth) {
        const size_t end = checked_end(payload_len);
        std::vector<Item> items;
        while (pos_ < end) {
            items.push_back(decode_item(depth + 1));
            if (pos_ > end)
                throw MalformedRlp{"element overruns list payload"};
        }
        return Item::list(std::move(items));
    }

    size_t read_long_length(size_t len_of_len) {
        if (remaining() < len_of_len)
            throw MalformedRlp{"length prefix exceeds input"};
        if (data_[pos_] == 0)
            throw NonCanonical{"length has leading zero octet"};
        uint64_t len = 0;
        for (size_t i = 0; i < len_of_len; ++i) {
            if (len > (UINT64_MAX >> 8))
                throw MalformedRlp{"length overflows"};
            len = len << 8 | data_[pos_++];
        }
        if (len <= 55)
            throw NonCanonical{"long form used for short payload"};
        return static_cast<size_t>(len);
    }

    uint8_t take() {
        if (pos_ >= data_.size())
            throw MalformedRlp{"unexpected end of input"};
        return data_[pos_++];
    }

    ByteView take_payload(size_t len) {
        const size_t start = pos_;
        pos_ = checked_end(len);
        return data_.subspan(start, len);
    }

    size_t checked_end(size_t len) {
        if (len > remaining())
            throw MalformedRlp{"declared length exceeds remaining input"};
        return pos_ + len;
    }

    size_t remaining() const { return data_.size() - pos_; }

    ByteView data_;
    size_t pos_ = 0;
};

}  // namespace

const Bytes& Item::as_bytes() const {
    if (!is_bytes())
        throw MalformedRlp{"expected byte string, found list"};
    return std::get<Bytes>(value_);
}

const std::vector<Item>& Item::as_list() const {
    if (!is_list())
        throw MalformedRlp{"expected list, found byte string"};
    return std::get<std::vector<Item>>(value_);
}

uint64_t Item::to_uint() const {
    return from_big_compact(as_bytes());
}

Bytes Item::to_big_compact(uint64_t n) {
    Bytes out;
    uint8_t be[8];
    int count = 0;
    for (uint64_t t = n; t != 0; t >>= 8)
        be[count++] = static_cast<uint8_t>(t);
    while (count > 0)
        out.push_back(be[--count]);
    return out;
}

uint64_t Item::from_big_compact(ByteView v) {
    if (v.size() > 8)
        throw MalformedRlp{"integer wider than 64 bits"};
    if (!v.empty() && v[0] == 0)
        throw NonCanonical{"integer has leading zero octet"};
    uint64_t n = 0;
    for (uint8_t b : v)
        n = n << 8 | b;
    return n;
}

Bytes encode(const Item& item) {
    Bytes out;
    encode_into(out, item);
    return out;
}

Item decode(ByteView data) {
    return Decoder{data}.decode_all();
}

}  // namespace warden::rlp
