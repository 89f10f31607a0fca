#!/usr/bin/env python3
"""Independent RLP encoder oracle.

Recomputes the encodings frozen into tests/rlp_test.cpp. Items are modeled as
bytes (string item) or list-of-items.
"""


def encode(item) -> bytes:
    if isinstance(item, (bytes, bytearray)):
        data = bytes(item)
        if len(data) == 1 and data[0] < 0x80:
            return data
        return _length_prefix(len(data), 0x80) + data
    payload = b"".join(encode(child) for child in item)
    return _length_prefix(len(payload), 0xC0) + payload


def _length_prefix(length: int, offset: int) -> bytes:
    if length <= 55:
        return bytes([offset + length])
    length_bytes = length.to_bytes((length.bit_length() + 7) // 8, "big")
    return bytes([offset + 55 + len(length_bytes)]) + length_bytes


def encode_uint(n: int) -> bytes:
    return encode(n.to_bytes((n.bit_length() + 7) // 8, "big") if n else b"")


VECTORS = [
    ("empty string", b""),
    ("dog", b"dog"),
    ("empty list", []),
    ("cat dog list", [b"cat", b"dog"]),
    ("single low byte 0x0f", b"\x0f"),
    ("0x80 single byte", b"\x80"),
    ("55-byte string", b"a" * 55),
    ("56-byte string", b"b" * 56),
    ("1024-byte string", b"c" * 1024),
    ("nested [[], [[]]]", [[], [[]]]),
    ("set-theoretic 3", [[], [[]], [[], [[]]]]),
    ("uint 0", 0),
    ("uint 15", 15),
    ("uint 1024", 1024),
    ("list payload 56", [b"x" * 54]),
]

if __name__ == "__main__":
    for label, item in VECTORS:
        blob = encode_uint(item) if isinstance(item, int) else encode(item)
        print(f"{blob.hex()}  {label}")
