#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wt/error.hpp"

namespace wt {

// Ordered bit sequence of arbitrary length, independent of byte packing.
// Bit order inside a byte is MSB-first everywhere: bit 0 of a BitString built
// from a byte is that byte's most significant bit.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<uint8_t> bits) : bits_(std::move(bits)) {}

    static BitString fromString(std::string_view s);
    static BitString fromByte(uint8_t b);
    // Low `width` bits of `value`, most significant first.
    static BitString fromValue(uint64_t value, size_t width);

    size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    uint8_t operator[](size_t i) const { return bits_[i]; }
    void set(size_t i, uint8_t bit) { bits_[i] = bit & 1u; }

    void push_back(uint8_t bit) { bits_.push_back(bit & 1u); }
    void pop_back() { bits_.pop_back(); }
    void append(const BitString& other);
    BitString slice(size_t pos, size_t len) const;

    // Value of the bits read MSB-first; requires size() <= 64.
    uint64_t toValue() const;
    std::string toString() const;

    bool operator==(const BitString& other) const = default;

    const std::vector<uint8_t>& bits() const { return bits_; }

private:
    std::vector<uint8_t> bits_; // each element 0 or 1
};

struct PackedBits {
    std::vector<uint8_t> bytes;
    int padCount = 0; // zero bits appended to fill the final byte, 0..7
};

// MSB-first packing; the final byte is zero-padded.
PackedBits pack(const BitString& bits);

// Inverse of pack. Discarded padding bits must be zero; a nonzero pad bit
// means the frame was not produced by pack and is rejected.
BitString unpack(std::span<const uint8_t> bytes, size_t bitLength);

// Output bit i = input bit (7 - i).
uint8_t reverseByteBits(uint8_t b);

struct BitGroups {
    std::vector<BitString> groups;
    BitString remainder;
};

// Consecutive non-overlapping groups of k bits; the final partial group, if
// any, is reported separately.
BitGroups group(const BitString& bits, size_t k);

// Ciphertext frame: "WTC1", 8-byte big-endian bit count, packed payload.
std::vector<uint8_t> writeFrame(const BitString& payload);
BitString readFrame(std::span<const uint8_t> frame);

} // namespace wt
