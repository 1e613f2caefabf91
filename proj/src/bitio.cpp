#include "wt/bitio.hpp"

#include <algorithm>

namespace wt {

BitString BitString::fromString(std::string_view s) {
    BitString out;
    out.bits_.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw FormatError("bit string may contain only '0' and '1'");
        }
        out.bits_.push_back(static_cast<uint8_t>(c - '0'));
    }
    return out;
}

BitString BitString::fromByte(uint8_t b) { return fromValue(b, 8); }

BitString BitString::fromValue(uint64_t value, size_t width) {
    BitString out;
    out.bits_.reserve(width);
    for (size_t i = 0; i < width; ++i) {
        out.bits_.push_back(static_cast<uint8_t>((value >> (width - 1 - i)) & 1u));
    }
    return out;
}

void BitString::append(const BitString& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::slice(size_t pos, size_t len) const {
    BitString out;
    out.bits_.assign(bits_.begin() + static_cast<ptrdiff_t>(pos),
                     bits_.begin() + static_cast<ptrdiff_t>(pos + len));
    return out;
}

uint64_t BitString::toValue() const {
    if (size() > 64) {
        throw Overflow("bit string longer than 64 bits has no integer value");
    }
    uint64_t v = 0;
    for (uint8_t b : bits_) v = (v << 1) | b;
    return v;
}

std::string BitString::toString() const {
    std::string s;
    s.reserve(size());
    for (uint8_t b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

PackedBits pack(const BitString& bits) {
    PackedBits out;
    out.bytes.assign((bits.size() + 7) / 8, 0);
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) {
            out.bytes[i / 8] |= static_cast<uint8_t>(1u << (7 - i % 8));
        }
    }
    out.padCount = static_cast<int>(out.bytes.size() * 8 - bits.size());
    return out;
}

BitString unpack(std::span<const uint8_t> bytes, size_t bitLength) {
    if (bitLength > bytes.size() * 8) {
        throw BadLength("bit length exceeds available bytes");
    }
    BitString out;
    for (size_t i = 0; i < bitLength; ++i) {
        out.push_back((bytes[i / 8] >> (7 - i % 8)) & 1u);
    }
    for (size_t i = bitLength; i < bytes.size() * 8; ++i) {
        if ((bytes[i / 8] >> (7 - i % 8)) & 1u) {
            throw NonZeroPadding("padding bits beyond the bit length are not zero");
        }
    }
    return out;
}

uint8_t reverseByteBits(uint8_t b) {
    b = static_cast<uint8_t>((b & 0xF0u) >> 4 | (b & 0x0Fu) << 4);
    b = static_cast<uint8_t>((b & 0xCCu) >> 2 | (b & 0x33u) << 2);
    b = static_cast<uint8_t>((b & 0xAAu) >> 1 | (b & 0x55u) << 1);
    return b;
}

BitGroups group(const BitString& bits, size_t k) {
    if (k == 0) {
        throw BadLength("group size must be at least 1");
    }
    BitGroups out;
    size_t full = bits.size() / k;
    out.groups.reserve(full);
    for (size_t g = 0; g < full; ++g) {
        out.groups.push_back(bits.slice(g * k, k));
    }
    out.remainder = bits.slice(full * k, bits.size() - full * k);
    return out;
}

namespace {
constexpr char kFrameMagic[4] = {'W', 'T', 'C', '1'};
}

std::vector<uint8_t> writeFrame(const BitString& payload) {
    PackedBits packed = pack(payload);
    std::vector<uint8_t> out;
    out.reserve(12 + packed.bytes.size());
    out.insert(out.end(), kFrameMagic, kFrameMagic + 4);
    uint64_t n = payload.size();
    for (int i = 7; i >= 0; --i) {
        out.push_back(static_cast<uint8_t>((n >> (8 * i)) & 0xFFu));
    }
    out.insert(out.end(), packed.bytes.begin(), packed.bytes.end());
    return out;
}

BitString readFrame(std::span<const uint8_t> frame) {
    if (frame.size() < 12 || !std::equal(kFrameMagic, kFrameMagic + 4, frame.begin())) {
        throw FormatError("not a WTC1 frame");
    }
    uint64_t n = 0;
    for (int i = 0; i < 8; ++i) {
        n = (n << 8) | frame[4 + static_cast<size_t>(i)];
    }
    std::span<const uint8_t> payload = frame.subspan(12);
    if ((n + 7) / 8 != payload.size()) {
        throw BadLength("frame payload size does not match the declared bit count");
    }
    return unpack(payload, n);
}

} // namespace wt
