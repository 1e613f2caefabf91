#include "wt/codebook.hpp"

#include <algorithm>

#include "wt/rng.hpp"

namespace wt::codebook {

namespace {

std::string hexByte(uint8_t b) {
    static const char* digits = "0123456789abcdef";
    return std::string{"0x"} + digits[b >> 4] + digits[b & 0xF];
}

} // namespace

uint64_t CodeTable::maskedValue(const BitString& codeword) const {
    uint64_t v = 0;
    for (int i = 0; i < width_; ++i) {
        uint8_t bit = noiseMask_[static_cast<size_t>(i)] ? 0 : codeword[static_cast<size_t>(i)];
        v = (v << 1) | bit;
    }
    return v;
}

void CodeTable::buildReverseAndFingerprint() {
    reverse_.clear();
    reverse_.reserve(entries_.size());
    // FNV-1a over the canonical serialization identifies the table contents.
    uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](uint8_t byte) {
        h ^= byte;
        h *= 0x100000001b3ULL;
    };
    mix(static_cast<uint8_t>(width_));
    for (int i = 0; i < width_; ++i) mix(noiseMask_[static_cast<size_t>(i)]);
    for (const auto& [sym, code] : entries_) {
        if (static_cast<int>(code.size()) != width_) {
            throw LengthMismatch("codeword width mismatch for symbol " + hexByte(sym));
        }
        uint64_t masked = maskedValue(code);
        auto [it, inserted] = reverse_.emplace(masked, sym);
        if (!inserted) {
            throw FormatError("masked codeword collision between symbols " +
                              hexByte(it->second) + " and " + hexByte(sym));
        }
        mix(sym);
        for (int i = 0; i < width_; ++i) mix(code[static_cast<size_t>(i)]);
    }
    fingerprint_ = h;
}

CodeTable CodeTable::generate(int width, int symbols, uint64_t seed, int noiseBits) {
    if (width < kMinWidth || width > kMaxWidth) {
        throw CapacityExceeded("width must be in 8..32");
    }
    if (noiseBits < 0 || noiseBits >= width) {
        throw CapacityExceeded("noise bits must be fewer than the width");
    }
    if (symbols < 1 || symbols > 256) {
        throw CapacityExceeded("symbol count must be in 1..256");
    }
    int dataBits = width - noiseBits;
    if (dataBits < 31 && symbols > (1 << dataBits)) {
        throw CapacityExceeded("more symbols than masked codewords");
    }

    SplitMix64 rng(seed);
    CodeTable t;
    t.width_ = width;

    // Noise positions: partial Fisher-Yates over the bit indices.
    std::vector<int> positions(static_cast<size_t>(width));
    for (int i = 0; i < width; ++i) positions[static_cast<size_t>(i)] = i;
    t.noiseMask_ = BitString(std::vector<uint8_t>(static_cast<size_t>(width), 0));
    for (int i = 0; i < noiseBits; ++i) {
        size_t j = static_cast<size_t>(i) +
                   static_cast<size_t>(rng.below(static_cast<uint64_t>(width - i)));
        std::swap(positions[static_cast<size_t>(i)], positions[j]);
        t.noiseMask_.set(static_cast<size_t>(positions[static_cast<size_t>(i)]), 1);
    }

    // Draw codewords, rejecting masked duplicates. Noise positions are zeroed
    // in the stored form.
    std::unordered_map<uint64_t, uint8_t> used;
    uint64_t widthMask = width == 64 ? ~0ULL : ((1ULL << width) - 1);
    for (int s = 0; s < symbols; ++s) {
        while (true) {
            BitString code = BitString::fromValue(rng.next() & widthMask,
                                                  static_cast<size_t>(width));
            for (int i = 0; i < width; ++i) {
                if (t.noiseMask_[static_cast<size_t>(i)]) code.set(static_cast<size_t>(i), 0);
            }
            uint64_t masked = t.maskedValue(code);
            if (used.emplace(masked, static_cast<uint8_t>(s)).second) {
                t.entries_.emplace(static_cast<uint8_t>(s), std::move(code));
                break;
            }
        }
    }
    t.buildReverseAndFingerprint();
    return t;
}

CodeTable CodeTable::fromEntries(int width, BitString noiseMask,
                                 std::map<uint8_t, BitString> entries) {
    if (width < kMinWidth || width > kMaxWidth) {
        throw CapacityExceeded("width must be in 8..32");
    }
    if (static_cast<int>(noiseMask.size()) != width) {
        throw LengthMismatch("noise mask length must equal the width");
    }
    CodeTable t;
    t.width_ = width;
    t.noiseMask_ = std::move(noiseMask);
    t.entries_ = std::move(entries);
    // Canonicalize: zero the noise positions so equal tables compare equal.
    for (auto& [sym, code] : t.entries_) {
        (void)sym;
        if (static_cast<int>(code.size()) != width) {
            throw LengthMismatch("codeword width mismatch");
        }
        for (int i = 0; i < width; ++i) {
            if (t.noiseMask_[static_cast<size_t>(i)]) code.set(static_cast<size_t>(i), 0);
        }
    }
    t.buildReverseAndFingerprint();
    return t;
}

CodeTable CodeTable::identity() {
    std::map<uint8_t, BitString> entries;
    for (int s = 0; s < 256; ++s) {
        entries.emplace(static_cast<uint8_t>(s), BitString::fromByte(static_cast<uint8_t>(s)));
    }
    return fromEntries(8, BitString(std::vector<uint8_t>(8, 0)), std::move(entries));
}

int CodeTable::noiseBits() const {
    int n = 0;
    for (size_t i = 0; i < noiseMask_.size(); ++i) n += noiseMask_[i];
    return n;
}

const BitString& CodeTable::codeword(uint8_t symbol) const {
    auto it = entries_.find(symbol);
    if (it == entries_.end()) {
        throw UnknownSymbol("symbol " + hexByte(symbol) + " is not in the table");
    }
    return it->second;
}

TableCount countTables(int width, int symbols) {
    if (width < 1 || width > CodeTable::kMaxWidth) {
        throw CapacityExceeded("width must be in 1..32");
    }
    boost::multiprecision::cpp_int space = boost::multiprecision::cpp_int(1) << width;
    if (symbols < 0 || boost::multiprecision::cpp_int(symbols) > space) {
        throw CapacityExceeded("more symbols than codewords");
    }
    TableCount tc;
    tc.width = width;
    tc.symbolCount = symbols;
    tc.count = 1;
    for (int i = 0; i < symbols; ++i) {
        tc.count *= (space - i);
    }
    return tc;
}

BitString encodeSymbols(std::span<const uint8_t> data, const CodeTable& t,
                        uint64_t noiseSeed) {
    SplitMix64 rng(noiseSeed);
    BitString out;
    for (uint8_t sym : data) {
        const BitString& code = t.codeword(sym);
        for (size_t i = 0; i < code.size(); ++i) {
            out.push_back(t.noiseMask()[i] ? rng.nextBit() : code[i]);
        }
    }
    return out;
}

std::vector<uint8_t> decodeSymbols(const BitString& bits, const CodeTable& t) {
    size_t width = static_cast<size_t>(t.width());
    if (bits.size() % width != 0) {
        throw UnalignedLength("bit count is not a multiple of the table width");
    }
    std::vector<uint8_t> out;
    out.reserve(bits.size() / width);
    for (size_t pos = 0; pos < bits.size(); pos += width) {
        uint64_t v = 0;
        for (size_t i = 0; i < width; ++i) {
            uint8_t bit = t.noiseMask()[i] ? 0 : bits[pos + i];
            v = (v << 1) | bit;
        }
        auto it = t.reverse_.find(v);
        if (it == t.reverse_.end()) {
            throw UnknownCodeword("group at bit " + std::to_string(pos) +
                                  " matches no codeword; wrong table or width");
        }
        out.push_back(it->second);
    }
    return out;
}

std::string serializeCodebookLines(const CodeTable& t) {
    std::string out;
    out += "width=" + std::to_string(t.width()) + "\n";
    out += "noise_mask=" + t.noiseMask().toString() + "\n";
    for (const auto& [sym, code] : t.entries()) {
        out += "sym=" + hexByte(sym) + " code=" + code.toString() + "\n";
    }
    return out;
}

} // namespace wt::codebook
