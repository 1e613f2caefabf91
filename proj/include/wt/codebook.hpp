#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wt/bitio.hpp"
#include "wt/error.hpp"

namespace wt::codebook {

// Injective fixed-width symbol -> codeword table with optional noise ("don't
// care") positions. Noise positions are zero in the stored codewords, ignored
// on decode, and filled with fresh random bits on every encode.
class CodeTable {
public:
    static constexpr int kMinWidth = 8;
    static constexpr int kMaxWidth = 32;

    // Deterministic generation: one SplitMix64 stream seeded with `seed`
    // first picks the noise positions, then draws codewords by rejection
    // until the masked values are pairwise distinct.
    static CodeTable generate(int width, int symbols, uint64_t seed, int noiseBits);

    // Build from explicit entries (file parsing, handmade tables). Validates
    // widths and masked-codeword injectivity.
    static CodeTable fromEntries(int width, BitString noiseMask,
                                 std::map<uint8_t, BitString> entries);

    // Width-8 table mapping every byte to its base-2 bit pattern.
    static CodeTable identity();

    int width() const { return width_; }
    const BitString& noiseMask() const { return noiseMask_; }
    const std::map<uint8_t, BitString>& entries() const { return entries_; }
    int noiseBits() const;
    uint64_t fingerprint() const { return fingerprint_; }

    bool contains(uint8_t symbol) const { return entries_.count(symbol) != 0; }
    const BitString& codeword(uint8_t symbol) const;

    bool operator==(const CodeTable& other) const {
        return width_ == other.width_ && noiseMask_ == other.noiseMask_ &&
               entries_ == other.entries_;
    }

private:
    CodeTable() = default;
    void buildReverseAndFingerprint();
    uint64_t maskedValue(const BitString& codeword) const;

    friend BitString encodeSymbols(std::span<const uint8_t>, const CodeTable&, uint64_t);
    friend std::vector<uint8_t> decodeSymbols(const BitString&, const CodeTable&);

    int width_ = 0;
    BitString noiseMask_;
    std::map<uint8_t, BitString> entries_;
    std::unordered_map<uint64_t, uint8_t> reverse_; // masked value -> symbol
    uint64_t fingerprint_ = 0;
};

struct TableCount {
    int width = 0;
    int symbolCount = 0;
    boost::multiprecision::cpp_int count;

    std::string toString() const { return count.str(); }
};

// Number of distinct injective tables: (2^w)(2^w - 1)...(2^w - k + 1).
TableCount countTables(int width, int symbols);

// Concatenated codewords; noise positions filled from a SplitMix64 stream
// seeded with noiseSeed, so identical calls produce identical bits.
BitString encodeSymbols(std::span<const uint8_t> data, const CodeTable& t,
                        uint64_t noiseSeed);

// Inverse of encodeSymbols: mask each group, look it up. UnalignedLength when
// the bit count is not a multiple of the width; UnknownCodeword when a masked
// group is not in the table (wrong table or wrong width).
std::vector<uint8_t> decodeSymbols(const BitString& bits, const CodeTable& t);

// WTKB1 codebook section, one line per call-site: used by the bundle
// serializer and by the standalone codebook file format.
std::string serializeCodebookLines(const CodeTable& t);

} // namespace wt::codebook
