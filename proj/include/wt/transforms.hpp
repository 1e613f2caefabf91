#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wt/bitio.hpp"
#include "wt/error.hpp"

namespace wt::transforms {

// Positional bit reversal of selected bytes: indices start, start + jump + 1,
// start + 2(jump + 1), ... Self-inverse under the same parameters.
struct BoustroParams {
    size_t start = 0;
    size_t jump = 0;

    bool operator==(const BoustroParams&) const = default;
};

std::vector<uint8_t> boustrophedon(std::span<const uint8_t> data, BoustroParams p);

// Keystream interleaving: after every `stride` payload bits, one keystream
// bit is inserted. Only the golden sequence ships as a generator, but any
// BitString can be supplied.
struct SpliceParams {
    size_t stride = 3;
    size_t keystreamOffset = 0;
    bool verifyOnDecode = false;

    bool operator==(const SpliceParams&) const = default;
};

BitString spliceWithKeystream(const BitString& payload, size_t stride,
                              const BitString& keystream);

struct UnspliceResult {
    BitString payload;
    BitString removed; // the keystream bits that were interleaved
};

UnspliceResult unspliceWithLength(const BitString& bits, size_t stride);

// Golden-sequence convenience wrappers.
BitString goldenSplice(const BitString& payload, const SpliceParams& p);
// Removes the inserted bits. BadLength when no payload length is consistent
// with the input size; KeystreamMismatch when verifyOnDecode is set and the
// removed bits do not equal the golden sequence at the given offset.
BitString goldenUnsplice(const BitString& bits, const SpliceParams& p);

// (d + k) mod 10 per decimal digit; other characters pass through.
std::string digitShift(std::string_view digits, unsigned k);

// Bijection over a symbol alphabet. For letter ciphers the domain is
// 'A'..'Z'; the expanded pipeline uses the full homophone alphabet.
class LetterPermutation {
public:
    static LetterPermutation identity(std::span<const uint32_t> domain);
    static LetterPermutation fromSeed(std::span<const uint32_t> domain, uint64_t seed);
    static LetterPermutation fromMapping(std::map<uint32_t, uint32_t> mapping);
    // Swap two letters, everything else fixed (the classic e<->q example).
    static LetterPermutation lettersWithSwap(char x, char y);

    LetterPermutation inverse() const;
    uint32_t apply(uint32_t symbol) const; // throws UnknownSymbol
    bool contains(uint32_t symbol) const { return map_.count(symbol) != 0; }
    const std::map<uint32_t, uint32_t>& mapping() const { return map_; }

    bool operator==(const LetterPermutation& other) const { return map_ == other.map_; }

private:
    std::map<uint32_t, uint32_t> map_;
};

// Symbol-wise application; every symbol must be in the domain.
std::vector<uint32_t> applySymbols(std::span<const uint32_t> symbols,
                                   const LetterPermutation& p);

// Text application for letter permutations: case is preserved, letters map
// through the bijection, non-letters pass through untouched.
std::string applyText(std::string_view text, const LetterPermutation& p);

} // namespace wt::transforms
