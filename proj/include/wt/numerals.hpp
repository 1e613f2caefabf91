#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wt/bitio.hpp"
#include "wt/error.hpp"

namespace wt::numerals {

// Strictly positive weights in non-decreasing order. A bit pattern decodes to
// the dot product of its digits and the weights, big-endian: the leftmost
// digit multiplies the largest weight.
struct WeightVector {
    std::vector<uint64_t> weights;

    size_t width() const { return weights.size(); }
};

// Canonical mode: distinct Fibonacci values [1, 2, 3, 5, 8, ...]. The
// "fib-paper" mode keeps the duplicated unit at the front: [1, 1, 2, 3, 5,
// ...], which makes even small values intentionally ambiguous.
WeightVector fibWeights(size_t width, bool paperMode = false);

WeightVector primeWeights(size_t width);

// Largest value encodable in standard form (no two adjacent ones) with
// `width` canonical Fibonacci weights.
uint64_t zeckendorfCapacity(size_t width);

// Greedy largest-first Zeckendorf digits over canonical weights, big-endian.
// The result never contains "11". Throws Overflow past zeckendorfCapacity.
BitString zeckendorfEncode(uint64_t n, size_t width);

// Dot product of bits and weights. Throws LengthMismatch unless the bit count
// equals the weight count.
uint64_t weightedDecode(const BitString& bits, const WeightVector& w);

// Every bit pattern of w.width() digits whose weightedDecode equals n, in
// lexicographic order of the display string, capped at `limit` results.
std::vector<BitString> enumerateRepresentations(uint64_t n, const WeightVector& w,
                                                size_t limit = SIZE_MAX);

// Exact element of Z[phi]: a + b*phi with integer a, b.
struct PhiPair {
    int64_t a = 0;
    int64_t b = 0;

    bool operator==(const PhiPair&) const = default;
};

PhiPair phiPower(int k);
PhiPair phiAdd(PhiPair x, PhiPair y);
PhiPair phiSub(PhiPair x, PhiPair y);
// Sign of a + b*phi: -1, 0, or +1. Exact integer arithmetic throughout.
int phiSign(PhiPair x);

// Golden-ratio-base numeral. Digits are big-endian; the fraction digits
// follow the radix point. Standard form: no "11" anywhere, including across
// the point.
struct PhinaryNumeral {
    std::vector<uint8_t> integerDigits;  // most significant first, never empty
    std::vector<uint8_t> fractionDigits; // first digit is phi^-1

    std::string toString() const;
    static PhinaryNumeral fromString(std::string_view s);
    bool operator==(const PhinaryNumeral&) const = default;
};

// Standard-form encoding of a nonnegative integer; exact, no floating point.
PhinaryNumeral phinaryEncode(uint64_t n);

// Exact value of the digit string as a + b*phi.
PhiPair phinaryValue(const PhinaryNumeral& p);

// Integer value; throws NotInteger (reporting the pair) when b != 0.
uint64_t phinaryDecode(const PhinaryNumeral& p);

// Distinct weights from {1} and the primes below n summing to n, found by
// greedy largest-first with backtracking. n itself is used only when it is
// prime and no sum of smaller weights exists (n = 2 is the one small case).
// Returned largest-first. Throws Unrepresentable if no such set exists.
std::vector<uint64_t> primeEncode(uint64_t n);

// Positional value of a digit string in the given base (2..36).
uint64_t digitsValue(std::string_view digits, unsigned base);

// First m symbols of the infinite golden sequence (substitution 1 -> 10,
// 0 -> 1, starting from "1").
BitString goldenSequence(size_t m);

// k-th golden word: S_1 = "1", S_2 = "10", S_k = S_{k-1} S_{k-2}.
BitString goldenWord(size_t k);

BitString goldenNumeralEncode(const std::vector<size_t>& indices);

struct GoldenParseResult {
    // Every way to split the input into golden words, as index lists.
    std::vector<std::vector<size_t>> parses;
    bool truncated = false; // hit the enumeration cap

    bool unique() const { return parses.size() == 1; }
    bool ambiguous() const { return parses.size() > 1; }
    bool failed() const { return parses.empty(); }
};

// Exhaustive parse enumeration. The golden-word code is not uniquely
// decodable ("101" is S_3 and also S_2 S_1), so all parses are reported
// rather than pretending one segmentation exists.
GoldenParseResult goldenNumeralDecode(const BitString& s, size_t maxParses = 1024);

} // namespace wt::numerals
