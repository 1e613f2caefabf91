#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wt/error.hpp"

namespace wt::freq {

enum class AlphabetPolicy {
    Letters, // case-folded A..Z, everything else ignored
    Bytes,   // every byte value is a symbol
};

// Symbol tally with derived percentages and ranking. Symbols are generic
// 32-bit ids so the same table serves letters, bytes, bit groups, and the
// expanded homophone alphabet.
struct FrequencyTable {
    std::map<uint32_t, uint64_t> counts;
    uint64_t total = 0;

    void add(uint32_t symbol, uint64_t n = 1) {
        counts[symbol] += n;
        total += n;
    }

    uint64_t count(uint32_t symbol) const {
        auto it = counts.find(symbol);
        return it == counts.end() ? 0 : it->second;
    }

    double percentage(uint32_t symbol) const {
        return total == 0 ? 0.0 : 100.0 * static_cast<double>(count(symbol)) /
                                      static_cast<double>(total);
    }

    // Symbols by count descending, ties by symbol id ascending.
    std::vector<std::pair<uint32_t, uint64_t>> ranked() const;
};

FrequencyTable tally(std::string_view text, AlphabetPolicy policy);
FrequencyTable tallySymbols(std::span<const uint32_t> symbols);

struct Stats {
    double meanPercent = 0.0;   // always 100 / alphabetSize
    double stddevPercent = 0.0; // population stddev over the whole alphabet
    std::vector<uint32_t> exceptional; // symbols above mean + stddev, ascending
};

// Statistics over an alphabet of the given size; alphabet members missing
// from the tally count as zero. Every tallied symbol is assumed to belong to
// the alphabet.
Stats stats(const FrequencyTable& t, size_t alphabetSize);

// English letter probabilities A..Z (reference distribution for attacks).
const std::array<double, 26>& englishReference();

// Reference letters sorted most frequent first, ties alphabetical.
const std::array<char, 26>& englishReferenceRanking();

// log10(1 + 1/d) for d in 1..9.
double benfordExpected(int digit);

// Total-variation distance between the observed leading-digit distribution
// and Benford's law. Each entry must contain a nonzero decimal digit.
double benfordDistance(std::span<const std::string> numbers);

} // namespace wt::freq
