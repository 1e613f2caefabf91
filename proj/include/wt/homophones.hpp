#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wt/error.hpp"
#include "wt/freq.hpp"

namespace wt::homophones {

// First identity symbol id; everything below is the plain byte space.
constexpr uint32_t kFirstIdentityId = 256;

// Base-letter -> identity-symbol groups. Each group starts with the letter's
// own id ('A'..'Z'); extra members are identity ids >= 256. The groups
// partition the symbol space, so the inverse is a function.
class HomophoneTable {
public:
    HomophoneTable(std::map<char, std::vector<uint32_t>> groups);

    const std::map<char, std::vector<uint32_t>>& groups() const { return groups_; }
    const std::vector<uint32_t>& group(char letter) const;
    char baseLetter(uint32_t symbol) const; // throws UnknownSymbol
    bool containsSymbol(uint32_t symbol) const { return inverse_.count(symbol) != 0; }
    size_t alphabetSize() const { return inverse_.size(); }

    // Every symbol id in ascending order.
    std::vector<uint32_t> symbols() const;

    bool operator==(const HomophoneTable& other) const { return groups_ == other.groups_; }

private:
    std::map<char, std::vector<uint32_t>> groups_;
    std::map<uint32_t, char> inverse_;
};

// Fixed rule: the most frequent letter gets 3 extra symbols, the next nine
// get 2 each; 21 new symbols, 47 in total. Ranking ties break alphabetically.
HomophoneTable buildRuleTable(const freq::FrequencyTable& reference);

// Formula rule: group size for a letter is max(1, round(freq / meanFreq)).
HomophoneTable buildFormulaTable(const freq::FrequencyTable& reference);

// How occurrences are spread across a group.
enum class AssignMode {
    // Seeded random positions with counts split as evenly as possible; the
    // tally of a letter is divided among its group members exactly.
    Balanced,
    // Independent uniformly random member per occurrence.
    Uniform,
    // Cycle through the group in order; seed is ignored.
    RoundRobin,
};

// Replace each letter (case-folded) with a member of its group. Deterministic
// for a fixed (text, table, seed, mode). Throws UnknownLetter on any
// character without a group.
std::vector<uint32_t> normalize(std::string_view text, const HomophoneTable& t,
                                uint64_t seed, AssignMode mode = AssignMode::Balanced);

// Deterministic inverse of normalize regardless of the seed and mode used.
std::string denormalize(std::span<const uint32_t> symbols, const HomophoneTable& t);

// WTKB1 homophone section lines: "group=<letter>:<id>,<id>,...".
std::string serializeGroupLines(const HomophoneTable& t);

const char* assignModeName(AssignMode mode);
AssignMode assignModeFromName(std::string_view name);

} // namespace wt::homophones
