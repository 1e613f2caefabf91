#include "wt/homophones.hpp"

#include <algorithm>
#include <cmath>

#include "wt/rng.hpp"

namespace wt::homophones {

HomophoneTable::HomophoneTable(std::map<char, std::vector<uint32_t>> groups)
    : groups_(std::move(groups)) {
    for (const auto& [letter, members] : groups_) {
        if (letter < 'A' || letter > 'Z') {
            throw FormatError(std::string("group key must be A..Z, got '") + letter + "'");
        }
        if (members.empty()) {
            throw FormatError(std::string("empty group for letter ") + letter);
        }
        if (members.front() != static_cast<uint32_t>(letter)) {
            throw FormatError(std::string("group for ") + letter +
                              " must start with the letter's own id");
        }
        for (uint32_t id : members) {
            auto [it, inserted] = inverse_.emplace(id, letter);
            if (!inserted) {
                throw FormatError("symbol " + std::to_string(id) +
                                  " appears in more than one group");
            }
        }
    }
}

const std::vector<uint32_t>& HomophoneTable::group(char letter) const {
    auto it = groups_.find(letter);
    if (it == groups_.end()) {
        throw UnknownLetter(std::string("no group for letter '") + letter + "'");
    }
    return it->second;
}

char HomophoneTable::baseLetter(uint32_t symbol) const {
    auto it = inverse_.find(symbol);
    if (it == inverse_.end()) {
        throw UnknownSymbol("symbol " + std::to_string(symbol) + " is not in the table");
    }
    return it->second;
}

std::vector<uint32_t> HomophoneTable::symbols() const {
    std::vector<uint32_t> out;
    out.reserve(inverse_.size());
    for (const auto& [id, letter] : inverse_) {
        (void)letter;
        out.push_back(id);
    }
    return out;
}

namespace {

// Letters ranked by reference count descending, ties alphabetical.
std::vector<char> rankLetters(const freq::FrequencyTable& reference) {
    std::vector<char> letters;
    for (char c = 'A'; c <= 'Z'; ++c) letters.push_back(c);
    std::stable_sort(letters.begin(), letters.end(), [&reference](char x, char y) {
        uint64_t cx = reference.count(static_cast<uint32_t>(x));
        uint64_t cy = reference.count(static_cast<uint32_t>(y));
        if (cx != cy) return cx > cy;
        return x < y;
    });
    return letters;
}

HomophoneTable buildFromSizes(const std::vector<char>& ranked,
                              const std::vector<size_t>& sizes) {
    std::map<char, std::vector<uint32_t>> groups;
    uint32_t nextId = kFirstIdentityId;
    for (size_t i = 0; i < ranked.size(); ++i) {
        std::vector<uint32_t> members{static_cast<uint32_t>(ranked[i])};
        for (size_t k = 1; k < sizes[i]; ++k) members.push_back(nextId++);
        groups.emplace(ranked[i], std::move(members));
    }
    return HomophoneTable(std::move(groups));
}

} // namespace

HomophoneTable buildRuleTable(const freq::FrequencyTable& reference) {
    std::vector<char> ranked = rankLetters(reference);
    std::vector<size_t> sizes(26, 1);
    sizes[0] = 4;
    for (size_t i = 1; i <= 9; ++i) sizes[i] = 3;
    return buildFromSizes(ranked, sizes);
}

HomophoneTable buildFormulaTable(const freq::FrequencyTable& reference) {
    std::vector<char> ranked = rankLetters(reference);
    std::vector<size_t> sizes(26, 1);
    if (reference.total > 0) {
        for (size_t i = 0; i < 26; ++i) {
            // freq / mean = 26 * count / total for a 26-letter alphabet.
            double ratio = 26.0 *
                           static_cast<double>(reference.count(static_cast<uint32_t>(ranked[i]))) /
                           static_cast<double>(reference.total);
            sizes[i] = static_cast<size_t>(std::max(1L, std::lround(ratio)));
        }
    }
    return buildFromSizes(ranked, sizes);
}

namespace {

char foldLetter(char c) {
    if (c >= 'a' && c <= 'z') return static_cast<char>(c - 'a' + 'A');
    return c;
}

} // namespace

std::vector<uint32_t> normalize(std::string_view text, const HomophoneTable& t,
                                uint64_t seed, AssignMode mode) {
    std::vector<uint32_t> out(text.size(), 0);
    SplitMix64 rng(seed);
    switch (mode) {
    case AssignMode::Uniform: {
        for (size_t i = 0; i < text.size(); ++i) {
            const auto& g = t.group(foldLetter(text[i]));
            out[i] = g[static_cast<size_t>(rng.below(g.size()))];
        }
        break;
    }
    case AssignMode::RoundRobin: {
        std::map<char, size_t> cursors;
        for (size_t i = 0; i < text.size(); ++i) {
            char letter = foldLetter(text[i]);
            const auto& g = t.group(letter);
            out[i] = g[cursors[letter]++ % g.size()];
        }
        break;
    }
    case AssignMode::Balanced: {
        // Two passes: collect each letter's positions, then hand out shares
        // that divide the letter's tally as evenly as possible, shuffled so
        // the placement (not the counts) depends on the seed. Letters are
        // processed in alphabetical order to pin the stream consumption.
        std::map<char, std::vector<size_t>> positions;
        for (size_t i = 0; i < text.size(); ++i) {
            positions[foldLetter(text[i])].push_back(i);
        }
        for (auto& [letter, occ] : positions) {
            const auto& g = t.group(letter);
            std::vector<uint32_t> bag;
            bag.reserve(occ.size());
            size_t base = occ.size() / g.size();
            size_t extra = occ.size() % g.size();
            for (size_t m = 0; m < g.size(); ++m) {
                size_t share = base + (m < extra ? 1 : 0);
                bag.insert(bag.end(), share, g[m]);
            }
            rng.shuffle(bag);
            for (size_t i = 0; i < occ.size(); ++i) out[occ[i]] = bag[i];
        }
        break;
    }
    }
    return out;
}

std::string denormalize(std::span<const uint32_t> symbols, const HomophoneTable& t) {
    std::string out;
    out.reserve(symbols.size());
    for (uint32_t s : symbols) out.push_back(t.baseLetter(s));
    return out;
}

std::string serializeGroupLines(const HomophoneTable& t) {
    std::string out;
    for (const auto& [letter, members] : t.groups()) {
        out += "group=";
        out.push_back(letter);
        out.push_back(':');
        for (size_t i = 0; i < members.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(members[i]);
        }
        out.push_back('\n');
    }
    return out;
}

const char* assignModeName(AssignMode mode) {
    switch (mode) {
    case AssignMode::Balanced: return "balanced";
    case AssignMode::Uniform: return "uniform";
    case AssignMode::RoundRobin: return "round-robin";
    }
    return "balanced";
}

AssignMode assignModeFromName(std::string_view name) {
    if (name == "balanced") return AssignMode::Balanced;
    if (name == "uniform") return AssignMode::Uniform;
    if (name == "round-robin") return AssignMode::RoundRobin;
    throw FormatError("unknown assignment mode '" + std::string(name) + "'");
}

} // namespace wt::homophones
