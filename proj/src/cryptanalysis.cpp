#include "wt/cryptanalysis.hpp"

#include <algorithm>

#include "wt/bitio.hpp"
#include "wt/rng.hpp"

namespace wt::cryptanalysis {

std::map<uint32_t, char> rankMatchAttack(const freq::FrequencyTable& cipherTally) {
    if (cipherTally.total == 0) {
        throw EmptyInput("cannot rank an empty tally");
    }
    const auto& refRanking = freq::englishReferenceRanking();
    std::map<uint32_t, char> guess;
    auto ranked = cipherTally.ranked();
    for (size_t i = 0; i < ranked.size() && i < refRanking.size(); ++i) {
        guess[ranked[i].first] = refRanking[i];
    }
    return guess;
}

double scoreRecovery(const std::map<uint32_t, char>& guess,
                     std::span<const uint32_t> ciphertext, std::string_view plaintext) {
    if (ciphertext.size() != plaintext.size()) {
        throw LengthMismatch("ciphertext and plaintext lengths differ");
    }
    if (plaintext.empty()) return 0.0;
    size_t hits = 0;
    for (size_t i = 0; i < ciphertext.size(); ++i) {
        auto it = guess.find(ciphertext[i]);
        if (it != guess.end() && it->second == plaintext[i]) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(plaintext.size());
}

Dictionary loadWordlist(std::string_view contents) {
    Dictionary dict;
    size_t pos = 0;
    while (pos < contents.size()) {
        size_t nl = contents.find('\n', pos);
        std::string_view word = contents.substr(
            pos, nl == std::string_view::npos ? contents.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? contents.size() : nl + 1;
        while (!word.empty() && (word.back() == '\r' || word.back() == ' ')) {
            word.remove_suffix(1);
        }
        if (!word.empty()) dict.emplace(word);
    }
    return dict;
}

SegmentationResult greedySegment(std::string_view text, const Dictionary& dict) {
    if (dict.empty()) {
        throw EmptyInput("dictionary is empty");
    }
    SegmentationResult r;
    std::string current;
    for (char c : text) {
        current.push_back(static_cast<char>(
            c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c));
        if (dict.count(current)) {
            r.decisions.push_back("\"" + current + "\" is a word; record and restart");
            r.words.push_back(current);
            current.clear();
        } else {
            r.decisions.push_back("\"" + current + "\" is not a word; add a letter");
        }
    }
    r.residue = current;
    return r;
}

DpSegmentation dpSegment(std::string_view text, const Dictionary& dict) {
    std::string folded;
    folded.reserve(text.size());
    for (char c : text) {
        folded.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c));
    }
    size_t n = folded.size();
    size_t maxWord = 0;
    for (const auto& w : dict) maxWord = std::max(maxWord, w.size());

    std::vector<uint64_t> count(n + 1, 0);
    std::vector<size_t> from(n + 1, SIZE_MAX); // witness back-pointer
    count[0] = 1;
    for (size_t i = 0; i < n; ++i) {
        if (count[i] == 0) continue;
        for (size_t len = 1; len <= maxWord && i + len <= n; ++len) {
            if (dict.count(std::string_view(folded).substr(i, len))) {
                uint64_t add = std::min(count[i],
                                        DpSegmentation::parseCountCap - count[i + len]);
                count[i + len] += add;
                if (from[i + len] == SIZE_MAX) from[i + len] = i;
            }
        }
    }
    DpSegmentation out;
    out.parseCount = count[n];
    if (n == 0) {
        out.parseCount = 1;
        return out;
    }
    if (count[n] > 0) {
        std::vector<std::string> rev;
        size_t at = n;
        while (at != 0) {
            size_t prev = from[at];
            rev.push_back(folded.substr(prev, at - prev));
            at = prev;
        }
        out.witness.assign(rev.rbegin(), rev.rend());
    }
    return out;
}

double ExperimentReport::recoveryFor(std::string_view method) const {
    double best = 0.0;
    bool any = false;
    for (const auto& row : rows) {
        if (row.method == method) {
            best = any ? std::max(best, row.recovery) : row.recovery;
            any = true;
        }
    }
    return best;
}

namespace {

std::string lettersOnly(std::string_view corpus) {
    std::string out;
    for (char c : corpus) {
        if (c >= 'A' && c <= 'Z') out.push_back(c);
        else if (c >= 'a' && c <= 'z') out.push_back(static_cast<char>(c - 'a' + 'A'));
    }
    return out;
}

// Attack a framed bit stream: tally fixed-width groups, rank-match, then read
// the guessed letters off the leading groups. Positions past the group count
// stay unrecovered; the denominator is always the plaintext length.
double attackBits(const BitString& bits, int groupBits, std::string_view plain) {
    BitGroups gs = group(bits, static_cast<size_t>(groupBits));
    std::vector<uint32_t> symbols;
    symbols.reserve(gs.groups.size());
    for (const BitString& g : gs.groups) {
        symbols.push_back(static_cast<uint32_t>(g.toValue()));
    }
    if (symbols.empty()) return 0.0;
    auto guess = rankMatchAttack(freq::tallySymbols(symbols));
    size_t hits = 0;
    size_t upTo = std::min(symbols.size(), plain.size());
    for (size_t i = 0; i < upTo; ++i) {
        auto it = guess.find(symbols[i]);
        if (it != guess.end() && it->second == plain[i]) ++hits;
    }
    return plain.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(plain.size());
}

} // namespace

ExperimentReport runExperiment(std::string_view corpus, const ExperimentConfig& config) {
    std::string plain = lettersOnly(corpus);
    if (plain.size() < 1000) {
        throw CorpusTooSmall("experiment needs at least 1,000 letters, got " +
                             std::to_string(plain.size()));
    }
    ExperimentReport report;
    report.corpusLetters = plain.size();

    // Sub-seeds for the independent random choices, all derived from the
    // configured seed.
    SplitMix64 seeder(config.seed);
    uint64_t permSeed = seeder.next();
    uint64_t homophoneSeed = seeder.next();
    uint64_t tableSeed = seeder.next();
    uint64_t noiseSeed = seeder.next();
    uint64_t expandedPermSeed = seeder.next();

    // (a) plain substitution over A..Z.
    {
        std::vector<uint32_t> domain;
        for (char c = 'A'; c <= 'Z'; ++c) domain.push_back(static_cast<uint32_t>(c));
        auto perm = transforms::LetterPermutation::fromSeed(domain, permSeed);
        std::vector<uint32_t> cipher;
        cipher.reserve(plain.size());
        for (char c : plain) cipher.push_back(perm.apply(static_cast<uint32_t>(c)));
        auto guess = rankMatchAttack(freq::tallySymbols(cipher));
        report.rows.push_back({"substitution", 0, scoreRecovery(guess, cipher, plain)});
    }

    // The normalization table is built from the corpus's own tally.
    auto reference = freq::tally(plain, freq::AlphabetPolicy::Letters);
    auto homTable = homophones::buildRuleTable(reference);

    // (b) frequency normalization alone.
    {
        auto symbols = homophones::normalize(plain, homTable, homophoneSeed);
        auto guess = rankMatchAttack(freq::tallySymbols(symbols));
        report.rows.push_back({"p3", 0, scoreRecovery(guess, symbols, plain)});
    }

    // (c) the full p4 pipeline; the attacker sees only the frame.
    {
        pipeline::KeyBundle bundle;
        bundle.process = pipeline::ProcessId::P4;
        bundle.table = codebook::CodeTable::generate(config.tableWidth, 256, tableSeed,
                                                     config.noiseBits);
        bundle.homophoneTable = homTable;
        auto domain = homTable.symbols();
        bundle.permutation = transforms::LetterPermutation::fromSeed(domain, expandedPermSeed);
        bundle.noiseSeed = noiseSeed;
        bundle.homophoneSeed = homophoneSeed;
        if (config.withTransforms) {
            bundle.transformChain.push_back(transforms::SpliceParams{3, 0, true});
            bundle.transformChain.push_back(transforms::BoustroParams{0, 1});
        }
        std::vector<uint8_t> frame = pipeline::encode(plain, bundle);
        BitString bits = readFrame(frame);
        for (int g : config.groupBits) {
            report.rows.push_back({"p4", g, attackBits(bits, g, plain)});
        }
    }
    return report;
}

} // namespace wt::cryptanalysis
