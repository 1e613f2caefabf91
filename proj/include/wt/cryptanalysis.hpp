#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wt/error.hpp"
#include "wt/freq.hpp"
#include "wt/pipeline.hpp"

namespace wt::cryptanalysis {

// Rank-matching attack: the i-th most frequent ciphertext symbol is guessed
// to be the i-th most frequent letter of the reference language. Cipher ties
// break by symbol id, reference ties alphabetically. Symbols ranked past the
// 26 reference letters receive no guess.
std::map<uint32_t, char> rankMatchAttack(const freq::FrequencyTable& cipherTally);

struct AttackReport {
    std::map<uint32_t, char> guessedMapping;
    double recoveryRate = 0.0;
    std::string method;
};

// Fraction of positions where the guessed letter equals the true plaintext
// letter. Lengths must match.
double scoreRecovery(const std::map<uint32_t, char>& guess,
                     std::span<const uint32_t> ciphertext, std::string_view plaintext);

using Dictionary = std::set<std::string, std::less<>>;

Dictionary loadWordlist(std::string_view contents);

struct SegmentationResult {
    std::vector<std::string> words; // every entry is a dictionary member
    std::string residue;            // unsegmented tail
    std::vector<std::string> decisions; // accept/reject trace
};

// The literal shortest-match procedure: grow a candidate one letter at a
// time, record a word at the first dictionary hit, restart. Failure modes
// and all: the residue carries whatever never matched.
SegmentationResult greedySegment(std::string_view text, const Dictionary& dict);

struct DpSegmentation {
    uint64_t parseCount = 0; // capped at parseCountCap
    std::vector<std::string> witness; // one full segmentation, empty when none
    static constexpr uint64_t parseCountCap = 1'000'000'000;
};

// Dynamic program counting every full segmentation; the independent check
// that exposes where the greedy procedure goes wrong.
DpSegmentation dpSegment(std::string_view text, const Dictionary& dict);

struct ExperimentConfig {
    uint64_t seed = 1;
    int tableWidth = 16;
    int noiseBits = 4;
    std::vector<int> groupBits = {8, 12, 16};
    bool withTransforms = true; // splice + boustrophedon on the p4 path
};

struct ExperimentRow {
    std::string method; // "substitution", "p3", "p4"
    int groupBits = 0;  // 0 when the attack sees symbols, not a bit stream
    double recovery = 0.0;
};

struct ExperimentReport {
    size_t corpusLetters = 0;
    std::vector<ExperimentRow> rows;

    double recoveryFor(std::string_view method) const; // max over group widths
};

// Measures the rank-matching attack against (a) plain substitution, (b)
// frequency normalization, and (c) the full p4 pipeline, the last tallied at
// each configured group width. The attacker sees only ciphertext.
ExperimentReport runExperiment(std::string_view corpus, const ExperimentConfig& config);

} // namespace wt::cryptanalysis
