// wt - frequency-confounding encryption toolkit command line.
//
// Exit codes: 0 success, 1 usage error, 2 data/format error, 3 verification
// failure (bad padding, keystream mismatch, unknown codeword). Data goes to
// standard output, diagnostics to standard error; binary frames are written
// to files unless --binary-stdout is given.

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wt/bitio.hpp"
#include "wt/codebook.hpp"
#include "wt/cryptanalysis.hpp"
#include "wt/error.hpp"
#include "wt/freq.hpp"
#include "wt/homophones.hpp"
#include "wt/numerals.hpp"
#include "wt/pipeline.hpp"
#include "wt/transforms.hpp"

namespace {

std::string readInput(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw wt::FormatError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<uint8_t> readBinary(const std::string& path) {
    std::string s = readInput(path);
    return std::vector<uint8_t>(s.begin(), s.end());
}

void writeOutput(const std::string& path, std::string_view data, bool binary,
                 bool binaryStdout) {
    if (path.empty() || path == "-") {
        if (binary && !binaryStdout) {
            throw wt::FormatError("refusing to write a binary frame to stdout; "
                                  "use -o FILE or --binary-stdout");
        }
        std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw wt::FormatError("cannot open '" + path + "' for writing");
    }
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

void writeFrameOut(const std::string& path, const std::vector<uint8_t>& frame,
                   bool binaryStdout) {
    writeOutput(path, std::string_view(reinterpret_cast<const char*>(frame.data()),
                                       frame.size()),
                true, binaryStdout);
}

uint64_t parseCount(const std::string& s, const char* what) {
    try {
        size_t used = 0;
        unsigned long long v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw wt::FormatError(std::string("bad ") + what + " '" + s + "'");
    }
}

struct SystemChoice {
    enum Kind { Fib, FibPaper, Phi, Prime, Base, Golden } kind = Fib;
    unsigned base = 10;
};

SystemChoice parseSystem(const std::string& s) {
    SystemChoice c;
    if (s == "fib") {
        c.kind = SystemChoice::Fib;
    } else if (s == "fib-paper") {
        c.kind = SystemChoice::FibPaper;
    } else if (s == "phi") {
        c.kind = SystemChoice::Phi;
    } else if (s == "prime") {
        c.kind = SystemChoice::Prime;
    } else if (s == "golden") {
        c.kind = SystemChoice::Golden;
    } else if (s.rfind("base:", 0) == 0) {
        c.kind = SystemChoice::Base;
        c.base = static_cast<unsigned>(parseCount(s.substr(5), "base"));
    } else {
        throw wt::FormatError("unknown numeral system '" + s + "'");
    }
    return c;
}

// Greedy largest-first digits over an arbitrary weight vector (used for the
// paper-mode Fibonacci weights, where the standard form does not apply).
wt::BitString greedyEncode(uint64_t n, const wt::numerals::WeightVector& w) {
    wt::BitString out;
    uint64_t rem = n;
    for (size_t i = w.width(); i-- > 0;) {
        if (w.weights[i] <= rem) {
            out.push_back(1);
            rem -= w.weights[i];
        } else {
            out.push_back(0);
        }
    }
    if (rem != 0) {
        throw wt::Overflow("value not representable in this width");
    }
    return out;
}

void cmdNumeralEnc(const SystemChoice& sys, uint64_t n, size_t width) {
    using namespace wt::numerals;
    switch (sys.kind) {
    case SystemChoice::Fib:
        std::cout << zeckendorfEncode(n, width).toString() << "\n";
        break;
    case SystemChoice::FibPaper:
        std::cout << greedyEncode(n, fibWeights(width, true)).toString() << "\n";
        break;
    case SystemChoice::Phi:
        std::cout << phinaryEncode(n).toString() << "\n";
        break;
    case SystemChoice::Prime: {
        auto weights = primeEncode(n);
        for (size_t i = 0; i < weights.size(); ++i) {
            if (i) std::cout << "+";
            std::cout << weights[i];
        }
        std::cout << "\n";
        break;
    }
    case SystemChoice::Golden:
        std::cout << goldenWord(n).toString() << "\n";
        break;
    case SystemChoice::Base: {
        if (n == 0) {
            std::cout << "0\n";
            break;
        }
        std::string digits;
        uint64_t v = n;
        while (v) {
            unsigned d = static_cast<unsigned>(v % sys.base);
            digits.push_back(static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)));
            v /= sys.base;
        }
        std::reverse(digits.begin(), digits.end());
        std::cout << digits << "\n";
        break;
    }
    }
}

void cmdNumeralDec(const SystemChoice& sys, const std::string& digits) {
    using namespace wt::numerals;
    switch (sys.kind) {
    case SystemChoice::Fib: {
        wt::BitString bits = wt::BitString::fromString(digits);
        std::cout << weightedDecode(bits, fibWeights(bits.size())) << "\n";
        break;
    }
    case SystemChoice::FibPaper: {
        wt::BitString bits = wt::BitString::fromString(digits);
        std::cout << weightedDecode(bits, fibWeights(bits.size(), true)) << "\n";
        break;
    }
    case SystemChoice::Phi: {
        auto p = PhinaryNumeral::fromString(digits);
        std::cout << phinaryDecode(p) << "\n";
        break;
    }
    case SystemChoice::Prime: {
        uint64_t total = 0;
        std::string token;
        std::istringstream ss(digits);
        while (std::getline(ss, token, '+')) {
            total += parseCount(token, "prime weight");
        }
        std::cout << total << "\n";
        break;
    }
    case SystemChoice::Golden: {
        auto result = goldenNumeralDecode(wt::BitString::fromString(digits));
        if (result.failed()) {
            std::cout << "no parse\n";
        } else {
            std::cout << (result.unique() ? "unique" : "ambiguous") << " "
                      << result.parses.size() << (result.truncated ? "+" : "") << "\n";
            for (const auto& parse : result.parses) {
                for (size_t i = 0; i < parse.size(); ++i) {
                    if (i) std::cout << "+";
                    std::cout << "S" << parse[i];
                }
                std::cout << "\n";
            }
        }
        break;
    }
    case SystemChoice::Base:
        std::cout << digitsValue(digits, sys.base) << "\n";
        break;
    }
}

void printTallyReport(const wt::freq::FrequencyTable& t, bool letters) {
    for (const auto& [sym, count] : t.ranked()) {
        std::string name;
        if (letters) {
            name = std::string(1, static_cast<char>(sym));
        } else {
            char buf[16];
            std::snprintf(buf, sizeof buf, "0x%x", sym);
            name = buf;
        }
        std::printf("%s %llu %.4f%%\n", name.c_str(),
                    static_cast<unsigned long long>(count), t.percentage(sym));
    }
    std::printf("total %llu\n", static_cast<unsigned long long>(t.total));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"frequency-confounding encryption toolkit"};
    app.require_subcommand(1);

    // ------------------------------------------------------ numeral
    auto* numeral = app.add_subcommand("numeral", "alternate binary numeral systems");
    numeral->require_subcommand(1);
    std::string systemName = "fib";
    size_t width = 12;
    uint64_t limit = 0;
    std::string valueArg;

    auto* nenc = numeral->add_subcommand("enc", "encode a nonnegative integer");
    nenc->add_option("--system", systemName, "fib|fib-paper|phi|prime|base:<b>|golden");
    nenc->add_option("--width", width, "digit count for fib systems");
    nenc->add_option("value", valueArg, "integer to encode")->required();
    nenc->callback([&] {
        cmdNumeralEnc(parseSystem(systemName), parseCount(valueArg, "value"), width);
    });

    auto* ndec = numeral->add_subcommand("dec", "decode a digit string");
    ndec->add_option("--system", systemName, "fib|fib-paper|phi|prime|base:<b>|golden");
    ndec->add_option("--width", width, "expected digit count");
    ndec->add_option("digits", valueArg, "digit string")->required();
    ndec->callback([&] { cmdNumeralDec(parseSystem(systemName), valueArg); });

    auto* nenum = numeral->add_subcommand("enum", "list every representation of a value");
    nenum->add_option("--system", systemName, "fib|fib-paper");
    nenum->add_option("--width", width, "digit count")->required();
    nenum->add_option("--limit", limit, "cap on the number of representations");
    nenum->add_option("value", valueArg, "integer")->required();
    nenum->callback([&] {
        SystemChoice sys = parseSystem(systemName);
        if (sys.kind != SystemChoice::Fib && sys.kind != SystemChoice::FibPaper) {
            throw wt::FormatError("enum supports fib and fib-paper systems");
        }
        auto w = wt::numerals::fibWeights(width, sys.kind == SystemChoice::FibPaper);
        auto reps = wt::numerals::enumerateRepresentations(
            parseCount(valueArg, "value"), w, limit == 0 ? SIZE_MAX : limit);
        for (const auto& r : reps) std::cout << r.toString() << "\n";
    });

    // ------------------------------------------------------ tally
    auto* tallyCmd = app.add_subcommand("tally", "frequency analysis report");
    std::string alphabet = "letters";
    std::string tallyFile;
    tallyCmd->add_option("--alphabet", alphabet, "letters|bytes|groups:K");
    tallyCmd->add_option("file", tallyFile, "input file (default stdin)");
    tallyCmd->callback([&] {
        if (alphabet == "letters") {
            printTallyReport(
                wt::freq::tally(readInput(tallyFile), wt::freq::AlphabetPolicy::Letters),
                true);
        } else if (alphabet == "bytes") {
            printTallyReport(
                wt::freq::tally(readInput(tallyFile), wt::freq::AlphabetPolicy::Bytes),
                false);
        } else if (alphabet.rfind("groups:", 0) == 0) {
            size_t k = parseCount(alphabet.substr(7), "group size");
            wt::BitString bits = wt::readFrame(readBinary(tallyFile));
            wt::BitGroups gs = wt::group(bits, k);
            std::vector<uint32_t> symbols;
            for (const auto& g : gs.groups) {
                symbols.push_back(static_cast<uint32_t>(g.toValue()));
            }
            printTallyReport(wt::freq::tallySymbols(symbols), false);
        } else {
            throw wt::FormatError("unknown alphabet '" + alphabet + "'");
        }
    });

    // ------------------------------------------------------ benford
    auto* benford = app.add_subcommand("benford", "first-digit distribution check");
    std::string benfordFile;
    benford->add_option("file", benfordFile, "whitespace-separated numbers");
    benford->callback([&] {
        std::istringstream ss(readInput(benfordFile));
        std::vector<std::string> numbers;
        std::string tok;
        while (ss >> tok) numbers.push_back(tok);
        std::array<uint64_t, 10> counts{};
        for (const auto& s : numbers) {
            for (char c : s) {
                if (c >= '1' && c <= '9') {
                    ++counts[static_cast<size_t>(c - '0')];
                    break;
                }
            }
        }
        double distance = wt::freq::benfordDistance(numbers);
        std::printf("digit observed expected\n");
        for (int d = 1; d <= 9; ++d) {
            double obs = static_cast<double>(counts[static_cast<size_t>(d)]) /
                         static_cast<double>(numbers.size());
            std::printf("%d %.5f %.5f\n", d, obs, wt::freq::benfordExpected(d));
        }
        std::printf("distance %.6f\n", distance);
    });

    // ------------------------------------------------------ codebook
    auto* codebook = app.add_subcommand("codebook", "code table generation and checks");
    codebook->require_subcommand(1);
    int cbWidth = 16, cbSymbols = 256, cbNoise = 0;
    uint64_t cbSeed = 0, permSeed = 0, homSeed = 0;
    std::string outPath, refPath, processArg, homMode = "rule";
    std::vector<std::string> transformSpecs;

    auto* cbGen = codebook->add_subcommand("gen", "generate a table / key bundle");
    cbGen->add_option("--width", cbWidth, "codeword bits (8..32)");
    cbGen->add_option("--symbols", cbSymbols, "symbol count (1..256)");
    cbGen->add_option("--noise", cbNoise, "don't-care bits per codeword");
    cbGen->add_option("--seed", cbSeed, "table generation seed");
    cbGen->add_option("--process", processArg, "bundle process: p1 (default), p2, p4");
    cbGen->add_option("--ref", refPath, "reference text for p4 homophone groups");
    cbGen->add_option("--perm-seed", permSeed, "permutation seed for p2/p4");
    cbGen->add_option("--homophone-mode", homMode, "rule|formula (p4)");
    cbGen->add_option("--homophone-seed", homSeed, "normalization seed stored in the bundle");
    cbGen->add_option("--transform", transformSpecs,
                      "p4 transform step, e.g. splice:stride=3,offset=0,verify=1");
    cbGen->add_option("-o,--output", outPath, "output file")->required();
    cbGen->callback([&] {
        wt::pipeline::KeyBundle bundle;
        bundle.process = processArg.empty() ? wt::pipeline::ProcessId::P1
                                            : wt::pipeline::processFromName(processArg);
        bundle.table = wt::codebook::CodeTable::generate(cbWidth, cbSymbols, cbSeed, cbNoise);
        bundle.noiseSeed = cbSeed;
        bundle.homophoneSeed = homSeed;
        if (bundle.process == wt::pipeline::ProcessId::P2) {
            std::vector<uint32_t> domain;
            for (char c = 'A'; c <= 'Z'; ++c) domain.push_back(static_cast<uint32_t>(c));
            bundle.permutation = wt::transforms::LetterPermutation::fromSeed(domain, permSeed);
        } else if (bundle.process == wt::pipeline::ProcessId::P4) {
            if (refPath.empty()) {
                throw wt::FormatError("p4 bundles need --ref for the homophone groups");
            }
            auto reference =
                wt::freq::tally(readInput(refPath), wt::freq::AlphabetPolicy::Letters);
            bundle.homophoneTable = homMode == "formula"
                                        ? wt::homophones::buildFormulaTable(reference)
                                        : wt::homophones::buildRuleTable(reference);
            auto domain = bundle.homophoneTable->symbols();
            bundle.permutation = wt::transforms::LetterPermutation::fromSeed(domain, permSeed);
            for (const auto& spec : transformSpecs) {
                bundle.transformChain.push_back(wt::pipeline::parseTransformStep(spec));
            }
        }
        writeOutput(outPath, wt::pipeline::serializeBundle(bundle), false, false);
    });

    auto* cbCheck = codebook->add_subcommand("check", "validate a WTKB1 file");
    std::string checkPath;
    cbCheck->add_option("file", checkPath, "bundle file")->required();
    cbCheck->callback([&] {
        auto bundle = wt::pipeline::parseBundle(readInput(checkPath));
        std::printf("ok process=%s", wt::pipeline::processName(bundle.process));
        if (bundle.table) {
            std::printf(" width=%d symbols=%zu noise=%d fingerprint=%016llx",
                        bundle.table->width(), bundle.table->entries().size(),
                        bundle.table->noiseBits(),
                        static_cast<unsigned long long>(bundle.table->fingerprint()));
        }
        if (bundle.homophoneTable) {
            std::printf(" alphabet=%zu", bundle.homophoneTable->alphabetSize());
        }
        std::printf("\n");
    });

    auto* cbCount = codebook->add_subcommand("count", "number of possible tables");
    cbCount->add_option("--width", cbWidth, "codeword bits")->required();
    cbCount->add_option("--symbols", cbSymbols, "symbol count")->required();
    cbCount->callback([&] {
        std::cout << wt::codebook::countTables(cbWidth, cbSymbols).toString() << "\n";
    });

    // ------------------------------------------------------ homophones
    auto* hom = app.add_subcommand("homophones", "frequency-normalization tables");
    hom->require_subcommand(1);
    auto* homGen = hom->add_subcommand("gen", "build a p3 bundle from a reference text");
    std::string homRefPath, homOut;
    uint64_t homGenSeed = 0;
    std::string homGenMode = "rule";
    homGen->add_option("--mode", homGenMode, "rule|formula");
    homGen->add_option("--ref", homRefPath, "reference text file")->required();
    homGen->add_option("--seed", homGenSeed, "normalization seed stored in the bundle");
    homGen->add_option("-o,--output", homOut, "output bundle")->required();
    homGen->callback([&] {
        auto reference =
            wt::freq::tally(readInput(homRefPath), wt::freq::AlphabetPolicy::Letters);
        wt::pipeline::KeyBundle bundle;
        bundle.process = wt::pipeline::ProcessId::P3;
        bundle.homophoneTable = homGenMode == "formula"
                                    ? wt::homophones::buildFormulaTable(reference)
                                    : wt::homophones::buildRuleTable(reference);
        bundle.homophoneSeed = homGenSeed;
        writeOutput(homOut, wt::pipeline::serializeBundle(bundle), false, false);
    });

    // ------------------------------------------------------ transform
    auto* transform = app.add_subcommand("transform", "standalone frame transforms");
    transform->require_subcommand(1);
    std::string tIn, tOut;
    bool binaryStdout = false;
    size_t tStart = 0, tJump = 0, tStride = 3, tOffset = 0;
    bool tVerify = false, tUndo = false;
    unsigned tShift = 1;

    auto addFrameIo = [&](CLI::App* cmd) {
        cmd->add_option("-i,--input", tIn, "input frame (default stdin)");
        cmd->add_option("-o,--output", tOut, "output frame (default stdout)");
        cmd->add_flag("--binary-stdout", binaryStdout, "allow frames on stdout");
    };

    auto* tBoustro = transform->add_subcommand("boustro", "bit-reverse selected bytes");
    tBoustro->add_option("--start", tStart, "first byte index to invert");
    tBoustro->add_option("--jump", tJump, "bytes skipped between inversions");
    addFrameIo(tBoustro);
    tBoustro->callback([&] {
        wt::BitString bits = wt::readFrame(readBinary(tIn));
        wt::PackedBits pb = wt::pack(bits);
        size_t fullBytes = bits.size() / 8;
        auto head = wt::transforms::boustrophedon(
            std::span<const uint8_t>(pb.bytes.data(), fullBytes), {tStart, tJump});
        std::copy(head.begin(), head.end(), pb.bytes.begin());
        writeFrameOut(tOut, wt::writeFrame(wt::unpack(pb.bytes, bits.size())), binaryStdout);
    });

    auto* tSplice = transform->add_subcommand("splice", "golden-sequence interleave");
    tSplice->add_option("--stride", tStride, "payload bits between insertions");
    tSplice->add_option("--offset", tOffset, "keystream start index");
    tSplice->add_flag("--verify", tVerify, "check the keystream when undoing");
    tSplice->add_flag("--undo", tUndo, "remove the interleaved bits");
    addFrameIo(tSplice);
    tSplice->callback([&] {
        wt::BitString bits = wt::readFrame(readBinary(tIn));
        wt::transforms::SpliceParams params{tStride, tOffset, tVerify};
        wt::BitString result = tUndo ? wt::transforms::goldenUnsplice(bits, params)
                                     : wt::transforms::goldenSplice(bits, params);
        writeFrameOut(tOut, wt::writeFrame(result), binaryStdout);
    });

    auto* tDigits = transform->add_subcommand("digits", "checkbook digit shift");
    tDigits->add_option("--shift", tShift, "added to every digit, mod 10");
    tDigits->add_option("-i,--input", tIn, "input text (default stdin)");
    tDigits->add_option("-o,--output", tOut, "output text (default stdout)");
    tDigits->callback([&] {
        writeOutput(tOut, wt::transforms::digitShift(readInput(tIn), tShift), false, false);
    });

    // ------------------------------------------------------ encode / decode
    auto* encodeCmd = app.add_subcommand("encode", "run a pipeline process");
    std::string encBundle, encIn, encOut, encProcess;
    bool encBinaryStdout = false;
    encodeCmd->add_option("--process", encProcess, "must match the bundle when given");
    encodeCmd->add_option("--bundle", encBundle, "WTKB1 key bundle")->required();
    encodeCmd->add_option("-i,--input", encIn, "plaintext (default stdin)");
    encodeCmd->add_option("-o,--output", encOut, "frame output (default stdout)");
    encodeCmd->add_flag("--binary-stdout", encBinaryStdout, "allow frames on stdout");
    encodeCmd->callback([&] {
        auto bundle = wt::pipeline::parseBundle(readInput(encBundle));
        if (!encProcess.empty() &&
            wt::pipeline::processFromName(encProcess) != bundle.process) {
            throw wt::FormatError("--process disagrees with the bundle");
        }
        writeFrameOut(encOut, wt::pipeline::encode(readInput(encIn), bundle), encBinaryStdout);
    });

    auto* decodeCmd = app.add_subcommand("decode", "invert a pipeline process");
    std::string decBundle, decIn, decOut, decProcess;
    decodeCmd->add_option("--process", decProcess, "must match the bundle when given");
    decodeCmd->add_option("--bundle", decBundle, "WTKB1 key bundle")->required();
    decodeCmd->add_option("-i,--input", decIn, "frame input (default stdin)");
    decodeCmd->add_option("-o,--output", decOut, "plaintext output (default stdout)");
    decodeCmd->callback([&] {
        auto bundle = wt::pipeline::parseBundle(readInput(decBundle));
        if (!decProcess.empty() &&
            wt::pipeline::processFromName(decProcess) != bundle.process) {
            throw wt::FormatError("--process disagrees with the bundle");
        }
        writeOutput(decOut, wt::pipeline::decode(readBinary(decIn), bundle), false, false);
    });

    // ------------------------------------------------------ attack
    auto* attack = app.add_subcommand("attack", "the classic attacker toolbox");
    attack->require_subcommand(1);
    auto* aFreq = attack->add_subcommand("freq", "rank-matching frequency attack");
    int aGroupBits = 8;
    std::string aFrame;
    aFreq->add_option("--group-bits", aGroupBits, "tally group width in bits");
    aFreq->add_option("frame", aFrame, "WTC1 frame file")->required();
    aFreq->callback([&] {
        wt::BitString bits = wt::readFrame(readBinary(aFrame));
        wt::BitGroups gs = wt::group(bits, static_cast<size_t>(aGroupBits));
        std::vector<uint32_t> symbols;
        for (const auto& g : gs.groups) {
            symbols.push_back(static_cast<uint32_t>(g.toValue()));
        }
        auto tally = wt::freq::tallySymbols(symbols);
        auto guess = wt::cryptanalysis::rankMatchAttack(tally);
        auto ranked = tally.ranked();
        std::printf("rank symbol count guess\n");
        for (size_t i = 0; i < ranked.size(); ++i) {
            auto it = guess.find(ranked[i].first);
            std::printf("%zu 0x%x %llu %c\n", i + 1, ranked[i].first,
                        static_cast<unsigned long long>(ranked[i].second),
                        it == guess.end() ? '-' : it->second);
        }
    });

    auto* aDict = attack->add_subcommand("dict", "greedy dictionary segmentation");
    std::string aWordlist, aText;
    aDict->add_option("--wordlist", aWordlist, "one lowercase word per line")->required();
    aDict->add_option("text", aText, "input text file (default stdin)");
    aDict->callback([&] {
        auto dict = wt::cryptanalysis::loadWordlist(readInput(aWordlist));
        std::string text = readInput(aText);
        std::string letters;
        for (char c : text) {
            if (c >= 'a' && c <= 'z') letters.push_back(c);
            else if (c >= 'A' && c <= 'Z') letters.push_back(static_cast<char>(c - 'A' + 'a'));
        }
        auto greedy = wt::cryptanalysis::greedySegment(letters, dict);
        std::printf("greedy:");
        for (const auto& w : greedy.words) std::printf(" %s", w.c_str());
        std::printf("\nresidue: %s\n", greedy.residue.c_str());
        auto dp = wt::cryptanalysis::dpSegment(letters, dict);
        std::printf("full-segmentations: %llu\n",
                    static_cast<unsigned long long>(dp.parseCount));
        if (!dp.witness.empty()) {
            std::printf("witness:");
            for (const auto& w : dp.witness) std::printf(" %s", w.c_str());
            std::printf("\n");
        }
    });

    // ------------------------------------------------------ experiment
    auto* experiment =
        app.add_subcommand("experiment", "attack recovery before/after normalization");
    std::string expCorpus, expBundle;
    uint64_t expSeed = 1;
    int expRuns = 1;
    experiment->add_option("--corpus", expCorpus, "English text, 1,000+ letters")->required();
    experiment->add_option("--bundle", expBundle, "p4 bundle supplying width/noise/chain");
    experiment->add_option("--seed", expSeed, "base seed");
    experiment->add_option("--runs", expRuns, "seeded repetitions");
    experiment->callback([&] {
        wt::cryptanalysis::ExperimentConfig config;
        if (!expBundle.empty()) {
            auto bundle = wt::pipeline::parseBundle(readInput(expBundle));
            if (!bundle.table) {
                throw wt::FormatError("experiment bundle needs a code table");
            }
            config.tableWidth = bundle.table->width();
            config.noiseBits = bundle.table->noiseBits();
            config.withTransforms = !bundle.transformChain.empty();
        }
        std::string corpus = readInput(expCorpus);
        std::printf("run method group_bits recovery\n");
        for (int run = 0; run < expRuns; ++run) {
            config.seed = expSeed + static_cast<uint64_t>(run);
            auto report = wt::cryptanalysis::runExperiment(corpus, config);
            for (const auto& row : report.rows) {
                std::printf("%d %s %d %.4f\n", run, row.method.c_str(), row.groupBits,
                            row.recovery);
            }
        }
    });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const wt::VerificationError& e) {
        std::cerr << "wt: " << e.what() << "\n";
        return 3;
    } catch (const wt::Error& e) {
        std::cerr << "wt: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "wt: " << e.what() << "\n";
        return 2;
    }
}
