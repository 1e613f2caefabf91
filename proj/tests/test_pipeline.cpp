#include <doctest.h>

#include <fstream>
#include <sstream>

#include "wt/numerals.hpp"
#include "wt/pipeline.hpp"
#include "wt/rng.hpp"

using namespace wt::pipeline;
using wt::BitString;

namespace {

std::string readData(const char* name) {
    std::ifstream in(std::string(WT_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

KeyBundle p1Bundle(uint64_t seed, int width = 16, int noise = 4) {
    KeyBundle b;
    b.process = ProcessId::P1;
    b.table = wt::codebook::CodeTable::generate(width, 256, seed, noise);
    b.noiseSeed = seed + 1;
    return b;
}

wt::homophones::HomophoneTable abstractRuleTable() {
    auto reference = wt::freq::tally(readData("abstract.txt"),
                                     wt::freq::AlphabetPolicy::Letters);
    return wt::homophones::buildRuleTable(reference);
}

KeyBundle p4Bundle(uint64_t seed, bool withChain) {
    KeyBundle b;
    b.process = ProcessId::P4;
    b.table = wt::codebook::CodeTable::generate(16, 256, seed, 4);
    b.homophoneTable = abstractRuleTable();
    auto domain = b.homophoneTable->symbols();
    b.permutation = wt::transforms::LetterPermutation::fromSeed(domain, seed + 2);
    b.noiseSeed = seed + 3;
    b.homophoneSeed = seed + 4;
    if (withChain) {
        b.transformChain.push_back(wt::transforms::SpliceParams{3, 0, true});
        b.transformChain.push_back(wt::transforms::BoustroParams{0, 1});
    }
    return b;
}

std::string randomLetters(wt::SplitMix64& rng, size_t n) {
    std::string s;
    for (size_t i = 0; i < n; ++i) s.push_back(static_cast<char>('A' + rng.below(26)));
    return s;
}

std::string randomPrintable(wt::SplitMix64& rng, size_t n) {
    std::string s;
    for (size_t i = 0; i < n; ++i) s.push_back(static_cast<char>(32 + rng.below(95)));
    return s;
}

} // namespace

TEST_CASE("p1 single-symbol frame matches the hand-built codeword") {
    // Standard-form 12-bit codewords behind a 4-bit noise nibble.
    std::map<uint8_t, BitString> entries;
    for (int sym = 0; sym < 256; ++sym) {
        BitString code = BitString::fromString("0000");
        code.append(wt::numerals::zeckendorfEncode(static_cast<uint64_t>(sym), 12));
        entries.emplace(static_cast<uint8_t>(sym), std::move(code));
    }
    KeyBundle b;
    b.process = ProcessId::P1;
    b.table = wt::codebook::CodeTable::fromEntries(
        16, BitString::fromString("1111000000000000"), std::move(entries));
    b.noiseSeed = 5;

    auto frame = encode("A", b);
    BitString bits = wt::readFrame(frame);
    REQUIRE(bits.size() == 16);
    CHECK(bits.slice(4, 12) == BitString::fromString("000100010010")); // 55+8+2
    CHECK(decode(frame, b) == "A");
}

TEST_CASE("empty text gives an empty frame") {
    auto b = p1Bundle(3);
    auto frame = encode("", b);
    CHECK(frame.size() == 12); // magic + count only
    CHECK(decode(frame, b).empty());

    auto p4 = p4Bundle(8, true);
    CHECK(decode(encode("", p4), p4).empty());
}

TEST_CASE("p1 round trip on random printable text") {
    wt::SplitMix64 rng(0x9111);
    auto b = p1Bundle(11);
    b.caseFold = false;
    for (int trial = 0; trial < 50; ++trial) {
        std::string text = randomPrintable(rng, rng.below(600));
        CHECK(decode(encode(text, b), b) == text);
    }
}

TEST_CASE("p1 payload length is width times the symbol count") {
    auto b = p1Bundle(21);
    b.caseFold = false;
    std::string text = "FOURTEEN CHARS";
    BitString bits = wt::readFrame(encode(text, b));
    CHECK(bits.size() == 16 * text.size());
}

TEST_CASE("p2 with the identity permutation reduces to p1") {
    auto p1 = p1Bundle(31);
    KeyBundle p2 = p1;
    p2.process = ProcessId::P2;
    std::vector<uint32_t> domain;
    for (char c = 'A'; c <= 'Z'; ++c) domain.push_back(static_cast<uint32_t>(c));
    p2.permutation = wt::transforms::LetterPermutation::identity(domain);
    std::string text = "ATTACK AT DAWN";
    CHECK(encode(text, p1) == encode(text, p2));
}

TEST_CASE("p2 swap round trips the pangram exactly") {
    const std::string pangram = "The quick brown fox jumped lazily over the sleepy dog.";
    KeyBundle b = p1Bundle(41);
    b.process = ProcessId::P2;
    b.caseFold = false;
    b.permutation = wt::transforms::LetterPermutation::lettersWithSwap('e', 'q');
    auto frame = encode(pangram, b);
    CHECK(decode(frame, b) == pangram);

    // Decoding under a different permutation garbles the text detectably.
    KeyBundle wrong = b;
    wrong.permutation = wt::transforms::LetterPermutation::lettersWithSwap('a', 'z');
    CHECK(decode(frame, wrong) != pangram);
}

TEST_CASE("p3 round trip and seed independence of decode") {
    KeyBundle b;
    b.process = ProcessId::P3;
    b.homophoneTable = abstractRuleTable();
    b.homophoneSeed = 1;

    wt::SplitMix64 rng(0x331);
    for (int trial = 0; trial < 20; ++trial) {
        std::string text = randomLetters(rng, rng.below(400));
        auto frame = encode(text, b);
        CHECK(decode(frame, b) == text);
    }

    std::string text = randomLetters(rng, 200);
    KeyBundle b2 = b;
    b2.homophoneSeed = 2;
    CHECK(encode(text, b) != encode(text, b2));
    CHECK(decode(encode(text, b2), b2) == text);
    CHECK(decode(encode(text, b2), b) == text); // decode ignores the seed
}

TEST_CASE("p4 round trip with and without the transform chain") {
    wt::SplitMix64 rng(0x0441);
    for (bool chain : {false, true}) {
        auto b = p4Bundle(rng.next(), chain);
        for (int trial = 0; trial < 15; ++trial) {
            std::string text = randomLetters(rng, rng.below(300));
            CHECK(decode(encode(text, b), b) == text);
        }
    }
}

TEST_CASE("identical input and bundle give identical frames") {
    auto b = p4Bundle(77, true);
    std::string text = "DETERMINISMMATTERS";
    CHECK(encode(text, b) == encode(text, b));
}

TEST_CASE("p4 splice growth shows up in the frame") {
    auto plain = p4Bundle(88, false);
    auto spliced = p4Bundle(88, false);
    spliced.transformChain.push_back(wt::transforms::SpliceParams{3, 0, true});
    std::string text = "GROWTHCHECK";
    size_t n = wt::readFrame(encode(text, plain)).size();
    size_t m = wt::readFrame(encode(text, spliced)).size();
    CHECK(n == 16 * text.size());
    CHECK(m == n + n / 3);
}

TEST_CASE("preprocessing flags") {
    KeyBundle b = p1Bundle(5);
    b.caseFold = true;
    b.stripSpaces = true;
    CHECK(preprocess("Ab cD", b) == "ABCD");
    b.caseFold = false;
    CHECK(preprocess("Ab cD", b) == "AbcD");
    b.stripSpaces = false;
    CHECK(preprocess("Ab cD", b) == "Ab cD");
}

TEST_CASE("bundle validation") {
    KeyBundle b;
    b.process = ProcessId::P4;
    b.table = wt::codebook::CodeTable::generate(16, 256, 1, 0);
    CHECK_THROWS_AS(b.validate(), wt::FormatError); // missing homophones

    KeyBundle p1 = p1Bundle(1);
    p1.transformChain.push_back(wt::transforms::BoustroParams{0, 0});
    CHECK_THROWS_AS(p1.validate(), wt::FormatError); // chain outside p4
}

TEST_CASE("bundle serialization round trips") {
    for (bool chain : {false, true}) {
        auto b = p4Bundle(123, chain);
        std::string text = serializeBundle(b);
        KeyBundle parsed = parseBundle(text);
        CHECK(serializeBundle(parsed) == text);
        CHECK(parsed.process == b.process);
        CHECK(parsed.noiseSeed == b.noiseSeed);
        CHECK(*parsed.table == *b.table);
        CHECK(*parsed.homophoneTable == *b.homophoneTable);
        CHECK(*parsed.permutation == *b.permutation);
        CHECK(parsed.transformChain.size() == b.transformChain.size());

        std::string msg = "SERIALIZEDKEYSWORK";
        CHECK(decode(encode(msg, b), parsed) == msg);
    }

    auto minimal = p1Bundle(9, 8, 0);
    KeyBundle reparsed = parseBundle(serializeBundle(minimal));
    CHECK(serializeBundle(reparsed) == serializeBundle(minimal));
}

TEST_CASE("bundle parser rejects malformed input") {
    auto b = p4Bundle(9, false);
    std::string good = serializeBundle(b);

    CHECK_THROWS_AS(parseBundle("not a bundle\n"), wt::FormatError);
    CHECK_THROWS_AS(parseBundle("WTKB1\nversion=1\n"), wt::FormatError); // no process

    // A p4 declaration without its components.
    CHECK_THROWS_AS(parseBundle("WTKB1\nversion=1\nprocess=p4\n"), wt::FormatError);

    // Unknown field, with the line number in the message.
    try {
        parseBundle("WTKB1\nversion=1\nbogus=1\n");
        FAIL("expected FormatError");
    } catch (const wt::FormatError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    // Duplicate group line.
    size_t firstGroup = good.find("group=");
    std::string dupGroup = good;
    size_t lineEnd = good.find('\n', firstGroup);
    dupGroup.insert(lineEnd + 1, good.substr(firstGroup, lineEnd + 1 - firstGroup));
    CHECK_THROWS_AS(parseBundle(dupGroup), wt::FormatError);

    // Duplicate scalar field.
    CHECK_THROWS_AS(parseBundle("WTKB1\nversion=1\nversion=1\nprocess=p1\n"),
                    wt::FormatError);
}

TEST_CASE("transform step serialization") {
    TransformStep splice = wt::transforms::SpliceParams{3, 7, true};
    CHECK(serializeTransformStep(splice) == "splice:stride=3,offset=7,verify=1");
    TransformStep boustro = wt::transforms::BoustroParams{2, 5};
    CHECK(serializeTransformStep(boustro) == "boustro:start=2,jump=5");

    auto parsed = parseTransformStep("splice:stride=4,offset=0,verify=0");
    CHECK(std::get<wt::transforms::SpliceParams>(parsed).stride == 4);
    CHECK_THROWS_AS(parseTransformStep("splice:offset=1"), wt::FormatError);
    CHECK_THROWS_AS(parseTransformStep("rot13:amount=13"), wt::FormatError);
    CHECK_THROWS_AS(parseTransformStep("boustro:start=1,bogus=2"), wt::FormatError);
}

TEST_CASE("expanded symbol remapping") {
    CHECK(remapExpandedSymbol('A') == 'A');
    CHECK(remapExpandedSymbol(256) == 128);
    CHECK(remapExpandedSymbol(276) == 148);
    CHECK(unremapExpandedSymbol(128) == 256);
    CHECK(unremapExpandedSymbol('Z') == 'Z');
    CHECK_THROWS_AS(remapExpandedSymbol(256 + 128), wt::CapacityExceeded);
}
