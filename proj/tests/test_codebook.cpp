#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "wt/codebook.hpp"
#include "wt/freq.hpp"
#include "wt/numerals.hpp"
#include "wt/rng.hpp"

using namespace wt::codebook;
using wt::BitString;

namespace {

std::string readData(const char* name) {
    std::ifstream in(std::string(WT_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("full-width table is a permutation of all byte patterns") {
    auto t = CodeTable::generate(8, 256, 1, 0);
    std::set<uint64_t> values;
    for (const auto& [sym, code] : t.entries()) {
        (void)sym;
        values.insert(code.toValue());
    }
    CHECK(values.size() == 256);
    CHECK(*values.begin() == 0);
    CHECK(*values.rbegin() == 255);
}

TEST_CASE("generation is deterministic and injective after masking") {
    auto a = CodeTable::generate(16, 256, 42, 4);
    auto b = CodeTable::generate(16, 256, 42, 4);
    CHECK(a == b);
    CHECK(a.fingerprint() == b.fingerprint());
    CHECK(a.noiseBits() == 4);
    CHECK(a.entries().size() == 256);

    std::set<std::string> masked;
    for (const auto& [sym, code] : a.entries()) {
        (void)sym;
        CHECK(code.size() == 16);
        std::string m = code.toString();
        for (size_t i = 0; i < 16; ++i) {
            if (a.noiseMask()[i]) m[i] = '_';
        }
        CHECK(masked.insert(m).second);
    }
}

TEST_CASE("capacity violations") {
    CHECK_THROWS_AS(CodeTable::generate(4, 17, 0, 0), wt::CapacityExceeded);
    CHECK_THROWS_AS(CodeTable::generate(8, 256, 0, 1), wt::CapacityExceeded);
    CHECK_THROWS_AS(CodeTable::generate(16, 257, 0, 0), wt::CapacityExceeded);
    CHECK_THROWS_AS(CodeTable::generate(16, 256, 0, 16), wt::CapacityExceeded);
}

TEST_CASE("tables from different seeds differ") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        auto a = CodeTable::generate(16, 64, seed, 2);
        auto b = CodeTable::generate(16, 64, seed + 1, 2);
        CHECK(!(a == b));
    }
}

TEST_CASE("encodeSymbols examples") {
    auto identity = CodeTable::identity();
    CHECK(encodeSymbols(std::vector<uint8_t>{}, identity, 0).empty());
    CHECK(encodeSymbols(std::vector<uint8_t>{65}, identity, 0).toString() == "01000001");
}

TEST_CASE("noise bits differ between seeds, decode agrees") {
    auto t = CodeTable::generate(16, 256, 42, 4);
    std::vector<uint8_t> data{72, 101, 108, 108, 111};
    auto bitsA = encodeSymbols(data, t, 1);
    auto bitsB = encodeSymbols(data, t, 2);
    CHECK(!(bitsA == bitsB));
    CHECK(decodeSymbols(bitsA, t) == data);
    CHECK(decodeSymbols(bitsB, t) == data);

    // Only the masked positions may differ.
    for (size_t i = 0; i < bitsA.size(); ++i) {
        if (bitsA[i] != bitsB[i]) {
            CHECK(t.noiseMask()[i % 16] == 1);
        }
    }
}

TEST_CASE("decode round trip over random tables") {
    wt::SplitMix64 rng(0xC0DE);
    for (int trial = 0; trial < 20; ++trial) {
        int width = 8 + static_cast<int>(rng.below(15));
        int noise = static_cast<int>(rng.below(4));
        if (width - noise < 8) noise = 0;
        auto t = CodeTable::generate(width, 256, rng.next(), noise);
        std::vector<uint8_t> data;
        size_t len = rng.below(200);
        for (size_t i = 0; i < len; ++i) data.push_back(static_cast<uint8_t>(rng.below(256)));
        CHECK(decodeSymbols(encodeSymbols(data, t, rng.next()), t) == data);
    }
}

TEST_CASE("decode errors") {
    auto t = CodeTable::generate(16, 256, 7, 0);
    CHECK(decodeSymbols(BitString{}, t).empty());
    CHECK_THROWS_AS(decodeSymbols(BitString(std::vector<uint8_t>(15, 0)), t),
                    wt::UnalignedLength);

    // A masked value no symbol owns decodes to UnknownCodeword.
    auto small = CodeTable::generate(16, 4, 9, 0);
    std::set<uint64_t> used;
    for (const auto& [sym, code] : small.entries()) {
        (void)sym;
        used.insert(code.toValue());
    }
    uint64_t free = 0;
    while (used.count(free)) ++free;
    CHECK_THROWS_AS(decodeSymbols(BitString::fromValue(free, 16), small),
                    wt::UnknownCodeword);

    CHECK_THROWS_AS(encodeSymbols(std::vector<uint8_t>{200}, small, 0), wt::UnknownSymbol);
}

TEST_CASE("countTables") {
    CHECK(countTables(4, 3).count == 3360);
    CHECK(countTables(1, 2).count == 2);

    // Iterative product oracle, all widths up to 8, every symbol count.
    for (int w = 1; w <= 8; ++w) {
        boost::multiprecision::cpp_int space = boost::multiprecision::cpp_int(1) << w;
        boost::multiprecision::cpp_int product = 1;
        int k = 0;
        while (boost::multiprecision::cpp_int(k) < space) {
            product *= space - k;
            ++k;
            CHECK(countTables(w, k).count == product);
        }
    }

    // The 16-bit/256-symbol count, cross-checked against an independently
    // computed digit count and leading digits.
    std::string big = countTables(16, 256).toString();
    CHECK(big.size() == 1233);
    CHECK(big.substr(0, 12) == "634280838513");

    CHECK_THROWS_AS(countTables(2, 5), wt::CapacityExceeded);
}

TEST_CASE("frequency opacity of a padded Fibonacci table") {
    // 12-bit standard-form codewords padded to 16 bits with a 4-bit noise
    // nibble in front. Tallying the ciphertext a byte at a time must not put
    // the plaintext's top letter on top.
    std::map<uint8_t, BitString> entries;
    for (int sym = 0; sym < 256; ++sym) {
        BitString code = BitString::fromString("0000");
        code.append(wt::numerals::zeckendorfEncode(static_cast<uint64_t>(sym), 12));
        entries.emplace(static_cast<uint8_t>(sym), std::move(code));
    }
    BitString mask = BitString::fromString("1111000000000000");
    auto t = CodeTable::fromEntries(16, std::move(mask), std::move(entries));

    std::string corpus = readData("corpus.txt");
    std::vector<uint8_t> letters;
    for (char c : corpus) {
        if (c >= 'A' && c <= 'Z') letters.push_back(static_cast<uint8_t>(c));
        else if (c >= 'a' && c <= 'z') letters.push_back(static_cast<uint8_t>(c - 'a' + 'A'));
    }
    REQUIRE(letters.size() >= 2000);

    auto plainTally = wt::freq::tally(std::string(letters.begin(), letters.end()),
                                      wt::freq::AlphabetPolicy::Letters);
    uint32_t topLetter = plainTally.ranked().front().first;
    CHECK(topLetter == 'E');

    BitString bits = encodeSymbols(letters, t, 99);
    wt::PackedBits packed = wt::pack(bits);
    wt::freq::FrequencyTable byteTally;
    for (uint8_t b : packed.bytes) byteTally.add(b);
    CHECK(byteTally.ranked().front().first != topLetter);
}

TEST_CASE("codebook lines round trip through fromEntries") {
    auto t = CodeTable::generate(12, 100, 31337, 2);
    std::string lines = serializeCodebookLines(t);
    CHECK(lines.find("width=12") == 0);
    CHECK(lines.find("noise_mask=") != std::string::npos);
    // Collisions are rejected.
    std::map<uint8_t, BitString> clash;
    clash.emplace(0, BitString::fromString("00000001"));
    clash.emplace(1, BitString::fromString("00000001"));
    CHECK_THROWS_AS(CodeTable::fromEntries(8, BitString::fromString("00000000"),
                                           std::move(clash)),
                    wt::FormatError);

    // Masked collisions (differ only in noise positions) are rejected too.
    std::map<uint8_t, BitString> maskedClash;
    maskedClash.emplace(0, BitString::fromString("10000001"));
    maskedClash.emplace(1, BitString::fromString("00000001"));
    CHECK_THROWS_AS(CodeTable::fromEntries(8, BitString::fromString("10000000"),
                                           std::move(maskedClash)),
                    wt::FormatError);
}
