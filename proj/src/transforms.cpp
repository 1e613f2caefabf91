#include "wt/transforms.hpp"

#include <algorithm>

#include "wt/numerals.hpp"
#include "wt/rng.hpp"

namespace wt::transforms {

std::vector<uint8_t> boustrophedon(std::span<const uint8_t> data, BoustroParams p) {
    std::vector<uint8_t> out(data.begin(), data.end());
    size_t step = p.jump + 1;
    for (size_t i = p.start; i < out.size(); i += step) {
        out[i] = reverseByteBits(out[i]);
    }
    return out;
}

BitString spliceWithKeystream(const BitString& payload, size_t stride,
                              const BitString& keystream) {
    if (stride == 0) {
        throw BadLength("splice stride must be at least 1");
    }
    size_t insertions = payload.size() / stride;
    if (keystream.size() < insertions) {
        throw BadLength("keystream shorter than the number of insertions");
    }
    BitString out;
    size_t ks = 0;
    for (size_t i = 0; i < payload.size(); ++i) {
        out.push_back(payload[i]);
        if ((i + 1) % stride == 0) {
            out.push_back(keystream[ks++]);
        }
    }
    return out;
}

UnspliceResult unspliceWithLength(const BitString& bits, size_t stride) {
    if (stride == 0) {
        throw BadLength("splice stride must be at least 1");
    }
    // n + floor(n/stride) == L forces the keystream bit count to be
    // floor(L/(stride+1)); the left side is strictly increasing in n, so the
    // payload length is unique when any is consistent.
    size_t L = bits.size();
    size_t inserted = L / (stride + 1);
    size_t n = L - inserted;
    if (n + n / stride != L) {
        throw BadLength("no payload length is consistent with " + std::to_string(L) +
                        " bits at stride " + std::to_string(stride));
    }
    UnspliceResult r;
    for (size_t i = 0; i < bits.size(); ++i) {
        if ((i + 1) % (stride + 1) == 0) {
            r.removed.push_back(bits[i]);
        } else {
            r.payload.push_back(bits[i]);
        }
    }
    return r;
}

BitString goldenSplice(const BitString& payload, const SpliceParams& p) {
    size_t insertions = p.stride == 0 ? 0 : payload.size() / p.stride;
    BitString ks = numerals::goldenSequence(p.keystreamOffset + insertions)
                       .slice(p.keystreamOffset, insertions);
    return spliceWithKeystream(payload, p.stride, ks);
}

BitString goldenUnsplice(const BitString& bits, const SpliceParams& p) {
    UnspliceResult r = unspliceWithLength(bits, p.stride);
    if (p.verifyOnDecode) {
        BitString expected = numerals::goldenSequence(p.keystreamOffset + r.removed.size())
                                 .slice(p.keystreamOffset, r.removed.size());
        if (!(expected == r.removed)) {
            throw KeystreamMismatch("interleaved bits do not match the golden sequence "
                                    "at offset " + std::to_string(p.keystreamOffset));
        }
    }
    return r.payload;
}

std::string digitShift(std::string_view digits, unsigned k) {
    std::string out;
    out.reserve(digits.size());
    for (char c : digits) {
        if (c >= '0' && c <= '9') {
            out.push_back(static_cast<char>('0' + (static_cast<unsigned>(c - '0') + k) % 10));
        } else {
            out.push_back(c);
        }
    }
    return out;
}

LetterPermutation LetterPermutation::identity(std::span<const uint32_t> domain) {
    std::map<uint32_t, uint32_t> m;
    for (uint32_t s : domain) m[s] = s;
    return fromMapping(std::move(m));
}

LetterPermutation LetterPermutation::fromSeed(std::span<const uint32_t> domain,
                                              uint64_t seed) {
    std::vector<uint32_t> sorted(domain.begin(), domain.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<uint32_t> image = sorted;
    SplitMix64 rng(seed);
    rng.shuffle(image);
    std::map<uint32_t, uint32_t> m;
    for (size_t i = 0; i < sorted.size(); ++i) m[sorted[i]] = image[i];
    return fromMapping(std::move(m));
}

LetterPermutation LetterPermutation::fromMapping(std::map<uint32_t, uint32_t> mapping) {
    std::map<uint32_t, uint32_t> seen;
    for (const auto& [from, to] : mapping) {
        if (!seen.emplace(to, from).second) {
            throw FormatError("permutation image " + std::to_string(to) + " repeats");
        }
        if (mapping.count(to) == 0) {
            throw FormatError("permutation image " + std::to_string(to) +
                              " is outside the domain");
        }
    }
    LetterPermutation p;
    p.map_ = std::move(mapping);
    return p;
}

LetterPermutation LetterPermutation::lettersWithSwap(char x, char y) {
    std::map<uint32_t, uint32_t> m;
    for (char c = 'A'; c <= 'Z'; ++c) m[static_cast<uint32_t>(c)] = static_cast<uint32_t>(c);
    char ux = static_cast<char>(x >= 'a' && x <= 'z' ? x - 'a' + 'A' : x);
    char uy = static_cast<char>(y >= 'a' && y <= 'z' ? y - 'a' + 'A' : y);
    m[static_cast<uint32_t>(ux)] = static_cast<uint32_t>(uy);
    m[static_cast<uint32_t>(uy)] = static_cast<uint32_t>(ux);
    return fromMapping(std::move(m));
}

LetterPermutation LetterPermutation::inverse() const {
    std::map<uint32_t, uint32_t> m;
    for (const auto& [from, to] : map_) m[to] = from;
    LetterPermutation p;
    p.map_ = std::move(m);
    return p;
}

uint32_t LetterPermutation::apply(uint32_t symbol) const {
    auto it = map_.find(symbol);
    if (it == map_.end()) {
        throw UnknownSymbol("symbol " + std::to_string(symbol) +
                            " is outside the permutation domain");
    }
    return it->second;
}

std::vector<uint32_t> applySymbols(std::span<const uint32_t> symbols,
                                   const LetterPermutation& p) {
    std::vector<uint32_t> out;
    out.reserve(symbols.size());
    for (uint32_t s : symbols) out.push_back(p.apply(s));
    return out;
}

std::string applyText(std::string_view text, const LetterPermutation& p) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c >= 'A' && c <= 'Z' && p.contains(static_cast<uint32_t>(c))) {
            out.push_back(static_cast<char>(p.apply(static_cast<uint32_t>(c))));
        } else if (c >= 'a' && c <= 'z' &&
                   p.contains(static_cast<uint32_t>(c - 'a' + 'A'))) {
            uint32_t mapped = p.apply(static_cast<uint32_t>(c - 'a' + 'A'));
            out.push_back(static_cast<char>(mapped - 'A' + 'a'));
        } else {
            out.push_back(c);
        }
    }
    return out;
}

} // namespace wt::transforms
