#pragma once

#include <cstdint>
#include <vector>

namespace wt {

// SplitMix64. Every seeded behaviour in the library draws from this generator
// so that key material and ciphertexts are bit-identical across platforms and
// standard-library implementations.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound). Modulo bias is below 2^-50 for every bound
    // used here and keeps the stream consumption fixed at one draw.
    uint64_t below(uint64_t bound) { return next() % bound; }

    // Single random bit, consuming one 64-bit draw per 64 bits.
    uint8_t nextBit() {
        if (bitsLeft_ == 0) {
            bitBuffer_ = next();
            bitsLeft_ = 64;
        }
        uint8_t b = static_cast<uint8_t>(bitBuffer_ & 1u);
        bitBuffer_ >>= 1;
        --bitsLeft_;
        return b;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
    uint64_t bitBuffer_ = 0;
    int bitsLeft_ = 0;
};

} // namespace wt
