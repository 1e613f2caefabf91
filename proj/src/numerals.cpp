#include "wt/numerals.hpp"

#include <algorithm>

namespace wt::numerals {

WeightVector fibWeights(size_t width, bool paperMode) {
    if (width == 0) {
        throw BadLength("weight vector needs at least one weight");
    }
    if (width > 90) {
        throw Overflow("Fibonacci weights overflow 64 bits past width 90");
    }
    WeightVector w;
    w.weights.reserve(width);
    if (paperMode) {
        uint64_t a = 1, b = 1;
        while (w.weights.size() < width) {
            w.weights.push_back(a);
            uint64_t next = a + b;
            a = b;
            b = next;
        }
    } else {
        uint64_t a = 1, b = 2;
        while (w.weights.size() < width) {
            w.weights.push_back(a);
            uint64_t next = a + b;
            a = b;
            b = next;
        }
    }
    return w;
}

WeightVector primeWeights(size_t width) {
    WeightVector w;
    w.weights.push_back(1);
    uint64_t candidate = 2;
    while (w.weights.size() < width) {
        bool prime = true;
        for (uint64_t d = 2; d * d <= candidate; ++d) {
            if (candidate % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime) w.weights.push_back(candidate);
        ++candidate;
    }
    return w;
}

uint64_t zeckendorfCapacity(size_t width) {
    // Alternating ones from the top: F(w+1) + F(w-1) + ... = F(w+2) - 1.
    WeightVector w = fibWeights(width + 1);
    return w.weights[width] - 1;
}

BitString zeckendorfEncode(uint64_t n, size_t width) {
    if (width == 0) {
        throw BadLength("width must be at least 1");
    }
    if (n > zeckendorfCapacity(width)) {
        throw Overflow("value exceeds standard-form capacity for this width");
    }
    WeightVector w = fibWeights(width);
    BitString out;
    uint64_t rem = n;
    for (size_t i = width; i-- > 0;) {
        if (w.weights[i] <= rem) {
            out.push_back(1);
            rem -= w.weights[i];
        } else {
            out.push_back(0);
        }
    }
    return out;
}

uint64_t weightedDecode(const BitString& bits, const WeightVector& w) {
    if (bits.size() != w.width()) {
        throw LengthMismatch("bit count does not match weight count");
    }
    uint64_t v = 0;
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) v += w.weights[w.width() - 1 - i];
    }
    return v;
}

namespace {

void enumerateRec(uint64_t target, const std::vector<uint64_t>& weights,
                  const std::vector<uint64_t>& suffixSums, size_t pos,
                  BitString& current, std::vector<BitString>& out, size_t limit) {
    if (out.size() >= limit) return;
    if (pos == weights.size()) {
        if (target == 0) out.push_back(current);
        return;
    }
    if (target > suffixSums[pos]) return; // remaining weights cannot reach it
    // Weight for display position `pos` counting from the big end.
    uint64_t weight = weights[weights.size() - 1 - pos];
    current.push_back(0);
    enumerateRec(target, weights, suffixSums, pos + 1, current, out, limit);
    current.set(current.size() - 1, 1);
    if (weight <= target) {
        enumerateRec(target - weight, weights, suffixSums, pos + 1, current, out, limit);
    }
    current.pop_back();
}

} // namespace

std::vector<BitString> enumerateRepresentations(uint64_t n, const WeightVector& w,
                                                size_t limit) {
    if (limit == 0) {
        throw BadLength("limit must be at least 1");
    }
    // suffixSums[pos] = sum of weights at display positions pos..end.
    std::vector<uint64_t> suffixSums(w.width() + 1, 0);
    for (size_t pos = w.width(); pos-- > 0;) {
        suffixSums[pos] = suffixSums[pos + 1] + w.weights[w.width() - 1 - pos];
    }
    std::vector<BitString> out;
    BitString current;
    enumerateRec(n, w.weights, suffixSums, 0, current, out, limit);
    return out;
}

PhiPair phiAdd(PhiPair x, PhiPair y) { return {x.a + y.a, x.b + y.b}; }
PhiPair phiSub(PhiPair x, PhiPair y) { return {x.a - y.a, x.b - y.b}; }

int phiSign(PhiPair x) {
    if (x.a == 0 && x.b == 0) return 0;
    if (x.a >= 0 && x.b >= 0) return 1;
    if (x.a <= 0 && x.b <= 0) return -1;
    // Mixed signs: compare |b|*phi against |a| with phi = (1 + sqrt 5) / 2.
    // b*phi + a > 0  <=>  b*sqrt5 > -(2a + b); square once the right side's
    // sign is settled. __int128 keeps the squares exact.
    __int128 a = x.a, b = x.b;
    __int128 rhs = -(2 * a + b); // b*sqrt5 ? rhs
    if (b > 0) {
        if (rhs < 0) return 1;
        return (5 * b * b > rhs * rhs) ? 1 : (5 * b * b == rhs * rhs ? 0 : -1);
    }
    // b < 0, a > 0: positive iff 2a - |b| > |b|*sqrt5.
    __int128 lhs = 5 * b * b; // (|b|*sqrt5)^2
    __int128 r = 2 * a + b;   // 2a - |b|
    if (r <= 0) return -1;
    return (r * r > lhs) ? 1 : (r * r == lhs ? 0 : -1);
}

PhiPair phiPower(int k) {
    PhiPair p{1, 0}; // phi^0
    if (k >= 0) {
        for (int i = 0; i < k; ++i) p = {p.b, p.a + p.b};          // multiply by phi
    } else {
        for (int i = 0; i > k; --i) p = {p.b - p.a, p.a};          // multiply by phi^-1
    }
    return p;
}

std::string PhinaryNumeral::toString() const {
    std::string s;
    for (uint8_t d : integerDigits) s.push_back(static_cast<char>('0' + d));
    if (!fractionDigits.empty()) {
        s.push_back('.');
        for (uint8_t d : fractionDigits) s.push_back(static_cast<char>('0' + d));
    }
    return s;
}

PhinaryNumeral PhinaryNumeral::fromString(std::string_view s) {
    PhinaryNumeral p;
    bool seenPoint = false;
    for (char c : s) {
        if (c == '.') {
            if (seenPoint) throw FormatError("more than one radix point");
            seenPoint = true;
            continue;
        }
        if (c != '0' && c != '1') throw FormatError("phinary digits must be 0 or 1");
        (seenPoint ? p.fractionDigits : p.integerDigits)
            .push_back(static_cast<uint8_t>(c - '0'));
    }
    if (p.integerDigits.empty()) throw FormatError("missing integer digits");
    return p;
}

PhinaryNumeral phinaryEncode(uint64_t n) {
    PhinaryNumeral out;
    if (n == 0) {
        out.integerDigits.push_back(0);
        return out;
    }
    if (n > (1ULL << 60)) {
        throw Overflow("phinary pair arithmetic supports values up to 2^60");
    }
    PhiPair rem{static_cast<int64_t>(n), 0};
    int kmax = 0;
    while (phiSign(phiSub(rem, phiPower(kmax + 1))) >= 0) ++kmax;
    // Greedy from the top power down; for an integer the remainder reaches
    // exactly zero at an exponent no lower than about -kmax.
    int k = kmax;
    std::vector<uint8_t> digits;
    int lastOne = kmax + 1;
    for (; k >= -2 * kmax - 8; --k) {
        PhiPair p = phiPower(k);
        if (phiSign(phiSub(rem, p)) >= 0) {
            digits.push_back(1);
            rem = phiSub(rem, p);
            lastOne = k;
        } else {
            digits.push_back(0);
        }
        if (rem.a == 0 && rem.b == 0 && k <= 0) break;
    }
    if (!(rem.a == 0 && rem.b == 0)) {
        throw Overflow("phinary greedy did not terminate; value too large");
    }
    // digits covers exponents kmax down to k; split at the radix point and
    // drop fraction digits below the last one.
    out.integerDigits.assign(digits.begin(), digits.begin() + kmax + 1);
    if (lastOne < 0) {
        out.fractionDigits.assign(digits.begin() + kmax + 1,
                                  digits.begin() + (kmax - lastOne) + 1);
    }
    return out;
}

PhiPair phinaryValue(const PhinaryNumeral& p) {
    PhiPair sum{0, 0};
    int top = static_cast<int>(p.integerDigits.size()) - 1;
    for (size_t i = 0; i < p.integerDigits.size(); ++i) {
        if (p.integerDigits[i]) {
            sum = phiAdd(sum, phiPower(top - static_cast<int>(i)));
        }
    }
    for (size_t i = 0; i < p.fractionDigits.size(); ++i) {
        if (p.fractionDigits[i]) {
            sum = phiAdd(sum, phiPower(-static_cast<int>(i) - 1));
        }
    }
    return sum;
}

uint64_t phinaryDecode(const PhinaryNumeral& p) {
    PhiPair v = phinaryValue(p);
    if (v.b != 0) {
        throw NotInteger("value is " + std::to_string(v.a) + " + " +
                         std::to_string(v.b) + "*phi, not an integer");
    }
    if (v.a < 0) {
        throw NotInteger("value is negative");
    }
    return static_cast<uint64_t>(v.a);
}

namespace {

bool primeSubsetSearch(uint64_t rem, const std::vector<uint64_t>& ws, size_t idx,
                       std::vector<uint64_t>& acc) {
    if (rem == 0) return true;
    for (size_t i = idx; i-- > 0;) {
        if (ws[i] <= rem) {
            acc.push_back(ws[i]);
            if (primeSubsetSearch(rem - ws[i], ws, i, acc)) return true;
            acc.pop_back();
        }
    }
    return false;
}

bool isPrime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

} // namespace

std::vector<uint64_t> primeEncode(uint64_t n) {
    if (n == 0) {
        throw Unrepresentable("zero has no prime-sum representation");
    }
    if (n == 1) return {1};
    std::vector<uint64_t> ws{1};
    for (uint64_t p = 2; p < n; ++p) {
        if (isPrime(p)) ws.push_back(p);
    }
    std::vector<uint64_t> acc;
    if (primeSubsetSearch(n, ws, ws.size(), acc)) return acc;
    if (isPrime(n)) return {n};
    throw Unrepresentable("no distinct prime-sum representation of " +
                          std::to_string(n));
}

uint64_t digitsValue(std::string_view digits, unsigned base) {
    if (base < 2 || base > 36) {
        throw DigitOutOfRange("base must be in 2..36");
    }
    if (digits.empty()) {
        throw FormatError("empty digit string");
    }
    uint64_t v = 0;
    for (char c : digits) {
        unsigned d;
        if (c >= '0' && c <= '9') {
            d = static_cast<unsigned>(c - '0');
        } else if (c >= 'a' && c <= 'z') {
            d = static_cast<unsigned>(c - 'a') + 10;
        } else if (c >= 'A' && c <= 'Z') {
            d = static_cast<unsigned>(c - 'A') + 10;
        } else {
            throw DigitOutOfRange(std::string("not a digit: '") + c + "'");
        }
        if (d >= base) {
            throw DigitOutOfRange(std::string("digit '") + c + "' out of range for base " +
                                  std::to_string(base));
        }
        if (v > (UINT64_MAX - d) / base) {
            throw Overflow("value does not fit in 64 bits");
        }
        v = v * base + d;
    }
    return v;
}

BitString goldenSequence(size_t m) {
    if (m == 0) return {};
    // Grow by word concatenation: S_k = S_{k-1} S_{k-2}; S_k is a prefix of
    // the limit word for every k.
    std::vector<uint8_t> prev{1};       // S_1
    std::vector<uint8_t> cur{1, 0};     // S_2
    if (m == 1) return BitString(std::vector<uint8_t>{1});
    while (cur.size() < m) {
        std::vector<uint8_t> next = cur;
        next.insert(next.end(), prev.begin(), prev.end());
        prev = std::move(cur);
        cur = std::move(next);
    }
    cur.resize(m);
    return BitString(std::move(cur));
}

BitString goldenWord(size_t k) {
    if (k == 0) {
        throw BadLength("golden words are indexed from 1");
    }
    std::vector<uint8_t> prev{1};   // S_1
    std::vector<uint8_t> cur{1, 0}; // S_2
    if (k == 1) return BitString(std::move(prev));
    for (size_t i = 2; i < k; ++i) {
        std::vector<uint8_t> next = cur;
        next.insert(next.end(), prev.begin(), prev.end());
        prev = std::move(cur);
        cur = std::move(next);
    }
    return BitString(std::move(cur));
}

BitString goldenNumeralEncode(const std::vector<size_t>& indices) {
    BitString out;
    for (size_t k : indices) out.append(goldenWord(k));
    return out;
}

namespace {

void goldenParseRec(const BitString& s, size_t pos,
                    const std::vector<BitString>& words,
                    std::vector<size_t>& acc, GoldenParseResult& result,
                    size_t maxParses) {
    if (result.parses.size() >= maxParses) {
        result.truncated = true;
        return;
    }
    if (pos == s.size()) {
        result.parses.push_back(acc);
        return;
    }
    for (size_t k = 0; k < words.size(); ++k) {
        const BitString& w = words[k];
        if (pos + w.size() > s.size()) break; // words sorted by length
        bool match = true;
        for (size_t i = 0; i < w.size(); ++i) {
            if (s[pos + i] != w[i]) {
                match = false;
                break;
            }
        }
        if (match) {
            acc.push_back(k + 1);
            goldenParseRec(s, pos + w.size(), words, acc, result, maxParses);
            acc.pop_back();
        }
    }
}

} // namespace

GoldenParseResult goldenNumeralDecode(const BitString& s, size_t maxParses) {
    std::vector<BitString> words;
    for (size_t k = 1;; ++k) {
        BitString w = goldenWord(k);
        if (w.size() > s.size()) break;
        words.push_back(std::move(w));
    }
    GoldenParseResult result;
    std::vector<size_t> acc;
    goldenParseRec(s, 0, words, acc, result, maxParses);
    if (s.empty()) {
        // The empty string parses as the empty word list; report it as unique.
        result.parses = {{}};
    }
    return result;
}

} // namespace wt::numerals
