#include "wt/freq.hpp"

#include <algorithm>
#include <cmath>

namespace wt::freq {

std::vector<std::pair<uint32_t, uint64_t>> FrequencyTable::ranked() const {
    std::vector<std::pair<uint32_t, uint64_t>> v(counts.begin(), counts.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second > y.second;
        return x.first < y.first;
    });
    return v;
}

FrequencyTable tally(std::string_view text, AlphabetPolicy policy) {
    FrequencyTable t;
    for (unsigned char c : text) {
        switch (policy) {
        case AlphabetPolicy::Letters:
            if (c >= 'a' && c <= 'z') {
                t.add(static_cast<uint32_t>(c - 'a' + 'A'));
            } else if (c >= 'A' && c <= 'Z') {
                t.add(c);
            }
            break;
        case AlphabetPolicy::Bytes:
            t.add(c);
            break;
        }
    }
    return t;
}

FrequencyTable tallySymbols(std::span<const uint32_t> symbols) {
    FrequencyTable t;
    for (uint32_t s : symbols) t.add(s);
    return t;
}

Stats stats(const FrequencyTable& t, size_t alphabetSize) {
    if (alphabetSize == 0) {
        throw BadLength("alphabet size must be at least 1");
    }
    Stats s;
    s.meanPercent = 100.0 / static_cast<double>(alphabetSize);
    double sumSq = 0.0;
    size_t seen = 0;
    for (const auto& [sym, cnt] : t.counts) {
        (void)cnt;
        double d = t.percentage(sym) - s.meanPercent;
        sumSq += d * d;
        ++seen;
    }
    if (seen > alphabetSize) {
        throw BadLength("tally has more symbols than the alphabet size");
    }
    // Alphabet members that never occurred sit at 0%.
    sumSq += static_cast<double>(alphabetSize - seen) * s.meanPercent * s.meanPercent;
    s.stddevPercent = std::sqrt(sumSq / static_cast<double>(alphabetSize));
    for (const auto& [sym, cnt] : t.counts) {
        (void)cnt;
        if (t.percentage(sym) > s.meanPercent + s.stddevPercent) {
            s.exceptional.push_back(sym);
        }
    }
    return s;
}

const std::array<double, 26>& englishReference() {
    static const std::array<double, 26> table = {
        0.082, 0.015, 0.025, 0.043, 0.127, 0.022, 0.020, 0.061, 0.070,
        0.002, 0.008, 0.040, 0.024, 0.067, 0.075, 0.019, 0.001, 0.060,
        0.063, 0.091, 0.028, 0.010, 0.023, 0.001, 0.020, 0.001};
    return table;
}

const std::array<char, 26>& englishReferenceRanking() {
    static const std::array<char, 26> ranking = [] {
        std::array<char, 26> r;
        for (int i = 0; i < 26; ++i) r[static_cast<size_t>(i)] = static_cast<char>('A' + i);
        const auto& p = englishReference();
        std::stable_sort(r.begin(), r.end(), [&p](char x, char y) {
            double px = p[static_cast<size_t>(x - 'A')];
            double py = p[static_cast<size_t>(y - 'A')];
            if (px != py) return px > py;
            return x < y;
        });
        return r;
    }();
    return ranking;
}

double benfordExpected(int digit) {
    if (digit < 1 || digit > 9) {
        throw DigitOutOfRange("Benford digit must be 1..9");
    }
    return std::log10(1.0 + 1.0 / static_cast<double>(digit));
}

double benfordDistance(std::span<const std::string> numbers) {
    if (numbers.empty()) {
        throw EmptyInput("Benford distance needs at least one number");
    }
    std::array<uint64_t, 10> counts{};
    for (const std::string& s : numbers) {
        int lead = 0;
        for (char c : s) {
            if (c >= '1' && c <= '9') {
                lead = c - '0';
                break;
            }
        }
        if (lead == 0) {
            throw FormatError("'" + s + "' has no leading nonzero digit");
        }
        ++counts[static_cast<size_t>(lead)];
    }
    double dist = 0.0;
    for (int d = 1; d <= 9; ++d) {
        double observed = static_cast<double>(counts[static_cast<size_t>(d)]) /
                          static_cast<double>(numbers.size());
        dist += std::abs(observed - benfordExpected(d));
    }
    return dist / 2.0;
}

} // namespace wt::freq
