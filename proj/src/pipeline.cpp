#include "wt/pipeline.hpp"

#include <algorithm>
#include <charconv>

#include "wt/bitio.hpp"

namespace wt::pipeline {

const char* processName(ProcessId p) {
    switch (p) {
    case ProcessId::P1: return "p1";
    case ProcessId::P2: return "p2";
    case ProcessId::P3: return "p3";
    case ProcessId::P4: return "p4";
    }
    return "p1";
}

ProcessId processFromName(std::string_view name) {
    if (name == "p1") return ProcessId::P1;
    if (name == "p2") return ProcessId::P2;
    if (name == "p3") return ProcessId::P3;
    if (name == "p4") return ProcessId::P4;
    throw FormatError("unknown process '" + std::string(name) + "'");
}

namespace {

std::vector<uint32_t> letterDomain() {
    std::vector<uint32_t> d;
    for (char c = 'A'; c <= 'Z'; ++c) d.push_back(static_cast<uint32_t>(c));
    return d;
}

bool domainMatches(const transforms::LetterPermutation& p,
                   const std::vector<uint32_t>& expected) {
    if (p.mapping().size() != expected.size()) return false;
    for (uint32_t s : expected) {
        if (!p.contains(s)) return false;
    }
    return true;
}

} // namespace

void KeyBundle::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw FormatError(what);
    };
    switch (process) {
    case ProcessId::P1:
        require(table.has_value(), "p1 bundle needs a code table");
        require(!homophoneTable && !permutation, "p1 bundle carries only a code table");
        require(transformChain.empty(), "transform chain is a p4 component");
        break;
    case ProcessId::P2:
        require(table.has_value(), "p2 bundle needs a code table");
        require(permutation.has_value(), "p2 bundle needs a letter permutation");
        require(domainMatches(*permutation, letterDomain()),
                "p2 permutation domain must be the letters A..Z");
        require(!homophoneTable, "homophones are p3/p4 components");
        require(transformChain.empty(), "transform chain is a p4 component");
        break;
    case ProcessId::P3:
        require(homophoneTable.has_value(), "p3 bundle needs a homophone table");
        require(!table && !permutation, "p3 bundle carries only a homophone table");
        require(transformChain.empty(), "transform chain is a p4 component");
        break;
    case ProcessId::P4: {
        require(table.has_value(), "p4 bundle needs a code table");
        require(homophoneTable.has_value(), "p4 bundle needs a homophone table");
        require(permutation.has_value(), "p4 bundle needs a permutation");
        require(domainMatches(*permutation, homophoneTable->symbols()),
                "p4 permutation domain must be the expanded alphabet");
        break;
    }
    }
}

std::string preprocess(std::string_view text, const KeyBundle& bundle) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (bundle.stripSpaces && c == ' ') continue;
        if (bundle.caseFold && c >= 'a' && c <= 'z') {
            out.push_back(static_cast<char>(c - 'a' + 'A'));
        } else {
            out.push_back(c);
        }
    }
    return out;
}

uint8_t remapExpandedSymbol(uint32_t id) {
    if (id < homophones::kFirstIdentityId) {
        return static_cast<uint8_t>(id);
    }
    uint32_t slot = id - homophones::kFirstIdentityId;
    if (slot >= 128) {
        throw CapacityExceeded("more than 128 identity symbols do not fit a byte table");
    }
    return static_cast<uint8_t>(128 + slot);
}

uint32_t unremapExpandedSymbol(uint8_t b) {
    return b >= 128 ? homophones::kFirstIdentityId + (b - 128u) : b;
}

namespace {

std::vector<uint32_t> normalizedSymbols(std::string_view prepped, const KeyBundle& bundle) {
    return homophones::normalize(prepped, *bundle.homophoneTable, bundle.homophoneSeed,
                                 bundle.assignMode);
}

std::vector<uint8_t> remapAll(std::span<const uint32_t> symbols) {
    std::vector<uint8_t> bytes;
    bytes.reserve(symbols.size());
    for (uint32_t s : symbols) bytes.push_back(remapExpandedSymbol(s));
    return bytes;
}

std::vector<uint32_t> unremapAll(std::span<const uint8_t> bytes) {
    std::vector<uint32_t> symbols;
    symbols.reserve(bytes.size());
    for (uint8_t b : bytes) symbols.push_back(unremapExpandedSymbol(b));
    return symbols;
}

BitString applyChainForward(BitString bits, const KeyBundle& bundle) {
    for (const TransformStep& step : bundle.transformChain) {
        if (std::holds_alternative<transforms::SpliceParams>(step)) {
            bits = transforms::goldenSplice(bits, std::get<transforms::SpliceParams>(step));
        } else {
            // Bit-reversal over the packed whole bytes; a trailing partial
            // byte is left alone so the pad bits stay where unpack expects.
            PackedBits pb = pack(bits);
            size_t fullBytes = bits.size() / 8;
            std::vector<uint8_t> head = transforms::boustrophedon(
                std::span<const uint8_t>(pb.bytes.data(), fullBytes),
                std::get<transforms::BoustroParams>(step));
            std::copy(head.begin(), head.end(), pb.bytes.begin());
            bits = unpack(pb.bytes, bits.size());
        }
    }
    return bits;
}

BitString applyChainBackward(BitString bits, const KeyBundle& bundle) {
    for (auto it = bundle.transformChain.rbegin(); it != bundle.transformChain.rend(); ++it) {
        if (std::holds_alternative<transforms::SpliceParams>(*it)) {
            bits = transforms::goldenUnsplice(bits, std::get<transforms::SpliceParams>(*it));
        } else {
            PackedBits pb = pack(bits);
            size_t fullBytes = bits.size() / 8;
            std::vector<uint8_t> head = transforms::boustrophedon(
                std::span<const uint8_t>(pb.bytes.data(), fullBytes),
                std::get<transforms::BoustroParams>(*it));
            std::copy(head.begin(), head.end(), pb.bytes.begin());
            bits = unpack(pb.bytes, bits.size());
        }
    }
    return bits;
}

std::vector<uint8_t> textBytes(std::string_view s) {
    return std::vector<uint8_t>(s.begin(), s.end());
}

} // namespace

std::vector<uint8_t> encode(std::string_view text, const KeyBundle& bundle) {
    bundle.validate();
    std::string prepped = preprocess(text, bundle);
    switch (bundle.process) {
    case ProcessId::P1: {
        BitString bits = codebook::encodeSymbols(textBytes(prepped), *bundle.table,
                                                 bundle.noiseSeed);
        return writeFrame(bits);
    }
    case ProcessId::P2: {
        std::string ciphered = transforms::applyText(prepped, *bundle.permutation);
        BitString bits = codebook::encodeSymbols(textBytes(ciphered), *bundle.table,
                                                 bundle.noiseSeed);
        return writeFrame(bits);
    }
    case ProcessId::P3: {
        std::vector<uint32_t> symbols = normalizedSymbols(prepped, bundle);
        BitString bits = codebook::encodeSymbols(remapAll(symbols),
                                                 codebook::CodeTable::identity(), 0);
        return writeFrame(bits);
    }
    case ProcessId::P4: {
        std::vector<uint32_t> symbols = normalizedSymbols(prepped, bundle);
        std::vector<uint32_t> ciphered = transforms::applySymbols(symbols, *bundle.permutation);
        BitString bits = codebook::encodeSymbols(remapAll(ciphered), *bundle.table,
                                                 bundle.noiseSeed);
        bits = applyChainForward(std::move(bits), bundle);
        return writeFrame(bits);
    }
    }
    throw FormatError("unreachable process id");
}

std::string decode(std::span<const uint8_t> frame, const KeyBundle& bundle) {
    bundle.validate();
    BitString bits = readFrame(frame);
    switch (bundle.process) {
    case ProcessId::P1: {
        std::vector<uint8_t> bytes = codebook::decodeSymbols(bits, *bundle.table);
        return std::string(bytes.begin(), bytes.end());
    }
    case ProcessId::P2: {
        std::vector<uint8_t> bytes = codebook::decodeSymbols(bits, *bundle.table);
        std::string ciphered(bytes.begin(), bytes.end());
        return transforms::applyText(ciphered, bundle.permutation->inverse());
    }
    case ProcessId::P3: {
        std::vector<uint8_t> bytes =
            codebook::decodeSymbols(bits, codebook::CodeTable::identity());
        return homophones::denormalize(unremapAll(bytes), *bundle.homophoneTable);
    }
    case ProcessId::P4: {
        bits = applyChainBackward(std::move(bits), bundle);
        std::vector<uint8_t> bytes = codebook::decodeSymbols(bits, *bundle.table);
        std::vector<uint32_t> ciphered = unremapAll(bytes);
        std::vector<uint32_t> symbols =
            transforms::applySymbols(ciphered, bundle.permutation->inverse());
        return homophones::denormalize(symbols, *bundle.homophoneTable);
    }
    }
    throw FormatError("unreachable process id");
}

// ---------------------------------------------------------------------------
// WTKB1 serialization

namespace {

uint64_t parseU64(std::string_view s, int line, const char* what) {
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw FormatError("line " + std::to_string(line) + ": bad " + what + " '" +
                          std::string(s) + "'");
    }
    return v;
}

bool parseFlag(std::string_view s, int line, const char* what) {
    if (s == "0") return false;
    if (s == "1") return true;
    throw FormatError("line " + std::to_string(line) + ": " + what + " must be 0 or 1");
}

} // namespace

std::string serializeTransformStep(const TransformStep& step) {
    if (std::holds_alternative<transforms::SpliceParams>(step)) {
        const auto& p = std::get<transforms::SpliceParams>(step);
        return "splice:stride=" + std::to_string(p.stride) +
               ",offset=" + std::to_string(p.keystreamOffset) +
               ",verify=" + (p.verifyOnDecode ? "1" : "0");
    }
    const auto& p = std::get<transforms::BoustroParams>(step);
    return "boustro:start=" + std::to_string(p.start) + ",jump=" + std::to_string(p.jump);
}

TransformStep parseTransformStep(std::string_view spec) {
    size_t colon = spec.find(':');
    std::string_view kind = spec.substr(0, colon);
    std::map<std::string, uint64_t, std::less<>> kv;
    if (colon != std::string_view::npos) {
        std::string_view rest = spec.substr(colon + 1);
        while (!rest.empty()) {
            size_t comma = rest.find(',');
            std::string_view item = rest.substr(0, comma);
            size_t eq = item.find('=');
            if (eq == std::string_view::npos) {
                throw FormatError("transform parameter '" + std::string(item) +
                                  "' is not key=value");
            }
            kv.emplace(std::string(item.substr(0, eq)), parseU64(item.substr(eq + 1), 0, "transform parameter"));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
    }
    auto take = [&kv, &spec](const char* key, uint64_t fallback, bool required) {
        auto it = kv.find(key);
        if (it == kv.end()) {
            if (required) {
                throw FormatError("transform '" + std::string(spec) + "' is missing " + key);
            }
            return fallback;
        }
        uint64_t v = it->second;
        kv.erase(it);
        return v;
    };
    TransformStep step;
    if (kind == "splice") {
        transforms::SpliceParams p;
        p.stride = take("stride", 0, true);
        p.keystreamOffset = take("offset", 0, false);
        p.verifyOnDecode = take("verify", 0, false) != 0;
        if (p.stride == 0) throw FormatError("splice stride must be at least 1");
        step = p;
    } else if (kind == "boustro") {
        transforms::BoustroParams p;
        p.start = take("start", 0, false);
        p.jump = take("jump", 0, false);
        step = p;
    } else {
        throw FormatError("unknown transform '" + std::string(kind) + "'");
    }
    if (!kv.empty()) {
        throw FormatError("unknown transform parameter '" + kv.begin()->first + "'");
    }
    return step;
}

std::string serializeBundle(const KeyBundle& bundle) {
    bundle.validate();
    std::string out = "WTKB1\n";
    out += "version=" + std::to_string(bundle.version) + "\n";
    out += "process=" + std::string(processName(bundle.process)) + "\n";
    out += "casefold=" + std::string(bundle.caseFold ? "1" : "0") + "\n";
    out += "stripspaces=" + std::string(bundle.stripSpaces ? "1" : "0") + "\n";
    out += "assign=" + std::string(homophones::assignModeName(bundle.assignMode)) + "\n";
    out += "seed_noise=" + std::to_string(bundle.noiseSeed) + "\n";
    out += "seed_homophone=" + std::to_string(bundle.homophoneSeed) + "\n";
    if (bundle.table) {
        out += codebook::serializeCodebookLines(*bundle.table);
    }
    if (bundle.homophoneTable) {
        out += homophones::serializeGroupLines(*bundle.homophoneTable);
    }
    if (bundle.permutation) {
        for (const auto& [from, to] : bundle.permutation->mapping()) {
            out += "perm=" + std::to_string(from) + ":" + std::to_string(to) + "\n";
        }
    }
    for (const TransformStep& step : bundle.transformChain) {
        out += "transform=" + serializeTransformStep(step) + "\n";
    }
    return out;
}

KeyBundle parseBundle(std::string_view text) {
    KeyBundle bundle;
    bool sawMagic = false, sawProcess = false, sawVersion = false;
    bool sawCasefold = false, sawStrip = false, sawAssign = false;
    bool sawNoiseSeed = false, sawHomSeed = false, sawWidth = false, sawMask = false;
    int width = 0;
    std::optional<BitString> noiseMask;
    std::map<uint8_t, BitString> tableEntries;
    std::map<char, std::vector<uint32_t>> groups;
    std::map<uint32_t, uint32_t> permMapping;

    int lineNo = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                     ? text.size() - pos
                                                     : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineNo;
        if (line.empty()) continue;
        if (!sawMagic) {
            if (line != "WTKB1") {
                throw FormatError("line 1: expected WTKB1 magic");
            }
            sawMagic = true;
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw FormatError("line " + std::to_string(lineNo) + ": expected key=value");
        }
        std::string_view key = line.substr(0, eq);
        std::string_view value = line.substr(eq + 1);
        auto once = [lineNo](bool& seen, std::string_view k) {
            if (seen) {
                throw FormatError("line " + std::to_string(lineNo) + ": duplicate " +
                                  std::string(k));
            }
            seen = true;
        };
        if (key == "version") {
            once(sawVersion, key);
            uint64_t v = parseU64(value, lineNo, "version");
            if (v != 1) {
                throw FormatError("line " + std::to_string(lineNo) +
                                  ": unsupported version " + std::string(value));
            }
            bundle.version = static_cast<int>(v);
        } else if (key == "process") {
            once(sawProcess, key);
            bundle.process = processFromName(value);
        } else if (key == "casefold") {
            once(sawCasefold, key);
            bundle.caseFold = parseFlag(value, lineNo, "casefold");
        } else if (key == "stripspaces") {
            once(sawStrip, key);
            bundle.stripSpaces = parseFlag(value, lineNo, "stripspaces");
        } else if (key == "assign") {
            once(sawAssign, key);
            bundle.assignMode = homophones::assignModeFromName(value);
        } else if (key == "seed_noise") {
            once(sawNoiseSeed, key);
            bundle.noiseSeed = parseU64(value, lineNo, "seed");
        } else if (key == "seed_homophone") {
            once(sawHomSeed, key);
            bundle.homophoneSeed = parseU64(value, lineNo, "seed");
        } else if (key == "width") {
            once(sawWidth, key);
            width = static_cast<int>(parseU64(value, lineNo, "width"));
        } else if (key == "noise_mask") {
            once(sawMask, key);
            try {
                noiseMask = BitString::fromString(value);
            } catch (const FormatError&) {
                throw FormatError("line " + std::to_string(lineNo) + ": bad noise mask");
            }
        } else if (key == "sym") {
            // sym=0xNN code=<bits>
            size_t space = value.find(' ');
            if (space == std::string_view::npos ||
                value.substr(space + 1, 5) != "code=") {
                throw FormatError("line " + std::to_string(lineNo) +
                                  ": expected sym=0x.. code=..");
            }
            std::string_view symText = value.substr(0, space);
            std::string_view codeText = value.substr(space + 6);
            if (symText.size() < 3 || symText.substr(0, 2) != "0x") {
                throw FormatError("line " + std::to_string(lineNo) + ": symbol must be hex");
            }
            uint64_t sym = 0;
            for (char c : symText.substr(2)) {
                int d;
                if (c >= '0' && c <= '9') d = c - '0';
                else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
                else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
                else throw FormatError("line " + std::to_string(lineNo) + ": bad hex digit");
                sym = sym * 16 + static_cast<uint64_t>(d);
            }
            if (sym > 255) {
                throw FormatError("line " + std::to_string(lineNo) + ": symbol exceeds 0xff");
            }
            BitString code;
            try {
                code = BitString::fromString(codeText);
            } catch (const FormatError&) {
                throw FormatError("line " + std::to_string(lineNo) + ": bad codeword");
            }
            if (!tableEntries.emplace(static_cast<uint8_t>(sym), std::move(code)).second) {
                throw FormatError("line " + std::to_string(lineNo) + ": duplicate symbol");
            }
        } else if (key == "group") {
            size_t colon = value.find(':');
            if (colon != 1 || value.empty()) {
                throw FormatError("line " + std::to_string(lineNo) +
                                  ": expected group=<letter>:<ids>");
            }
            char letter = value[0];
            std::vector<uint32_t> members;
            std::string_view rest = value.substr(2);
            while (!rest.empty()) {
                size_t comma = rest.find(',');
                members.push_back(static_cast<uint32_t>(
                    parseU64(rest.substr(0, comma), lineNo, "group member")));
                rest = comma == std::string_view::npos ? std::string_view{}
                                                       : rest.substr(comma + 1);
            }
            if (!groups.emplace(letter, std::move(members)).second) {
                throw FormatError("line " + std::to_string(lineNo) + ": duplicate group for " +
                                  std::string(1, letter));
            }
        } else if (key == "perm") {
            size_t colon = value.find(':');
            if (colon == std::string_view::npos) {
                throw FormatError("line " + std::to_string(lineNo) +
                                  ": expected perm=<from>:<to>");
            }
            uint32_t from = static_cast<uint32_t>(
                parseU64(value.substr(0, colon), lineNo, "permutation symbol"));
            uint32_t to = static_cast<uint32_t>(
                parseU64(value.substr(colon + 1), lineNo, "permutation symbol"));
            if (!permMapping.emplace(from, to).second) {
                throw FormatError("line " + std::to_string(lineNo) +
                                  ": duplicate permutation entry");
            }
        } else if (key == "transform") {
            try {
                bundle.transformChain.push_back(parseTransformStep(value));
            } catch (const FormatError& e) {
                throw FormatError("line " + std::to_string(lineNo) + ": " + e.what());
            }
        } else {
            throw FormatError("line " + std::to_string(lineNo) + ": unknown field '" +
                              std::string(key) + "'");
        }
    }
    if (!sawMagic) {
        throw FormatError("empty bundle");
    }
    if (!sawProcess) {
        throw FormatError("bundle is missing the process field");
    }
    if (sawWidth || sawMask || !tableEntries.empty()) {
        if (!sawWidth || !sawMask || tableEntries.empty()) {
            throw FormatError("incomplete code table: width, noise_mask and entries "
                              "must appear together");
        }
        try {
            bundle.table = codebook::CodeTable::fromEntries(width, *noiseMask,
                                                            std::move(tableEntries));
        } catch (const Error& e) {
            throw FormatError(std::string("code table: ") + e.what());
        }
    }
    if (!groups.empty()) {
        try {
            bundle.homophoneTable = homophones::HomophoneTable(std::move(groups));
        } catch (const Error& e) {
            throw FormatError(std::string("homophone table: ") + e.what());
        }
    }
    if (!permMapping.empty()) {
        try {
            bundle.permutation = transforms::LetterPermutation::fromMapping(std::move(permMapping));
        } catch (const Error& e) {
            throw FormatError(std::string("permutation: ") + e.what());
        }
    }
    bundle.validate();
    return bundle;
}

} // namespace wt::pipeline
