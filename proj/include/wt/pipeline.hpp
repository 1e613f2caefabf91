#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wt/codebook.hpp"
#include "wt/error.hpp"
#include "wt/homophones.hpp"
#include "wt/transforms.hpp"

namespace wt::pipeline {

enum class ProcessId { P1, P2, P3, P4 };

const char* processName(ProcessId p);
ProcessId processFromName(std::string_view name);

using TransformStep = std::variant<transforms::BoustroParams, transforms::SpliceParams>;

// Everything one pipeline run needs, serializable as a WTKB1 file. A bundle
// carries exactly the components its process requires:
//   P1: code table
//   P2: code table + letter permutation (A..Z)
//   P3: homophone table
//   P4: code table + homophone table + permutation over the expanded
//       alphabet, plus an optional transform chain
struct KeyBundle {
    int version = 1;
    ProcessId process = ProcessId::P1;

    std::optional<codebook::CodeTable> table;
    std::optional<homophones::HomophoneTable> homophoneTable;
    std::optional<transforms::LetterPermutation> permutation;
    std::vector<TransformStep> transformChain;

    uint64_t noiseSeed = 0;
    uint64_t homophoneSeed = 0;
    bool caseFold = true;
    bool stripSpaces = false;
    homophones::AssignMode assignMode = homophones::AssignMode::Balanced;

    // Throws FormatError when the component set does not match the process.
    void validate() const;
};

// Case folding and space stripping, as recorded in the bundle. Lossy steps
// are by design; decode returns the preprocessed form.
std::string preprocess(std::string_view text, const KeyBundle& bundle);

// Identity-symbol ids >= 256 are carried inside byte-wide code tables by
// moving them to the high half of the byte space.
uint8_t remapExpandedSymbol(uint32_t id);
uint32_t unremapExpandedSymbol(uint8_t b);

// Full pipeline run: preprocessed text to WTC1 frame bytes and back.
std::vector<uint8_t> encode(std::string_view text, const KeyBundle& bundle);
std::string decode(std::span<const uint8_t> frame, const KeyBundle& bundle);

std::string serializeBundle(const KeyBundle& bundle);
// Rejects unknown fields, duplicate scalar fields, and component sets that do
// not match the declared process. Errors carry the offending line number.
KeyBundle parseBundle(std::string_view text);

std::string serializeTransformStep(const TransformStep& step);
TransformStep parseTransformStep(std::string_view spec);

} // namespace wt::pipeline
