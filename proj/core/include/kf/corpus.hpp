#pragma once

#include <string>
#include <vector>

#include "kf/proof_io.hpp"

namespace kf {

/// A classical proof shipped with the library, used by the pipeline suite.
struct CorpusEntry {
    std::string name;
    std::string source;  // proof-file text
    ProofFile file;
};

/// Curated CL proofs: the classical principles (double negation
/// elimination, excluded middle, Peirce, De Morgan, ...) and a handful of
/// first-order items. Parsed once on first use.
const std::vector<CorpusEntry>& proof_corpus();

}  // namespace kf
