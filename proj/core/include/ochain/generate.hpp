#pragma once

#include <cstddef>
#include <string>

#include "ochain/anchor.hpp"

namespace ochain {

/*
 * Two input sequences; anchors use 1-based positions into them. Comparison is
 * byte-wise and case-sensitive.
 */
struct StringPair {
    std::string text;
    std::string pattern;
};

// All length-k exact matches between text and pattern, ordered by text
// position then pattern position. Requires 1 <= k <= min length.
AnchorSet kmer_matches(const StringPair& sp, std::size_t k);

// All maximal exact matches of length >= minlen: runs of matching characters
// along a diagonal that extend in neither direction, ordered by (a, c).
// Requires minlen >= 1.
AnchorSet maximal_exact_matches(const StringPair& sp, std::size_t minlen);

// Single-character matches; same as kmer_matches with k = 1.
AnchorSet unit_matches(const StringPair& sp);

} // namespace ochain
