#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ochain/anchor.hpp"
#include "ochain/generate.hpp"

namespace ochain {

// Classic longest common subsequence length, quadratic dynamic program.
std::int64_t lcs_classic(const StringPair& sp);

/*
 * The set of 1-based position pairs (i, j) covered by at least one anchor:
 * (a+x, c+x) for every anchor and every offset x within it. Sorted and
 * deduplicated.
 */
struct SupportedMatchSet {
    std::vector<std::pair<Coord, Coord>> pairs;
};

// Unrolls the anchors into supported position pairs. Every anchor must be an
// exact match of the string pair; offenders are rejected with their index.
SupportedMatchSet supported_matches(const StringPair& sp, const AnchorSet& set);

// Length of the longest common subsequence whose matched position pairs are
// all supported by some anchor. Anchors must be exact matches.
std::int64_t anchor_restricted_lcs(const StringPair& sp, const AnchorSet& set);

// As above, also producing one witness subsequence as position pairs; ties
// are broken toward the lexicographically smallest pair sequence.
std::int64_t anchor_restricted_lcs(const StringPair& sp, const AnchorSet& set,
                                   std::vector<std::pair<Coord, Coord>>& witness);

/*
 * Cross-check between the two routes: the best weak chain score over the
 * anchors against the anchor-restricted LCS length. They agree on every
 * exact-match anchor set.
 */
struct ChainLcsAgreement {
    Score chain_score = 0;
    std::int64_t lcs_length = 0;
    bool equal = false;
};

ChainLcsAgreement verify_chain_lcs_agreement(const StringPair& sp, const AnchorSet& set);

} // namespace ochain
