#pragma once

#include <cstdint>
#include <vector>

#include "ochain/anchor.hpp"
#include "ochain/rmax_tree.hpp"

namespace ochain {

inline constexpr std::int64_t kNoPred = -1;

/*
 * Per-anchor chaining scores. score[j] is the best coverage accumulated by
 * any admissible chain strictly before anchor j's own contribution, floored
 * at 0; score_plus[j] adds the anchor's minimum interval length, so the best
 * chain overall scores max_j score_plus[j].
 *
 * The four case arrays keep the best candidate seen per predecessor geometry
 * (kNegInf where a case produced no candidate):
 *   disjoint          predecessor ends before j begins in both dimensions
 *   overlap_second    overlap in the second dimension only
 *   overlap_low_diag  first-dimension overlap, predecessor diagonal <= j's
 *   overlap_high_diag first-dimension overlap, predecessor diagonal  > j's
 *
 * pred[j] holds the winning predecessor index, kNoPred where the optimum
 * chain starts at j. best/best_score point at the argmax of score_plus and
 * are meaningful only for non-empty input.
 */
struct ChainingResult {
    ChainMode mode = ChainMode::strict;
    std::vector<Score> score;
    std::vector<Score> score_plus;
    std::vector<Score> case_disjoint;
    std::vector<Score> case_overlap_second;
    std::vector<Score> case_overlap_low_diag;
    std::vector<Score> case_overlap_high_diag;
    std::vector<std::int64_t> pred;
    std::size_t best = 0;
    Score best_score = 0;
};

// Quadratic reference solvers: direct evaluation of the recurrence over all
// predecessor pairs. They accept any valid AnchorSet, equal match length is
// not required.
ChainingResult chain_brute_strict(const AnchorSet& set);
ChainingResult chain_brute_weak(const AnchorSet& set);

// Sweep over anchor start/end events with two range-maximum trees keyed by
// second-dimension endpoints. Solves the strict problem restricted to chains
// whose consecutive anchors never overlap in the first dimension, in
// O(N log N). Requires eml.
ChainingResult chain_one_sided(const AnchorSet& set);

// Full strict solver: the event sweep plus two layered 2D trees keyed by
// anchor diagonal that cover first-dimension overlaps. O(N log^2 N); exact
// per-anchor optimum of the strict problem. Requires eml.
ChainingResult chain_two_sided_strict(const AnchorSet& set);

// Weak-precedence solver: as the strict one but the diagonal trees drop their
// second key dimension, O(N log N); exact per-anchor optimum of the weak
// problem. Requires eml.
ChainingResult chain_two_sided_weak(const AnchorSet& set);

// Chain ending at anchor j reconstructed through the stored predecessor
// links; its coverage equals score_plus[j] and it satisfies the mode of the
// algorithm that produced the result.
Chain traceback(const ChainingResult& result, const AnchorSet& set, std::size_t j);

/*
 * A weak chain rewritten into a strict chain of possibly trimmed anchors with
 * identical coverage: wherever an anchor nests inside its predecessor in one
 * dimension, the predecessor's interval ends are cut back just enough to make
 * the pair strict, which leaves every step contribution unchanged.
 */
struct NormalizedChain {
    std::vector<Anchor> anchors;
    Score coverage = 0;
};

NormalizedChain normalize_weak_chain(const Chain& chain, const AnchorSet& set);

} // namespace ochain
