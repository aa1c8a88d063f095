#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace ochain {

using Coord = std::int64_t;
using Score = std::int64_t;

// Largest coordinate accepted by validate(). Keeps every score, diagonal and
// tree key computed downstream comfortably inside a signed 64-bit range.
inline constexpr Coord kMaxCoord = Coord{1} << 40;

/*
 * One interval pair ([a..b],[c..d]): a local match between positions a..b of
 * the first sequence and c..d of the second. Coordinates are 1-based and
 * inclusive; 0 is reserved for sentinel keys inside the chaining sweeps.
 */
struct Anchor {
    Coord a = 0;
    Coord b = 0;
    Coord c = 0;
    Coord d = 0;

    Coord length1() const { return b - a + 1; }
    Coord length2() const { return d - c + 1; }
    Coord min_length() const { return std::min(length1(), length2()); }
    // Offset of the second interval against the first; constant along a match
    // diagonal when both intervals have equal length.
    Coord diagonal() const { return c - a; }
    bool equal_match_length() const { return b - a == d - c; }

    friend bool operator==(const Anchor&, const Anchor&) = default;
};

// p precedes q: all four endpoints strictly smaller.
bool precedes(const Anchor& p, const Anchor& q);

// p weakly precedes q: both start points strictly smaller.
bool weakly_precedes(const Anchor& p, const Anchor& q);

// The intervals intersect in the first dimension or in the second.
bool overlaps(const Anchor& p, const Anchor& q);

enum class ChainMode { strict, weak };

bool precedes(const Anchor& p, const Anchor& q, ChainMode mode);

// Coverage contributed by `prev` once `next` follows it in a chain: the
// minimum across dimensions of the region of `prev` not overlapped by `next`.
Score step_coverage(const Anchor& prev, const Anchor& next);

/*
 * Validated anchor array plus the two input properties the algorithms care
 * about. eml: every anchor has intervals of equal length (precondition of the
 * sweep algorithms). non_nested: no anchor interval is a proper subset of
 * another anchor's corresponding interval, in either dimension; strict and
 * weak chaining coincide on non-nested input.
 */
struct AnchorSet {
    std::vector<Anchor> anchors;
    bool eml = true;
    bool non_nested = true;

    std::size_t size() const { return anchors.size(); }
    bool empty() const { return anchors.empty(); }
    const Anchor& operator[](std::size_t i) const { return anchors[i]; }
};

// Checks coordinates and computes the property flags. Input order is kept and
// duplicates are kept. Throws std::invalid_argument naming the first offending
// index.
AnchorSet validate(std::vector<Anchor> raw);

/*
 * An ordered subset of anchor indices claiming that each consecutive pair
 * satisfies the precedence relation selected by `mode`.
 */
struct Chain {
    std::vector<std::size_t> indices;
    ChainMode mode = ChainMode::strict;
};

// Symmetric coverage score of a chain: per step the minimum across the two
// dimensions of the newly covered region, plus the last anchor's minimum
// interval length. The empty chain scores 0. Throws std::invalid_argument if
// a consecutive pair violates the chain's claimed precedence relation.
Score coverage(const Chain& chain, const AnchorSet& set);

} // namespace ochain
