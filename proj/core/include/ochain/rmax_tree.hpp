#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <vector>

namespace ochain {

// Distinguished "no value stored" marker. It is not a usable minimum: never
// add offsets to a query result without checking against it first.
inline constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();

/*
 * Result of a range-maximum query: the winning value together with the tag of
 * the key holding it. Ties on value prefer the smaller (pref, tag) pair; the
 * chaining sweeps use pref to steer the argmax toward usable predecessors and
 * tag to break remaining ties toward the smaller anchor index.
 */
struct TreeEntry {
    std::int64_t value = kNegInf;
    std::int64_t pref = std::numeric_limits<std::int64_t>::max();
    std::int64_t tag = std::numeric_limits<std::int64_t>::max();

    bool none() const { return value == kNegInf; }
};

inline bool better(const TreeEntry& x, const TreeEntry& y) {
    if (x.value != y.value) return x.value > y.value;
    if (x.pref != y.pref) return x.pref < y.pref;
    return x.tag < y.tag;
}

/*
 * Key of the one-dimensional tree: a coordinate plus a tag that keeps keys
 * distinct when coordinates collide. Range queries are by coordinate and span
 * every tag inside the range.
 */
struct Key1D {
    std::int64_t coord = 0;
    std::int64_t tag = 0;

    friend auto operator<=>(const Key1D&, const Key1D&) = default;
};

/*
 * Semi-dynamic range-maximum tree over a fixed key universe. All values start
 * at -inf; update overwrites a key's value (update to -inf deactivates it),
 * upgrade keeps the maximum. Build is O(n) from sorted keys, point operations
 * and queries are O(log n). Queries do not mutate state; concurrent read-only
 * use is safe, concurrent mutation is not.
 */
class RMaxTree1D {
public:
    RMaxTree1D() = default;

    // Keys must be sorted and distinct. prefs, when given, run parallel to
    // keys and seed each key's tie-break preference (0 otherwise).
    explicit RMaxTree1D(std::vector<Key1D> keys, std::vector<std::int64_t> prefs = {});

    std::size_t size() const { return keys_.size(); }

    void update(const Key1D& key, std::int64_t value);
    void upgrade(const Key1D& key, std::int64_t value);

    // Maximum entry among keys with lo <= coord <= hi, any tag. Empty ranges
    // yield an entry with value kNegInf.
    TreeEntry range_max(std::int64_t lo, std::int64_t hi) const;

private:
    std::size_t position(const Key1D& key) const;
    void set_leaf(std::size_t pos, std::int64_t value, bool keep_max);

    std::vector<Key1D> keys_;
    std::vector<TreeEntry> node_; // iterative segment tree, leaves at [n, 2n)
};

struct Point2D {
    std::int64_t primary = 0;
    std::int64_t secondary = 0;
    std::int64_t tag = 0;

    friend auto operator<=>(const Point2D&, const Point2D&) = default;
};

/*
 * Layered two-dimensional range-maximum tree over a fixed point universe: an
 * outer tree over the primary key where every node carries a one-dimensional
 * tree over the secondary keys of its span. Build is O(n log n) from sorted
 * points, point operations and queries are O(log^2 n). Tags must make the
 * (secondary, tag) pairs distinct as well, since they key the inner trees.
 */
class RMaxTree2D {
public:
    RMaxTree2D() = default;

    // Points must be sorted by (primary, secondary, tag) and distinct.
    explicit RMaxTree2D(std::vector<Point2D> points, std::vector<std::int64_t> prefs = {});

    std::size_t size() const { return points_.size(); }

    void update(const Point2D& point, std::int64_t value);
    void upgrade(const Point2D& point, std::int64_t value);

    // Maximum entry over the rectangle primary in [plo, phi], secondary in
    // [slo, shi]; value kNegInf when the rectangle holds nothing.
    TreeEntry range_max(std::int64_t plo, std::int64_t phi,
                        std::int64_t slo, std::int64_t shi) const;

private:
    std::size_t position(const Point2D& point) const;
    void touch(const Point2D& point, std::int64_t value, bool keep_max);

    std::vector<Point2D> points_;
    std::size_t base_ = 0;        // power-of-two leaf base of the outer tree
    std::vector<RMaxTree1D> inner_;
};

} // namespace ochain
