#include "ochain/anchor.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace ochain {

bool precedes(const Anchor& p, const Anchor& q) {
    return p.a < q.a && p.b < q.b && p.c < q.c && p.d < q.d;
}

bool weakly_precedes(const Anchor& p, const Anchor& q) {
    return p.a < q.a && p.c < q.c;
}

bool precedes(const Anchor& p, const Anchor& q, ChainMode mode) {
    return mode == ChainMode::strict ? precedes(p, q) : weakly_precedes(p, q);
}

bool overlaps(const Anchor& p, const Anchor& q) {
    return (p.a <= q.b && q.a <= p.b) || (p.c <= q.d && q.c <= p.d);
}

Score step_coverage(const Anchor& prev, const Anchor& next) {
    return std::min(std::min(next.a, prev.b + 1) - prev.a,
                    std::min(next.c, prev.d + 1) - prev.c);
}

namespace {

// Proper containment among a family of intervals, by sort and sweep. Equal
// intervals do not count as nested, so duplicates are fine.
bool any_proper_nesting(std::vector<std::pair<Coord, Coord>> iv) {
    std::sort(iv.begin(), iv.end(), [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first < y.first : x.second > y.second;
    });
    bool seen = false;
    Coord max_end = 0;
    std::size_t i = 0;
    while (i < iv.size()) {
        std::size_t g = i;
        while (g + 1 < iv.size() && iv[g + 1].first == iv[i].first) ++g;
        // equal starts are sorted by descending end, so a mixed group nests
        if (iv[g].second != iv[i].second) return true;
        if (seen && iv[i].second <= max_end) return true;
        max_end = seen ? std::max(max_end, iv[i].second) : iv[i].second;
        seen = true;
        i = g + 1;
    }
    return false;
}

} // namespace

AnchorSet validate(std::vector<Anchor> raw) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const Anchor& x = raw[i];
        if (x.a < 1 || x.c < 1) {
            throw std::invalid_argument("anchor " + std::to_string(i) +
                                        ": coordinates must be >= 1");
        }
        if (x.a > x.b || x.c > x.d) {
            throw std::invalid_argument("anchor " + std::to_string(i) +
                                        ": inverted interval");
        }
        if (x.b > kMaxCoord || x.d > kMaxCoord) {
            throw std::invalid_argument("anchor " + std::to_string(i) +
                                        ": coordinate exceeds the supported range");
        }
    }

    AnchorSet set;
    set.eml = std::all_of(raw.begin(), raw.end(),
                          [](const Anchor& x) { return x.equal_match_length(); });

    std::vector<std::pair<Coord, Coord>> iv;
    iv.reserve(raw.size());
    for (const Anchor& x : raw) iv.emplace_back(x.a, x.b);
    bool nested = any_proper_nesting(std::move(iv));
    if (!nested) {
        std::vector<std::pair<Coord, Coord>> iv2;
        iv2.reserve(raw.size());
        for (const Anchor& x : raw) iv2.emplace_back(x.c, x.d);
        nested = any_proper_nesting(std::move(iv2));
    }
    set.non_nested = !nested;
    set.anchors = std::move(raw);
    return set;
}

Score coverage(const Chain& chain, const AnchorSet& set) {
    for (std::size_t i : chain.indices) {
        if (i >= set.size()) throw std::out_of_range("chain index out of range");
    }
    if (chain.indices.empty()) return 0;
    Score total = 0;
    for (std::size_t k = 0; k + 1 < chain.indices.size(); ++k) {
        const Anchor& cur = set[chain.indices[k]];
        const Anchor& nxt = set[chain.indices[k + 1]];
        if (!precedes(cur, nxt, chain.mode)) {
            throw std::invalid_argument(
                "chain violates its precedence relation at step " + std::to_string(k));
        }
        total += step_coverage(cur, nxt);
    }
    total += set[chain.indices.back()].min_length();
    return total;
}

} // namespace ochain
