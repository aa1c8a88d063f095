#include "ochain/generate.hpp"

#include <algorithm>
#include <stdexcept>

namespace ochain {

namespace {

Anchor make_anchor(std::size_t i, std::size_t j, std::size_t len) {
    // 0-based offsets to 1-based inclusive coordinates
    return Anchor{static_cast<Coord>(i + 1), static_cast<Coord>(i + len),
                  static_cast<Coord>(j + 1), static_cast<Coord>(j + len)};
}

} // namespace

AnchorSet kmer_matches(const StringPair& sp, std::size_t k) {
    const std::size_t tn = sp.text.size();
    const std::size_t pn = sp.pattern.size();
    if (k < 1 || k > std::min(tn, pn)) {
        throw std::invalid_argument("k must satisfy 1 <= k <= min sequence length");
    }
    std::vector<Anchor> out;
    for (std::size_t i = 0; i + k <= tn; ++i) {
        for (std::size_t j = 0; j + k <= pn; ++j) {
            if (sp.text.compare(i, k, sp.pattern, j, k) == 0) {
                out.push_back(make_anchor(i, j, k));
            }
        }
    }
    return validate(std::move(out));
}

AnchorSet maximal_exact_matches(const StringPair& sp, std::size_t minlen) {
    if (minlen < 1) throw std::invalid_argument("minlen must be >= 1");
    const std::ptrdiff_t tn = static_cast<std::ptrdiff_t>(sp.text.size());
    const std::ptrdiff_t pn = static_cast<std::ptrdiff_t>(sp.pattern.size());
    std::vector<Anchor> out;
    // walk every diagonal; a maximal run is bounded by mismatches or ends
    for (std::ptrdiff_t diag = -(pn - 1); diag < tn; ++diag) {
        std::ptrdiff_t i = std::max<std::ptrdiff_t>(diag, 0);
        std::ptrdiff_t j = i - diag;
        std::ptrdiff_t run = 0;
        for (; i <= tn && j <= pn; ++i, ++j) {
            const bool match = i < tn && j < pn && sp.text[i] == sp.pattern[j];
            if (match) {
                ++run;
            } else {
                if (run >= static_cast<std::ptrdiff_t>(minlen)) {
                    out.push_back(make_anchor(static_cast<std::size_t>(i - run),
                                              static_cast<std::size_t>(j - run),
                                              static_cast<std::size_t>(run)));
                }
                run = 0;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Anchor& x, const Anchor& y) {
        return x.a != y.a ? x.a < y.a : x.c < y.c;
    });
    return validate(std::move(out));
}

AnchorSet unit_matches(const StringPair& sp) {
    return kmer_matches(sp, 1);
}

} // namespace ochain
