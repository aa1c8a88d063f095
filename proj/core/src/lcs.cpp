#include "ochain/lcs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ochain/chaining.hpp"

namespace ochain {

std::int64_t lcs_classic(const StringPair& sp) {
    const std::size_t tn = sp.text.size();
    const std::size_t pn = sp.pattern.size();
    std::vector<std::int64_t> prev(pn + 1, 0), row(pn + 1, 0);
    for (std::size_t i = 1; i <= tn; ++i) {
        for (std::size_t j = 1; j <= pn; ++j) {
            if (sp.text[i - 1] == sp.pattern[j - 1]) {
                row[j] = prev[j - 1] + 1;
            } else {
                row[j] = std::max(prev[j], row[j - 1]);
            }
        }
        std::swap(prev, row);
    }
    return prev[pn];
}

SupportedMatchSet supported_matches(const StringPair& sp, const AnchorSet& set) {
    const auto tn = static_cast<Coord>(sp.text.size());
    const auto pn = static_cast<Coord>(sp.pattern.size());
    SupportedMatchSet out;
    for (std::size_t k = 0; k < set.size(); ++k) {
        const Anchor& x = set[k];
        if (x.b > tn || x.d > pn || !x.equal_match_length()) {
            throw std::invalid_argument("anchor " + std::to_string(k) +
                                        " is not an exact match of the inputs");
        }
        for (Coord off = 0; off < x.length1(); ++off) {
            if (sp.text[x.a - 1 + off] != sp.pattern[x.c - 1 + off]) {
                throw std::invalid_argument("anchor " + std::to_string(k) +
                                            " is not an exact match of the inputs");
            }
            out.pairs.emplace_back(x.a + off, x.c + off);
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end()), out.pairs.end());
    return out;
}

namespace {

// Suffix table: best[i][j] = restricted LCS of text[i..], pattern[j..],
// with 1-based (i, j) and sup flattened row-major over (tn+2) x (pn+2).
std::vector<std::int64_t> suffix_table(std::size_t tn, std::size_t pn,
                                       const std::vector<char>& sup) {
    std::vector<std::int64_t> best((tn + 2) * (pn + 2), 0);
    const auto at = [pn](std::size_t i, std::size_t j) { return i * (pn + 2) + j; };
    for (std::size_t i = tn; i >= 1; --i) {
        for (std::size_t j = pn; j >= 1; --j) {
            std::int64_t v = std::max(best[at(i + 1, j)], best[at(i, j + 1)]);
            if (sup[at(i, j)]) v = std::max(v, best[at(i + 1, j + 1)] + 1);
            best[at(i, j)] = v;
        }
    }
    return best;
}

std::vector<char> support_grid(const StringPair& sp, const AnchorSet& set) {
    const std::size_t tn = sp.text.size();
    const std::size_t pn = sp.pattern.size();
    std::vector<char> sup((tn + 2) * (pn + 2), 0);
    for (const auto& [i, j] : supported_matches(sp, set).pairs) {
        sup[static_cast<std::size_t>(i) * (pn + 2) + static_cast<std::size_t>(j)] = 1;
    }
    return sup;
}

} // namespace

std::int64_t anchor_restricted_lcs(const StringPair& sp, const AnchorSet& set) {
    const std::size_t tn = sp.text.size();
    const std::size_t pn = sp.pattern.size();
    const auto sup = support_grid(sp, set);
    return suffix_table(tn, pn, sup)[1 * (pn + 2) + 1];
}

std::int64_t anchor_restricted_lcs(const StringPair& sp, const AnchorSet& set,
                                   std::vector<std::pair<Coord, Coord>>& witness) {
    const std::size_t tn = sp.text.size();
    const std::size_t pn = sp.pattern.size();
    const auto sup = support_grid(sp, set);
    const auto best = suffix_table(tn, pn, sup);
    const auto at = [pn](std::size_t i, std::size_t j) { return i * (pn + 2) + j; };
    const std::int64_t total = best[at(1, 1)];

    // greedy forward walk: take the smallest supported pair that still leaves
    // room for the remaining matches
    witness.clear();
    std::size_t i = 1, j = 1;
    for (std::int64_t need = total; need > 0; --need) {
        bool found = false;
        for (std::size_t ii = i; ii <= tn && !found; ++ii) {
            for (std::size_t jj = (ii == i ? j : 1); jj <= pn && !found; ++jj) {
                if (sup[at(ii, jj)] && jj >= j && best[at(ii + 1, jj + 1)] >= need - 1) {
                    witness.emplace_back(static_cast<Coord>(ii), static_cast<Coord>(jj));
                    i = ii + 1;
                    j = jj + 1;
                    found = true;
                }
            }
        }
    }
    return total;
}

ChainLcsAgreement verify_chain_lcs_agreement(const StringPair& sp, const AnchorSet& set) {
    ChainLcsAgreement out;
    const ChainingResult weak = chain_two_sided_weak(set);
    out.chain_score = set.empty() ? 0 : weak.best_score;
    out.lcs_length = anchor_restricted_lcs(sp, set);
    out.equal = out.chain_score == out.lcs_length;
    return out;
}

} // namespace ochain
