#include "ochain/chaining.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace ochain {

namespace {

void init_result(ChainingResult& res, ChainMode mode, std::size_t n) {
    res.mode = mode;
    res.score.assign(n, 0);
    res.score_plus.assign(n, 0);
    res.case_disjoint.assign(n, kNegInf);
    res.case_overlap_second.assign(n, kNegInf);
    res.case_overlap_low_diag.assign(n, kNegInf);
    res.case_overlap_high_diag.assign(n, kNegInf);
    res.pred.assign(n, kNoPred);
}

void finalize_best(ChainingResult& res) {
    res.best = 0;
    res.best_score = 0;
    for (std::size_t j = 0; j < res.score_plus.size(); ++j) {
        if (res.score_plus[j] > res.best_score) {
            res.best_score = res.score_plus[j];
            res.best = j;
        }
    }
}

ChainingResult chain_brute(const AnchorSet& set, ChainMode mode) {
    const std::size_t n = set.size();
    ChainingResult res;
    init_result(res, mode, n);
    if (n == 0) return res;

    // any topological order of the precedence relation works; both relations
    // require strictly increasing start points in the first dimension
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const Anchor& p = set[x];
        const Anchor& q = set[y];
        return std::tie(p.a, p.b, p.c, p.d, x) < std::tie(q.a, q.b, q.c, q.d, y);
    });

    for (std::size_t pi = 0; pi < n; ++pi) {
        const std::size_t j = order[pi];
        const Anchor& cur = set[j];
        Score best_term = kNegInf;
        std::int64_t best_from = kNoPred;
        for (std::size_t qi = 0; qi < pi; ++qi) {
            const std::size_t jq = order[qi];
            const Anchor& prev = set[jq];
            if (!precedes(prev, cur, mode)) continue;
            const Score term = res.score[jq] + step_coverage(prev, cur);
            Score* slot;
            if (!overlaps(prev, cur)) {
                slot = &res.case_disjoint[j];
            } else if (prev.b < cur.a) {
                slot = &res.case_overlap_second[j];
            } else if (prev.diagonal() <= cur.diagonal()) {
                slot = &res.case_overlap_low_diag[j];
            } else {
                slot = &res.case_overlap_high_diag[j];
            }
            *slot = std::max(*slot, term);
            if (term > best_term ||
                (term == best_term && static_cast<std::int64_t>(jq) < best_from)) {
                best_term = term;
                best_from = static_cast<std::int64_t>(jq);
            }
        }
        if (best_term > 0) {
            res.score[j] = best_term;
            res.pred[j] = best_from;
        }
        res.score_plus[j] = res.score[j] + cur.min_length();
    }
    finalize_best(res);
    return res;
}

enum class Sweep { one_sided, two_sided };

/*
 * Event sweep over first-dimension coordinates. At a coordinate, every anchor
 * starting there is scored before any of them becomes active in the diagonal
 * trees, and end events are folded in last; this keeps anchors that share a
 * start out of each other's candidate sets and keeps an anchor ending at x
 * out of the end-keyed trees seen by anchors starting at x.
 *
 * Tree roles, all holding one slot per anchor:
 *   done_total    key (d, j), value score_plus; predecessors that ended and
 *                 are clear of the current anchor in the second dimension.
 *   done_partial  key (d, j), value score - c; ended predecessors overlapping
 *                 the current anchor's second interval.
 *   active_low    key diagonal (plus end b in the strict 2D variant), value
 *                 score - a; running anchors on a lower or equal diagonal.
 *   active_high   key diagonal (plus end d in the strict 2D variant), value
 *                 score - c; running anchors on a strictly higher diagonal.
 */
ChainingResult sweep_chain(const AnchorSet& set, ChainMode mode, Sweep kind) {
    if (!set.eml) {
        throw std::invalid_argument(
            "sweep chaining requires the equal match length property");
    }
    const std::size_t n = set.size();
    ChainingResult res;
    init_result(res, mode, n);
    if (n == 0) return res;

    const bool strict = mode == ChainMode::strict;
    const bool two_sided = kind == Sweep::two_sided;
    constexpr std::int64_t kHi = std::numeric_limits<std::int64_t>::max();
    constexpr std::int64_t kLo = std::numeric_limits<std::int64_t>::min();

    std::vector<Key1D> dkeys;
    dkeys.reserve(n + 1);
    dkeys.push_back(Key1D{0, kNoPred}); // sentinel: the empty chain, score 0
    for (std::size_t j = 0; j < n; ++j) {
        dkeys.push_back(Key1D{set[j].d, static_cast<std::int64_t>(j)});
    }
    std::sort(dkeys.begin(), dkeys.end());
    std::vector<std::int64_t> partial_pref(dkeys.size(), 0);
    for (std::size_t i = 0; i < dkeys.size(); ++i) {
        if (dkeys[i].tag != kNoPred) partial_pref[i] = set[dkeys[i].tag].c;
    }
    RMaxTree1D done_total(dkeys);
    RMaxTree1D done_partial(std::move(dkeys), std::move(partial_pref));
    done_total.upgrade(Key1D{0, kNoPred}, 0);

    RMaxTree2D active_low2, active_high2;
    RMaxTree1D active_low1, active_high1;
    if (two_sided) {
        if (strict) {
            std::vector<Point2D> low_pts, high_pts;
            low_pts.reserve(n);
            high_pts.reserve(n);
            for (std::size_t j = 0; j < n; ++j) {
                const auto tag = static_cast<std::int64_t>(j);
                low_pts.push_back(Point2D{set[j].diagonal(), set[j].b, tag});
                high_pts.push_back(Point2D{set[j].diagonal(), set[j].d, tag});
            }
            std::sort(low_pts.begin(), low_pts.end());
            std::sort(high_pts.begin(), high_pts.end());
            std::vector<std::int64_t> high_pref(n);
            for (std::size_t i = 0; i < n; ++i) high_pref[i] = set[high_pts[i].tag].c;
            active_low2 = RMaxTree2D(std::move(low_pts));
            active_high2 = RMaxTree2D(std::move(high_pts), std::move(high_pref));
        } else {
            std::vector<Key1D> diag_keys;
            diag_keys.reserve(n);
            for (std::size_t j = 0; j < n; ++j) {
                diag_keys.push_back(Key1D{set[j].diagonal(), static_cast<std::int64_t>(j)});
            }
            std::sort(diag_keys.begin(), diag_keys.end());
            std::vector<std::int64_t> high_pref(n);
            for (std::size_t i = 0; i < n; ++i) high_pref[i] = set[diag_keys[i].tag].c;
            active_low1 = RMaxTree1D(diag_keys);
            active_high1 = RMaxTree1D(std::move(diag_keys), std::move(high_pref));
        }
    }

    struct Event {
        Coord coord;
        int kind; // 0 start, 1 end
        std::size_t idx;
    };
    std::vector<Event> events;
    events.reserve(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        events.push_back(Event{set[j].a, 0, j});
        events.push_back(Event{set[j].b, 1, j});
    }
    std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) {
        return std::tie(x.coord, x.kind, x.idx) < std::tie(y.coord, y.kind, y.idx);
    });

    std::size_t i = 0;
    while (i < events.size()) {
        std::size_t run = i;
        while (run < events.size() && events[run].coord == events[i].coord) ++run;
        std::size_t starts_end = i;
        while (starts_end < run && events[starts_end].kind == 0) ++starts_end;

        for (std::size_t e = i; e < starts_end; ++e) {
            const std::size_t j = events[e].idx;
            const Anchor& cur = set[j];
            struct Cand {
                Score value;
                std::int64_t witness;
            };
            Cand cand[4];
            int nc = 0;

            const TreeEntry ea = done_total.range_max(0, cur.c - 1);
            res.case_disjoint[j] = ea.value; // sentinel keeps this >= 0
            cand[nc++] = Cand{ea.value, ea.tag};

            const TreeEntry eb = done_partial.range_max(cur.c, strict ? cur.d - 1 : kHi);
            if (!eb.none()) {
                res.case_overlap_second[j] = cur.c + eb.value;
                cand[nc++] = Cand{cur.c + eb.value, eb.tag};
            }
            if (two_sided) {
                const TreeEntry ec =
                    strict ? active_low2.range_max(kLo, cur.diagonal(), kLo, cur.b - 1)
                           : active_low1.range_max(kLo, cur.diagonal());
                if (!ec.none()) {
                    res.case_overlap_low_diag[j] = cur.a + ec.value;
                    cand[nc++] = Cand{cur.a + ec.value, ec.tag};
                }
                const TreeEntry ed =
                    strict ? active_high2.range_max(cur.diagonal() + 1, kHi, kLo, cur.d - 1)
                           : active_high1.range_max(cur.diagonal() + 1, kHi);
                if (!ed.none()) {
                    res.case_overlap_high_diag[j] = cur.c + ed.value;
                    cand[nc++] = Cand{cur.c + ed.value, ed.tag};
                }
            }

            Score cj = cand[0].value;
            for (int k = 1; k < nc; ++k) cj = std::max(cj, cand[k].value);
            res.score[j] = cj;
            res.score_plus[j] = cj + cur.min_length();

            // Predecessor link: best candidate whose anchor really precedes
            // the current one under the run's relation. A query can surface a
            // slot whose anchor fails the relation; its value is never above
            // the optimum, and some relation-satisfying candidate always ties
            // it, so filtering here is value-neutral. kNoPred marks the empty
            // chain and wins ties, then the smaller anchor index.
            Score pick_value = kNegInf;
            std::int64_t pick = kNoPred;
            for (int k = 0; k < nc; ++k) {
                const Cand& cc = cand[k];
                if (cc.witness != kNoPred && !precedes(set[cc.witness], cur, mode)) {
                    continue;
                }
                if (cc.value > pick_value ||
                    (cc.value == pick_value && cc.witness < pick)) {
                    pick_value = cc.value;
                    pick = cc.witness;
                }
            }
            if (pick_value == cj) res.pred[j] = pick;
        }

        if (two_sided) {
            for (std::size_t e = i; e < starts_end; ++e) {
                const std::size_t j = events[e].idx;
                const Anchor& cur = set[j];
                const auto tag = static_cast<std::int64_t>(j);
                if (strict) {
                    active_low2.upgrade(Point2D{cur.diagonal(), cur.b, tag}, res.score[j] - cur.a);
                    active_high2.upgrade(Point2D{cur.diagonal(), cur.d, tag}, res.score[j] - cur.c);
                } else {
                    active_low1.upgrade(Key1D{cur.diagonal(), tag}, res.score[j] - cur.a);
                    active_high1.upgrade(Key1D{cur.diagonal(), tag}, res.score[j] - cur.c);
                }
            }
        }

        for (std::size_t e = starts_end; e < run; ++e) {
            const std::size_t j = events[e].idx;
            const Anchor& cur = set[j];
            const auto tag = static_cast<std::int64_t>(j);
            done_total.upgrade(Key1D{cur.d, tag}, res.score_plus[j]);
            done_partial.upgrade(Key1D{cur.d, tag}, res.score[j] - cur.c);
            if (two_sided) {
                if (strict) {
                    active_low2.update(Point2D{cur.diagonal(), cur.b, tag}, kNegInf);
                    active_high2.update(Point2D{cur.diagonal(), cur.d, tag}, kNegInf);
                } else {
                    active_low1.update(Key1D{cur.diagonal(), tag}, kNegInf);
                    active_high1.update(Key1D{cur.diagonal(), tag}, kNegInf);
                }
            }
        }
        i = run;
    }

    finalize_best(res);
    return res;
}

} // namespace

ChainingResult chain_brute_strict(const AnchorSet& set) {
    return chain_brute(set, ChainMode::strict);
}

ChainingResult chain_brute_weak(const AnchorSet& set) {
    return chain_brute(set, ChainMode::weak);
}

ChainingResult chain_one_sided(const AnchorSet& set) {
    return sweep_chain(set, ChainMode::strict, Sweep::one_sided);
}

ChainingResult chain_two_sided_strict(const AnchorSet& set) {
    return sweep_chain(set, ChainMode::strict, Sweep::two_sided);
}

ChainingResult chain_two_sided_weak(const AnchorSet& set) {
    return sweep_chain(set, ChainMode::weak, Sweep::two_sided);
}

Chain traceback(const ChainingResult& result, const AnchorSet& set, std::size_t j) {
    if (j >= result.score_plus.size()) {
        throw std::out_of_range("anchor index out of range");
    }
    Chain chain;
    chain.mode = result.mode;
    std::int64_t cur = static_cast<std::int64_t>(j);
    while (cur != kNoPred) {
        chain.indices.push_back(static_cast<std::size_t>(cur));
        if (chain.indices.size() > set.size()) {
            throw std::runtime_error("predecessor links do not terminate");
        }
        cur = result.pred[static_cast<std::size_t>(cur)];
    }
    std::reverse(chain.indices.begin(), chain.indices.end());
    return chain;
}

NormalizedChain normalize_weak_chain(const Chain& chain, const AnchorSet& set) {
    if (!set.eml) {
        throw std::invalid_argument(
            "normalization requires the equal match length property");
    }
    for (std::size_t i : chain.indices) {
        if (i >= set.size()) throw std::out_of_range("chain index out of range");
    }
    NormalizedChain out;
    out.anchors.reserve(chain.indices.size());
    for (std::size_t i : chain.indices) out.anchors.push_back(set[i]);
    for (std::size_t k = 0; k + 1 < out.anchors.size(); ++k) {
        if (!weakly_precedes(out.anchors[k], out.anchors[k + 1])) {
            throw std::invalid_argument("not a valid weak chain at step " +
                                        std::to_string(k));
        }
    }
    if (out.anchors.empty()) return out;

    // Right to left: wherever the next anchor nests inside this one, cut this
    // one's interval ends in the dimension with the larger excess and shift
    // the other end by the same amount. Starts stay put, so earlier pairs
    // keep their weak relation and their step contributions.
    for (std::size_t k = out.anchors.size() - 1; k >= 1; --k) {
        Anchor& prev = out.anchors[k - 1];
        const Anchor& cur = out.anchors[k];
        if (precedes(prev, cur)) continue;
        if (prev.b - cur.b >= prev.d - cur.d) {
            const Coord excess = prev.b - cur.b;
            prev.b = cur.b - 1;
            prev.d = prev.d - excess - 1;
        } else {
            const Coord excess = prev.d - cur.d;
            prev.d = cur.d - 1;
            prev.b = prev.b - excess - 1;
        }
    }

    Score total = 0;
    for (std::size_t k = 0; k + 1 < out.anchors.size(); ++k) {
        total += step_coverage(out.anchors[k], out.anchors[k + 1]);
    }
    total += out.anchors.back().min_length();
    out.coverage = total;
    return out;
}

} // namespace ochain
