#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "ochain/chaining.hpp"
#include "ochain/synthetic.hpp"

using namespace ochain;

namespace {

Anchor mk(Coord a, Coord b, Coord c, Coord d) { return Anchor{a, b, c, d}; }

// Independent oracle: enumerate every chain by depth-first extension and
// score it through coverage(). Returns the best score_plus per ending anchor.
std::vector<Score> enumerate_chains(const AnchorSet& set, ChainMode mode) {
    const std::size_t n = set.size();
    std::vector<Score> best(n, 0);
    for (std::size_t j = 0; j < n; ++j) best[j] = set[j].min_length();
    std::vector<std::size_t> stack;
    auto dfs = [&](auto&& self, std::size_t last, Score prefix) -> void {
        for (std::size_t next = 0; next < n; ++next) {
            if (!precedes(set[last], set[next], mode)) continue;
            const Score p = prefix + step_coverage(set[last], set[next]);
            best[next] = std::max(best[next], p + set[next].min_length());
            self(self, next, p);
        }
    };
    for (std::size_t j = 0; j < n; ++j) dfs(dfs, j, 0);
    return best;
}

// Quadratic oracle for the one-sided restriction: the overlap case only
// admits predecessors that stay clear of the current anchor in dimension one.
std::vector<Score> one_sided_oracle(const AnchorSet& set) {
    const std::size_t n = set.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return std::pair(set[x].a, x) < std::pair(set[y].a, y);
    });
    std::vector<Score> score(n, 0), plus(n, 0);
    for (std::size_t pi = 0; pi < n; ++pi) {
        const std::size_t j = order[pi];
        Score best = 0;
        for (std::size_t qi = 0; qi < pi; ++qi) {
            const std::size_t jq = order[qi];
            if (!precedes(set[jq], set[j])) continue;
            if (overlaps(set[jq], set[j]) && set[jq].b >= set[j].a) continue;
            best = std::max(best, score[jq] + step_coverage(set[jq], set[j]));
        }
        score[j] = best;
        plus[j] = best + set[j].min_length();
    }
    return plus;
}

AnchorSet random_instance(std::mt19937_64& rng, std::size_t max_n, bool eml) {
    SyntheticParams p;
    p.count = rng() % (max_n + 1);
    p.span = 1 + static_cast<Coord>(rng() % 60);
    p.max_length = 1 + static_cast<Coord>(rng() % std::min<Coord>(p.span, 24));
    p.duplicate_fraction = (rng() % 3 == 0) ? 0.2 : 0.0;
    return eml ? random_eml_anchors(rng, p) : random_anchors(rng, p);
}

void check_traceback_consistency(const ChainingResult& res, const AnchorSet& set) {
    for (std::size_t j = 0; j < set.size(); ++j) {
        const Chain chain = traceback(res, set, j);
        REQUIRE(!chain.indices.empty());
        REQUIRE(chain.indices.back() == j);
        REQUIRE(coverage(chain, set) == res.score_plus[j]);
    }
}

} // namespace

TEST_CASE("worked example, all solvers") {
    const AnchorSet set = validate({mk(1, 5, 2, 6), mk(3, 8, 5, 10)});

    const ChainingResult bs = chain_brute_strict(set);
    CHECK(bs.score_plus == std::vector<Score>{5, 8});
    CHECK(bs.best_score == 8);
    CHECK(bs.best == 1);

    CHECK(chain_brute_weak(set).score_plus == std::vector<Score>{5, 8});
    CHECK(chain_two_sided_strict(set).score_plus == std::vector<Score>{5, 8});
    CHECK(chain_two_sided_weak(set).score_plus == std::vector<Score>{5, 8});

    // the overlap sits in dimension one, so the one-sided sweep cannot use
    // the first anchor as a predecessor of the second
    const ChainingResult os = chain_one_sided(set);
    CHECK(os.score_plus == std::vector<Score>{5, 6});
    CHECK(os.best_score == 6);
}

TEST_CASE("single anchor") {
    const AnchorSet set = validate({mk(1, 4, 1, 4)});
    CHECK(chain_brute_strict(set).score_plus == std::vector<Score>{4});
    CHECK(chain_two_sided_strict(set).score_plus == std::vector<Score>{4});
}

TEST_CASE("empty input") {
    const AnchorSet set = validate({});
    for (Algo algo : {Algo::brute_strict, Algo::brute_weak, Algo::one_sided,
                      Algo::two_sided_strict, Algo::two_sided_weak}) {
        const ChainingResult res = run_algo(algo, set);
        CHECK(res.score_plus.empty());
        CHECK(res.best_score == 0);
    }
}

TEST_CASE("disjoint anchors chain end to end") {
    const AnchorSet set = validate({mk(1, 2, 1, 2), mk(5, 6, 5, 6)});
    CHECK(chain_one_sided(set).score_plus == std::vector<Score>{2, 4});
}

TEST_CASE("first-dimension overlap scoring") {
    // overlap larger in dimension one: the step adds the first-dimension gap
    const AnchorSet low = validate({mk(1, 6, 1, 6), mk(4, 9, 5, 10)});
    CHECK(chain_two_sided_strict(low).score_plus == std::vector<Score>{6, 9});
    CHECK(chain_brute_strict(low).score_plus == std::vector<Score>{6, 9});

    // overlap larger in dimension two: the step adds the second-dimension gap
    const AnchorSet high = validate({mk(1, 6, 1, 6), mk(4, 9, 2, 7)});
    CHECK(chain_two_sided_strict(high).score_plus == std::vector<Score>{6, 7});
    CHECK(chain_brute_strict(high).score_plus == std::vector<Score>{6, 7});
}

TEST_CASE("nested pair under weak precedence") {
    const AnchorSet set = validate({mk(1, 6, 1, 6), mk(2, 5, 2, 5)});
    const ChainingResult bw = chain_brute_weak(set);
    CHECK(bw.score_plus == std::vector<Score>{6, 5});
    CHECK(chain_two_sided_weak(set).score_plus == bw.score_plus);
    // strict precedence rejects the nested pair
    CHECK(chain_brute_strict(set).score_plus == std::vector<Score>{6, 4});
    CHECK(chain_two_sided_strict(set).score_plus == std::vector<Score>{6, 4});
}

TEST_CASE("sweep solvers reject input without equal match lengths") {
    const AnchorSet set = validate({mk(1, 3, 1, 4)});
    CHECK_THROWS_AS(chain_one_sided(set), std::invalid_argument);
    CHECK_THROWS_AS(chain_two_sided_strict(set), std::invalid_argument);
    CHECK_THROWS_AS(chain_two_sided_weak(set), std::invalid_argument);
    CHECK_NOTHROW(chain_brute_strict(set));
    CHECK_NOTHROW(chain_brute_weak(set));
}

TEST_CASE("brute solvers match exhaustive chain enumeration") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 150; ++it) {
        SyntheticParams p;
        p.count = rng() % 11;
        p.span = 1 + static_cast<Coord>(rng() % 16);
        p.max_length = 1 + static_cast<Coord>(rng() % 8);
        p.duplicate_fraction = 0.15;
        const AnchorSet set = random_anchors(rng, p); // eml not required here
        for (ChainMode mode : {ChainMode::strict, ChainMode::weak}) {
            const std::vector<Score> want = enumerate_chains(set, mode);
            const ChainingResult got = mode == ChainMode::strict
                                           ? chain_brute_strict(set)
                                           : chain_brute_weak(set);
            REQUIRE(got.score_plus == want);
        }
    }
}

TEST_CASE("sweep solvers match the quadratic references") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 300; ++it) {
        const AnchorSet set = random_instance(rng, 60, true);
        const ChainingResult bs = chain_brute_strict(set);
        const ChainingResult bw = chain_brute_weak(set);
        const ChainingResult fs = chain_two_sided_strict(set);
        const ChainingResult fw = chain_two_sided_weak(set);
        REQUIRE(fs.score_plus == bs.score_plus);
        REQUIRE(fs.score == bs.score);
        REQUIRE(fw.score_plus == bw.score_plus);
        REQUIRE(fw.score == bw.score);
        REQUIRE(fs.best_score == bs.best_score);
        REQUIRE(fw.best_score == bw.best_score);

        const std::vector<Score> restricted = one_sided_oracle(set);
        REQUIRE(chain_one_sided(set).score_plus == restricted);
    }
}

TEST_CASE("per-anchor dominance between the solver families") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 120; ++it) {
        const AnchorSet set = random_instance(rng, 50, true);
        const auto os = chain_one_sided(set).score_plus;
        const auto st = chain_two_sided_strict(set).score_plus;
        const auto wk = chain_two_sided_weak(set).score_plus;
        for (std::size_t j = 0; j < set.size(); ++j) {
            REQUIRE(os[j] <= st[j]);
            REQUIRE(st[j] <= wk[j]);
        }
    }
}

TEST_CASE("strict and weak optima coincide") {
    std::mt19937_64 rng(44);
    for (int it = 0; it < 200; ++it) {
        const AnchorSet set = random_instance(rng, 40, true);
        const ChainingResult bs = chain_brute_strict(set);
        const ChainingResult bw = chain_brute_weak(set);
        REQUIRE(bs.best_score == bw.best_score);
    }
}

TEST_CASE("strict and weak solvers coincide on non-nested input") {
    std::mt19937_64 rng(45);
    int used = 0;
    for (int it = 0; it < 400 && used < 120; ++it) {
        const AnchorSet set = random_instance(rng, 30, true);
        if (!set.non_nested) continue;
        ++used;
        REQUIRE(chain_two_sided_weak(set).score_plus ==
                chain_two_sided_strict(set).score_plus);
    }
    CHECK(used >= 50);
}

TEST_CASE("score bounds") {
    std::mt19937_64 rng(46);
    for (int it = 0; it < 100; ++it) {
        const AnchorSet set = random_instance(rng, 40, true);
        if (set.empty()) continue;
        const ChainingResult res = chain_two_sided_weak(set);
        Score lensum = 0;
        // length of the union of intervals, per dimension
        const auto union_len = [&](auto lo, auto hi) {
            std::vector<std::pair<Coord, Coord>> iv;
            for (const Anchor& x : set.anchors) iv.emplace_back(lo(x), hi(x));
            std::sort(iv.begin(), iv.end());
            Score total = 0;
            Coord end = 0;
            for (const auto& [l, h] : iv) {
                const Coord from = std::max(l, end + 1);
                if (h >= from) total += h - from + 1;
                end = std::max(end, h);
            }
            return total;
        };
        for (const Anchor& x : set.anchors) lensum += x.min_length();
        const Score span1 = union_len([](const Anchor& x) { return x.a; },
                                      [](const Anchor& x) { return x.b; });
        const Score span2 = union_len([](const Anchor& x) { return x.c; },
                                      [](const Anchor& x) { return x.d; });
        REQUIRE(res.best_score >= 0);
        REQUIRE(res.best_score <= std::min(span1, span2));
        REQUIRE(res.best_score <= lensum);
    }
}

TEST_CASE("scores are a permutation-invariant function of anchor identity") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 60; ++it) {
        const AnchorSet set = random_instance(rng, 40, true);
        std::vector<std::size_t> perm(set.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Anchor> shuffled(set.size());
        for (std::size_t i = 0; i < perm.size(); ++i) shuffled[i] = set[perm[i]];
        const AnchorSet set2 = validate(std::move(shuffled));
        for (Algo algo : {Algo::one_sided, Algo::two_sided_strict, Algo::two_sided_weak}) {
            const ChainingResult r1 = run_algo(algo, set);
            const ChainingResult r2 = run_algo(algo, set2);
            for (std::size_t i = 0; i < perm.size(); ++i) {
                REQUIRE(r2.score_plus[i] == r1.score_plus[perm[i]]);
            }
        }
    }
}

TEST_CASE("traceback of the worked example") {
    const AnchorSet set = validate({mk(1, 5, 2, 6), mk(3, 8, 5, 10)});
    const ChainingResult res = chain_two_sided_strict(set);
    const Chain chain = traceback(res, set, 1);
    CHECK(chain.indices == std::vector<std::size_t>{0, 1});
    CHECK(coverage(chain, set) == 8);

    // an isolated anchor traces back to itself
    const Chain solo = traceback(res, set, 0);
    CHECK(solo.indices == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(traceback(res, set, 2), std::out_of_range);
}

TEST_CASE("traceback reproduces every per-anchor score") {
    std::mt19937_64 rng(48);
    for (int it = 0; it < 200; ++it) {
        const AnchorSet set = random_instance(rng, 45, true);
        for (Algo algo : {Algo::brute_strict, Algo::brute_weak, Algo::one_sided,
                          Algo::two_sided_strict, Algo::two_sided_weak}) {
            check_traceback_consistency(run_algo(algo, set), set);
        }
    }
}

TEST_CASE("weak chain normalization") {
    SUBCASE("already strict chains pass through") {
        const AnchorSet set = validate({mk(1, 5, 2, 6), mk(3, 8, 5, 10)});
        const Chain chain{{0, 1}, ChainMode::weak};
        const NormalizedChain norm = normalize_weak_chain(chain, set);
        CHECK(norm.anchors == set.anchors);
        CHECK(norm.coverage == 8);
    }
    SUBCASE("nested pair gets trimmed") {
        const AnchorSet set = validate({mk(1, 6, 1, 6), mk(2, 5, 2, 5)});
        const Chain chain{{0, 1}, ChainMode::weak};
        const NormalizedChain norm = normalize_weak_chain(chain, set);
        REQUIRE(norm.anchors.size() == 2);
        CHECK(precedes(norm.anchors[0], norm.anchors[1]));
        CHECK(norm.anchors[0] == mk(1, 4, 1, 4));
        CHECK(norm.coverage == coverage(chain, set));
    }
    SUBCASE("invalid weak chains are rejected") {
        const AnchorSet set = validate({mk(1, 6, 1, 6), mk(2, 5, 2, 5)});
        CHECK_THROWS_AS(normalize_weak_chain(Chain{{1, 0}, ChainMode::weak}, set),
                        std::invalid_argument);
    }
}

TEST_CASE("normalization preserves coverage on random weak chains") {
    std::mt19937_64 rng(49);
    for (int it = 0; it < 300; ++it) {
        const AnchorSet set = random_instance(rng, 40, true);
        if (set.empty()) continue;
        const ChainingResult res = chain_two_sided_weak(set);
        const Chain chain = traceback(res, set, res.best);
        const NormalizedChain norm = normalize_weak_chain(chain, set);
        REQUIRE(norm.coverage == coverage(chain, set));
        // and the rewritten chain really is strict with equal lengths kept
        for (std::size_t k = 0; k + 1 < norm.anchors.size(); ++k) {
            REQUIRE(precedes(norm.anchors[k], norm.anchors[k + 1]));
        }
        for (const Anchor& x : norm.anchors) {
            REQUIRE(x.equal_match_length());
            REQUIRE(x.a <= x.b);
        }
    }
}
