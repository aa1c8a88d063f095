#include "ochain/synthetic.hpp"

#include <chrono>
#include <stdexcept>

namespace ochain {

namespace {

Coord draw(std::mt19937_64& rng, Coord lo, Coord hi) {
    return std::uniform_int_distribution<Coord>(lo, hi)(rng);
}

AnchorSet random_anchor_impl(std::mt19937_64& rng, const SyntheticParams& p, bool eml) {
    std::vector<Anchor> raw;
    raw.reserve(p.count);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < p.count; ++i) {
        if (!raw.empty() && p.duplicate_fraction > 0 &&
            unit(rng) < p.duplicate_fraction) {
            raw.push_back(raw[draw(rng, 0, static_cast<Coord>(raw.size()) - 1)]);
            continue;
        }
        const Coord len1 = draw(rng, 1, p.max_length);
        const Coord len2 = eml ? len1 : draw(rng, 1, p.max_length);
        const Coord a = draw(rng, 1, p.span);
        const Coord c = draw(rng, 1, p.span);
        raw.push_back(Anchor{a, a + len1 - 1, c, c + len2 - 1});
    }
    return validate(std::move(raw));
}

} // namespace

AnchorSet random_eml_anchors(std::mt19937_64& rng, const SyntheticParams& p) {
    return random_anchor_impl(rng, p, true);
}

AnchorSet random_anchors(std::mt19937_64& rng, const SyntheticParams& p) {
    return random_anchor_impl(rng, p, false);
}

StringPair random_string_pair(std::mt19937_64& rng, std::size_t max_length,
                              int alphabet_size) {
    if (max_length < 1 || alphabet_size < 1 || alphabet_size > 26) {
        throw std::invalid_argument("bad string pair parameters");
    }
    const auto gen = [&](std::string& s) {
        const auto len = static_cast<std::size_t>(
            draw(rng, 1, static_cast<Coord>(max_length)));
        s.resize(len);
        for (auto& ch : s) {
            ch = static_cast<char>('a' + draw(rng, 0, alphabet_size - 1));
        }
    };
    StringPair sp;
    gen(sp.text);
    gen(sp.pattern);
    return sp;
}

const char* algo_name(Algo algo) {
    switch (algo) {
        case Algo::brute_strict: return "brute-strict";
        case Algo::brute_weak: return "brute-weak";
        case Algo::one_sided: return "one-sided";
        case Algo::two_sided_strict: return "strict";
        case Algo::two_sided_weak: return "weak";
    }
    return "?";
}

ChainingResult run_algo(Algo algo, const AnchorSet& set) {
    switch (algo) {
        case Algo::brute_strict: return chain_brute_strict(set);
        case Algo::brute_weak: return chain_brute_weak(set);
        case Algo::one_sided: return chain_one_sided(set);
        case Algo::two_sided_strict: return chain_two_sided_strict(set);
        case Algo::two_sided_weak: return chain_two_sided_weak(set);
    }
    throw std::logic_error("unknown algorithm");
}

double time_algo(Algo algo, const AnchorSet& set, int reps) {
    double best = 0;
    for (int r = 0; r < std::max(reps, 1); ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        volatile Score sink = run_algo(algo, set).best_score;
        (void)sink;
        const auto t1 = std::chrono::steady_clock::now();
        const double sec = std::chrono::duration<double>(t1 - t0).count();
        if (r == 0 || sec < best) best = sec;
    }
    return best;
}

AnchorSet scaling_instance(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
    SyntheticParams p;
    p.count = n;
    p.span = static_cast<Coord>(4 * n + 16);
    p.max_length = 64;
    p.duplicate_fraction = 0.02;
    return random_eml_anchors(rng, p);
}

} // namespace ochain
