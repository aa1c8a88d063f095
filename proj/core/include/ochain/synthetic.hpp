#pragma once

#include <cstdint>
#include <random>

#include "ochain/anchor.hpp"
#include "ochain/chaining.hpp"
#include "ochain/generate.hpp"

namespace ochain {

/*
 * Seeded generators for randomized checks and benchmarks. Everything here is
 * deterministic given the rng state.
 */
struct SyntheticParams {
    std::size_t count = 0;
    Coord span = 1000;              // start positions drawn from [1, span]
    Coord max_length = 20;          // lengths drawn from [1, max_length]
    double duplicate_fraction = 0;  // chance an anchor copies an earlier one
};

// Random anchors with equal interval lengths. Small spans and a nonzero
// duplicate fraction produce endpoint ties, duplicates and heavy nesting.
AnchorSet random_eml_anchors(std::mt19937_64& rng, const SyntheticParams& p);

// As above but the two interval lengths are drawn independently.
AnchorSet random_anchors(std::mt19937_64& rng, const SyntheticParams& p);

// Uniform random strings over the first alphabet_size lowercase letters,
// lengths drawn from [1, max_length].
StringPair random_string_pair(std::mt19937_64& rng, std::size_t max_length,
                              int alphabet_size);

enum class Algo {
    brute_strict,
    brute_weak,
    one_sided,
    two_sided_strict,
    two_sided_weak,
};

const char* algo_name(Algo algo);

ChainingResult run_algo(Algo algo, const AnchorSet& set);

// Wall-clock seconds for one run of the algorithm, minimum over reps runs.
double time_algo(Algo algo, const AnchorSet& set, int reps = 1);

// The canonical benchmark workload at size n: anchor density and length mix
// held constant while the coordinate span grows with n.
AnchorSet scaling_instance(std::uint64_t seed, std::size_t n);

} // namespace ochain
