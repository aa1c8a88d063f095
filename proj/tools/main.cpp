// ochain: chain anchor interval pairs between two sequences, allowing
// overlaps, with exact sweep algorithms cross-checked against quadratic
// references and an LCS route.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ochain/anchor.hpp"
#include "ochain/anchor_io.hpp"
#include "ochain/chaining.hpp"
#include "ochain/generate.hpp"
#include "ochain/lcs.hpp"
#include "ochain/synthetic.hpp"

using namespace ochain;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

struct ChainOptions {
    std::string anchors_path;
    std::string seqs_path;
    std::string mode = "strict";
    std::string format = "tsv";
    std::int64_t k = 0;
    std::int64_t minlen = 0;
    bool unit = false;
    bool show_traceback = false;
};

Algo parse_mode(const std::string& mode) {
    if (mode == "one-sided") return Algo::one_sided;
    if (mode == "strict") return Algo::two_sided_strict;
    if (mode == "weak") return Algo::two_sided_weak;
    if (mode == "brute-strict") return Algo::brute_strict;
    if (mode == "brute-weak") return Algo::brute_weak;
    throw std::runtime_error("unknown mode '" + mode + "'");
}

AnchorSet load_input(const ChainOptions& opt) {
    const bool from_anchors = !opt.anchors_path.empty();
    const bool from_seqs = !opt.seqs_path.empty();
    if (from_anchors == from_seqs) {
        throw std::runtime_error("exactly one of --anchors and --seqs is required");
    }
    if (from_anchors) {
        if (opt.k || opt.minlen || opt.unit) {
            throw std::runtime_error("--k/--minlen/--unit apply only with --seqs");
        }
        return validate(read_anchors_file(opt.anchors_path));
    }
    const int generators = (opt.k > 0) + (opt.minlen > 0) + opt.unit;
    if (generators != 1) {
        throw std::runtime_error(
            "--seqs needs exactly one of --k, --minlen or --unit");
    }
    const StringPair sp = read_sequence_pair_file(opt.seqs_path);
    if (opt.unit) return unit_matches(sp);
    if (opt.k > 0) return kmer_matches(sp, static_cast<std::size_t>(opt.k));
    return maximal_exact_matches(sp, static_cast<std::size_t>(opt.minlen));
}

int cmd_chain(const ChainOptions& opt) {
    const AnchorSet set = load_input(opt);
    const ChainingResult res = run_algo(parse_mode(opt.mode), set);
    const bool jsonl = opt.format == "jsonl";

    for (std::size_t j = 0; j < set.size(); ++j) {
        const Anchor& x = set[j];
        if (jsonl) {
            nlohmann::json row{{"j", j + 1}, {"a", x.a}, {"b", x.b},
                               {"c", x.c},  {"d", x.d}, {"C", res.score[j]},
                               {"Cplus", res.score_plus[j]}};
            std::cout << row.dump() << '\n';
        } else {
            std::cout << j + 1 << '\t' << x.a << '\t' << x.b << '\t' << x.c << '\t'
                      << x.d << '\t' << res.score[j] << '\t' << res.score_plus[j]
                      << '\n';
        }
    }
    const std::size_t best_out = set.empty() ? 0 : res.best + 1;
    if (jsonl) {
        std::cout << nlohmann::json{{"best", res.best_score}, {"index", best_out}}.dump()
                  << '\n';
    } else {
        std::cout << "best\t" << res.best_score << '\t' << best_out << '\n';
    }
    if (opt.show_traceback && !set.empty()) {
        const Chain chain = traceback(res, set, res.best);
        if (jsonl) {
            nlohmann::json arr = nlohmann::json::array();
            for (std::size_t i : chain.indices) arr.push_back(i + 1);
            std::cout << nlohmann::json{{"chain", arr}}.dump() << '\n';
        } else {
            std::cout << "chain";
            for (std::size_t i : chain.indices) std::cout << '\t' << i + 1;
            std::cout << '\n';
        }
    }
    return kExitOk;
}

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::int64_t instances = 200;
    bool corrupt = false;
};

// One randomized consistency pass over an anchor instance. Returns an empty
// string when everything agrees.
std::string check_anchor_instance(const std::vector<Anchor>& raw, bool corrupt) {
    AnchorSet set;
    try {
        set = validate(raw);
    } catch (const std::exception& e) {
        return std::string("validation: ") + e.what();
    }
    const ChainingResult bs = chain_brute_strict(set);
    const ChainingResult bw = chain_brute_weak(set);
    ChainingResult fs = chain_two_sided_strict(set);
    const ChainingResult fw = chain_two_sided_weak(set);
    if (corrupt && !fs.score_plus.empty()) fs.score_plus[0] += 1;

    if (fs.score_plus != bs.score_plus) return "strict sweep != strict reference";
    if (fw.score_plus != bw.score_plus) return "weak sweep != weak reference";
    if (bs.best_score != bw.best_score) return "strict and weak optima differ";
    if (!set.empty()) {
        const Chain chain = traceback(fw, set, fw.best);
        const NormalizedChain norm = normalize_weak_chain(chain, set);
        if (norm.coverage != fw.best_score) {
            return "normalized weak optimum changed its coverage";
        }
    }
    return "";
}

std::string check_lcs_instance(const StringPair& sp, const std::vector<Anchor>& raw) {
    const AnchorSet set = validate(raw);
    const ChainLcsAgreement agr = verify_chain_lcs_agreement(sp, set);
    if (!agr.equal) return "weak chain score != anchor-restricted LCS";
    return "";
}

void print_anchor_instance(const std::vector<Anchor>& raw) {
    std::cerr << "# counterexample (" << raw.size() << " anchors)\n";
    write_anchors(std::cerr, raw);
}

// Greedy shrink: drop anchors one at a time while the failure persists.
template <typename Check>
std::vector<Anchor> shrink_failing(std::vector<Anchor> raw, const Check& fails) {
    bool reduced = true;
    while (reduced) {
        reduced = false;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            std::vector<Anchor> cand = raw;
            cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(i));
            if (!fails(cand).empty()) {
                raw = std::move(cand);
                reduced = true;
                break;
            }
        }
    }
    return raw;
}

int cmd_verify(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    for (std::int64_t it = 0; it < opt.instances; ++it) {
        if (it % 4 == 3) {
            const StringPair sp = random_string_pair(rng, 40, 2 + 2 * (int)(rng() % 2));
            const AnchorSet mems = maximal_exact_matches(sp, 1 + rng() % 3);
            const std::string err = check_lcs_instance(sp, mems.anchors);
            if (!err.empty()) {
                const auto fails = [&](const std::vector<Anchor>& v) {
                    return check_lcs_instance(sp, v);
                };
                std::cerr << "verify: instance " << it << " failed: " << err << '\n';
                std::cerr << "# text    " << sp.text << "\n# pattern " << sp.pattern
                          << '\n';
                print_anchor_instance(shrink_failing(mems.anchors, fails));
                return kExitVerifyFailed;
            }
            continue;
        }
        SyntheticParams p;
        p.count = (rng() % 8 == 0) ? rng() % 4 : rng() % 121;
        const Coord spans[] = {8, 30, 200, 4000};
        p.span = spans[rng() % 4];
        p.max_length = 1 + static_cast<Coord>(rng() % std::min<Coord>(p.span, 50));
        p.duplicate_fraction = (rng() % 2) ? 0.25 : 0.0;
        const AnchorSet set = random_eml_anchors(rng, p);
        const std::string err = check_anchor_instance(set.anchors, opt.corrupt);
        if (!err.empty()) {
            const auto fails = [&](const std::vector<Anchor>& v) {
                return check_anchor_instance(v, opt.corrupt);
            };
            std::cerr << "verify: instance " << it << " failed: " << err << '\n';
            print_anchor_instance(shrink_failing(set.anchors, fails));
            return kExitVerifyFailed;
        }
    }
    std::cout << "verify: " << opt.instances << " instances passed\n";
    return kExitOk;
}

struct BenchOptions {
    std::uint64_t seed = 1;
    std::int64_t max_log2 = 17;
    std::int64_t min_log2 = 10;
    std::int64_t brute_max_log2 = 13;
    std::int64_t reps = 2;
    std::string format = "tsv";
};

int cmd_bench(const BenchOptions& opt) {
    const std::int64_t lo = std::min(opt.min_log2, opt.max_log2);
    const bool jsonl = opt.format == "jsonl";
    if (!jsonl) std::cout << "# n\tmode\tseconds\tratio\n";
    const Algo algos[] = {Algo::one_sided, Algo::two_sided_strict,
                          Algo::two_sided_weak, Algo::brute_strict};
    for (Algo algo : algos) {
        double prev = 0;
        for (std::int64_t lg = lo; lg <= opt.max_log2; ++lg) {
            if (algo == Algo::brute_strict && lg > opt.brute_max_log2) break;
            const auto n = static_cast<std::size_t>(1) << lg;
            const AnchorSet set = scaling_instance(opt.seed, n);
            const double sec = time_algo(algo, set, static_cast<int>(opt.reps));
            const double ratio = prev > 0 ? sec / prev : 0;
            if (jsonl) {
                nlohmann::json row{{"n", n},
                                   {"mode", algo_name(algo)},
                                   {"seconds", sec}};
                if (ratio > 0) row["ratio"] = ratio;
                std::cout << row.dump() << '\n';
            } else {
                std::printf("%zu\t%s\t%.6f\t", n, algo_name(algo), sec);
                if (ratio > 0) {
                    std::printf("%.2f\n", ratio);
                } else {
                    std::printf("-\n");
                }
            }
            prev = sec;
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"overlap-aware co-linear chaining of anchor matches"};
    app.require_subcommand(1);

    ChainOptions chain_opt;
    CLI::App* chain = app.add_subcommand(
        "chain", "score anchors and report per-anchor chaining results");
    chain->add_option("--anchors", chain_opt.anchors_path,
                      "anchor TSV file (a b c d per line)");
    chain->add_option("--seqs", chain_opt.seqs_path,
                      "sequence pair file (two-line plain or two-record FASTA)");
    chain->add_option("--mode", chain_opt.mode,
                      "one-sided|strict|weak|brute-strict|brute-weak")
        ->check(CLI::IsMember(
            {"one-sided", "strict", "weak", "brute-strict", "brute-weak"}));
    chain->add_option("--k", chain_opt.k, "generate k-mer match anchors");
    chain->add_option("--minlen", chain_opt.minlen,
                      "generate maximal exact match anchors of at least this length");
    chain->add_flag("--unit", chain_opt.unit, "generate single-character anchors");
    chain->add_flag("--traceback", chain_opt.show_traceback,
                    "append the optimal chain's anchor indices");
    chain->add_option("--format", chain_opt.format, "tsv|jsonl")
        ->check(CLI::IsMember({"tsv", "jsonl"}));

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand(
        "verify", "run randomized cross-checks between all solver routes");
    verify->add_option("--seed", verify_opt.seed, "random seed");
    verify->add_option("--instances", verify_opt.instances, "instance count");
    verify->add_flag("--corrupt", verify_opt.corrupt)->group("");

    BenchOptions bench_opt;
    CLI::App* bench = app.add_subcommand(
        "bench", "report wall times over a doubling size schedule");
    bench->add_option("--seed", bench_opt.seed, "random seed");
    bench->add_option("--bench-max-log2", bench_opt.max_log2,
                      "largest size as a power of two");
    bench->add_option("--bench-min-log2", bench_opt.min_log2,
                      "smallest size as a power of two");
    bench->add_option("--brute-max-log2", bench_opt.brute_max_log2,
                      "cap for the quadratic reference");
    bench->add_option("--reps", bench_opt.reps, "repetitions per measurement");
    bench->add_option("--format", bench_opt.format, "tsv|jsonl")
        ->check(CLI::IsMember({"tsv", "jsonl"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (chain->parsed()) return cmd_chain(chain_opt);
        if (verify->parsed()) return cmd_verify(verify_opt);
        if (bench->parsed()) return cmd_bench(bench_opt);
    } catch (const std::exception& e) {
        std::cerr << "ochain: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
