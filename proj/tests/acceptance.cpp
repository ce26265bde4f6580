// Acceptance suite: one criterion per entry, each printing a PASS/FAIL line
// with its elapsed time. Run with no arguments for the whole suite or with a
// criterion number. The process exits nonzero when any selected criterion
// fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bitflip/alist.hpp"
#include "bitflip/cli.hpp"
#include "bitflip/constructions.hpp"
#include "bitflip/decoder.hpp"
#include "bitflip/geometry.hpp"
#include "bitflip/gf2.hpp"
#include "bitflip/spectral.hpp"
#include "bitflip/verifier.hpp"

using namespace bitflip;

namespace {

struct Harness {
    int failures = 0;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            std::cout << "    violation: " << what << "\n";
        }
    }
};

bool trace_strictly_decreasing(const DecodeResult& r) {
    std::size_t prev = r.initial_syndrome_weight;
    for (const auto& step : r.trace) {
        if (step.syndrome_after >= prev) return false;
        prev = step.syndrome_after;
    }
    return true;
}

// Fixed-policy decode of every weight-1..t pattern with a monotonicity check.
void sweep_decodes(Harness& h, const BinaryMatrix& m, std::size_t t, const char* name) {
    const BlockSystem bs = column_blocks(m);
    std::vector<std::uint32_t> combo;
    std::function<void(std::uint32_t, std::size_t)> rec = [&](std::uint32_t first,
                                                              std::size_t left) {
        if (left == 0) {
            const BitVec e = BitVec::from_indices(bs.n(), combo);
            const DecodeResult r = decode(bs, syndrome(bs, e), DecoderConfig{});
            h.check(trace_strictly_decreasing(r),
                    std::string(name) + ": non-monotone trace");
            return;
        }
        for (std::uint32_t i = first; i + left <= bs.n(); ++i) {
            combo.push_back(i);
            rec(i + 1, left - 1);
            combo.pop_back();
        }
    };
    for (std::size_t w = 1; w <= t; ++w) rec(0, w);
}

void criterion_1(Harness& h) {
    struct Expect {
        BinaryMatrix m;
        std::size_t n, k, d;
        const char* name;
    };
    const std::vector<Expect> cases = {
        {projective_plane(4), 21, 11, 6, "pg q=4"},
        {euclidean_punctured(4), 15, 7, 5, "eg q=4"},
        {projective_plane(2), 7, 3, 4, "pg q=2"},
    };
    for (const auto& c : cases) {
        h.check(c.m.cols() == c.n, std::string(c.name) + ": length");
        h.check(c.n - rank(c.m) == c.k, std::string(c.name) + ": dimension");
        h.check(min_distance(c.m) == c.d, std::string(c.name) + ": minimum distance");
    }
}

void criterion_2(Harness& h) {
    {
        const BinaryMatrix pg4 = projective_plane(4);
        const VerifyReport r = verify_exhaustive(pg4, 2, VerifyMode::adversarial());
        h.check(r.patterns_checked == 231, "pg4: pattern count");
        h.check(r.pass(), "pg4: adversarial verification at t=2");
        const Certificate cert = certify_pseudoredundancy(pg4, pg4);
        h.check(cert.pass && cert.upper_bound == 21, "pg4: certificate rho <= 21");
    }
    {
        const BinaryMatrix eg4 = euclidean_punctured(4);
        const VerifyReport r = verify_exhaustive(eg4, 2, VerifyMode::adversarial());
        h.check(r.patterns_checked == 120, "eg4: pattern count");
        h.check(r.pass(), "eg4: adversarial verification at t=2");
        const Certificate cert = certify_pseudoredundancy(eg4, eg4);
        h.check(cert.pass && cert.upper_bound == 15, "eg4: certificate rho <= 15");
    }
}

void criterion_3(Harness& h) {
    const BinaryMatrix w3 = simplex_weight3_matrix(4);
    h.check(w3.rows() == 35 && w3.cols() == 15, "simplex-w3 m=4: 35 x 15");
    const BlockSystem bs = column_blocks(w3);
    h.check(bs.block_size == 7, "simplex-w3 m=4: c = 7");
    h.check(max_pairwise_intersection(bs) == 1, "simplex-w3 m=4: s = 1");

    const VerifyReport r = verify_exhaustive(w3, 3, VerifyMode::adversarial());
    h.check(r.patterns_checked == 575, "simplex-w3: pattern count");
    h.check(r.pass(), "simplex-w3: adversarial verification at t=3");

    const Certificate cert = certify_pseudoredundancy(nullspace_basis(hamming_matrix(4)), w3);
    h.check(cert.pass && cert.upper_bound == 35, "simplex-w3: certificate rho <= 35 = n(n-1)/6");
}

void criterion_4(Harness& h) {
    const VerifyReport r = verify_exhaustive(simplex_circulant(4), 3, VerifyMode::adversarial());
    h.check(!r.failures.empty(), "simplex-circulant m=4: at least one failure at t=3");
}

void criterion_5(Harness& h) {
    for (std::uint32_t m : {3u, 4u}) {
        const BinaryMatrix circ = hamming_circulant(m);
        const VerifyReport r = verify_exhaustive(circ, 1, VerifyMode::adversarial());
        h.check(r.pass(), "hamming-circulant m=" + std::to_string(m) + ": t=1 verification");
        const Certificate cert = certify_pseudoredundancy(hamming_matrix(m), circ);
        const std::size_t n = (std::size_t(1) << m) - 1;
        h.check(cert.pass && cert.upper_bound == n,
                "hamming-circulant m=" + std::to_string(m) + ": certificate rho <= " +
                    std::to_string(n));
    }
}

void criterion_6(Harness& h) {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const BinaryMatrix m = projective_plane(q);
        const TopEigenvalues ev = top_two_eigenvalues(m);
        const double l1 = double((q + 1) * (q + 1));
        h.check(std::abs(ev.lambda1 - l1) < 1e-6, "q=" + std::to_string(q) + ": lambda1");
        h.check(std::abs(ev.lambda2 - double(q)) < 1e-6, "q=" + std::to_string(q) + ": lambda2");

        const double bound = tanner_distance_bound(m.cols(), q + 1, ev.lambda1, ev.lambda2);
        h.check(std::abs(bound - double(q + 2)) < 1e-6,
                "q=" + std::to_string(q) + ": distance bound = q+2");

        const std::size_t d = min_distance(m);
        h.check(double(d) >= bound - 1e-6, "q=" + std::to_string(q) + ": bound <= d_min");
        if (q == 2 || q == 4)
            h.check(std::abs(double(d) - bound) < 1e-6,
                    "q=" + std::to_string(q) + ": bound attains d_min");
    }
}

void criterion_7(Harness& h) {
    const std::vector<std::pair<BinaryMatrix, const char*>> instances = {
        {projective_plane(2), "fano"},
        {projective_plane(4), "pg4"},
        {euclidean_punctured(4), "eg4"},
        {simplex_weight3_matrix(4), "simplex-w3"},
    };
    for (const auto& [m, name] : instances) {
        const BlockSystem bs = column_blocks(m);
        std::set<std::pair<std::uint32_t, std::uint32_t>> predicted;
        for (const auto& f : two_error_scan(bs)) predicted.insert({f.i, f.j});
        for (std::uint32_t i = 0; i < bs.n(); ++i) {
            for (std::uint32_t j = i + 1; j < bs.n(); ++j) {
                const bool adv =
                    explore_runs(bs, BitVec::from_indices(bs.n(), {i, j}),
                                 VerifyMode::adversarial())
                        .pass;
                h.check(adv == !predicted.count({i, j}),
                        std::string(name) + ": scan/verify verdicts differ on a pair");
            }
        }
    }
}

void criterion_8(Harness& h) {
    const BinaryMatrix pg4 = projective_plane(4);
    const ThreeErrorScan scan = three_error_structural_scan(column_blocks(pg4));
    h.check(!scan.pass, "pg4: structural scan reports a failure");
    h.check(scan.witness.has_value() && scan.witness->block_indices.size() == 4,
            "pg4: four-block witness");
    const VerifyReport r = verify_exhaustive(pg4, 3, VerifyMode::adversarial());
    h.check(!r.pass(), "pg4: adversarial verification fails at t=3");
    h.check(scan.pass == r.pass(), "pg4: verdict equivalence");
}

void criterion_9(Harness& h) {
    const auto [fig, error] = fig1_instance();
    DecoderConfig config;
    config.tie_break = TieBreak::forced_first(4);
    const DecodeResult r = decode(fig, syndrome(fig, error), config);
    h.check(r.status == DecodeStatus::Success, "fig1: forced-first decode succeeds");
    std::vector<std::size_t> weights = {r.initial_syndrome_weight};
    for (const auto& step : r.trace) weights.push_back(step.syndrome_after);
    h.check(weights == std::vector<std::size_t>{12, 11, 10, 9, 8, 5, 0},
            "fig1: syndrome weight sequence 12,11,10,9,8,5,0");

    const ExploreOutcome exi =
        explore_runs(fig, BitVec::from_indices(fig.n(), error), VerifyMode::existential());
    h.check(exi.pass, "fig1: existential verification of the 4-error pattern");
    h.check(error.size() > fig.block_size / 2,
            "fig1: the pattern weight exceeds the floor(c/2) guarantee");
}

void criterion_10(Harness& h) {
    std::mt19937 rng(20240915);
    int instances = 0;
    while (instances < 200) {
        const std::size_t c = (instances % 2) ? 5 : 3;
        const std::size_t n = 4 + rng() % 17;  // 4..20
        const std::size_t r = c + 2 + rng() % (19 - c);
        BinaryMatrix m(r, n);
        for (std::size_t i = 0; i < n; ++i) {
            BitVec col(r);
            while (col.count() < c) col.set(rng() % r);
            for (auto j : col.indices()) m.set(j, i);
        }
        ++instances;
        const BlockSystem bs = column_blocks(m);

        // minimum union sizes for t = 1..cap
        const std::size_t cap = std::min<std::size_t>(n, 8);
        std::vector<std::size_t> mu(cap + 1, 0);
        for (std::size_t t = 1; t <= cap; ++t) mu[t] = min_union_size(bs, t).size;

        // largest d with the c/2 expansion property
        std::size_t d_half = 0;
        while (d_half < cap && 2 * mu[d_half + 1] > c * (d_half + 1)) ++d_half;
        if (d_half >= 1) {
            h.check(expansion_check(bs, d_half, Rational(std::int64_t(c), 2)).ok,
                    "expansion_check disagrees with the min-union sweep (c/2)");
            const std::size_t k = n - rank(m);
            if (k > 0) {
                h.check(min_distance(m) > d_half,
                        "a (c, d, c/2)-expander with minimum distance <= d");
            }
        }

        // largest d with the 3c/4 expansion property
        std::size_t d_corr = 0;
        while (d_corr < cap && 4 * mu[d_corr + 1] > 3 * c * (d_corr + 1)) ++d_corr;
        if (d_corr >= 2) {
            h.check(expansion_check(bs, d_corr, Rational(3 * std::int64_t(c), 4)).ok,
                    "expansion_check disagrees with the min-union sweep (3c/4)");
            const VerifyReport rep =
                verify_exhaustive(m, d_corr / 2, VerifyMode::adversarial());
            h.check(rep.pass(), "a (c, d, 3c/4)-expander failing at floor(d/2) errors");
        }
    }
    h.check(instances >= 200, "sample size");
}

void criterion_11(Harness& h) {
    sweep_decodes(h, projective_plane(4), 2, "pg4 t<=2");
    sweep_decodes(h, euclidean_punctured(4), 2, "eg4 t<=2");
    sweep_decodes(h, simplex_weight3_matrix(4), 3, "simplex-w3 t<=3");
    sweep_decodes(h, simplex_circulant(4), 3, "simplex-circulant t<=3");
    sweep_decodes(h, hamming_circulant(3), 1, "hamming-circulant m=3 t=1");
    sweep_decodes(h, hamming_circulant(4), 1, "hamming-circulant m=4 t=1");
    sweep_decodes(h, projective_plane(2), 2, "fano t<=2");

    const auto [fig, error] = fig1_instance();
    for (const TieBreak& tb : {TieBreak::lowest(), TieBreak::forced_first(4)}) {
        DecoderConfig config;
        config.tie_break = tb;
        const DecodeResult r = decode(fig, syndrome(fig, error), config);
        h.check(trace_strictly_decreasing(r), "fig1: non-monotone trace");
    }

    std::mt19937 rng(321);
    for (int round = 0; round < 200; ++round) {
        const std::size_t c = (round % 2) ? 5 : 3;
        const std::size_t n = 4 + rng() % 17;
        const std::size_t r = c + 2 + rng() % (19 - c);
        BinaryMatrix m(r, n);
        for (std::size_t i = 0; i < n; ++i) {
            BitVec col(r);
            while (col.count() < c) col.set(rng() % r);
            for (auto j : col.indices()) m.set(j, i);
        }
        const BlockSystem bs = column_blocks(m);
        BitVec e(n);
        for (std::size_t w = 0; w < 1 + rng() % 3; ++w) e.set(rng() % n);
        const DecodeResult res = decode(bs, syndrome(bs, e), DecoderConfig{});
        h.check(trace_strictly_decreasing(res), "random instance: non-monotone trace");
    }
}

void criterion_12(Harness& h) {
    struct Job {
        const char* name;
        BinaryMatrix m;
        const char* t;
    };
    const std::vector<Job> jobs = {
        {"pg4-t2", projective_plane(4), "2"},       {"eg4-t2", euclidean_punctured(4), "2"},
        {"w3-t3", simplex_weight3_matrix(4), "3"},  {"fano-t2", projective_plane(2), "2"},
        {"circ-t3", simplex_circulant(4), "3"},
    };
    for (const auto& job : jobs) {
        const std::string path = std::string("/tmp/bitflip_acceptance_") + job.name + ".alist";
        write_alist_file(path, job.m);
        std::string outputs[2];
        int codes[2];
        const char* workers[2] = {"1", "8"};
        for (int v = 0; v < 2; ++v) {
            std::ostringstream out, err;
            codes[v] = run({"verify", path, "--t", job.t, "--mode", "adversarial", "--jobs",
                            workers[v]},
                           out, err);
            outputs[v] = out.str();
        }
        h.check(codes[0] == codes[1], std::string(job.name) + ": exit codes differ");
        h.check(outputs[0] == outputs[1],
                std::string(job.name) + ": reports differ between --jobs 1 and --jobs 8");
        h.check(!outputs[0].empty(), std::string(job.name) + ": empty report");
        std::remove(path.c_str());
    }
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    void (*fn)(Harness&);
};

const std::vector<Criterion> kCriteria = {
    {1, "construction parameters [21,11,6], [15,7,5], [7,3,4]", 1.0, criterion_1},
    {2, "two-error certificates for pg q=4 and eg q=4", 10.0, criterion_2},
    {3, "three-error certificate for simplex-w3 m=4", 10.0, criterion_3},
    {4, "simplex-circulant m=4 fails at t=3", 10.0, criterion_4},
    {5, "hamming-circulant m=3,4 certificates at t=1", 1.0, criterion_5},
    {6, "spectral values and distance bounds for q=2,3,4", 5.0, criterion_6},
    {7, "two-error scan equals adversarial verification", 30.0, criterion_7},
    {8, "four-block criterion matches verification at t=3", 60.0, criterion_8},
    {9, "figure-instance decode and existential verification", 1.0, criterion_9},
    {10, "expander implications on 200 random instances", 300.0, criterion_10},
    {11, "strictly decreasing syndrome weights everywhere", 60.0, criterion_11},
    {12, "byte-identical reports for --jobs 1 and --jobs 8", 60.0, criterion_12},
};

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    if (argc > 1) selected = std::atoi(argv[1]);

    int failed = 0;
    for (const auto& crit : kCriteria) {
        if (selected && crit.id != selected) continue;
        Harness h;
        const auto start = std::chrono::steady_clock::now();
        try {
            crit.fn(h);
        } catch (const std::exception& e) {
            h.check(false, std::string("exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed >= crit.budget_seconds)
            h.check(false, "time budget exceeded: " + std::to_string(elapsed) + " s vs " +
                               std::to_string(crit.budget_seconds) + " s");
        const bool pass = h.failures == 0;
        std::printf("%s criterion %2d: %s (%.2f s)\n", pass ? "PASS" : "FAIL", crit.id,
                    crit.title, elapsed);
        if (!pass) ++failed;
    }
    if (!selected) {
        std::printf("%s: %d/%zu criteria passed\n", failed ? "FAILURE" : "SUCCESS",
                    int(kCriteria.size()) - failed, kCriteria.size());
    }
    return failed ? 1 : 0;
}
