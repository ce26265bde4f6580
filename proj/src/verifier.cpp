#include "bitflip/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <unordered_map>

namespace bitflip {

std::string to_string(VerifyMode::Kind k) {
    switch (k) {
        case VerifyMode::Kind::Fixed: return "fixed";
        case VerifyMode::Kind::Adversarial: return "adversarial";
        case VerifyMode::Kind::Existential: return "existential";
    }
    return "?";
}

namespace {

struct StateKey {
    BitVec syndrome;
    BitVec estimate;
    bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const {
        return k.syndrome.hash() * 1000003u ^ k.estimate.hash();
    }
};

// Depth-first search over every argmax choice of the step-by-step decoder.
// Each flip strictly decreases the syndrome weight, so the tree is finite.
// In adversarial mode the memo holds states whose whole subtree succeeds (a
// failure short-circuits the search); in existential mode it holds states
// with no succeeding leaf.
class Explorer {
  public:
    Explorer(const BlockSystem& bs, const BitVec& target, bool adversarial)
        : bs_(bs), target_(target), adversarial_(adversarial) {}

    ExploreOutcome run(const SyndromeSet& s0) {
        SyndromeSet s = s0;
        BitVec est(bs_.n());
        ExploreOutcome out;
        out.pass = dfs(s, est);
        out.witness = std::move(witness_);
        return out;
    }

  private:
    bool dfs(SyndromeSet& s, BitVec& est) {
        const std::vector<std::size_t> u = unsat_counts(bs_, s);
        std::size_t max_u = 0;
        for (auto v : u) max_u = std::max(max_u, v);

        if (2 * max_u <= bs_.block_size) {
            const bool good = s.none() && est == target_;
            if (good != adversarial_) witness_ = path_;  // the distinguished leaf per mode
            return good;
        }

        const StateKey key{s, est};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        for (std::size_t i = 0; i < bs_.n(); ++i) {
            if (u[i] != max_u) continue;
            s ^= bs_.blocks[i];
            est.flip(i);
            path_.push_back({{static_cast<std::uint32_t>(i)}, max_u, s.count()});
            const bool sub = dfs(s, est);
            path_.pop_back();
            est.flip(i);
            s ^= bs_.blocks[i];
            if (adversarial_ && !sub) return false;   // witness already captured
            if (!adversarial_ && sub) return true;
        }
        memo_.emplace(key, adversarial_);
        return adversarial_;
    }

    const BlockSystem& bs_;
    const BitVec& target_;
    bool adversarial_;
    std::unordered_map<StateKey, bool, StateKeyHash> memo_;
    std::vector<FlipStep> path_;
    std::vector<FlipStep> witness_;
};

}  // namespace

ExploreOutcome explore_runs(const BlockSystem& blocks, const BitVec& error_support,
                            const VerifyMode& mode) {
    const SyndromeSet s0 = syndrome(blocks, error_support);

    if (mode.kind == VerifyMode::Kind::Fixed) {
        DecodeResult r = decode(blocks, s0, mode.config);
        ExploreOutcome out;
        out.pass = r.status == DecodeStatus::Success && r.estimated_error == error_support;
        if (!out.pass) out.witness = std::move(r.trace);
        return out;
    }

    Explorer ex(blocks, error_support, mode.kind == VerifyMode::Kind::Adversarial);
    ExploreOutcome out = ex.run(s0);
    if (mode.kind == VerifyMode::Kind::Existential && !out.pass) {
        // No succeeding run exists; report the lowest-index run as the witness.
        out.witness = decode(blocks, s0, DecoderConfig{}).trace;
    }
    return out;
}

namespace {

std::vector<std::uint32_t> unrank_combination(std::size_t n, std::size_t w, std::uint64_t idx) {
    std::vector<std::uint32_t> c(w);
    std::uint32_t x = 0;
    for (std::size_t pos = 0; pos < w; ++pos) {
        for (;;) {
            const std::uint64_t cnt = binomial(n - 1 - x, w - 1 - pos);
            if (idx < cnt) break;
            idx -= cnt;
            ++x;
        }
        c[pos] = x++;
    }
    return c;
}

bool next_combination(std::vector<std::uint32_t>& c, std::size_t n) {
    const std::size_t w = c.size();
    for (std::size_t i = w; i-- > 0;) {
        if (c[i] < n - w + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < w; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

VerifyReport verify_exhaustive(const BinaryMatrix& h, std::size_t t, const VerifyMode& mode,
                               std::uint64_t budget, unsigned jobs) {
    const auto start_time = std::chrono::steady_clock::now();
    const BlockSystem blocks = column_blocks(h);
    const std::size_t n = blocks.n();
    if (t > n) throw Error("verify_exhaustive: t exceeds the code length");

    std::uint64_t total = 0;
    std::vector<std::uint64_t> offset(t + 2, 0);  // offset[w] = linear index of first weight-w pattern
    for (std::size_t w = 1; w <= t; ++w) {
        offset[w] = total;
        total += binomial(n, w);
        if (total > budget)
            throw BudgetExceeded("verify_exhaustive: " + std::to_string(total) +
                                 "+ patterns exceed budget " + std::to_string(budget));
    }
    offset[t + 1] = total;

    VerifyReport report;
    report.t = t;
    report.mode = mode.kind;
    report.patterns_checked = total;

    jobs = std::max(1u, jobs);
    constexpr std::uint64_t kChunk = 256;
    std::atomic<std::uint64_t> next_chunk{0};
    std::vector<std::vector<PatternFailure>> found(jobs);

    auto worker = [&](unsigned id) {
        for (;;) {
            const std::uint64_t begin = next_chunk.fetch_add(kChunk);
            if (begin >= total) break;
            const std::uint64_t end = std::min(begin + kChunk, total);
            std::uint64_t idx = begin;
            while (idx < end) {
                // Weight class containing idx.
                std::size_t w = 1;
                while (offset[w + 1] <= idx) ++w;
                std::vector<std::uint32_t> combo = unrank_combination(n, w, idx - offset[w]);
                const std::uint64_t stop = std::min(end, offset[w + 1]);
                for (; idx < stop; ++idx) {
                    const BitVec support = BitVec::from_indices(n, combo);
                    ExploreOutcome out = explore_runs(blocks, support, mode);
                    if (!out.pass) found[id].push_back({combo, std::move(out.witness)});
                    next_combination(combo, n);
                }
            }
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
        for (auto& th : pool) th.join();
    }

    for (auto& part : found)
        for (auto& f : part) report.failures.push_back(std::move(f));
    std::sort(report.failures.begin(), report.failures.end(),
              [](const PatternFailure& a, const PatternFailure& b) {
                  if (a.error_support.size() != b.error_support.size())
                      return a.error_support.size() < b.error_support.size();
                  return a.error_support < b.error_support;
              });

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    return report;
}

std::vector<PairFailure> two_error_scan(const BlockSystem& blocks) {
    const std::size_t n = blocks.n();
    const std::size_t c = blocks.block_size;
    std::vector<PairFailure> failures;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::size_t s_ij = BitVec::and_count(blocks.blocks[i], blocks.blocks[j]);
            const BitVec both = blocks.blocks[i] & blocks.blocks[j];
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const std::size_t s_ik = BitVec::and_count(blocks.blocks[i], blocks.blocks[k]);
                const std::size_t s_jk = BitVec::and_count(blocks.blocks[j], blocks.blocks[k]);
                const std::size_t s_ijk = BitVec::and_count(both, blocks.blocks[k]);
                if (c - s_ij <= s_ik + s_jk - 2 * s_ijk) {
                    failures.push_back({static_cast<std::uint32_t>(i),
                                        static_cast<std::uint32_t>(j),
                                        static_cast<std::uint32_t>(k)});
                    break;
                }
            }
        }
    }
    return failures;
}

ThreeErrorScan three_error_structural_scan(const BlockSystem& blocks) {
    if (blocks.block_size != 5)
        throw Error("three_error_structural_scan: requires block size 5");
    ThreeErrorScan out;
    if (blocks.n() < 4) {
        if (max_pairwise_intersection(blocks) > 1)
            throw Error("find_configuration: not a partial geometry");
        out.pass = true;
        return out;
    }
    out.witness = find_configuration(blocks, 4);  // throws if not a partial geometry
    out.pass = !out.witness.has_value();
    return out;
}

Certificate certify_pseudoredundancy(const BinaryMatrix& h_reference,
                                     const BinaryMatrix& h_candidate, std::uint64_t budget,
                                     unsigned jobs, std::map<std::string, std::string> metadata) {
    if (h_reference.cols() != h_candidate.cols())
        throw Error("certify_pseudoredundancy: column counts differ");

    Certificate cert;
    cert.code_digest = matrix_digest(h_reference);
    cert.candidate_digest = matrix_digest(h_candidate);
    cert.rows = h_candidate.rows();
    cert.cols = h_candidate.cols();
    cert.metadata = std::move(metadata);

    try {
        cert.column_weight = column_blocks(h_candidate).block_size;
    } catch (const NotLeftRegular& e) {
        cert.failed_clause = "left_regular";
        cert.failure_detail = e.what();
        return cert;
    }

    if (!same_code(h_reference, h_candidate)) {
        cert.failed_clause = "same_code";
        cert.failure_detail = "candidate null space differs from the reference code";
        return cert;
    }

    try {
        cert.d_min = min_distance(h_reference);
    } catch (const Error& e) {
        cert.failed_clause = "min_distance";
        cert.failure_detail = e.what();
        return cert;
    }
    cert.t_target = (cert.d_min - 1) / 2;

    if (cert.t_target > 0) {
        const VerifyReport report =
            verify_exhaustive(h_candidate, cert.t_target, VerifyMode::adversarial(), budget, jobs);
        cert.patterns_checked = report.patterns_checked;
        if (!report.pass()) {
            cert.failed_clause = "adversarial_verify";
            cert.failure_detail = std::to_string(report.failures.size()) +
                                  " error pattern(s) not corrected under every tie break";
            return cert;
        }
    }

    cert.pass = true;
    cert.upper_bound = cert.rows;
    return cert;
}

}  // namespace bitflip
