#include "bitflip/decoder.hpp"

#include <random>
#include <unordered_set>

namespace bitflip {

std::string to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::Success: return "success";
        case DecodeStatus::Stall: return "stall";
        case DecodeStatus::IterationCap: return "iteration_cap";
    }
    return "?";
}

std::string to_string(Variant v) {
    return v == Variant::StepByStep ? "step_by_step" : "parallel";
}

std::vector<std::size_t> unsat_counts(const BlockSystem& blocks, const SyndromeSet& s) {
    std::vector<std::size_t> u(blocks.n());
    for (std::size_t i = 0; i < blocks.n(); ++i) u[i] = BitVec::and_count(blocks.blocks[i], s);
    return u;
}

DecodeResult decode(const BlockSystem& blocks, const SyndromeSet& s0,
                    const DecoderConfig& config) {
    const std::size_t c = blocks.block_size;
    const std::size_t n = blocks.n();

    DecodeResult res;
    res.estimated_error = BitVec(n);
    res.initial_syndrome_weight = s0.count();

    SyndromeSet s = s0;
    const std::size_t max_iter = config.max_iterations.value_or(
        config.variant == Variant::StepByStep ? std::max<std::size_t>(res.initial_syndrome_weight, 1)
                                              : std::max<std::size_t>(n, 1));

    std::mt19937_64 rng(config.tie_break.seed);
    std::unordered_set<BitVec, BitVecHash> seen;
    if (config.variant == Variant::Parallel) seen.insert(s);

    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        const std::vector<std::size_t> u = unsat_counts(blocks, s);
        std::size_t max_u = 0;
        for (auto v : u) max_u = std::max(max_u, v);

        // Stop rule: all u_i <= c/2.
        if (2 * max_u <= c) {
            res.status = s.none() ? DecodeStatus::Success : DecodeStatus::Stall;
            res.iterations = iter;
            return res;
        }

        if (config.variant == Variant::StepByStep) {
            std::size_t pick = n;
            if (iter == 0 && config.tie_break.kind == TieBreak::Kind::ForcedFirst) {
                const std::uint32_t f = config.tie_break.forced_index;
                if (f < n && 2 * u[f] > c) pick = f;
            }
            if (pick == n) {
                std::vector<std::size_t> argmax;
                for (std::size_t i = 0; i < n; ++i)
                    if (u[i] == max_u) argmax.push_back(i);
                if (config.tie_break.kind == TieBreak::Kind::SeededRandom && argmax.size() > 1) {
                    std::uniform_int_distribution<std::size_t> dist(0, argmax.size() - 1);
                    pick = argmax[dist(rng)];
                } else {
                    pick = argmax.front();
                }
            }
            const std::size_t u_pick = u[pick];
            s ^= blocks.blocks[pick];
            res.estimated_error.flip(pick);
            res.trace.push_back({{static_cast<std::uint32_t>(pick)}, u_pick, s.count()});
        } else {
            std::vector<std::uint32_t> flips;
            BitVec delta(blocks.universe);
            for (std::size_t i = 0; i < n; ++i) {
                if (u[i] == max_u) {
                    flips.push_back(static_cast<std::uint32_t>(i));
                    delta ^= blocks.blocks[i];
                    res.estimated_error.flip(i);
                }
            }
            s ^= delta;
            res.trace.push_back({std::move(flips), max_u, s.count()});
            if (!seen.insert(s).second) {
                res.status = DecodeStatus::Stall;
                res.iterations = iter + 1;
                return res;
            }
        }
    }

    // One more stop-rule evaluation so a final flip that clears the syndrome
    // still counts as success.
    const std::vector<std::size_t> u = unsat_counts(blocks, s);
    std::size_t max_u = 0;
    for (auto v : u) max_u = std::max(max_u, v);
    if (2 * max_u <= c) {
        res.status = s.none() ? DecodeStatus::Success : DecodeStatus::Stall;
    } else {
        res.status = DecodeStatus::IterationCap;
    }
    res.iterations = max_iter;
    return res;
}

}  // namespace bitflip
