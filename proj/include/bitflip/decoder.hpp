#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bitflip/gf2.hpp"

namespace bitflip {

enum class Variant { StepByStep, Parallel };

// How ties among the positions with the largest unsatisfied count are
// resolved in the step-by-step variant. ForcedFirst applies to the first
// iteration only (and only when the forced position clears the c/2 threshold,
// so the syndrome weight still shrinks); later iterations fall back to
// LowestIndex.
struct TieBreak {
    enum class Kind { LowestIndex, SeededRandom, ForcedFirst } kind = Kind::LowestIndex;
    std::uint64_t seed = 0;
    std::uint32_t forced_index = 0;

    static TieBreak lowest() { return {}; }
    static TieBreak seeded(std::uint64_t s) { return {Kind::SeededRandom, s, 0}; }
    static TieBreak forced_first(std::uint32_t i) { return {Kind::ForcedFirst, 0, i}; }
};

struct DecoderConfig {
    Variant variant = Variant::StepByStep;
    TieBreak tie_break = TieBreak::lowest();
    // Defaults to |S0| for step-by-step and n for parallel when unset.
    std::optional<std::size_t> max_iterations;
};

enum class DecodeStatus { Success, Stall, IterationCap };

std::string to_string(DecodeStatus s);
std::string to_string(Variant v);

struct FlipStep {
    std::vector<std::uint32_t> flipped;  // one index per step, several in parallel mode
    std::size_t unsat_before = 0;        // u of the flipped position(s)
    std::size_t syndrome_after = 0;      // |S| after the flip
};

struct DecodeResult {
    DecodeStatus status = DecodeStatus::Stall;
    BitVec estimated_error;  // toggle set over the n positions
    std::vector<FlipStep> trace;
    std::size_t initial_syndrome_weight = 0;
    std::size_t iterations = 0;
};

// u_i = |B_i ∩ S| for every block.
std::vector<std::size_t> unsat_counts(const BlockSystem& blocks, const SyndromeSet& s);

// Bit-flipping over the block-system view: repeatedly flip (an) index with the
// largest unsatisfied count while that count exceeds c/2, tracking the
// estimated error as a toggle set. Terminates with Success (empty syndrome),
// Stall (threshold reached with nonempty syndrome, or a repeated syndrome in
// parallel mode), or IterationCap.
DecodeResult decode(const BlockSystem& blocks, const SyndromeSet& s0, const DecoderConfig& config);

}  // namespace bitflip
