#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bitflip/decoder.hpp"
#include "bitflip/geometry.hpp"
#include "bitflip/gf2.hpp"

namespace bitflip {

// Fixed runs one configured decoder. Adversarial demands success under every
// tie-breaking choice of the step-by-step decoder, existential under some
// choice; both explore the full choice tree.
struct VerifyMode {
    enum class Kind { Fixed, Adversarial, Existential };
    Kind kind = Kind::Adversarial;
    DecoderConfig config;  // used by Fixed only

    static VerifyMode fixed(const DecoderConfig& cfg) { return {Kind::Fixed, cfg}; }
    static VerifyMode adversarial() { return {Kind::Adversarial, {}}; }
    static VerifyMode existential() { return {Kind::Existential, {}}; }
};

std::string to_string(VerifyMode::Kind k);

// A pattern passes when a run ends with an empty syndrome and an estimate
// equal to the true error support. The witness is a failing run after an
// adversarial fail, a successful run after an existential pass, and the
// lowest-index run after an existential fail.
struct ExploreOutcome {
    bool pass = false;
    std::vector<FlipStep> witness;
};

ExploreOutcome explore_runs(const BlockSystem& blocks, const BitVec& error_support,
                            const VerifyMode& mode);

struct PatternFailure {
    std::vector<std::uint32_t> error_support;
    std::vector<FlipStep> witness;
};

struct VerifyReport {
    std::size_t t = 0;
    std::uint64_t patterns_checked = 0;
    std::vector<PatternFailure> failures;  // sorted by error support
    VerifyMode::Kind mode = VerifyMode::Kind::Adversarial;
    double elapsed_seconds = 0;  // informational; kept out of serialized reports

    bool pass() const { return failures.empty(); }
};

// Runs every error support of weight 1..t against the zero codeword (the
// decoder consumes only the syndrome, so this loses no generality). Patterns
// are partitioned across jobs workers; failures are merged into sorted order,
// so the report is identical for any jobs value.
VerifyReport verify_exhaustive(const BinaryMatrix& h, std::size_t t, const VerifyMode& mode,
                               std::uint64_t budget = kDefaultEnumerationBudget,
                               unsigned jobs = 1);

// Closed-form scan for two-error failures: the pair {i, j} fails exactly when
// some third block k has |B_i∩B_k| + |B_j∩B_k| - 2|B_i∩B_j∩B_k| >= c - |B_i∩B_j|
// (a tie lets an adversarial run flip the wrong block).
struct PairFailure {
    std::uint32_t i = 0, j = 0;
    std::uint32_t witness_block = 0;  // a third block causing the failure
};

std::vector<PairFailure> two_error_scan(const BlockSystem& blocks);

// For partial geometries with block size 5, three errors are corrected exactly
// when no four blocks pairwise intersect in distinct points.
struct ThreeErrorScan {
    bool pass = false;
    std::optional<ConfigurationWitness> witness;  // a four-block configuration when found
};

ThreeErrorScan three_error_structural_scan(const BlockSystem& blocks);

// Machine-checkable record asserting that the candidate matrix is a
// left-regular parity-check matrix for the reference code under which
// adversarial bit-flipping corrects floor((d_min - 1)/2) errors; a pass
// certifies that many rows suffice.
struct Certificate {
    std::string code_digest;       // reference matrix
    std::string candidate_digest;  // candidate matrix
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t column_weight = 0;  // 0 when the candidate is irregular
    std::size_t d_min = 0;          // 0 when unavailable
    std::size_t t_target = 0;
    std::string mode = "adversarial";
    bool pass = false;
    std::string failed_clause;  // left_regular | same_code | min_distance | adversarial_verify
    std::string failure_detail;
    std::uint64_t patterns_checked = 0;
    std::size_t upper_bound = 0;  // = rows when the certificate passes
    std::map<std::string, std::string> metadata;
};

Certificate certify_pseudoredundancy(const BinaryMatrix& h_reference,
                                     const BinaryMatrix& h_candidate,
                                     std::uint64_t budget = kDefaultEnumerationBudget,
                                     unsigned jobs = 1,
                                     std::map<std::string, std::string> metadata = {});

}  // namespace bitflip
