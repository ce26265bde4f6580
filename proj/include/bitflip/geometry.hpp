#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bitflip/gf2.hpp"

namespace bitflip {

// Exact rational with normalized sign and gcd; all threshold comparisons in
// the expansion checks are integer cross-multiplications.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den == 0) throw Error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    static Rational parse(const std::string& text);

    double to_double() const { return double(num) / double(den); }
    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    bool operator==(const Rational&) const = default;
};

// k blocks that pairwise intersect in k-choose-2 distinct points. The
// intersection_points list follows the (i < j) pair order of block_indices.
struct ConfigurationWitness {
    std::vector<std::uint32_t> block_indices;
    std::vector<std::uint32_t> intersection_points;
};

// Largest pairwise block intersection; 0 for pairwise-disjoint systems.
std::size_t max_pairwise_intersection(const BlockSystem& blocks);

// Exhaustive search (with clique pruning, lexicographic order) for k blocks
// pairwise intersecting in distinct points. Requires a partial geometry
// (pairwise intersections of size at most 1).
std::optional<ConfigurationWitness> find_configuration(const BlockSystem& blocks, std::size_t k);

struct MinUnion {
    std::size_t size = 0;
    std::vector<std::uint32_t> blocks;  // a minimizing t-subset
};

constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Minimum size of the union of t blocks, over all t-subsets. Throws
// BudgetExceeded when C(n, t) exceeds the budget.
MinUnion min_union_size(const BlockSystem& blocks, std::size_t t,
                        std::uint64_t budget = kDefaultEnumerationBudget);

struct ExpansionResult {
    bool ok = false;
    std::size_t failing_t = 0;  // first t with min union <= alpha * t (when !ok)
    MinUnion witness;           // minimizing subset at failing_t
};

// True iff every 1 <= t <= t_max has min_union_size(t) > alpha * t.
ExpansionResult expansion_check(const BlockSystem& blocks, std::size_t t_max, const Rational& alpha,
                                std::uint64_t budget = kDefaultEnumerationBudget);

// Histogram of |union| over all t-subsets (same budget rules); used for
// reporting how far unions spread above the counting bound.
std::vector<std::pair<std::size_t, std::uint64_t>> union_size_histogram(
    const BlockSystem& blocks, std::size_t t, std::uint64_t budget = kDefaultEnumerationBudget);

// Lower bound 1 + c/s on the minimum pseudoweights of a code whose blocks have
// size c and pairwise intersections at most s.
Rational design_pseudoweight_bound(std::size_t c, std::size_t s);

// C(n, k) saturating at 2^63-1.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace bitflip
