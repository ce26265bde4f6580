#include "bitflip/geometry.hpp"

#include <algorithm>
#include <limits>

namespace bitflip {

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw Error("Rational: cannot parse '" + text + "'");
    }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    constexpr std::uint64_t cap = std::numeric_limits<std::int64_t>::max();
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (r > cap / (n - k + i)) return cap;
        r = r * (n - k + i) / i;
    }
    return r;
}

std::size_t max_pairwise_intersection(const BlockSystem& blocks) {
    if (blocks.n() < 2) throw Error("max_pairwise_intersection: need at least two blocks");
    std::size_t best = 0;
    for (std::size_t i = 0; i < blocks.n(); ++i)
        for (std::size_t j = i + 1; j < blocks.n(); ++j)
            best = std::max(best, BitVec::and_count(blocks.blocks[i], blocks.blocks[j]));
    return best;
}

namespace {

struct ConfigSearch {
    const BlockSystem& bs;
    std::size_t k;
    std::vector<std::uint32_t> chosen;
    std::vector<std::uint32_t> points;  // intersection points in (i < j) pair order
    BitVec used_points;

    explicit ConfigSearch(const BlockSystem& b, std::size_t kk)
        : bs(b), k(kk), used_points(b.universe) {}

    bool extend() {
        if (chosen.size() == k) return true;
        const std::uint32_t start = chosen.empty() ? 0 : chosen.back() + 1;
        for (std::uint32_t cand = start; cand < bs.n(); ++cand) {
            std::vector<std::uint32_t> fresh;
            bool ok = true;
            for (auto prev : chosen) {
                const BitVec both = bs.blocks[prev] & bs.blocks[cand];
                if (both.count() != 1) {
                    ok = false;
                    break;
                }
                const std::uint32_t pt = static_cast<std::uint32_t>(both.lowest_set());
                if (used_points.test(pt) ||
                    std::find(fresh.begin(), fresh.end(), pt) != fresh.end()) {
                    ok = false;
                    break;
                }
                fresh.push_back(pt);
            }
            if (!ok) continue;
            chosen.push_back(cand);
            for (auto pt : fresh) {
                used_points.set(pt);
                points.push_back(pt);
            }
            if (extend()) return true;
            chosen.pop_back();
            for (auto pt : fresh) used_points.set(pt, false);
            points.resize(points.size() - fresh.size());
        }
        return false;
    }
};

}  // namespace

std::optional<ConfigurationWitness> find_configuration(const BlockSystem& blocks, std::size_t k) {
    if (k < 2 || k > blocks.n()) throw Error("find_configuration: k out of range");
    if (max_pairwise_intersection(blocks) > 1)
        throw Error("find_configuration: not a partial geometry");

    ConfigSearch search(blocks, k);
    if (!search.extend()) return std::nullopt;
    return ConfigurationWitness{std::move(search.chosen), std::move(search.points)};
}

namespace {

// Depth-first walk over t-subsets with an incremental union stack.
void min_union_walk(const std::vector<BitVec>& blocks, std::size_t t, std::size_t first,
                    std::vector<std::uint32_t>& chosen, const BitVec& acc, MinUnion& best) {
    if (chosen.size() == t) {
        const std::size_t sz = acc.count();
        if (sz < best.size) {
            best.size = sz;
            best.blocks = chosen;
        }
        return;
    }
    const std::size_t remaining = t - chosen.size();
    for (std::size_t i = first; i + remaining <= blocks.size(); ++i) {
        chosen.push_back(static_cast<std::uint32_t>(i));
        min_union_walk(blocks, t, i + 1, chosen, acc | blocks[i], best);
        chosen.pop_back();
    }
}

}  // namespace

MinUnion min_union_size(const BlockSystem& blocks, std::size_t t, std::uint64_t budget) {
    if (t < 1 || t > blocks.n()) throw Error("min_union_size: t out of range");
    if (binomial(blocks.n(), t) > budget)
        throw BudgetExceeded(
            "min_union_size: C(" + std::to_string(blocks.n()) + ", " + std::to_string(t) +
            ") exceeds budget " + std::to_string(budget) +
            "; the counting bound c*t - C(t,2)*s still applies");

    MinUnion best;
    best.size = blocks.universe + 1;
    std::vector<std::uint32_t> chosen;
    min_union_walk(blocks.blocks, t, 0, chosen, BitVec(blocks.universe), best);
    return best;
}

ExpansionResult expansion_check(const BlockSystem& blocks, std::size_t t_max,
                                const Rational& alpha, std::uint64_t budget) {
    ExpansionResult res;
    for (std::size_t t = 1; t <= t_max; ++t) {
        MinUnion mu = min_union_size(blocks, t, budget);
        // union > alpha * t, compared exactly
        if (static_cast<std::int64_t>(mu.size) * alpha.den <=
            alpha.num * static_cast<std::int64_t>(t)) {
            res.ok = false;
            res.failing_t = t;
            res.witness = std::move(mu);
            return res;
        }
    }
    res.ok = true;
    return res;
}

namespace {

void histogram_walk(const std::vector<BitVec>& blocks, std::size_t t, std::size_t first,
                    std::size_t depth, const BitVec& acc, std::vector<std::uint64_t>& counts) {
    if (depth == t) {
        counts[acc.count()]++;
        return;
    }
    const std::size_t remaining = t - depth;
    for (std::size_t i = first; i + remaining <= blocks.size(); ++i)
        histogram_walk(blocks, t, i + 1, depth + 1, acc | blocks[i], counts);
}

}  // namespace

std::vector<std::pair<std::size_t, std::uint64_t>> union_size_histogram(const BlockSystem& blocks,
                                                                        std::size_t t,
                                                                        std::uint64_t budget) {
    if (t < 1 || t > blocks.n()) throw Error("union_size_histogram: t out of range");
    if (binomial(blocks.n(), t) > budget)
        throw BudgetExceeded("union_size_histogram: enumeration exceeds budget");
    std::vector<std::uint64_t> counts(blocks.universe + 1, 0);
    histogram_walk(blocks.blocks, t, 0, 0, BitVec(blocks.universe), counts);
    std::vector<std::pair<std::size_t, std::uint64_t>> out;
    for (std::size_t s = 0; s < counts.size(); ++s)
        if (counts[s]) out.emplace_back(s, counts[s]);
    return out;
}

Rational design_pseudoweight_bound(std::size_t c, std::size_t s) {
    if (c < 1 || s < 1) throw Error("design_pseudoweight_bound: c and s must be >= 1");
    return Rational(static_cast<std::int64_t>(s + c), static_cast<std::int64_t>(s));
}

}  // namespace bitflip
