#include "bitflip/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

namespace bitflip {

namespace {

// Row echelon reduction in place; returns the pivot column of each reduced row.
std::vector<std::size_t> eliminate(std::vector<BitVec>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < cols && next < rows.size(); ++col) {
        std::size_t pivot = next;
        while (pivot < rows.size() && !rows[pivot].test(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[next], rows[pivot]);
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (j != next && rows[j].test(col)) rows[j] ^= rows[next];
        pivots.push_back(col);
        ++next;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const BinaryMatrix& m) {
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t j = 0; j < m.rows(); ++j) rows.push_back(m.row(j));
    return eliminate(rows, m.cols()).size();
}

CodeParams code_parameters(const BinaryMatrix& h, bool with_min_distance, std::size_t cap) {
    CodeParams p;
    p.n = h.cols();
    p.k = h.cols() - rank(h);
    if (with_min_distance && p.k >= 1 && p.k <= cap) p.d_min = min_distance(h, cap);
    return p;
}

BinaryMatrix nullspace_basis(const BinaryMatrix& h) {
    const std::size_t n = h.cols();
    std::vector<BitVec> rows;
    rows.reserve(h.rows());
    for (std::size_t j = 0; j < h.rows(); ++j) rows.push_back(h.row(j));
    const std::vector<std::size_t> pivots = eliminate(rows, n);

    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;

    BinaryMatrix basis(0, 1);
    {
        const std::size_t k = n - pivots.size();
        basis = BinaryMatrix(k, n);
        std::size_t out = 0;
        for (std::size_t free_col = 0; free_col < n; ++free_col) {
            if (is_pivot[free_col]) continue;
            BitVec& g = basis.row(out++);
            g.set(free_col);
            for (std::size_t r = 0; r < pivots.size(); ++r)
                if (rows[r].test(free_col)) g.set(pivots[r]);
        }
    }
    return basis;
}

std::size_t min_distance(const BinaryMatrix& h, std::size_t cap) {
    const BinaryMatrix gen = nullspace_basis(h);
    const std::size_t k = gen.rows();
    if (k == 0) throw Error("min_distance: trivial code (dimension 0)");
    if (k > cap) throw Error("min_distance: instance too large (k = " + std::to_string(k) +
                             " exceeds enumeration cap " + std::to_string(cap) + ")");

    // Gray-code walk: codeword i and i+1 differ by one basis row.
    BitVec current(h.cols());
    std::size_t best = h.cols() + 1;
    const std::uint64_t total = std::uint64_t(1) << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        current ^= gen.row(static_cast<std::size_t>(std::countr_zero(i)));
        best = std::min(best, current.count());
        if (best == 1) break;
    }
    return best;
}

SyndromeSet syndrome(const BlockSystem& blocks, const std::vector<std::uint32_t>& error_support) {
    SyndromeSet s(blocks.universe);
    for (auto i : error_support) {
        if (i >= blocks.n()) throw Error("syndrome: column index out of range");
        s ^= blocks.blocks[i];
    }
    return s;
}

SyndromeSet syndrome(const BlockSystem& blocks, const BitVec& error_support) {
    return syndrome(blocks, error_support.indices());
}

BlockSystem column_blocks(const BinaryMatrix& h) {
    BlockSystem bs;
    bs.universe = h.rows();
    bs.blocks.assign(h.cols(), BitVec(h.rows()));
    for (std::size_t j = 0; j < h.rows(); ++j) {
        for (std::uint32_t i : h.row(j).indices()) bs.blocks[i].set(j);
    }

    std::map<std::uint32_t, std::uint32_t> hist;
    for (const auto& b : bs.blocks) hist[static_cast<std::uint32_t>(b.count())]++;
    if (hist.size() != 1) {
        std::string msg = "not left-regular: column weight histogram {";
        bool first = true;
        for (auto [w, cnt] : hist) {
            if (!first) msg += ", ";
            msg += std::to_string(w) + ": " + std::to_string(cnt);
            first = false;
        }
        msg += "}";
        throw NotLeftRegular(msg, hist);
    }
    bs.block_size = hist.begin()->first;
    return bs;
}

BinaryMatrix to_matrix(const BlockSystem& blocks) {
    BinaryMatrix m(blocks.universe, blocks.n());
    for (std::size_t i = 0; i < blocks.n(); ++i)
        for (std::uint32_t j : blocks.blocks[i].indices()) m.set(j, i);
    return m;
}

bool same_code(const BinaryMatrix& h1, const BinaryMatrix& h2) {
    if (h1.cols() != h2.cols()) throw Error("same_code: column counts differ");
    std::vector<BitVec> stacked;
    stacked.reserve(h1.rows() + h2.rows());
    for (std::size_t j = 0; j < h1.rows(); ++j) stacked.push_back(h1.row(j));
    for (std::size_t j = 0; j < h2.rows(); ++j) stacked.push_back(h2.row(j));
    const std::size_t r1 = rank(h1);
    const std::size_t r2 = rank(h2);
    const std::size_t rs = eliminate(stacked, h1.cols()).size();
    return r1 == r2 && r2 == rs;
}

std::string matrix_digest(const BinaryMatrix& m) {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(m.rows());
    mix(m.cols());
    for (std::size_t j = 0; j < m.rows(); ++j)
        for (auto w : m.row(j).words()) mix(w);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace bitflip
