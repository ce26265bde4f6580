#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bitflip/bitvec.hpp"
#include "bitflip/errors.hpp"

namespace bitflip {

// Dense bit matrix over GF(2), stored as word-packed rows.
class BinaryMatrix {
  public:
    BinaryMatrix() = default;

    BinaryMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_(rows, BitVec(cols)) {
        if (cols == 0) throw Error("BinaryMatrix: need at least one column");
    }

    static BinaryMatrix identity(std::size_t n) {
        BinaryMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.row_[i].set(i);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t j, std::size_t i) const { return row_[j].test(i); }
    void set(std::size_t j, std::size_t i, bool v = true) { row_[j].set(i, v); }

    const BitVec& row(std::size_t j) const { return row_[j]; }
    BitVec& row(std::size_t j) { return row_[j]; }

    BitVec column(std::size_t i) const {
        BitVec c(rows_);
        for (std::size_t j = 0; j < rows_; ++j)
            if (row_[j].test(i)) c.set(j);
        return c;
    }

    std::size_t column_weight(std::size_t i) const {
        std::size_t w = 0;
        for (std::size_t j = 0; j < rows_; ++j) w += row_[j].test(i);
        return w;
    }

    bool operator==(const BinaryMatrix& o) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> row_;
};

// Column view of a left-regular parity-check matrix: one size-c subset of the
// check-index universe per code position.
struct BlockSystem {
    std::size_t universe = 0;    // number of check indices
    std::size_t block_size = 0;  // common block size c
    std::vector<BitVec> blocks;  // blocks[i] over {0..universe-1}

    std::size_t n() const { return blocks.size(); }
};

// A syndrome is a subset of the check-index universe.
using SyndromeSet = BitVec;

struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> d_min;
};

// GF(2) row rank.
std::size_t rank(const BinaryMatrix& m);

// Length and dimension, plus the minimum distance when requested (and the
// code is neither trivial nor beyond the enumeration cap).
CodeParams code_parameters(const BinaryMatrix& h, bool with_min_distance = false,
                           std::size_t cap = 28);

// Basis of the null space of H, one codeword per row (n - rank(H) rows; a
// zero-row matrix when the code is trivial).
BinaryMatrix nullspace_basis(const BinaryMatrix& h);

// Minimum Hamming weight over all nonzero codewords, enumerated from the
// nullspace basis in Gray-code order (one row XOR per codeword). Requires
// 1 <= k <= cap.
std::size_t min_distance(const BinaryMatrix& h, std::size_t cap = 28);

// Symmetric difference of the blocks selected by error_support.
SyndromeSet syndrome(const BlockSystem& blocks, const std::vector<std::uint32_t>& error_support);
SyndromeSet syndrome(const BlockSystem& blocks, const BitVec& error_support);

// Column view of H. Throws NotLeftRegular (with a weight histogram) when the
// column weights are not constant.
BlockSystem column_blocks(const BinaryMatrix& h);

// Matrix with column i equal to blocks[i]; inverse of column_blocks.
BinaryMatrix to_matrix(const BlockSystem& blocks);

// True iff H1 and H2 have the same null space, decided by three rank
// computations (rank H1 = rank H2 = rank of the stacked matrix).
bool same_code(const BinaryMatrix& h1, const BinaryMatrix& h2);

// FNV-1a digest of the matrix contents, as a fixed-width hex string.
std::string matrix_digest(const BinaryMatrix& m);

}  // namespace bitflip
