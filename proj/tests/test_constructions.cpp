#include "doctest.h"

#include <cstdint>
#include <set>
#include <vector>

#include "bitflip/constructions.hpp"
#include "bitflip/gf2.hpp"

using namespace bitflip;

namespace {

// long-division check for the circulant seed oracle
bool poly_divisible(std::uint64_t f, std::uint64_t g) {
    auto deg = [](std::uint64_t x) { return x ? 63 - __builtin_clzll(x) : -1; };
    while (f && deg(f) >= deg(g)) f ^= g << (deg(f) - deg(g));
    return f == 0;
}

void check_pairwise_column_intersections(const BinaryMatrix& h, std::size_t expected,
                                         bool exact) {
    const BlockSystem bs = column_blocks(h);
    for (std::size_t i = 0; i < bs.n(); ++i) {
        for (std::size_t j = i + 1; j < bs.n(); ++j) {
            const std::size_t s = BitVec::and_count(bs.blocks[i], bs.blocks[j]);
            if (exact)
                CHECK(s == expected);
            else
                CHECK(s <= expected);
        }
    }
}

}  // namespace

TEST_CASE("projective planes: dimensions, weights, intersections") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        const BinaryMatrix h = projective_plane(q);
        const std::size_t n = std::size_t(q) * q + q + 1;
        CHECK(h.rows() == n);
        CHECK(h.cols() == n);
        const BlockSystem bs = column_blocks(h);
        CHECK(bs.block_size == q + 1);
        for (std::size_t j = 0; j < n; ++j) CHECK(h.row(j).count() == q + 1);
        // any two lines share exactly one point, and dually for rows
        check_pairwise_column_intersections(h, 1, true);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                CHECK(BitVec::and_count(h.row(a), h.row(b)) == 1);
    }
    CHECK_THROWS_AS(projective_plane(6), Error);
}

TEST_CASE("projective plane code parameters match the closed forms") {
    // q = 2^m: [4^m + 2^m + 1, 4^m - 3^m + 2^m, 2^m + 2]
    CHECK(rank(projective_plane(2)) == 4);
    CHECK(min_distance(projective_plane(2)) == 4);
    CHECK(nullspace_basis(projective_plane(4)).rows() == 11);
    CHECK(min_distance(projective_plane(4)) == 6);
}

TEST_CASE("punctured Euclidean planes: dimensions, weights, intersections") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        const BinaryMatrix h = euclidean_punctured(q);
        const std::size_t n = std::size_t(q) * q - 1;
        CHECK(h.rows() == n);
        CHECK(h.cols() == n);
        const BlockSystem bs = column_blocks(h);
        CHECK(bs.block_size == q);
        check_pairwise_column_intersections(h, 1, false);
    }
    CHECK_THROWS_AS(euclidean_punctured(10), Error);
}

TEST_CASE("punctured Euclidean code parameters match the closed forms") {
    // q = 2^m: [4^m - 1, 4^m - 3^m, 2^m + 1]
    CHECK(rank(euclidean_punctured(2)) == 2);
    CHECK(min_distance(euclidean_punctured(2)) == 3);
    CHECK(nullspace_basis(euclidean_punctured(4)).rows() == 7);
    CHECK(min_distance(euclidean_punctured(4)) == 5);
}

TEST_CASE("hamming circulant: m = 2 is the circulant of 110") {
    const BinaryMatrix h = hamming_circulant(2);
    CHECK(h.rows() == 3);
    CHECK(h.get(0, 0));
    CHECK(h.get(0, 1));
    CHECK_FALSE(h.get(0, 2));
    CHECK_FALSE(h.get(1, 0));
    CHECK(h.get(1, 1));
    CHECK(h.get(1, 2));
    CHECK(h.get(2, 0));
    CHECK_FALSE(h.get(2, 1));
    CHECK(h.get(2, 2));
    CHECK(min_distance(h) == 3);  // [3, 1, 3]
}

TEST_CASE("hamming circulant: weights, rank, code identity") {
    for (std::uint32_t m : {3u, 4u, 5u, 6u}) {
        const BinaryMatrix h = hamming_circulant(m);
        const std::size_t n = (std::size_t(1) << m) - 1;
        CHECK(h.rows() == n);
        CHECK(h.cols() == n);
        CHECK(rank(h) == m);
        const std::size_t c = std::size_t(1) << (m - 1);
        for (std::size_t i = 0; i < n; ++i) CHECK(h.column_weight(i) == c);
        CHECK(same_code(h, hamming_matrix(m)));
    }
    CHECK(min_distance(hamming_circulant(3)) == 3);
}

TEST_CASE("hamming circulant m = 3 equals the hand-built shift register matrix") {
    // x^3 + x + 1: s[t+3] = s[t+1] + s[t], seeded so position 0 carries a one.
    std::vector<int> seq = {1, 0, 0};
    for (int t = 0; t + 3 < 7; ++t) seq.push_back(seq[t + 1] ^ seq[t]);
    // rows = all cyclic shifts; the row set must coincide with the circulant's
    std::set<std::vector<int>> shifts;
    for (int s = 0; s < 7; ++s) {
        std::vector<int> row(7);
        for (int j = 0; j < 7; ++j) row[j] = seq[(j + 7 - s) % 7];
        shifts.insert(row);
    }
    const BinaryMatrix h = hamming_circulant(3);
    std::set<std::vector<int>> rows;
    for (std::size_t j = 0; j < 7; ++j) {
        std::vector<int> row(7);
        for (std::size_t i = 0; i < 7; ++i) row[i] = h.get(j, i);
        rows.insert(row);
    }
    CHECK(rows == shifts);
}

TEST_CASE("simplex weight-3 matrix: shape, weights, geometry") {
    {
        const BinaryMatrix h = simplex_weight3_matrix(3);
        CHECK(h.rows() == 7);  // n(n-1)/6 with n = 7
        CHECK(column_blocks(h).block_size == 3);
        check_pairwise_column_intersections(h, 1, false);
    }
    {
        const BinaryMatrix h = simplex_weight3_matrix(4);
        CHECK(h.rows() == 35);
        CHECK(column_blocks(h).block_size == 7);
        check_pairwise_column_intersections(h, 1, false);
    }
}

TEST_CASE("every simplex weight-3 row is a Hamming codeword") {
    for (std::uint32_t m : {3u, 4u, 5u, 6u}) {
        const BinaryMatrix w3 = simplex_weight3_matrix(m);
        const BinaryMatrix ham = hamming_matrix(m);
        for (std::size_t r = 0; r < w3.rows(); ++r) {
            CHECK(w3.row(r).count() == 3);
            for (std::size_t j = 0; j < ham.rows(); ++j)
                CHECK_FALSE(BitVec::dot(ham.row(j), w3.row(r)));
        }
    }
}

TEST_CASE("simplex weight-3 null space is the simplex code") {
    const BinaryMatrix w3 = simplex_weight3_matrix(4);
    const BinaryMatrix gen = nullspace_basis(w3);
    CHECK(gen.rows() == 4);
    CHECK(min_distance(w3) == 8);  // [15, 4, 8]
}

TEST_CASE("simplex circulant: seed and weights") {
    for (std::uint32_t m : {3u, 4u}) {
        const std::uint64_t prim = primitive_polynomial(m);
        const BitVec seed = simplex_circulant_seed(m);
        CHECK(seed.count() == 3);
        const auto idx = seed.indices();
        CHECK(idx[0] == 0);
        std::uint64_t w = 0;
        for (auto i : idx) w |= std::uint64_t(1) << i;
        CHECK(poly_divisible(w, prim));

        // oracle: the scan order really is the first divisible x^b + x^a + 1
        const std::uint32_t n = (1u << m) - 1;
        bool found = false;
        for (std::uint32_t a = 1; a < n && !found; ++a) {
            for (std::uint32_t b = a + 1; b < n && !found; ++b) {
                const std::uint64_t cand = (std::uint64_t(1) << b) | (std::uint64_t(1) << a) | 1;
                if (poly_divisible(cand, prim)) {
                    CHECK(idx[1] == a);
                    CHECK(idx[2] == b);
                    found = true;
                }
            }
        }
        CHECK(found);

        const BinaryMatrix h = simplex_circulant(m);
        CHECK(h.rows() == n);
        for (std::size_t j = 0; j < n; ++j) CHECK(h.row(j).count() == 3);
        for (std::size_t i = 0; i < n; ++i) CHECK(h.column_weight(i) == 3);

        // rows are weight-3 Hamming codewords, so the null space contains the
        // simplex code
        const BinaryMatrix ham = hamming_matrix(m);
        for (std::size_t r = 0; r < h.rows(); ++r)
            for (std::size_t j = 0; j < ham.rows(); ++j)
                CHECK_FALSE(BitVec::dot(ham.row(j), h.row(r)));
    }
}

TEST_CASE("constructions are byte-reproducible: frozen digests") {
    CHECK(matrix_digest(projective_plane(2)) == "9b96654f7178065a");
    CHECK(matrix_digest(projective_plane(3)) == "5100c54e7e286789");
    CHECK(matrix_digest(projective_plane(4)) == "0a5062702992aa48");
    CHECK(matrix_digest(euclidean_punctured(3)) == "e49a3aed89092a7a");
    CHECK(matrix_digest(euclidean_punctured(4)) == "59d6106b2fbeaf41");
    CHECK(matrix_digest(hamming_circulant(3)) == "3aae8cd25ea1c305");
    CHECK(matrix_digest(hamming_circulant(4)) == "9b60218cb8779855");
    CHECK(matrix_digest(simplex_weight3_matrix(4)) == "0c2960a3923cdf43");
    CHECK(matrix_digest(simplex_circulant(4)) == "e6375971689156bf");
    CHECK(matrix_digest(to_matrix(fig1_instance().first)) == "145697a8b4c192cd");
}

TEST_CASE("figure instance invariants") {
    const auto [bs, error] = fig1_instance();
    CHECK(bs.universe == 18);
    CHECK(bs.block_size == 5);
    CHECK(bs.n() == 5);
    CHECK(error == std::vector<std::uint32_t>{0, 1, 2, 3});

    // opposite frame blocks disjoint, adjacent ones meet in one corner
    CHECK(BitVec::and_count(bs.blocks[0], bs.blocks[2]) == 0);
    CHECK(BitVec::and_count(bs.blocks[1], bs.blocks[3]) == 0);
    CHECK(BitVec::and_count(bs.blocks[0], bs.blocks[1]) == 1);
    CHECK(BitVec::and_count(bs.blocks[0], bs.blocks[3]) == 1);
    CHECK(BitVec::and_count(bs.blocks[1], bs.blocks[2]) == 1);
    CHECK(BitVec::and_count(bs.blocks[2], bs.blocks[3]) == 1);

    const SyndromeSet s = syndrome(bs, error);
    CHECK(s.count() == 12);
    CHECK(BitVec::and_count(bs.blocks[4], s) == 3);
}
