#pragma once

#include <cstdint>
#include <utility>

#include "bitflip/gf2.hpp"

namespace bitflip {

// Point-line incidence matrix of the projective plane of order q: rows are the
// n = q^2 + q + 1 points, columns the n lines, both listed by normalized
// homogeneous coordinates in lexicographic order. Every row and column has
// weight q + 1 and two distinct lines share exactly one point.
BinaryMatrix projective_plane(std::uint32_t q);

// Incidence matrix of the Euclidean plane over GF(q) punctured at the origin:
// rows are the q^2 - 1 nonzero points, columns the q^2 - 1 affine lines that
// avoid the origin (a*x + b*y = 1), each carrying q points.
BinaryMatrix euclidean_punctured(std::uint32_t q);

// Parity-check matrix of the cyclic Hamming code of length n = 2^m - 1:
// column j holds the coordinates of alpha^j for a primitive alpha, so the null
// space is closed under cyclic shifts.
BinaryMatrix hamming_matrix(std::uint32_t m);

// Seed row of hamming_circulant: among the n cyclic shifts of the weight
// 2^(m-1) sequence generated by the primitive polynomial, the one whose
// support contains position 0 and is smallest in sorted-support order.
BitVec hamming_circulant_seed(std::uint32_t m);

// n x n circulant whose rows are all cyclic shifts of hamming_circulant_seed;
// an n-row parity-check matrix for the Hamming code with constant column
// weight 2^(m-1). Construction is self-checked (rank m, same code as
// hamming_matrix, constant column weight) and throws on violation.
BinaryMatrix hamming_circulant(std::uint32_t m);

// All weight-3 codewords of the cyclic Hamming code as rows: the triples
// {i,j,k} with alpha^i + alpha^j + alpha^k = 0, sorted, one row per triple in
// lexicographic order. r = n(n-1)/6 rows, column weight (n-1)/2, pairwise
// column intersections of size at most one.
BinaryMatrix simplex_weight3_matrix(std::uint32_t m);

// Smallest-support weight-3 codeword of the cyclic Hamming code (the first
// x^b + x^a + 1 divisible by the primitive polynomial, scanning (a, b)).
BitVec simplex_circulant_seed(std::uint32_t m);

// n x n circulant of the cyclic shifts of simplex_circulant_seed; column
// weight 3. A deliberately weak parity-check candidate for the simplex code.
BinaryMatrix simplex_circulant(std::uint32_t m);

// Primitive polynomial used by the cyclic constructions, as a coefficient
// bitmask (bit i = coefficient of x^i).
std::uint64_t primitive_polynomial(std::uint32_t m);

// The 18-check example instance: a 5x5 frame of 16 boundary checks plus two
// interior checks, with five blocks of size 5 (bottom row, left column, top
// row, right column, and a cross-shaped block at index 4) and the four frame
// blocks as the error support.
std::pair<BlockSystem, std::vector<std::uint32_t>> fig1_instance();

}  // namespace bitflip
