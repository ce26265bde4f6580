#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bitflip/gf2.hpp"

namespace bitflip {

struct BiregularityInfo {
    bool biregular = false;  // constant row and column weights
    std::size_t d_right = 0; // common row weight (0 when rows are irregular)
    bool connected = false;  // Tanner graph is connected
};

// Row-weight regularity plus breadth-first connectivity over the Tanner graph
// (all n + r nodes reachable).
BiregularityInfo check_biregular_connected(const BinaryMatrix& h);

struct TopEigenvalues {
    double lambda1 = 0;
    double lambda2 = 0;
    // "spectral_gap" when lambda2 is the largest eigenvalue strictly below
    // lambda1 (connected graphs), "with_multiplicity" otherwise.
    std::string lambda2_semantics;
};

// Two largest eigenvalues of the Gram matrix H^T H, assembled exactly over the
// integers and diagonalized with cyclic Jacobi rotations. For connected Tanner
// graphs lambda2 skips copies of lambda1; otherwise it is the plain second
// largest. Dense solve, guarded at n <= 512.
TopEigenvalues top_two_eigenvalues(const BinaryMatrix& h, double tol = 1e-9);

// All eigenvalues of a symmetric matrix (row-major n x n), descending.
// Exposed so the solver can be cross-checked on its own.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n);

// n * (2c - lambda2) / (lambda1 - lambda2); a lower bound on the minimum
// distance of a connected (c, d)-biregular code.
double tanner_distance_bound(std::size_t n, std::size_t c, double lambda1, double lambda2);

// c^2 t / ((lambda1 - lambda2) t / n + lambda2); a lower bound on the number
// of check neighbors of any t code positions.
double tanner_expansion_bound(std::size_t n, std::size_t c, double lambda1, double lambda2,
                              std::size_t t);

// Smallest integer >= v up to a rounding guard, for bounds that are
// mathematically integral.
long long bound_ceiling(double v, double guard = 1e-9);

}  // namespace bitflip
