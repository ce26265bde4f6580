#include "bitflip/constructions.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "bitflip/field.hpp"

namespace bitflip {

namespace {

// Normalized homogeneous representatives of the 1-dimensional subspaces of
// GF(q)^3: first nonzero coordinate equal to 1, listed in lexicographic order.
std::vector<std::array<std::uint32_t, 3>> projective_points(const Field& f) {
    std::vector<std::array<std::uint32_t, 3>> pts;
    const std::uint32_t q = f.q();
    pts.push_back({0, 0, 1});
    for (std::uint32_t c = 0; c < q; ++c) pts.push_back({0, 1, c});
    for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c) pts.push_back({1, b, c});
    std::sort(pts.begin(), pts.end());
    return pts;
}

// --- GF(2) polynomial helpers on coefficient bitmasks ---------------------

std::uint32_t bitpoly_degree(std::uint64_t f) {
    return f ? 63 - std::countl_zero(f) : 0;
}

std::uint64_t bitpoly_mod(std::uint64_t f, std::uint64_t g) {
    const std::uint32_t dg = bitpoly_degree(g);
    while (f && bitpoly_degree(f) >= dg) f ^= g << (bitpoly_degree(f) - dg);
    return f;
}

std::uint64_t bitpoly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    a = bitpoly_mod(a, mod);
    const std::uint32_t dm = bitpoly_degree(mod);
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> dm) & 1) a ^= mod;
    }
    return r;
}

std::uint64_t bitpoly_powmod(std::uint64_t base, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t r = 1;
    base = bitpoly_mod(base, mod);
    while (e) {
        if (e & 1) r = bitpoly_mulmod(r, base, mod);
        base = bitpoly_mulmod(base, base, mod);
        e >>= 1;
    }
    return r;
}

bool bitpoly_irreducible(std::uint64_t f, std::uint32_t m) {
    if ((f & 1) == 0) return false;  // divisible by x
    for (std::uint32_t d = 1; d <= m / 2; ++d)
        for (std::uint64_t g = (std::uint64_t(1) << d) | 1; g < (std::uint64_t(1) << (d + 1)); g += 2)
            if (bitpoly_mod(f, g) == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

BinaryMatrix circulant(const BitVec& seed) {
    const std::size_t n = seed.size();
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (seed.test((j + n - i) % n)) m.set(i, j);
    return m;
}

// Coordinates of alpha^0, alpha^1, ..., alpha^(n-1) as m-bit masks.
std::vector<std::uint32_t> alpha_powers(std::uint32_t m) {
    const std::uint64_t prim = primitive_polynomial(m);
    const std::uint32_t n = (1u << m) - 1;
    std::vector<std::uint32_t> pw(n);
    std::uint32_t x = 1;
    for (std::uint32_t j = 0; j < n; ++j) {
        pw[j] = x;
        x <<= 1;
        if (x >> m) x ^= static_cast<std::uint32_t>(prim);
    }
    return pw;
}

}  // namespace

std::uint64_t primitive_polynomial(std::uint32_t m) {
    if (m < 2 || m > 24) throw Error("primitive_polynomial: degree out of supported range");
    const std::uint64_t n = (std::uint64_t(1) << m) - 1;
    const auto factors = prime_factors(n);
    for (std::uint64_t f = (std::uint64_t(1) << m) | 1; f < (std::uint64_t(1) << (m + 1)); f += 2) {
        if (!bitpoly_irreducible(f, m)) continue;
        if (bitpoly_powmod(2, n, f) != 1) continue;  // order of x must divide n
        bool primitive = true;
        for (auto ell : factors) {
            if (bitpoly_powmod(2, n / ell, f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return f;
    }
    throw Error("primitive_polynomial: none found");
}

BinaryMatrix projective_plane(std::uint32_t q) {
    const PrimePower pp = factor_prime_power(q);
    const Field f(pp.p, pp.m);
    const auto pts = projective_points(f);
    const std::size_t n = pts.size();

    // Lines carry the same normalized coordinates as points (duality); the
    // point x lies on the line a exactly when <a, x> = 0.
    BinaryMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::uint32_t dot = 0;
            for (int t = 0; t < 3; ++t) dot = f.add(dot, f.mul(pts[i][t], pts[j][t]));
            if (dot == 0) h.set(j, i);
        }
    }
    return h;
}

BinaryMatrix euclidean_punctured(std::uint32_t q) {
    const PrimePower pp = factor_prime_power(q);
    const Field f(pp.p, pp.m);

    std::vector<std::array<std::uint32_t, 2>> pts;
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
            if (a || b) pts.push_back({a, b});
    // Lines avoiding the origin have a unique equation a*x + b*y = 1, so the
    // same coordinate list indexes the columns.
    const std::size_t n = pts.size();
    BinaryMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint32_t v =
                f.add(f.mul(pts[i][0], pts[j][0]), f.mul(pts[i][1], pts[j][1]));
            if (v == 1) h.set(j, i);
        }
    }
    return h;
}

BinaryMatrix hamming_matrix(std::uint32_t m) {
    const auto pw = alpha_powers(m);
    const std::uint32_t n = (1u << m) - 1;
    BinaryMatrix h(m, n);
    for (std::uint32_t j = 0; j < n; ++j)
        for (std::uint32_t i = 0; i < m; ++i)
            if ((pw[j] >> i) & 1) h.set(i, j);
    return h;
}

BitVec hamming_circulant_seed(std::uint32_t m) {
    const auto pw = alpha_powers(m);
    const std::uint32_t n = (1u << m) - 1;

    // Row 0 of hamming_matrix is a codeword of the cyclic simplex code; its n
    // cyclic shifts are exactly the nonzero codewords.
    BitVec base(n);
    for (std::uint32_t j = 0; j < n; ++j)
        if (pw[j] & 1) base.set(j);

    BitVec best;
    for (std::uint32_t s = 0; s < n; ++s) {
        BitVec shifted(n);
        for (std::uint32_t j = 0; j < n; ++j)
            if (base.test((j + n - s) % n)) shifted.set(j);
        if (!shifted.test(0)) continue;
        if (best.size() == 0 || shifted.support_less(best)) best = shifted;
    }
    return best;
}

BinaryMatrix hamming_circulant(std::uint32_t m) {
    if (m < 2) throw Error("hamming_circulant: m must be >= 2");
    const BinaryMatrix h = circulant(hamming_circulant_seed(m));

    if (rank(h) != m) throw Error("hamming_circulant: rank check failed");
    if (!same_code(h, hamming_matrix(m))) throw Error("hamming_circulant: code check failed");
    const std::size_t c = std::size_t(1) << (m - 1);
    for (std::size_t i = 0; i < h.cols(); ++i)
        if (h.column_weight(i) != c) throw Error("hamming_circulant: column weight check failed");
    return h;
}

BinaryMatrix simplex_weight3_matrix(std::uint32_t m) {
    if (m < 3) throw Error("simplex_weight3_matrix: m must be >= 3");
    const auto pw = alpha_powers(m);
    const std::uint32_t n = (1u << m) - 1;

    std::vector<std::uint32_t> log(std::size_t(1) << m, 0);
    for (std::uint32_t j = 0; j < n; ++j) log[pw[j]] = j;

    std::vector<std::array<std::uint32_t, 3>> triples;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const std::uint32_t k = log[pw[i] ^ pw[j]];
            if (k > j) triples.push_back({i, j, k});
        }
    }
    std::sort(triples.begin(), triples.end());

    BinaryMatrix h(triples.size(), n);
    for (std::size_t r = 0; r < triples.size(); ++r)
        for (auto idx : triples[r]) h.set(r, idx);
    return h;
}

BitVec simplex_circulant_seed(std::uint32_t m) {
    if (m < 3) throw Error("simplex_circulant_seed: m must be >= 3");
    const std::uint64_t prim = primitive_polynomial(m);
    const std::uint32_t n = (1u << m) - 1;
    for (std::uint32_t a = 1; a < n; ++a) {
        for (std::uint32_t b = a + 1; b < n; ++b) {
            const std::uint64_t w = (std::uint64_t(1) << b) | (std::uint64_t(1) << a) | 1;
            if (bitpoly_mod(w, prim) == 0) {
                BitVec seed(n);
                seed.set(0);
                seed.set(a);
                seed.set(b);
                return seed;
            }
        }
    }
    throw Error("simplex_circulant_seed: no weight-3 codeword found");
}

BinaryMatrix simplex_circulant(std::uint32_t m) {
    return circulant(simplex_circulant_seed(m));
}

std::pair<BlockSystem, std::vector<std::uint32_t>> fig1_instance() {
    // Check indices around the 5x5 frame, then the two interior checks:
    //   0..4   bottom row (left to right),
    //   5..8   rest of the left column (bottom to top),
    //   9..12  rest of the right column (bottom to top),
    //   13..15 rest of the top row (left to right),
    //   16,17  interior.
    BlockSystem bs;
    bs.universe = 18;
    bs.block_size = 5;
    const std::vector<std::vector<std::uint32_t>> blocks = {
        {0, 1, 2, 3, 4},      // bottom row
        {0, 5, 6, 7, 8},      // left column
        {8, 13, 14, 15, 12},  // top row
        {4, 9, 10, 11, 12},   // right column
        {6, 10, 14, 16, 17},  // cross: left middle, right middle, top middle, interior
    };
    for (const auto& b : blocks) bs.blocks.push_back(BitVec::from_indices(18, b));

    const std::vector<std::uint32_t> error = {0, 1, 2, 3};

    // Opposite frame blocks are disjoint, the remaining error pairs meet in one
    // corner, the syndrome has 12 checks and meets the cross block in 3.
    auto isect = [&](std::size_t i, std::size_t j) {
        return BitVec::and_count(bs.blocks[i], bs.blocks[j]);
    };
    if (isect(0, 2) != 0 || isect(1, 3) != 0) throw Error("fig1_instance: disjointness check failed");
    if (isect(0, 1) != 1 || isect(0, 3) != 1 || isect(1, 2) != 1 || isect(2, 3) != 1)
        throw Error("fig1_instance: corner check failed");
    const SyndromeSet s = syndrome(bs, error);
    if (s.count() != 12) throw Error("fig1_instance: syndrome size check failed");
    if (BitVec::and_count(bs.blocks[4], s) != 3)
        throw Error("fig1_instance: cross intersection check failed");

    return {bs, error};
}

}  // namespace bitflip
