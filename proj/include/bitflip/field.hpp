#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bitflip/errors.hpp"

namespace bitflip {

// GF(p^m) with elements encoded as integers 0..q-1: the element with
// polynomial coefficients (c_0, ..., c_{m-1}) is sum c_i * p^i. Arithmetic is
// table-driven, built once at construction.
class Field {
  public:
    // When no modulus is given, the lexicographically smallest irreducible
    // monic of degree m over GF(p) is selected (coefficients compared from the
    // highest degree down). A supplied modulus lists m+1 coefficients, constant
    // term first, and must be monic and irreducible.
    Field(std::uint32_t p, std::uint32_t m,
          std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    std::string modulus_string() const;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return sub_[a * q_ + b]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw Error("Field::inv: zero has no inverse");
        return inv_[a];
    }

    std::uint32_t neg(std::uint32_t a) const { return sub(0, a); }

  private:
    std::uint32_t p_, m_, q_;
    std::vector<std::uint32_t> modulus_;  // m+1 coefficients, constant term first
    std::vector<std::uint32_t> add_, sub_, mul_, inv_;

    void build_tables();
};

bool is_prime(std::uint32_t n);

// Factors q as p^m with p prime; fails when q is not a prime power.
struct PrimePower {
    std::uint32_t p, m;
};
PrimePower factor_prime_power(std::uint32_t q);

}  // namespace bitflip
