#include "bitflip/field.hpp"

#include <algorithm>

namespace bitflip {

namespace {

constexpr std::uint32_t kMaxQ = 1024;

using Poly = std::vector<std::uint32_t>;  // coefficients mod p, constant term first

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic polynomial g.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const std::uint32_t lead = f.back();
        if (lead != 0) {
            // f -= lead * g * x^(deg f - deg g)
            const std::size_t shift = f.size() - 1 - dg;
            for (std::size_t i = 0; i <= dg; ++i) {
                const std::uint32_t t = (lead * g[i]) % p;
                f[shift + i] = (f[shift + i] + p - t) % p;
            }
        }
        f.pop_back();
        trim(f);
        if (f.empty()) break;
    }
    return f;
}

bool divides(const Poly& g, const Poly& f, std::uint32_t p) {
    return poly_mod(f, g, p).empty();
}

// Decodes integer n into base-p digits, constant term first, width digits.
Poly decode(std::uint64_t n, std::uint32_t p, std::size_t width) {
    Poly f(width);
    for (std::size_t i = 0; i < width; ++i) {
        f[i] = static_cast<std::uint32_t>(n % p);
        n /= p;
    }
    return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    // Trial division by every monic polynomial of lower degree >= 1.
    for (std::size_t d = 1; d < m; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly g = decode(low, p, d + 1);
            g[d] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimePower factor_prime_power(std::uint32_t q) {
    if (q < 2) throw Error("not a prime power: " + std::to_string(q));
    std::uint32_t p = 2;
    while (q % p != 0) {
        ++p;
        if (p * p > q) {
            p = q;
            break;
        }
    }
    std::uint32_t m = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) throw Error("not a prime power: " + std::to_string(q));
    return {p, m};
}

Field::Field(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus)
    : p_(p), m_(m) {
    if (!is_prime(p)) throw Error("Field: characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw Error("Field: extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxQ) throw Error("Field: order exceeds supported range");
    }
    q_ = static_cast<std::uint32_t>(q);

    if (modulus) {
        modulus_ = *modulus;
        if (modulus_.size() != m + 1 || modulus_.back() != 1)
            throw Error("Field: modulus must be monic of degree m");
        for (auto c : modulus_)
            if (c >= p) throw Error("Field: modulus coefficients must be reduced mod p");
        if (!is_irreducible(modulus_, p)) throw Error("Field: supplied modulus is reducible");
    } else {
        // Smallest lower part first; the integer order of the lower coefficients
        // equals lexicographic order on (c_{m-1}, ..., c_0).
        std::uint64_t span = 1;
        for (std::uint32_t i = 0; i < m; ++i) span *= p;
        for (std::uint64_t low = 0;; ++low) {
            if (low >= span) throw Error("Field: no irreducible polynomial found");
            Poly f = decode(low, p, m + 1);
            f[m] = 1;
            if (is_irreducible(f, p)) {
                modulus_ = f;
                break;
            }
        }
    }
    build_tables();
}

void Field::build_tables() {
    add_.assign(std::size_t(q_) * q_, 0);
    sub_.assign(std::size_t(q_) * q_, 0);
    mul_.assign(std::size_t(q_) * q_, 0);
    inv_.assign(q_, 0);

    auto enc = [this](const Poly& f) {
        std::uint32_t v = 0;
        for (std::size_t i = f.size(); i-- > 0;) v = v * p_ + f[i];
        return v;
    };
    auto dec = [this](std::uint32_t v) { return decode(v, p_, m_); };

    for (std::uint32_t a = 0; a < q_; ++a) {
        const Poly fa = dec(a);
        for (std::uint32_t b = 0; b < q_; ++b) {
            const Poly fb = dec(b);
            Poly s(m_), d(m_);
            for (std::uint32_t i = 0; i < m_; ++i) {
                s[i] = (fa[i] + fb[i]) % p_;
                d[i] = (fa[i] + p_ - fb[i]) % p_;
            }
            add_[a * q_ + b] = enc(s);
            sub_[a * q_ + b] = enc(d);

            Poly prod(2 * m_ - 1, 0);
            for (std::uint32_t i = 0; i < m_; ++i)
                for (std::uint32_t j = 0; j < m_; ++j)
                    prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
            Poly r = poly_mod(prod, modulus_, p_);
            r.resize(m_, 0);
            mul_[a * q_ + b] = enc(r);
        }
    }
    for (std::uint32_t a = 1; a < q_; ++a)
        for (std::uint32_t b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) inv_[a] = b;
}

std::string Field::modulus_string() const {
    std::string s;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
        if (modulus_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += std::to_string(modulus_[i]);
        } else {
            if (modulus_[i] != 1) s += std::to_string(modulus_[i]) + "*";
            s += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace bitflip
