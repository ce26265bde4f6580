#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace bitflip {

// Fixed-length bit vector packed into 64-bit words. Used both for matrix rows
// and for index sets (syndromes, blocks, error supports), so all set algebra
// (symmetric difference, intersection size, union size) runs word-parallel.
class BitVec {
  public:
    BitVec() = default;

    explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static BitVec from_indices(std::size_t nbits, const std::vector<std::uint32_t>& idx) {
        BitVec v(nbits);
        for (auto i : idx) v.set(i);
        return v;
    }

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value = true) {
        if (i >= nbits_) throw std::out_of_range("BitVec::set: index out of range");
        if (value)
            words_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else
            words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    void flip(std::size_t i) {
        if (i >= nbits_) throw std::out_of_range("BitVec::flip: index out of range");
        words_[i >> 6] ^= std::uint64_t(1) << (i & 63);
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    BitVec& operator&=(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    BitVec& operator|=(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

    bool operator==(const BitVec& o) const = default;

    // |a ∩ b| without allocating.
    static std::size_t and_count(const BitVec& a, const BitVec& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += std::popcount(a.words_[i] & b.words_[i]);
        return c;
    }

    static std::size_t or_count(const BitVec& a, const BitVec& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += std::popcount(a.words_[i] | b.words_[i]);
        return c;
    }

    // Parity of |a ∩ b|, i.e. the GF(2) dot product.
    static bool dot(const BitVec& a, const BitVec& b) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            acc ^= a.words_[i] & b.words_[i];
        return std::popcount(acc) & 1u;
    }

    std::vector<std::uint32_t> indices() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                out.push_back(static_cast<std::uint32_t>(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    int lowest_set() const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
            if (words_[wi]) return static_cast<int>(wi * 64 + std::countr_zero(words_[wi]));
        return -1;
    }

    // Orders vectors of equal length by their sorted support; the vector whose
    // first differing set bit comes earlier is smaller.
    bool support_less(const BitVec& o) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t d = words_[wi] ^ o.words_[wi];
            if (d) {
                std::uint64_t low = d & ~(d - 1);
                return (words_[wi] & low) != 0;
            }
        }
        return false;
    }

    std::span<const std::uint64_t> words() const { return words_; }

    std::size_t hash() const {
        std::uint64_t h = 14695981039346656037ull;
        for (auto w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h ^ nbits_);
    }

  private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

}  // namespace bitflip
