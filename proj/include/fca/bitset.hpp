#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fca {

// Dense dynamic bit vector. Bit i lives in word i/64 at position i%64.
// Bits past size() are kept zero, so whole-word operations stay valid.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_(word_count(size), 0) {}

    static Bitset full(std::size_t size) {
        Bitset b(size);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.mask_tail();
        return b;
    }

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const {
        assert(i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1U;
    }

    void set(std::size_t i) {
        assert(i < size_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        assert(i < size_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool none() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    bool any() const { return !none(); }
    bool all() const { return count() == size_; }

    Bitset& operator&=(const Bitset& o) {
        assert(size_ == o.size_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(size_ == o.size_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }

    // set difference
    Bitset& operator-=(const Bitset& o) {
        assert(size_ == o.size_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset&) const = default;

    bool is_subset_of(const Bitset& o) const {
        assert(size_ == o.size_);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    std::size_t find_first() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] != 0)
                return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return npos;
    }

    std::size_t find_next(std::size_t i) const {
        if (++i >= size_) return npos;
        std::size_t w = i >> 6;
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (word != 0) return (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
            if (++w == words_.size()) return npos;
            word = words_[w];
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t i = find_first(); i != npos; i = find_next(i)) out.push_back(i);
        return out;
    }

    // Total order used for canonical enumeration: a precedes b when the
    // smallest index at which they differ belongs to b.
    static bool lectic_less(const Bitset& a, const Bitset& b) {
        assert(a.size_ == b.size_);
        for (std::size_t w = 0; w < a.words_.size(); ++w) {
            std::uint64_t d = a.words_[w] ^ b.words_[w];
            if (d != 0) return (b.words_[w] >> std::countr_zero(d)) & 1U;
        }
        return false;
    }

private:
    static std::size_t word_count(std::size_t size) { return (size + 63) / 64; }

    void mask_tail() {
        if (size_ & 63) words_.back() &= ~std::uint64_t{0} >> (64 - (size_ & 63));
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace fca
