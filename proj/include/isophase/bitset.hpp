#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace isophase {

/// Fixed-width bit row. Width is set at construction and never changes, so
/// in-place operations on rows of equal width never allocate.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void set_all() noexcept
    {
        for (auto& w : words_)
            w = ~std::uint64_t{0};
        trim();
    }

    void clear() noexcept
    {
        for (auto& w : words_)
            w = 0;
    }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const noexcept
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    bool any() const noexcept { return !none(); }

    std::size_t find_first() const noexcept { return find_from(0); }
    std::size_t find_next(std::size_t i) const noexcept { return find_from(i + 1); }

    Bitset& operator&=(const Bitset& o) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= o.words_[k];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] |= o.words_[k];
        return *this;
    }

    /// this &= ~o
    Bitset& subtract(const Bitset& o) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= ~o.words_[k];
        return *this;
    }

    /// this = a & b, without reallocating.
    void assign_and(const Bitset& a, const Bitset& b) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] = a.words_[k] & b.words_[k];
    }

    /// this = a & ~b, without reallocating.
    void assign_and_not(const Bitset& a, const Bitset& b) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] = a.words_[k] & ~b.words_[k];
    }

    void assign(const Bitset& a) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] = a.words_[k];
    }

    friend bool operator==(const Bitset& a, const Bitset& b) = default;

private:
    std::size_t find_from(std::size_t i) const noexcept
    {
        if (i >= bits_)
            return npos;
        std::size_t k = i >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w != 0)
                return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size())
                return npos;
            w = words_[k];
        }
    }

    void trim() noexcept
    {
        if (bits_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace isophase
