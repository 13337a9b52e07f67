#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hampat {

// Fixed-size dynamic bitset over vertex ids. Sized once at construction;
// binary operations require equal sizes.
class VertexSet {
  public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    VertexSet() = default;
    explicit VertexSet(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    [[nodiscard]] std::size_t universe() const noexcept { return size_; }

    [[nodiscard]] bool test(std::size_t v) const noexcept {
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void set(std::size_t v) noexcept { words_[v >> 6] |= (std::uint64_t{1} << (v & 63)); }
    void reset(std::size_t v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }
    void fill() noexcept {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    [[nodiscard]] std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    [[nodiscard]] bool none() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    // |this & other|
    [[nodiscard]] std::size_t count_and(const VertexSet& other) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    // Smallest element of this & a & ~excluded, or npos.
    [[nodiscard]] std::size_t first_and_not(const VertexSet& a, const VertexSet& excluded) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            const std::uint64_t w = words_[i] & a.words_[i] & ~excluded.words_[i];
            if (w) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
        }
        return npos;
    }

    [[nodiscard]] std::size_t first() const noexcept { return next(0); }

    // Smallest element >= from, or npos.
    [[nodiscard]] std::size_t next(std::size_t from) const noexcept {
        if (from >= size_) return npos;
        std::size_t i = from >> 6;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++i == words_.size()) return npos;
            w = words_[i];
        }
    }

    VertexSet& operator&=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& subtract(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    [[nodiscard]] std::vector<std::uint32_t> to_vector() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for (std::size_t v = first(); v != npos; v = next(v + 1)) out.push_back(static_cast<std::uint32_t>(v));
        return out;
    }

    template <typename Range>
    static VertexSet from_range(std::size_t n, const Range& vertices) {
        VertexSet s(n);
        for (auto v : vertices) s.set(static_cast<std::size_t>(v));
        return s;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

  private:
    void trim() noexcept {
        if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

inline VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
inline VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

}  // namespace hampat
