#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace fgchar {

/// Fixed-universe bitset over element indices 0..n-1.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    template <class Range>
    static ElementSet of(std::size_t universe, const Range& elements) {
        ElementSet s(universe);
        for (auto e : elements) s.insert(static_cast<std::size_t>(e));
        return s;
    }

    std::size_t universe() const noexcept { return n_; }

    bool contains(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void insert(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void erase(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const ElementSet& other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }
    bool intersects(const ElementSet& other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    ElementSet& operator|=(const ElementSet& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    ElementSet& operator&=(const ElementSet& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

    friend bool operator==(const ElementSet& a, const ElementSet& b) = default;

    /// Ascending element indices.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                out.push_back(static_cast<int>(k * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
        return out;
    }

    std::size_t hash() const noexcept {
        std::size_t h = n_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace fgchar
