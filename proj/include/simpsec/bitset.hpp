#pragma once
// Fixed-universe bitset over facet indices. Events and truth sets are values
// of this type; equality is exact set equality.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace simpsec {

class Bitset {
public:
    Bitset() = default;

    explicit Bitset(std::size_t universe)
        : size_(universe), words_((universe + 63) / 64, 0) {}

    static Bitset full(std::size_t universe) {
        Bitset b(universe);
        for (std::size_t i = 0; i < universe; ++i) b.set(i);
        return b;
    }

    std::size_t universe() const { return size_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
        return n;
    }

    bool none() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    bool any() const { return !none(); }

    bool is_subset_of(const Bitset& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
        return *this;
    }

    Bitset& operator&=(const Bitset& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
        return *this;
    }

    Bitset complement() const {
        Bitset out(size_);
        for (std::size_t i = 0; i < size_; ++i)
            if (!test(i)) out.set(i);
        return out;
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    bool operator==(const Bitset& other) const {
        return size_ == other.size_ && words_ == other.words_;
    }

    bool operator!=(const Bitset& other) const { return !(*this == other); }

    // Lexicographic order on the sorted member sequence. With facets indexed
    // in canonical key order this matches the serialized event order.
    bool operator<(const Bitset& other) const {
        return members() < other.members();
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace simpsec
