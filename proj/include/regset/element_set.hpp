#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace regset {

// Dense subset of element indices {0, ..., universe-1}, backed by 64-bit words.
class ElementSet {
public:
    ElementSet() = default;

    explicit ElementSet(int universe)
        : universe_(universe), bits_((universe + 63) / 64, 0) {}

    static ElementSet of(int universe, std::initializer_list<int> elems) {
        ElementSet s(universe);
        for (int e : elems) s.add(e);
        return s;
    }

    static ElementSet full(int universe) {
        ElementSet s(universe);
        for (int i = 0; i < universe; ++i) s.add(i);
        return s;
    }

    int universe() const { return universe_; }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool test(int i) const {
        check_index(i);
        return (bits_[i >> 6] >> (i & 63)) & 1u;
    }

    void add(int i) {
        check_index(i);
        uint64_t& w = bits_[i >> 6];
        uint64_t m = uint64_t(1) << (i & 63);
        if (!(w & m)) { w |= m; ++count_; }
    }

    void remove(int i) {
        check_index(i);
        uint64_t& w = bits_[i >> 6];
        uint64_t m = uint64_t(1) << (i & 63);
        if (w & m) { w &= ~m; --count_; }
    }

    bool is_subset_of(const ElementSet& other) const {
        for (size_t k = 0; k < bits_.size(); ++k)
            if (bits_[k] & ~other.bits_[k]) return false;
        return true;
    }

    bool intersects(const ElementSet& other) const {
        for (size_t k = 0; k < bits_.size(); ++k)
            if (bits_[k] & other.bits_[k]) return true;
        return false;
    }

    int intersection_size(const ElementSet& other) const {
        int c = 0;
        for (size_t k = 0; k < bits_.size(); ++k)
            c += std::popcount(bits_[k] & other.bits_[k]);
        return c;
    }

    ElementSet operator|(const ElementSet& o) const {
        ElementSet r = *this;
        r.count_ = 0;
        for (size_t k = 0; k < bits_.size(); ++k) {
            r.bits_[k] |= o.bits_[k];
            r.count_ += std::popcount(r.bits_[k]);
        }
        return r;
    }

    ElementSet operator&(const ElementSet& o) const {
        ElementSet r = *this;
        r.count_ = 0;
        for (size_t k = 0; k < bits_.size(); ++k) {
            r.bits_[k] &= o.bits_[k];
            r.count_ += std::popcount(r.bits_[k]);
        }
        return r;
    }

    // set difference
    ElementSet operator-(const ElementSet& o) const {
        ElementSet r = *this;
        r.count_ = 0;
        for (size_t k = 0; k < bits_.size(); ++k) {
            r.bits_[k] &= ~o.bits_[k];
            r.count_ += std::popcount(r.bits_[k]);
        }
        return r;
    }

    ElementSet complement() const {
        ElementSet r(universe_);
        for (int i = 0; i < universe_; ++i)
            if (!test(i)) r.add(i);
        return r;
    }

    bool operator==(const ElementSet& o) const {
        return universe_ == o.universe_ && bits_ == o.bits_;
    }
    bool operator!=(const ElementSet& o) const { return !(*this == o); }

    // lexicographic on the sorted element list; used for canonical orderings
    bool operator<(const ElementSet& o) const {
        auto a = to_vector(), b = o.to_vector();
        return a < b;
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count_);
        for (int i = 0; i < universe_; ++i)
            if (test(i)) v.push_back(i);
        return v;
    }

    template <typename F>
    void for_each(F f) const {
        for (size_t k = 0; k < bits_.size(); ++k) {
            uint64_t w = bits_[k];
            while (w) {
                int b = std::countr_zero(w);
                f(int(k * 64 + b));
                w &= w - 1;
            }
        }
    }

    int min_element() const {
        for (size_t k = 0; k < bits_.size(); ++k)
            if (bits_[k]) return int(k * 64 + std::countr_zero(bits_[k]));
        return -1;
    }

private:
    void check_index(int i) const {
        if (i < 0 || i >= universe_)
            throw std::out_of_range("ElementSet: index out of range");
    }

    int universe_ = 0;
    int count_ = 0;
    std::vector<uint64_t> bits_;
};

}  // namespace regset
