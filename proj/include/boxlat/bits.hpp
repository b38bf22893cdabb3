#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace boxlat {

// Fixed-width dynamic bitset. All binary operations require equal widths.
class Bits {
public:
    Bits() = default;
    explicit Bits(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    static Bits ones(int nbits) {
        Bits b(nbits);
        for (auto& w : b.w_) w = ~0ull;
        b.trim();
        return b;
    }

    int size() const { return nbits_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }

    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& operator-=(const Bits& o) {  // set difference
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

    Bits complement() const {
        Bits r(nbits_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    bool subset_of(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool operator==(const Bits& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator!=(const Bits& o) const { return !(*this == o); }
    // Arbitrary total order, used only for canonical sorting.
    bool operator<(const Bits& o) const { return w_ < o.w_; }

    int lowest() const {  // -1 if empty
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }
    int highest() const {  // -1 if empty
        for (size_t i = w_.size(); i-- > 0;)
            if (w_[i]) return int(i * 64 + 63 - __builtin_clzll(w_[i]));
        return -1;
    }
    int next(int i) const {  // lowest set bit > i, or -1
        ++i;
        if (i >= nbits_) return -1;
        size_t k = i >> 6;
        uint64_t w = w_[k] & (~0ull << (i & 63));
        while (true) {
            if (w) return int(k * 64 + __builtin_ctzll(w));
            if (++k >= w_.size()) return -1;
            w = w_[k];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (int i = lowest(); i >= 0; i = next(i)) f(i);
    }
    std::vector<int> to_vector() const {
        std::vector<int> v;
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    size_t hash() const {
        uint64_t h = 0xcbf29ce484222325ull ^ uint64_t(nbits_);
        for (auto w : w_) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return size_t(h);
    }

private:
    void trim() {
        int r = nbits_ & 63;
        if (r && !w_.empty()) w_.back() &= (~0ull >> (64 - r));
    }

    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

struct BitsHash {
    size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace boxlat
