#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace idcodes {

// Fixed-width set of vertex indices backed by 64-bit words.
// Width is the vertex count of the graph the set belongs to; no bit at or
// above the width is ever set, so set algebra and popcount are exact.
class VertexSet {
public:
    VertexSet() : width_(0) {}

    explicit VertexSet(int width) : width_(check_width(width)) {
        words_.assign(word_count(width_), 0);
    }

    VertexSet(int width, std::initializer_list<int> vertices) : VertexSet(width) {
        for (int v : vertices) set(v);
    }

    static VertexSet full(int width) {
        VertexSet s(width);
        for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) s.words_[w] = ~0ull;
        s.trim();
        return s;
    }

    static VertexSet single(int width, int v) {
        VertexSet s(width);
        s.set(v);
        return s;
    }

    int width() const { return width_; }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool test(int v) const {
        check_index(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        check_index(v);
        words_[v >> 6] |= uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        check_index(v);
        words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    // First set bit at index >= from, or -1.
    int next(int from = 0) const {
        if (from >= width_) return -1;
        int wi = from >> 6;
        uint64_t w = words_[wi] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + __builtin_ctzll(w);
            if (++wi >= static_cast<int>(words_.size())) return -1;
            w = words_[wi];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = next(); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

    VertexSet operator|(const VertexSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    VertexSet operator&(const VertexSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    VertexSet operator^(const VertexSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a ^ b; }); }
    VertexSet operator-(const VertexSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }

    VertexSet operator~() const {
        VertexSet r(width_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    VertexSet& operator|=(const VertexSet& o) { return apply_in_place(o, [](uint64_t& a, uint64_t b) { a |= b; }); }
    VertexSet& operator&=(const VertexSet& o) { return apply_in_place(o, [](uint64_t& a, uint64_t b) { a &= b; }); }
    VertexSet& operator^=(const VertexSet& o) { return apply_in_place(o, [](uint64_t& a, uint64_t b) { a ^= b; }); }
    VertexSet& operator-=(const VertexSet& o) { return apply_in_place(o, [](uint64_t& a, uint64_t b) { a &= ~b; }); }

    bool operator==(const VertexSet& o) const { return width_ == o.width_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Lexicographic on words from the low end; total order for deterministic maps.
    bool operator<(const VertexSet& o) const {
        if (width_ != o.width_) return width_ < o.width_;
        for (size_t i = words_.size(); i-- > 0;)
            if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        check_same_width(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_same_width(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    int count_and(const VertexSet& o) const {
        check_same_width(o);
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += __builtin_popcountll(words_[i] & o.words_[i]);
        return c;
    }

    size_t hash() const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h ^ static_cast<uint64_t>(width_));
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v = next(); v >= 0; v = next(v + 1)) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

private:
    template <class F>
    VertexSet apply(const VertexSet& o, F f) const {
        check_same_width(o);
        VertexSet r(width_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = f(words_[i], o.words_[i]);
        return r;
    }

    template <class F>
    VertexSet& apply_in_place(const VertexSet& o, F f) {
        check_same_width(o);
        for (size_t i = 0; i < words_.size(); ++i) f(words_[i], o.words_[i]);
        return *this;
    }

    static int check_width(int width) {
        if (width < 0) throw std::invalid_argument("VertexSet: negative width");
        return width;
    }

    static size_t word_count(int width) { return static_cast<size_t>((width + 63) / 64); }

    void check_index(int v) const {
        if (v < 0 || v >= width_)
            throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(width_) + ")");
    }

    void check_same_width(const VertexSet& o) const {
        if (width_ != o.width_) throw std::invalid_argument("VertexSet: width mismatch");
    }

    void trim() {
        if (width_ & 63) words_.back() &= (~uint64_t{0}) >> (64 - (width_ & 63));
        if (width_ == 0 && !words_.empty()) words_.back() = 0;
    }

    int width_;
    std::vector<uint64_t> words_;
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace idcodes
