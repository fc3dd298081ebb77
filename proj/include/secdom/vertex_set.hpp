#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <string>
#include <vector>

namespace secdom {

using Vertex = int;

// Hard capacity for every graph in this library. Graphs in scope are desk
// scale (tens of vertices); the fixed capacity keeps sets allocation-free.
inline constexpr int kMaxVertices = 512;

// Fixed-capacity bitset of vertex indices. Membership bounds against a
// particular graph are checked by the graph-level operations, not here.
class VertexSet {
    static constexpr int kWords = kMaxVertices / 64;
    std::array<std::uint64_t, kWords> words_{};

public:
    class Iterator {
        const VertexSet* set_ = nullptr;
        int pos_ = kMaxVertices;

    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        Iterator() = default;
        Iterator(const VertexSet* set, int pos) : set_(set), pos_(pos) {}

        Vertex operator*() const { return pos_; }
        Iterator& operator++() {
            pos_ = set_->next_member(pos_ + 1);
            return *this;
        }
        Iterator operator++(int) {
            Iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const Iterator& other) const { return pos_ == other.pos_; }
    };

    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members) {
        for (Vertex v : members) insert(v);
    }
    template <typename Range>
    static VertexSet from_range(const Range& members) {
        VertexSet s;
        for (Vertex v : members) s.insert(v);
        return s;
    }
    // {0, 1, ..., n-1}
    static VertexSet prefix(int n);

    bool contains(Vertex v) const {
        return v >= 0 && v < kMaxVertices && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
    }
    // Vertex indices outside [0, kMaxVertices) throw GraphError.
    void insert(Vertex v);
    void erase(Vertex v);

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }
    // Smallest member, or -1 when empty.
    Vertex first() const { return empty() ? -1 : next_member(0); }
    // Largest member, or -1 when empty.
    Vertex last() const;
    // Smallest member >= from, or kMaxVertices when none.
    int next_member(int from) const;

    bool is_subset_of(const VertexSet& other) const {
        for (int i = 0; i < kWords; ++i)
            if ((words_[i] & ~other.words_[i]) != 0) return false;
        return true;
    }
    bool intersects(const VertexSet& other) const {
        for (int i = 0; i < kWords; ++i)
            if ((words_[i] & other.words_[i]) != 0) return true;
        return false;
    }
    int intersection_size(const VertexSet& other) const {
        int c = 0;
        for (int i = 0; i < kWords; ++i) c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    // Compares ascending member sequences lexicographically.
    friend bool lex_less(const VertexSet& a, const VertexSet& b);

    Iterator begin() const { return Iterator(this, next_member(0)); }
    Iterator end() const { return Iterator(this, kMaxVertices); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }
    // "{0,2,4}"
    std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace secdom
