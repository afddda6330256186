#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace nbhd {

using VertexId = int;

/// Maximum number of vertices (and ring variables) a VertexSet can hold.
inline constexpr int kMaxVertices = 32;

/// Subset of {1..32} packed into a single word. Vertex v lives in bit v-1.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<VertexId> vs) {
        for (VertexId v : vs) insert(v);
    }

    /// {1..n}
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
    }
    static constexpr VertexSet single(VertexId v) { return VertexSet(std::uint32_t{1} << (v - 1)); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(VertexId v) const { return (bits_ >> (v - 1)) & 1u; }
    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    /// Smallest element; undefined on the empty set.
    constexpr VertexId min() const { return std::countr_zero(bits_) + 1; }
    constexpr VertexId max() const { return 32 - std::countl_zero(bits_); }

    constexpr void insert(VertexId v) { bits_ |= std::uint32_t{1} << (v - 1); }
    constexpr void erase(VertexId v) { bits_ &= ~(std::uint32_t{1} << (v - 1)); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    /// Elements in increasing order.
    std::vector<VertexId> elements() const {
        std::vector<VertexId> out;
        out.reserve(size());
        for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    /// "{1,3,5}"
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (VertexId v : elements()) {
            if (!first) s += ',';
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

    /// Iteration over the elements, smallest first.
    class iterator {
    public:
        using value_type = VertexId;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint32_t b) : b_(b) {}
        constexpr VertexId operator*() const { return std::countr_zero(b_) + 1; }
        constexpr iterator& operator++() { b_ &= b_ - 1; return *this; }
        constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;
    private:
        std::uint32_t b_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint32_t bits_ = 0;
};

/// Lexicographic order on the increasing element sequences: {1,2} < {1,2,3} < {1,3} < {2}.
inline bool lex_less(VertexSet a, VertexSet b) {
    std::uint32_t x = a.bits(), y = b.bits();
    while (x != 0 && y != 0) {
        int ax = std::countr_zero(x), by = std::countr_zero(y);
        if (ax != by) return ax < by;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

/// Canonical order for families of sets: lexicographic on sorted supports.
inline void sort_lex(std::vector<VertexSet>& sets) {
    std::sort(sets.begin(), sets.end(), lex_less);
}

/// Inclusion-minimal transversals (hitting sets) of a hypergraph, in lex order.
/// Built incrementally edge by edge with minimality filtering after each step.
/// An empty hypergraph has the single transversal {}; an empty edge has none.
std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& edges);

/// Drops every set that strictly contains another member (and duplicates); lex order.
std::vector<VertexSet> inclusion_minimal(std::vector<VertexSet> sets);

}  // namespace nbhd
