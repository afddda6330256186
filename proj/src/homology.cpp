#include "nbhd/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace nbhd {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

/// Faces bucketed by dimension, each bucket sorted by bitmask. Bucket k+1 holds dimension k.
struct GradedFaces {
    std::vector<std::vector<std::uint32_t>> by_dim;

    explicit GradedFaces(std::span<const VertexSet> faces) {
        int top = -2;
        for (VertexSet f : faces) top = std::max(top, f.size() - 1);
        by_dim.resize(static_cast<std::size_t>(top + 2));
        for (VertexSet f : faces) by_dim[f.size()].push_back(f.bits());
        for (auto& b : by_dim) {
            std::sort(b.begin(), b.end());
            b.erase(std::unique(b.begin(), b.end()), b.end());
        }
    }

    int top_dim() const { return static_cast<int>(by_dim.size()) - 2; }
    std::size_t count(int k) const { return by_dim[k + 1].size(); }
    int index(int k, std::uint32_t face) const {
        const auto& b = by_dim[k + 1];
        auto it = std::lower_bound(b.begin(), b.end(), face);
        if (it == b.end() || *it != face) throw std::logic_error("face list is not closed under subsets");
        return static_cast<int>(it - b.begin());
    }

    /// Boundary of the i-th k-face as (row, sign) sorted by row.
    std::vector<std::pair<int, int>> boundary(int k, std::size_t i) const {
        std::uint32_t f = by_dim[k + 1][i];
        std::vector<std::pair<int, int>> col;
        int pos = 0;
        for (std::uint32_t b = f; b != 0; b &= b - 1, ++pos) {
            std::uint32_t face = f & ~(b & (~b + 1));
            col.emplace_back(index(k - 1, face), pos % 2 == 0 ? 1 : -1);
        }
        std::sort(col.begin(), col.end());
        return col;
    }
};

// ---------------------------------------------------------------------------
// Sparse column reduction. Each ring supplies the entry type and
// eliminate(target, pivot): clear target's lowest entry using pivot (same low row).

struct ModP {
    using T = std::uint32_t;
    std::uint64_t p;

    T from_sign(int s) const { return s > 0 ? 1 : static_cast<T>(p - 1); }
    T inv(T a) const {
        std::uint64_t r = 1, b = a, e = p - 2;
        for (; e; e >>= 1, b = b * b % p)
            if (e & 1) r = r * b % p;
        return static_cast<T>(r);
    }
    void eliminate(std::vector<std::pair<int, T>>& tgt, const std::vector<std::pair<int, T>>& piv) const {
        std::uint64_t factor = std::uint64_t{tgt.back().second} * inv(piv.back().second) % p;
        std::vector<std::pair<int, T>> out;
        out.reserve(tgt.size() + piv.size());
        std::size_t a = 0, b = 0;
        while (a < tgt.size() || b < piv.size()) {
            if (b == piv.size() || (a < tgt.size() && tgt[a].first < piv[b].first)) {
                out.push_back(tgt[a++]);
            } else {
                std::uint64_t sub = factor * piv[b].second % p;
                std::uint64_t val = p - sub;
                int row = piv[b].first;
                if (a < tgt.size() && tgt[a].first == row) val = (tgt[a++].second + val) % p;
                else val %= p;
                ++b;
                if (val != 0) out.emplace_back(row, static_cast<T>(val));
            }
        }
        tgt.swap(out);
    }
};

template <class Int>
struct Integers {
    using T = Int;

    static T from_sign(int s) { return T(s); }

    static T mul(const T& x, const T& y) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
            T r;
            if (__builtin_mul_overflow(x, y, &r)) throw Overflow{};
            return r;
        } else {
            return x * y;
        }
    }
    static T sub(const T& x, const T& y) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
            T r;
            if (__builtin_sub_overflow(x, y, &r)) throw Overflow{};
            return r;
        } else {
            return x - y;
        }
    }
    static T gcd(T a, T b) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
            return std::gcd(a, b);
        } else {
            return boost::multiprecision::gcd(a, b);
        }
    }

    /// tgt <- (a/g) tgt - (b/g) piv, then divided by its content.
    void eliminate(std::vector<std::pair<int, T>>& tgt, const std::vector<std::pair<int, T>>& piv) const {
        T a = piv.back().second, b = tgt.back().second;
        T g = gcd(a, b);
        if (g < 0) g = -g;
        T ca = a / g, cb = b / g;
        std::vector<std::pair<int, T>> out;
        out.reserve(tgt.size() + piv.size());
        std::size_t i = 0, j = 0;
        T content = 0;
        while (i < tgt.size() || j < piv.size()) {
            T val;
            int row;
            if (j == piv.size() || (i < tgt.size() && tgt[i].first < piv[j].first)) {
                row = tgt[i].first;
                val = mul(ca, tgt[i++].second);
            } else if (i == tgt.size() || piv[j].first < tgt[i].first) {
                row = piv[j].first;
                val = sub(T(0), mul(cb, piv[j++].second));
            } else {
                row = tgt[i].first;
                val = sub(mul(ca, tgt[i++].second), mul(cb, piv[j++].second));
            }
            if (val != 0) {
                content = gcd(content, val);
                out.emplace_back(row, std::move(val));
            }
        }
        if (content < 0) content = -content;
        if (content > 1)
            for (auto& e : out) e.second /= content;
        tgt.swap(out);
    }
};

/// Rank of the k-th boundary map; columns whose face is in `cleared` are skipped.
/// Rows that end up as pivots are marked in `pivot_rows`.
template <class Ring>
std::size_t sparse_boundary_rank(const GradedFaces& faces, int k, const Ring& ring, const std::vector<char>& cleared,
                                 std::vector<char>& pivot_rows) {
    using Col = std::vector<std::pair<int, typename Ring::T>>;
    const std::size_t ncols = faces.count(k), nrows = faces.count(k - 1);
    std::vector<Col> reduced(ncols);
    std::vector<int> pivot_of(nrows, -1);
    pivot_rows.assign(nrows, 0);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
        if (!cleared.empty() && cleared[c]) continue;
        Col col;
        for (auto [row, sign] : faces.boundary(k, c)) col.emplace_back(row, ring.from_sign(sign));
        while (!col.empty() && pivot_of[col.back().first] >= 0) ring.eliminate(col, reduced[pivot_of[col.back().first]]);
        if (col.empty()) continue;
        pivot_of[col.back().first] = static_cast<int>(c);
        pivot_rows[col.back().first] = 1;
        reduced[c] = std::move(col);
        ++rank;
    }
    return rank;
}

std::vector<std::uint64_t> homology_from_ranks(const GradedFaces& faces, const std::vector<std::size_t>& rank) {
    // rank[k+1] = rank of the boundary map out of dimension k; rank[0] = 0.
    const int top = faces.top_dim();
    std::vector<std::uint64_t> h(static_cast<std::size_t>(top + 2));
    for (int k = -1; k <= top; ++k) {
        long long next = k + 1 <= top ? static_cast<long long>(rank[k + 2]) : 0;
        long long dim = static_cast<long long>(faces.count(k)) - static_cast<long long>(rank[k + 1]) - next;
        if (dim < 0) throw std::logic_error("negative homology dimension");
        h[k + 1] = static_cast<std::uint64_t>(dim);
    }
    return h;
}

}  // namespace

std::vector<std::uint64_t> reduced_homology(std::span<const VertexSet> faces, FieldSpec field) {
    GradedFaces graded(faces);
    const int top = graded.top_dim();
    if (top < -1) return {};
    std::vector<std::size_t> rank(static_cast<std::size_t>(top + 2), 0);
    std::vector<char> cleared, pivots;
    for (int k = top; k >= 0; --k) {
        if (field.is_rationals()) {
            try {
                rank[k + 1] = sparse_boundary_rank(graded, k, Integers<std::int64_t>{}, cleared, pivots);
            } catch (const Overflow&) {
                rank[k + 1] = sparse_boundary_rank(graded, k, Integers<BigInt>{}, cleared, pivots);
            }
        } else {
            rank[k + 1] = sparse_boundary_rank(graded, k, ModP{field.characteristic()}, cleared, pivots);
        }
        cleared = pivots;
    }
    return homology_from_ranks(graded, rank);
}

// ---------------------------------------------------------------------------
// Dense route

namespace {

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>>& m, std::int64_t p) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (auto& r : m)
        for (auto& x : r) x = ((x % p) + p) % p;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        std::int64_t inv = 1, base = m[r][c];
        for (std::int64_t e = p - 2; e; e >>= 1, base = base * base % p)
            if (e & 1) inv = inv * base % p;
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            std::int64_t f = m[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

template <class T>
std::size_t bareiss_rank(std::vector<std::vector<T>> m) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    T prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                if constexpr (std::is_same_v<T, std::int64_t>) {
                    __int128 v = static_cast<__int128>(m[i][j]) * m[r][c] - static_cast<__int128>(m[i][c]) * m[r][j];
                    v /= prev;
                    if (v > INT64_MAX || v < INT64_MIN) throw Overflow{};
                    m[i][j] = static_cast<std::int64_t>(v);
                } else {
                    m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
                }
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

}  // namespace

std::size_t dense_rank(std::vector<std::vector<std::int64_t>> rows, FieldSpec field) {
    if (rows.empty() || rows[0].empty()) return 0;
    if (!field.is_rationals()) return rank_mod_p(rows, field.characteristic());
    try {
        return bareiss_rank(rows);
    } catch (const Overflow&) {
        std::vector<std::vector<BigInt>> big(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) big[i].assign(rows[i].begin(), rows[i].end());
        return bareiss_rank(std::move(big));
    }
}

std::vector<std::uint64_t> reduced_homology_dense(std::span<const VertexSet> faces, FieldSpec field) {
    GradedFaces graded(faces);
    const int top = graded.top_dim();
    if (top < -1) return {};
    std::vector<std::size_t> rank(static_cast<std::size_t>(top + 2), 0);
    for (int k = 0; k <= top; ++k) {
        // Rows indexed by (k-1)-faces, columns by k-faces.
        std::vector<std::vector<std::int64_t>> m(graded.count(k - 1), std::vector<std::int64_t>(graded.count(k), 0));
        for (std::size_t c = 0; c < graded.count(k); ++c)
            for (auto [row, sign] : graded.boundary(k, c)) m[row][c] = sign;
        rank[k + 1] = dense_rank(std::move(m), field);
    }
    return homology_from_ranks(graded, rank);
}

}  // namespace nbhd
