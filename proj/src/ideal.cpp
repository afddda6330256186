#include "nbhd/ideal.hpp"

#include <algorithm>
#include <cctype>

#include "nbhd/errors.hpp"

namespace nbhd {

std::string to_string(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string s;
    for (VertexId v : m.support) {
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(v);
    }
    return s;
}

MonomialIdeal::MonomialIdeal(int ambient_n) : n_(ambient_n) {
    if (n_ < 0 || n_ > kMaxVertices) throw ParameterError("ideal: ambient variable count out of range");
}

MonomialIdeal MonomialIdeal::unit(int n) {
    MonomialIdeal i(n);
    i.unit_ = true;
    return i;
}

std::vector<VertexSet> MonomialIdeal::supports() const {
    std::vector<VertexSet> s;
    s.reserve(gens_.size());
    for (const auto& g : gens_) s.push_back(g.support);
    return s;
}

int MonomialIdeal::min_degree() const {
    int d = n_ + 1;
    for (const auto& g : gens_) d = std::min(d, g.degree());
    return unit_ ? 0 : d;
}

int MonomialIdeal::max_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (unit_) return true;
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal minimalize(const std::vector<Monomial>& gens, int n) {
    MonomialIdeal out(n);
    std::vector<VertexSet> supports;
    for (const auto& g : gens) {
        if (g.is_unit()) throw ParameterError("ideal: unit monomial is not a valid generator");
        if (!g.support.is_subset_of(VertexSet::full(n)))
            throw ParameterError("ideal: generator " + to_string(g) + " uses a variable beyond x" + std::to_string(n));
        supports.push_back(g.support);
    }
    for (VertexSet s : inclusion_minimal(std::move(supports))) out.gens_.push_back(Monomial{s});
    return out;
}

MonomialIdeal minimalize(const std::vector<VertexSet>& supports, int n) {
    std::vector<Monomial> gens;
    gens.reserve(supports.size());
    for (VertexSet s : supports) gens.push_back(Monomial{s});
    return minimalize(gens, n);
}

MonomialIdeal closed_neighborhood_ideal(const Graph& g) { return closed_neighborhood_ideal(g, g.vertices()); }

MonomialIdeal closed_neighborhood_ideal(const Graph& g, VertexSet keep) {
    std::vector<VertexSet> s;
    for (VertexId v : keep & g.vertices()) s.push_back((g.neighbors(v) & keep) | VertexSet::single(v));
    return minimalize(s, g.order());
}

MonomialIdeal dominating_ideal(const Graph& g) { return minimalize(minimal_dominating_sets(g), g.order()); }

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<VertexSet> s;
    for (auto [u, v] : g.edges()) s.push_back(VertexSet{u, v});
    return minimalize(s, g.order());
}

MonomialIdeal path_ideal_3(int n) {
    if (n < 3) throw ParameterError("path_ideal_3.n: must be >= 3, got " + std::to_string(n));
    std::vector<VertexSet> s;
    for (int i = 1; i + 2 <= n; ++i) s.push_back(VertexSet{i, i + 1, i + 2});
    return minimalize(s, n);
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
    if (!ideal.is_proper_nonzero()) throw DomainError("alexander dual: undefined for the zero or unit ideal");
    return minimalize(minimal_transversals(ideal.supports()), ideal.ambient());
}

std::vector<VertexSet> minimal_primes(const MonomialIdeal& ideal) {
    if (!ideal.is_proper_nonzero()) throw DomainError("minimal primes: undefined for the zero or unit ideal");
    return minimal_transversals(ideal.supports());
}

HeightPair height_and_bight(const MonomialIdeal& ideal) {
    HeightPair h{ideal.ambient() + 1, 0};
    for (VertexSet p : minimal_primes(ideal)) {
        h.height = std::min(h.height, p.size());
        h.big_height = std::max(h.big_height, p.size());
    }
    return h;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m) {
    if (ideal.is_unit() || ideal.contains(m)) return MonomialIdeal::unit(ideal.ambient());
    std::vector<VertexSet> s;
    for (VertexSet g : ideal.supports()) s.push_back(g - m.support);
    return minimalize(s, ideal.ambient());
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ambient() != b.ambient())
        throw ParameterError("ideal sum: ambient rings differ (" + std::to_string(a.ambient()) + " vs " +
                             std::to_string(b.ambient()) + " variables)");
    if (a.is_unit() || b.is_unit()) return MonomialIdeal::unit(a.ambient());
    std::vector<Monomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return minimalize(gens, a.ambient());
}

MonomialIdeal squarefree_component(const MonomialIdeal& ideal, int d) {
    if (d < 1) throw ParameterError("squarefree component: degree must be >= 1");
    const int n = ideal.ambient();
    std::vector<VertexSet> s;
    if (d <= n) {
        // Gosper's hack over d-subsets of {1..n}.
        std::uint64_t c = (std::uint64_t{1} << d) - 1, limit = std::uint64_t{1} << n;
        while (c < limit) {
            Monomial m{VertexSet(static_cast<std::uint32_t>(c))};
            if (ideal.contains(m)) s.push_back(m.support);
            std::uint64_t lo = c & (~c + 1), hi = c + lo;
            c = (((hi ^ c) >> 2) / lo) | hi;
        }
    }
    return minimalize(s, n);
}

MonomialIdeal variable_ideal(VertexSet vars, int n) {
    std::vector<VertexSet> s;
    for (VertexId v : vars) s.push_back(VertexSet::single(v));
    return minimalize(s, n);
}

// ---------------------------------------------------------------------------

std::string to_m2(const MonomialIdeal& ideal) {
    if (ideal.is_unit()) return "ideal(1)";
    std::string s = "ideal(";
    for (std::size_t i = 0; i < ideal.gens().size(); ++i) {
        if (i) s += ", ";
        s += to_string(ideal.gens()[i]);
    }
    return s + ")";
}

namespace {

class M2Parser {
public:
    M2Parser(const std::string& text, int n) : t_(text), n_(n) {}

    MonomialIdeal parse() {
        expect("ideal");
        expect("(");
        std::vector<Monomial> gens;
        bool unit = false;
        skip_ws();
        if (peek() != ')') {
            while (true) {
                skip_ws();
                if (peek() == '1') {
                    ++pos_;
                    unit = true;
                } else {
                    gens.push_back(monomial());
                }
                skip_ws();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                break;
            }
        }
        expect(")");
        skip_ws();
        if (pos_ != t_.size()) fail("trailing input");
        if (unit) return MonomialIdeal::unit(n_);
        return minimalize(gens, n_);
    }

private:
    Monomial monomial() {
        Monomial m;
        while (true) {
            skip_ws();
            if (peek() != 'x') fail("expected a variable");
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a variable index");
            long idx = std::stol(t_.substr(start, pos_ - start));
            if (idx < 1 || idx > n_) fail("variable x" + std::to_string(idx) + " outside x1..x" + std::to_string(n_));
            m.support.insert(static_cast<VertexId>(idx));
            skip_ws();
            if (peek() != '*') return m;
            ++pos_;
        }
    }

    void skip_ws() {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < t_.size() ? t_[pos_] : '\0'; }
    void expect(const std::string& tok) {
        skip_ws();
        if (t_.compare(pos_, tok.size(), tok) != 0) fail("expected '" + tok + "'");
        pos_ += tok.size();
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParameterError("ideal text at offset " + std::to_string(pos_) + ": " + what);
    }

    const std::string& t_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

MonomialIdeal parse_m2(const std::string& text, int n) { return M2Parser(text, n).parse(); }

}  // namespace nbhd
