#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nbhd/graph.hpp"
#include "nbhd/vertex_set.hpp"

namespace nbhd {

/// Squarefree monomial, identified with its support. The empty support is the unit 1.
struct Monomial {
    VertexSet support;

    int degree() const { return support.size(); }
    bool is_unit() const { return support.empty(); }
    bool divides(const Monomial& m) const { return support.is_subset_of(m.support); }
    bool operator==(const Monomial&) const = default;
};

/// "x1*x2*x4", or "1" for the unit monomial.
std::string to_string(const Monomial& m);

/// Squarefree monomial ideal of k[x_1..x_n] held by its minimal generators
/// (lex ordered on supports). Zero and unit ideals are explicit states; the unit
/// ideal keeps no generators.
class MonomialIdeal {
public:
    /// The zero ideal of k[x_1..x_n].
    explicit MonomialIdeal(int ambient_n = 0);

    static MonomialIdeal zero(int n) { return MonomialIdeal(n); }
    static MonomialIdeal unit(int n);

    int ambient() const { return n_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    std::vector<VertexSet> supports() const;
    std::size_t num_gens() const { return gens_.size(); }
    bool is_zero() const { return !unit_ && gens_.empty(); }
    bool is_unit() const { return unit_; }
    bool is_proper_nonzero() const { return !unit_ && !gens_.empty(); }
    int min_degree() const;
    int max_degree() const;

    /// m lies in the ideal iff some generator divides it.
    bool contains(const Monomial& m) const;

    bool operator==(const MonomialIdeal&) const = default;

private:
    friend MonomialIdeal minimalize(const std::vector<Monomial>&, int);
    int n_ = 0;
    bool unit_ = false;
    std::vector<Monomial> gens_;
};

/// Minimal generating set of the ideal spanned by gens. Throws ParameterError on
/// a unit generator or a variable outside 1..n.
MonomialIdeal minimalize(const std::vector<Monomial>& gens, int n);
MonomialIdeal minimalize(const std::vector<VertexSet>& supports, int n);

/// Generated by the products over each closed neighborhood N[v].
MonomialIdeal closed_neighborhood_ideal(const Graph& g);
/// Closed neighborhood ideal of the induced subgraph on keep, in the ambient ring of g.
MonomialIdeal closed_neighborhood_ideal(const Graph& g, VertexSet keep);
/// Generated by the products over the minimal dominating sets.
MonomialIdeal dominating_ideal(const Graph& g);
MonomialIdeal edge_ideal(const Graph& g);
/// <x_i x_{i+1} x_{i+2} : 1 <= i <= n-2>; throws ParameterError for n < 3.
MonomialIdeal path_ideal_3(int n);

/// Generators are the minimal transversals of the generator supports.
/// Throws DomainError on the zero or unit ideal.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

/// Minimal primes as the sets of variables generating them, lex ordered.
std::vector<VertexSet> minimal_primes(const MonomialIdeal& ideal);

struct HeightPair {
    int height;
    int big_height;
};
HeightPair height_and_bight(const MonomialIdeal& ideal);

/// I : m. Each generator loses the variables it shares with m; the result is the
/// unit ideal whenever m lies in I.
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m);

/// Throws ParameterError on an ambient ring mismatch.
MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);

/// Generated by every squarefree degree-d monomial in the ideal.
MonomialIdeal squarefree_component(const MonomialIdeal& ideal, int d);

/// Variables x_v, v in vars.
MonomialIdeal variable_ideal(VertexSet vars, int n);

// ---------------------------------------------------------------------------
// Text format
//
//   ideal    := "ideal(" [ monomial { "," monomial } ] ")"
//   monomial := "1" | var { "*" var }
//   var      := "x" positive-integer
//
// Whitespace is allowed between tokens. "ideal()" is the zero ideal and
// "ideal(1)" the unit ideal. Generators are written in lex order of supports,
// separated by ", ". The same text is valid Macaulay2 input over
// QQ[x1..xn] (except the zero ideal, which Macaulay2 spells ideal(0_R)).

std::string to_m2(const MonomialIdeal& ideal);
/// Throws ParameterError on malformed input or a variable index above n.
MonomialIdeal parse_m2(const std::string& text, int n);

}  // namespace nbhd
