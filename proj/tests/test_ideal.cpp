#include <random>

#include "doctest.h"
#include "nbhd/enumerate.hpp"
#include "nbhd/errors.hpp"
#include "nbhd/ideal.hpp"
#include "oracles.hpp"

using namespace nbhd;

namespace {
MonomialIdeal I(const std::string& text, int n) { return parse_m2(text, n); }
}  // namespace

TEST_CASE("minimalize") {
    CHECK(to_m2(minimalize(std::vector<VertexSet>{{1, 2}, {1, 2, 3}, {2, 3}}, 3)) == "ideal(x1*x2, x2*x3)");
    CHECK(to_m2(minimalize(std::vector<VertexSet>{{1}}, 1)) == "ideal(x1)");
    Graph p5 = graph_from_dsl("path:5");
    std::vector<VertexSet> raw;
    for (VertexId v = 1; v <= 5; ++v) raw.push_back(closed_neighborhood(p5, v));
    CHECK(minimalize(raw, 5).num_gens() == 3);
    CHECK_THROWS_AS(minimalize(std::vector<Monomial>{Monomial{}}, 3), ParameterError);
    CHECK_THROWS_AS(minimalize(std::vector<VertexSet>{{4}}, 3), ParameterError);
}

TEST_CASE("graph ideals") {
    Graph p5 = graph_from_dsl("path:5");
    CHECK(to_m2(closed_neighborhood_ideal(p5)) == "ideal(x1*x2, x2*x3*x4, x4*x5)");
    CHECK(dominating_ideal(p5) == I("ideal(x2*x4, x2*x5, x1*x4, x1*x3*x5)", 5));
    CHECK(to_m2(closed_neighborhood_ideal(graph_from_dsl("complete:3"))) == "ideal(x1*x2*x3)");
    CHECK(to_m2(closed_neighborhood_ideal(graph_from_dsl("edgeless:2"))) == "ideal(x1, x2)");
    CHECK(to_m2(dominating_ideal(graph_from_dsl("complete:3"))) == "ideal(x1, x2, x3)");
    // K_{1,2}: center 1, leaves 2 and 3
    CHECK(to_m2(dominating_ideal(graph_from_dsl("kpartite:1,2"))) == "ideal(x1, x2*x3)");

    CHECK(to_m2(edge_ideal(graph_from_dsl("path:3"))) == "ideal(x1*x2, x2*x3)");
    CHECK(edge_ideal(graph_from_dsl("edgeless:3")).is_zero());
    CHECK(edge_ideal(graph_from_dsl("kpartite:2,2")).num_gens() == 4);

    CHECK(to_m2(path_ideal_3(3)) == "ideal(x1*x2*x3)");
    CHECK(to_m2(path_ideal_3(5)) == "ideal(x1*x2*x3, x2*x3*x4, x3*x4*x5)");
    CHECK(path_ideal_3(4).num_gens() == 2);
    CHECK_THROWS_AS(path_ideal_3(2), ParameterError);

    // induced-subgraph variant keeps the ambient ring
    CHECK(to_m2(closed_neighborhood_ideal(p5, VertexSet{3, 4, 5})) == "ideal(x3*x4, x4*x5)");
}

TEST_CASE("alexander dual") {
    Graph p5 = graph_from_dsl("path:5");
    CHECK(alexander_dual(closed_neighborhood_ideal(p5)) == dominating_ideal(p5));
    CHECK(to_m2(alexander_dual(I("ideal(x1*x2*x3)", 3))) == "ideal(x1, x2, x3)");
    CHECK(to_m2(alexander_dual(I("ideal(x1, x2)", 2))) == "ideal(x1*x2)");
    CHECK_THROWS_AS(alexander_dual(MonomialIdeal::zero(3)), DomainError);
    CHECK_THROWS_AS(alexander_dual(MonomialIdeal::unit(3)), DomainError);

    SUBCASE("involution and cover oracle on random ideals") {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 300; ++trial) {
            int n = 1 + trial % 8;
            MonomialIdeal ideal = oracle::random_ideal(rng, n, 6);
            MonomialIdeal dual = alexander_dual(ideal);
            CHECK(alexander_dual(dual) == ideal);
            CHECK(oracle::bits_of(dual.supports()) == oracle::minimal_covers(ideal.supports(), n));
        }
    }
}

TEST_CASE("NI dual equals DI on all small graphs and trees") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n))
            CHECK(alexander_dual(closed_neighborhood_ideal(g)) == dominating_ideal(g));
    for (int n = 1; n <= 9; ++n)
        for (const Graph& t : enumerate_trees(n))
            CHECK(alexander_dual(closed_neighborhood_ideal(t)) == dominating_ideal(t));
}

TEST_CASE("minimal primes and heights") {
    Graph p5 = graph_from_dsl("path:5");
    auto primes = minimal_primes(closed_neighborhood_ideal(p5));
    CHECK(oracle::bits_of(primes) == oracle::minimal_dominating_sets(p5));
    CHECK(minimal_primes(I("ideal(x1*x2)", 2)) == std::vector<VertexSet>{VertexSet{1}, VertexSet{2}});
    CHECK(minimal_primes(I("ideal(x1, x2*x3)", 3)) == std::vector<VertexSet>{VertexSet{1, 2}, VertexSet{1, 3}});
    CHECK(oracle::minimal_covers({VertexSet{1}, VertexSet{2, 3}}, 3) ==
          std::set<std::uint32_t>{VertexSet{1, 2}.bits(), VertexSet{1, 3}.bits()});

    auto h = height_and_bight(closed_neighborhood_ideal(p5));
    CHECK((h.height == 2 && h.big_height == 3));
    h = height_and_bight(I("ideal(x1*x2*x3)", 3));
    CHECK((h.height == 1 && h.big_height == 1));
    // covers of {24, 25, 14, 135}
    auto covers = oracle::minimal_covers(dominating_ideal(p5).supports(), 5);
    int lo = 5, hi = 0;
    for (auto c : covers) lo = std::min(lo, std::popcount(c)), hi = std::max(hi, std::popcount(c));
    h = height_and_bight(dominating_ideal(p5));
    CHECK((h.height == lo && h.big_height == hi));
    CHECK((lo == 2 && hi == 3));
    CHECK_THROWS_AS(height_and_bight(MonomialIdeal::zero(2)), DomainError);
}

TEST_CASE("colon by a monomial") {
    MonomialIdeal ni = closed_neighborhood_ideal(graph_from_dsl("path:5"));
    CHECK(colon_by_monomial(ni, Monomial{{4, 5}}).is_unit());
    CHECK(to_m2(colon_by_monomial(I("ideal(x1*x2, x2*x3*x4)", 4), Monomial{{1}})) == "ideal(x2)");
    CHECK(to_m2(colon_by_monomial(I("ideal(x1*x2)", 3), Monomial{{3}})) == "ideal(x1*x2)");
    CHECK(colon_by_monomial(MonomialIdeal::zero(3), Monomial{{1}}).is_zero());

    SUBCASE("membership brute force: u in I:m iff u*m in I") {
        std::mt19937 rng(9);
        for (int trial = 0; trial < 200; ++trial) {
            int n = 1 + trial % 6;
            MonomialIdeal ideal = oracle::random_ideal(rng, n, 5);
            Monomial m{VertexSet(std::uniform_int_distribution<std::uint32_t>(0, (1u << n) - 1)(rng))};
            MonomialIdeal q = colon_by_monomial(ideal, m);
            for (std::uint32_t u = 0; u < (1u << n); ++u) {
                bool expected = oracle::member(ideal.supports(), u | m.support.bits());
                CHECK(q.contains(Monomial{VertexSet(u)}) == expected);
                CHECK(ideal.contains(Monomial{VertexSet(u)}) == oracle::member(ideal.supports(), u));
            }
        }
    }

    SUBCASE("leaf colon identity on a tree") {
        // leaf x with neighbor y: (NI minus the generator x*y) : y = NI(G \ {x, y})
        Graph g = graph_from_dsl("gstar:3,2,4");
        VertexId x = 1, y = 2;
        std::vector<VertexSet> rest;
        for (VertexId w = 1; w <= g.order(); ++w)
            if (w != x && w != y) rest.push_back(closed_neighborhood(g, w));
        MonomialIdeal j = minimalize(rest, g.order());
        MonomialIdeal smaller = closed_neighborhood_ideal(g, g.vertices() - VertexSet{x, y});
        CHECK(colon_by_monomial(j, Monomial{{y}}) == smaller);
        CHECK(colon_by_monomial(j, Monomial{{x, y}}) == smaller);
    }
}

TEST_CASE("ideal sums") {
    CHECK(to_m2(I("ideal(x1*x2)", 2) + I("ideal(x2)", 2)) == "ideal(x2)");
    MonomialIdeal a = I("ideal(x1*x3)", 3);
    CHECK(a + MonomialIdeal::zero(3) == a);
    CHECK((a + MonomialIdeal::unit(3)).is_unit());
    CHECK_THROWS_AS(a + MonomialIdeal::zero(4), ParameterError);

    Graph k22 = graph_from_dsl("kpartite:2,2");
    MonomialIdeal di = edge_ideal(k22) + I("ideal(x1*x2, x3*x4)", 4);
    CHECK(di.num_gens() == 6);
    CHECK(di == dominating_ideal(k22));
}

TEST_CASE("squarefree components") {
    CHECK(to_m2(squarefree_component(I("ideal(x1*x2)", 3), 3)) == "ideal(x1*x2*x3)");
    CHECK(to_m2(squarefree_component(I("ideal(x1*x2, x3)", 3), 2)) == "ideal(x1*x2, x1*x3, x2*x3)");
    MonomialIdeal di = dominating_ideal(graph_from_dsl("path:5"));
    CHECK(squarefree_component(di, 3).contains(Monomial{{1, 3, 5}}));
    std::mt19937 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + trial % 6;
        MonomialIdeal ideal = oracle::random_ideal(rng, n, 4);
        for (int d = 1; d <= n; ++d) {
            MonomialIdeal c = squarefree_component(ideal, d);
            for (const Monomial& g : c.gens()) CHECK(g.degree() == d);
            for (std::uint32_t u = 0; u < (1u << n); ++u)
                if (std::popcount(u) == d)
                    CHECK(c.contains(Monomial{VertexSet(u)}) == oracle::member(ideal.supports(), u));
        }
    }
}

TEST_CASE("ideal text format") {
    MonomialIdeal a = I("  ideal( x4*x5 ,x1*x2,  x2 * x3 * x4 ) ", 5);
    CHECK(to_m2(a) == "ideal(x1*x2, x2*x3*x4, x4*x5)");
    CHECK(parse_m2(to_m2(a), 5) == a);
    CHECK(parse_m2("ideal()", 3).is_zero());
    CHECK(to_m2(MonomialIdeal::zero(3)) == "ideal()");
    CHECK(parse_m2("ideal(1)", 3).is_unit());
    CHECK(to_m2(MonomialIdeal::unit(3)) == "ideal(1)");
    CHECK_THROWS_AS(parse_m2("ideal(x1*x9)", 5), ParameterError);
    CHECK_THROWS_AS(parse_m2("ideal(x1*)", 5), ParameterError);
    CHECK_THROWS_AS(parse_m2("ideal(x1) x", 5), ParameterError);
    CHECK_THROWS_AS(parse_m2("(x1)", 5), ParameterError);
    // round trip on random ideals
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        MonomialIdeal r = oracle::random_ideal(rng, 8, 6);
        CHECK(parse_m2(to_m2(r), 8) == r);
    }
}
