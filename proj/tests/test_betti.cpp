#include <random>

#include "doctest.h"
#include "nbhd/betti.hpp"
#include "nbhd/enumerate.hpp"
#include "nbhd/errors.hpp"
#include "oracles.hpp"

using namespace nbhd;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime_field(2);

MonomialIdeal I(const std::string& text, int n) { return parse_m2(text, n); }

using Entries = std::map<std::pair<int, int>, std::uint64_t>;

}  // namespace

TEST_CASE("betti tables of small ideals") {
    CHECK(betti_table(I("ideal(x1*x2)", 2), Q).entries() == Entries{{{0, 0}, 1}, {{1, 2}, 1}});
    MonomialIdeal p3 = closed_neighborhood_ideal(graph_from_dsl("path:3"));
    CHECK(betti_table(p3, Q).entries() == Entries{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}});
    // Koszul complex on three variables
    CHECK(betti_table(I("ideal(x1, x2, x3)", 3), Q).entries() ==
          Entries{{{0, 0}, 1}, {{1, 1}, 3}, {{2, 2}, 3}, {{3, 3}, 1}});
    // complete intersection of two quadrics
    CHECK(betti_table(I("ideal(x1*x2, x3*x4)", 4), Q).entries() == Entries{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 4}, 1}});

    BettiTable p5 = betti_table(closed_neighborhood_ideal(graph_from_dsl("path:5")), Q);
    CHECK(p5.regularity() == 2);
    CHECK(p5.projective_dimension() == 3);
    BettiTable p6 = betti_table(closed_neighborhood_ideal(graph_from_dsl("path:6")), Q);
    CHECK(p6.regularity() == 3);
    CHECK(p6.projective_dimension() == 3);
    CHECK(betti_table(closed_neighborhood_ideal(graph_from_dsl("book:2")), Q).regularity() == 3);
}

TEST_CASE("regularity accessors") {
    BettiTable t = betti_table(I("ideal(x1*x2)", 2), Q);
    CHECK(t.regularity() == 1);
    CHECK(t.projective_dimension() == 1);
    CHECK(t.ideal_regularity() == 2);
    CHECK(t.totals() == std::vector<std::uint64_t>{1, 1});
}

TEST_CASE("engine input validation and guards") {
    CHECK_THROWS_AS(betti_table(MonomialIdeal::zero(3), Q), DomainError);
    CHECK_THROWS_AS(betti_table(MonomialIdeal::unit(3), Q), DomainError);
    CHECK_THROWS_AS(betti_table_oracle(MonomialIdeal::zero(3), Q), DomainError);
    EngineOptions tight;
    tight.max_lattice = 3;
    CHECK_THROWS_AS(betti_table(closed_neighborhood_ideal(graph_from_dsl("path:6")), Q, tight), ResourceError);
    tight = {};
    tight.max_faces = 4;
    CHECK_THROWS_AS(betti_table(closed_neighborhood_ideal(graph_from_dsl("path:6")), Q, tight), ResourceError);
    tight = {};
    tight.max_variables = 4;
    CHECK_THROWS_AS(betti_table(closed_neighborhood_ideal(graph_from_dsl("path:5")), Q, tight), ResourceError);
    try {
        EngineOptions o;
        o.max_lattice = 3;
        betti_table(closed_neighborhood_ideal(graph_from_dsl("path:6")), Q, o);
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("3 elements") != std::string::npos);
    }
}

TEST_CASE("lcm lattice holds every union of generators") {
    MonomialIdeal ideal = I("ideal(x1*x2, x2*x3, x4)", 4);
    auto lattice = lcm_lattice(ideal, 100);
    CHECK(lattice.size() == 7);
    std::mt19937 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        MonomialIdeal r = oracle::random_ideal(rng, 7, 5);
        auto l = lcm_lattice(r, 1000);
        std::set<std::uint32_t> expected;
        auto gens = r.supports();
        for (std::uint32_t pick = 1; pick < (1u << gens.size()); ++pick) {
            std::uint32_t u = 0;
            for (std::size_t k = 0; k < gens.size(); ++k)
                if ((pick >> k) & 1u) u |= gens[k].bits();
            expected.insert(u);
        }
        CHECK(oracle::bits_of(l) == expected);
    }
}

TEST_CASE("oracle agreement") {
    CHECK(betti_table(I("ideal(x1*x2)", 2), Q) == betti_table_oracle(I("ideal(x1*x2)", 2), Q));
    for (int n = 2; n <= 10; ++n) {
        MonomialIdeal ni = closed_neighborhood_ideal(graph_from_dsl("path:" + std::to_string(n)));
        CHECK(betti_table(ni, Q) == betti_table_oracle(ni, Q));
    }
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        MonomialIdeal r = oracle::random_ideal(rng, 1 + trial % 8, 6);
        FieldSpec f = trial % 2 ? Q : F2;
        BettiTable t = betti_table(r, f);
        CHECK(t == betti_table_oracle(r, f));
        CHECK(t.alternating_sums() == hilbert_numerator(r));
    }
}

TEST_CASE("hilbert numerator routes agree") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        MonomialIdeal r = oracle::random_ideal(rng, 1 + trial % 9, 7);
        CHECK(hilbert_numerator(r) == hilbert_numerator_from_faces(r));
        auto sum = hilbert_numerator(r);
        long long total = 0;
        for (auto c : sum) total += c;
        CHECK(total == 0);
    }
    // more than 20 generators takes the face route
    MonomialIdeal big = squarefree_component(I("ideal(x1)", 8), 3);
    CHECK(big.num_gens() == 21);
    CHECK(betti_table(big, Q).alternating_sums() == hilbert_numerator(big));
}

TEST_CASE("rationals and GF(2) agree on graph families") {
    for (const char* dsl : {"path:7", "book:2", "gstar:2,3,3", "kpartite:2,3", "complete:4", "edgeless:3"}) {
        Graph g = graph_from_dsl(dsl);
        for (const MonomialIdeal& ideal : {closed_neighborhood_ideal(g), dominating_ideal(g)})
            CHECK(betti_table(ideal, Q) == betti_table(ideal, F2));
    }
}

TEST_CASE("projective dimension bounds big height on all graphs up to six vertices") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            MonomialIdeal ni = closed_neighborhood_ideal(g);
            CHECK(betti_table(ni, Q).projective_dimension() >= height_and_bight(ni).big_height);
        }
}

TEST_CASE("reg and pd add over disjoint unions") {
    const char* parts[] = {"path:4", "book:1", "kpartite:1,3", "edgeless:2", "gstar:2,3"};
    for (const char* a : parts)
        for (const char* b : parts) {
            Graph ga = graph_from_dsl(a), gb = graph_from_dsl(b);
            BettiTable ta = betti_table(closed_neighborhood_ideal(ga), Q);
            BettiTable tb = betti_table(closed_neighborhood_ideal(gb), Q);
            BettiTable tu = betti_table(closed_neighborhood_ideal(disjoint_union(ga, gb)), Q);
            CHECK(tu.regularity() == ta.regularity() + tb.regularity());
            CHECK(tu.projective_dimension() == ta.projective_dimension() + tb.projective_dimension());
        }
}

TEST_CASE("parallel engine output does not depend on the worker count") {
    MonomialIdeal ni = closed_neighborhood_ideal(graph_from_dsl("book:3"));
    EngineOptions one, four;
    four.jobs = 4;
    CHECK(betti_table(ni, Q, one) == betti_table(ni, Q, four));
    CHECK(betti_table_oracle(ni, F2, four) == betti_table(ni, F2, one));
}

TEST_CASE("linear resolutions") {
    CHECK(has_linear_resolution(edge_ideal(graph_from_dsl("kpartite:2,2")), Q));
    CHECK_FALSE(has_linear_resolution(I("ideal(x1*x2, x3*x4)", 4), Q));
    CHECK(has_linear_resolution(I("ideal(x1*x2*x3)", 3), Q));
    CHECK_THROWS_AS(has_linear_resolution(I("ideal(x1, x2*x3)", 3), Q), DomainError);
}

TEST_CASE("linear quotients") {
    MonomialIdeal di = dominating_ideal(graph_from_dsl("kpartite:2,2"));
    auto order = linear_quotients_order(di);
    REQUIRE(order.has_value());
    CHECK(order->size() == 6);
    CHECK(to_string(order->front()) == "x1*x2");
    CHECK(linear_quotients_order(I("ideal(x1)", 1)).has_value());
    CHECK_FALSE(linear_quotients_order(I("ideal(x1*x2, x3*x4)", 4)).has_value());

    std::vector<VertexSet> many;
    for (int v = 1; v <= 21; ++v) many.push_back(VertexSet{v, v + 1});
    CHECK_THROWS_AS(linear_quotients_order(minimalize(many, 22)), ResourceError);

    SUBCASE("each colon in the returned order is generated by variables") {
        std::mt19937 rng(41);
        for (int trial = 0; trial < 120; ++trial) {
            MonomialIdeal r = oracle::random_ideal(rng, 2 + trial % 6, 6);
            auto ord = linear_quotients_order(r);
            if (!ord) continue;
            for (std::size_t t = 1; t < ord->size(); ++t) {
                std::vector<Monomial> prefix(ord->begin(), ord->begin() + static_cast<long>(t));
                MonomialIdeal q = colon_by_monomial(minimalize(prefix, r.ambient()), (*ord)[t]);
                CHECK(q.max_degree() == 1);
            }
            // linear quotients imply componentwise linear
            CHECK(is_componentwise_linear(r, Q));
        }
    }
}

TEST_CASE("componentwise linear and sequentially Cohen-Macaulay") {
    Graph k22 = graph_from_dsl("kpartite:2,2");
    CHECK(is_componentwise_linear(dominating_ideal(k22), Q));
    CHECK_FALSE(is_componentwise_linear(I("ideal(x1*x2, x3*x4)", 4), Q));
    CHECK(is_sequentially_cm(closed_neighborhood_ideal(k22), Q));
    CHECK(is_sequentially_cm(closed_neighborhood_ideal(graph_from_dsl("complete:3")), Q));

    Graph c6(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
    bool scm = is_sequentially_cm(closed_neighborhood_ideal(c6), Q);
    MESSAGE("R/NI(C6) sequentially Cohen-Macaulay over QQ: " << std::string(scm ? "yes" : "no"));
}

TEST_CASE("betti serialization") {
    BettiTable p3 = betti_table(closed_neighborhood_ideal(graph_from_dsl("path:3")), Q);
    CHECK(to_json(p3).dump() == R"({"n":3,"entries":[[0,0,1],[1,2,2],[2,3,1]]})");
    CHECK(to_text(p3) ==
          "       0 1 2\n"
          "total: 1 2 1\n"
          "    0: 1 . .\n"
          "    1: . 2 1\n");
    std::mt19937 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        BettiTable t = betti_table(oracle::random_ideal(rng, 7, 5), Q);
        CHECK(betti_from_json(nlohmann::json::parse(to_json(t).dump())) == t);
    }
    CHECK_THROWS_AS(betti_from_json(nlohmann::json::parse(R"({"n":2,"entries":[[1,2]]})")), ParameterError);
}
