#include <random>
#include <sstream>

#include "doctest.h"
#include "nbhd/errors.hpp"
#include "nbhd/graph.hpp"
#include "oracles.hpp"

using namespace nbhd;

namespace {
std::vector<VertexSet> sets(std::initializer_list<std::initializer_list<VertexId>> l) {
    std::vector<VertexSet> out;
    for (auto s : l) out.emplace_back(s);
    sort_lex(out);
    return out;
}
}  // namespace

TEST_CASE("vertex sets order lexicographically on sorted elements") {
    CHECK(lex_less(VertexSet{1, 2}, VertexSet{1, 2, 3}));
    CHECK(lex_less(VertexSet{1, 2, 3}, VertexSet{1, 3}));
    CHECK(lex_less(VertexSet{1, 3, 5}, VertexSet{1, 4}));
    CHECK_FALSE(lex_less(VertexSet{2}, VertexSet{1, 5}));
    CHECK_FALSE(lex_less(VertexSet{2}, VertexSet{2}));
    CHECK(VertexSet{3, 1}.to_string() == "{1,3}");
}

TEST_CASE("family builders") {
    Graph p5 = graph_from_dsl("path:5");
    CHECK(p5.order() == 5);
    CHECK(p5.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}, {4, 5}});

    // x0=1, x1=2, y0=3, y1=4
    Graph b1 = graph_from_dsl("book:1");
    CHECK(b1.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 4}, {3, 4}});

    Graph e3 = graph_from_dsl("edgeless:3");
    CHECK(e3.order() == 3);
    CHECK(e3.size() == 0);

    SUBCASE("generalized star: arms from the free end, shared vertex last") {
        Graph s = graph_from_dsl("gstar:3,3");
        CHECK(s.order() == 5);
        CHECK(s.edges() == std::vector<Edge>{{1, 2}, {2, 5}, {3, 4}, {4, 5}});
        CHECK(graph_from_dsl("gstar:2,2,2,2").order() == 5);
        CHECK(graph_from_dsl("gstar:2,2,2").degree(4) == 3);
    }
    SUBCASE("multipartite parts are sorted") {
        Graph k = graph_from_dsl("kpartite:2,1");
        CHECK(k.edges() == std::vector<Edge>{{1, 2}, {1, 3}});
        CHECK(graph_from_dsl("kpartite:2,2").size() == 4);
    }
    SUBCASE("disjoint union offsets labels") {
        Graph u = graph_from_dsl("path:2+complete:3");
        CHECK(u.order() == 5);
        CHECK(u.edges() == std::vector<Edge>{{1, 2}, {3, 4}, {3, 5}, {4, 5}});
    }
}

TEST_CASE("family parameter errors name the field") {
    auto message = [](const std::string& dsl) {
        try {
            graph_from_dsl(dsl);
        } catch (const ParameterError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("gstar:3,1").find("gstar.arms[1]") != std::string::npos);
    CHECK(message("path:0").find("path.n") != std::string::npos);
    CHECK(message("book:0").find("book.m") != std::string::npos);
    CHECK(message("kpartite:0,2").find("kpartite.parts[0]") != std::string::npos);
    CHECK(message("wheel:4").find("unknown family") != std::string::npos);
    CHECK(message("path:x").find("path.n") != std::string::npos);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), ParameterError);
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), ParameterError);
}

TEST_CASE("edge list ingestion") {
    std::istringstream in("# a path\n4\n1 2\n2 3 # middle\n\n3 4\n2 1\n");
    Graph g = read_edge_list(in);
    CHECK(g == graph_from_dsl("path:4"));
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream back(out.str());
    CHECK(read_edge_list(back) == g);

    std::istringstream bad("3\n1 2 3\n");
    CHECK_THROWS_AS(read_edge_list(bad), ParameterError);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(read_edge_list(empty), ParameterError);
}

TEST_CASE("closed neighborhoods") {
    CHECK(closed_neighborhood(graph_from_dsl("path:5"), 3) == VertexSet{2, 3, 4});
    CHECK(closed_neighborhood(graph_from_dsl("edgeless:3"), 1) == VertexSet{1});
    CHECK(closed_neighborhood(graph_from_dsl("complete:4"), 2) == VertexSet{1, 2, 3, 4});
    CHECK_THROWS_AS(closed_neighborhood(graph_from_dsl("path:3"), 4), ParameterError);
}

TEST_CASE("matching number") {
    CHECK(matching_number(graph_from_dsl("path:5")) == 2);
    CHECK(matching_number(graph_from_dsl("book:3")) == 4);
    CHECK(matching_number(graph_from_dsl("edgeless:6")) == 0);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + trial % 8;
        Graph g = oracle::random_graph(rng, n, 0.2 + 0.1 * (trial % 5));
        if (g.size() > 16) continue;
        CHECK(matching_number(g) == oracle::matching_number(g));
        CHECK(matching_number(g) <= n / 2);
    }
    // additive over components
    Graph a = graph_from_dsl("book:2"), b = graph_from_dsl("path:5");
    CHECK(matching_number(disjoint_union(a, b)) == matching_number(a) + matching_number(b));
}

TEST_CASE("minimal dominating sets") {
    CHECK(minimal_dominating_sets(graph_from_dsl("path:5")) == sets({{2, 4}, {2, 5}, {1, 4}, {1, 3, 5}}));
    CHECK(minimal_dominating_sets(graph_from_dsl("complete:3")) == sets({{1}, {2}, {3}}));
    CHECK(minimal_dominating_sets(graph_from_dsl("edgeless:2")) == sets({{1, 2}}));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + trial % 9, 0.35);
        auto got = minimal_dominating_sets(g);
        CHECK(oracle::bits_of(got) == oracle::minimal_dominating_sets(g));
        for (VertexSet s : got) {
            CHECK(is_dominating(g, s));
            for (VertexId v : s) CHECK_FALSE(is_dominating(g, s - VertexSet::single(v)));
        }
        CHECK(std::is_sorted(got.begin(), got.end(), lex_less));
    }
}

TEST_CASE("domination numbers") {
    auto d = domination_numbers(graph_from_dsl("path:5"));
    CHECK(d.gamma == 2);
    CHECK(d.gamma_prime == 3);
    d = domination_numbers(graph_from_dsl("complete:5"));
    CHECK((d.gamma == 1 && d.gamma_prime == 1));
    d = domination_numbers(graph_from_dsl("edgeless:4"));
    CHECK((d.gamma == 4 && d.gamma_prime == 4));
}

TEST_CASE("vertex partition") {
    auto p = vertex_partition(graph_from_dsl("kpartite:1,3"));
    CHECK(p.v0.empty());
    CHECK(p.v1 == VertexSet{2, 3, 4});
    CHECK(p.v2 == VertexSet{1});
    CHECK(p.v3.empty());
    CHECK(p.v1_prime.empty());

    p = vertex_partition(graph_from_dsl("path:2"));
    CHECK(p.v1 == VertexSet{1, 2});
    CHECK(p.v1_prime == VertexSet{1, 2});
    CHECK((p.v0.empty() && p.v2.empty() && p.v3.empty()));

    p = vertex_partition(graph_from_dsl("path:5"));
    CHECK(p.v1 == VertexSet{1, 5});
    CHECK(p.v2 == VertexSet{2, 4});
    CHECK(p.v3 == VertexSet{3});
    CHECK((p.v0.empty() && p.v1_prime.empty()));

    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + trial % 10, 0.25);
        auto q = vertex_partition(g);
        CHECK((q.v0 | q.v1 | q.v2 | q.v3) == g.vertices());
        CHECK(q.v0.size() + q.v1.size() + q.v2.size() + q.v3.size() == g.order());
        CHECK(q.v1_prime.is_subset_of(q.v1));
        CHECK(q.v1_prime.size() % 2 == 0);
    }
}

TEST_CASE("independent sets") {
    Graph p5 = graph_from_dsl("path:5");
    CHECK(is_independent_set(p5, {1, 3, 5}));
    CHECK_FALSE(is_independent_set(p5, {2, 3}));
    CHECK(is_independent_set(p5, {}));
}

TEST_CASE("forests and components") {
    CHECK(is_forest(graph_from_dsl("path:4+path:3")));
    CHECK(is_forest(graph_from_dsl("edgeless:5")));
    CHECK_FALSE(is_forest(graph_from_dsl("book:1")));
    CHECK(connected_components(graph_from_dsl("path:2+edgeless:2")) ==
          std::vector<VertexSet>{VertexSet{1, 2}, VertexSet{3}, VertexSet{4}});
}
