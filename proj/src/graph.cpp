#include "nbhd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "nbhd/errors.hpp"

namespace nbhd {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0 || n > kMaxVertices)
        throw ParameterError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParameterError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} has an endpoint outside 1.." +
                                 std::to_string(n));
        if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
        adj_[u - 1].insert(v);
        adj_[v - 1].insert(u);
    }
    for (VertexId u = 1; u <= n; ++u)
        for (VertexId v : adj_[u - 1])
            if (u < v) edges_.emplace_back(u, v);
}

// ---------------------------------------------------------------------------

namespace {

void require(bool ok, const std::string& field, const std::string& what) {
    if (!ok) throw ParameterError(field + ": " + what);
}

Graph build_path(int n) {
    require(n >= 1, "path.n", "must be >= 1, got " + std::to_string(n));
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph build_gstar(const std::vector<int>& arms) {
    require(!arms.empty(), "gstar.arms", "needs at least one arm");
    int n = 1;
    for (std::size_t i = 0; i < arms.size(); ++i) {
        require(arms[i] > 1, "gstar.arms[" + std::to_string(i) + "]", "must be > 1, got " + std::to_string(arms[i]));
        n += arms[i] - 1;
    }
    require(n <= kMaxVertices, "gstar.arms", "too many vertices (" + std::to_string(n) + ")");
    std::vector<Edge> e;
    int next = 1;
    for (int len : arms) {
        int first = next;
        for (int k = 0; k + 1 < len - 1; ++k) e.emplace_back(first + k, first + k + 1);
        e.emplace_back(first + len - 2, n);
        next += len - 1;
    }
    return Graph(n, e);
}

Graph build_book(int m) {
    require(m >= 1, "book.m", "must be >= 1, got " + std::to_string(m));
    require(2 * m + 2 <= kMaxVertices, "book.m", "too large");
    auto x = [](int i) { return i + 1; };
    auto y = [m](int i) { return m + 2 + i; };
    std::vector<Edge> e;
    for (int i = 1; i <= m; ++i) {
        e.emplace_back(x(0), x(i));
        e.emplace_back(y(0), y(i));
    }
    for (int i = 0; i <= m; ++i) e.emplace_back(x(i), y(i));
    return Graph(2 * m + 2, e);
}

Graph build_multipartite(std::vector<int> parts) {
    require(!parts.empty(), "kpartite.parts", "needs at least one part");
    for (std::size_t i = 0; i < parts.size(); ++i)
        require(parts[i] >= 1, "kpartite.parts[" + std::to_string(i) + "]", "must be >= 1, got " + std::to_string(parts[i]));
    std::sort(parts.begin(), parts.end());
    int n = 0;
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        n += parts[p];
        part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
    }
    require(n <= kMaxVertices, "kpartite.parts", "too many vertices (" + std::to_string(n) + ")");
    std::vector<Edge> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (part_of[u - 1] != part_of[v - 1]) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph build_complete(int n) {
    require(n >= 1, "complete.n", "must be >= 1, got " + std::to_string(n));
    std::vector<Edge> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph build_edgeless(int n) {
    require(n >= 1, "edgeless.n", "must be >= 1, got " + std::to_string(n));
    return Graph(n, {});
}

int parse_int(std::string_view s, const std::string& field) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParameterError(field + ": expected an integer, got '" + std::string(s) + "'");
    return value;
}

std::vector<int> parse_int_list(std::string_view s, const std::string& field) {
    std::vector<int> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        out.push_back(parse_int(s.substr(start, comma - start), field));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

GraphFamilySpec parse_term(std::string_view term) {
    std::size_t colon = term.find(':');
    if (colon == std::string_view::npos)
        throw ParameterError("graph: expected kind:args, got '" + std::string(term) + "'");
    std::string kind(term.substr(0, colon));
    std::string_view args = term.substr(colon + 1);
    if (kind == "path") return {PathSpec{parse_int(args, "path.n")}};
    if (kind == "gstar") return {GeneralizedStarSpec{parse_int_list(args, "gstar.arms")}};
    if (kind == "book") return {BookSpec{parse_int(args, "book.m")}};
    if (kind == "kpartite") return {CompleteMultipartiteSpec{parse_int_list(args, "kpartite.parts")}};
    if (kind == "complete") return {CompleteSpec{parse_int(args, "complete.n")}};
    if (kind == "edgeless") return {EdgelessSpec{parse_int(args, "edgeless.n")}};
    throw ParameterError("graph: unknown family '" + kind + "'");
}

}  // namespace

Graph build_family(const GraphFamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> Graph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) return build_path(s.n);
            else if constexpr (std::is_same_v<T, GeneralizedStarSpec>) return build_gstar(s.arms);
            else if constexpr (std::is_same_v<T, BookSpec>) return build_book(s.m);
            else if constexpr (std::is_same_v<T, CompleteMultipartiteSpec>) return build_multipartite(s.parts);
            else if constexpr (std::is_same_v<T, CompleteSpec>) return build_complete(s.n);
            else if constexpr (std::is_same_v<T, EdgelessSpec>) return build_edgeless(s.n);
            else if constexpr (std::is_same_v<T, EdgeListSpec>) return Graph(s.n, s.edges);
            else {
                require(!s.components.empty(), "union.components", "needs at least one component");
                Graph g = build_family(s.components.front());
                for (std::size_t i = 1; i < s.components.size(); ++i) g = disjoint_union(g, build_family(s.components[i]));
                return g;
            }
        },
        spec.value);
}

GraphFamilySpec parse_family(const std::string& dsl) {
    if (dsl.rfind("file:", 0) == 0) {
        Graph g = read_edge_list_file(dsl.substr(5));
        return {EdgeListSpec{g.order(), g.edges()}};
    }
    std::vector<GraphFamilySpec> terms;
    std::string_view rest(dsl);
    while (true) {
        std::size_t plus = rest.find('+');
        terms.push_back(parse_term(rest.substr(0, plus)));
        if (plus == std::string_view::npos) break;
        rest = rest.substr(plus + 1);
    }
    if (terms.size() == 1) return terms.front();
    return {DisjointUnionSpec{std::move(terms)}};
}

Graph graph_from_dsl(const std::string& dsl) { return build_family(parse_family(dsl)); }

Graph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<long long> nums;
        std::string tok;
        while (ls >> tok) nums.push_back(parse_int(tok, "edge list line " + std::to_string(lineno)));
        if (nums.empty()) continue;
        if (n < 0) {
            if (nums.size() != 1) throw ParameterError("edge list line " + std::to_string(lineno) + ": expected vertex count");
            n = static_cast<int>(nums[0]);
            continue;
        }
        if (nums.size() != 2) throw ParameterError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
        edges.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
    }
    if (n < 0) throw ParameterError("edge list: missing vertex count");
    return Graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("graph file: cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), e);
}

// ---------------------------------------------------------------------------

VertexSet closed_neighborhood(const Graph& g, VertexId v) {
    if (v < 1 || v > g.order())
        throw ParameterError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(g.order()));
    VertexSet s = g.neighbors(v);
    s.insert(v);
    return s;
}

int min_degree(const Graph& g) {
    int d = g.order();
    for (VertexId v = 1; v <= g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

namespace {

void extend_matching(const Graph& g, VertexSet avail, int size, int& best) {
    // Vertices with no available neighbor can never be matched.
    VertexSet live;
    for (VertexId v : avail)
        if (g.neighbors(v).intersects(avail)) live.insert(v);
    best = std::max(best, size);
    if (size + live.size() / 2 <= best) return;
    VertexId v = live.min();
    VertexSet rest = live;
    rest.erase(v);
    for (VertexId u : g.neighbors(v) & rest) {
        VertexSet next = rest;
        next.erase(u);
        extend_matching(g, next, size + 1, best);
    }
    extend_matching(g, rest, size, best);
}

}  // namespace

int matching_number(const Graph& g) {
    int best = 0;
    extend_matching(g, g.vertices(), 0, best);
    return best;
}

bool is_dominating(const Graph& g, VertexSet s) {
    for (VertexId v = 1; v <= g.order(); ++v)
        if (!closed_neighborhood(g, v).intersects(s)) return false;
    return true;
}

std::vector<VertexSet> minimal_dominating_sets(const Graph& g) {
    std::vector<VertexSet> hoods;
    for (VertexId v = 1; v <= g.order(); ++v) hoods.push_back(closed_neighborhood(g, v));
    return minimal_transversals(hoods);
}

DominationNumbers domination_numbers(const Graph& g) {
    DominationNumbers d{g.order(), 0};
    for (VertexSet s : minimal_dominating_sets(g)) {
        d.gamma = std::min(d.gamma, s.size());
        d.gamma_prime = std::max(d.gamma_prime, s.size());
    }
    return d;
}

VertexPartition vertex_partition(const Graph& g) {
    VertexPartition p;
    for (VertexId v = 1; v <= g.order(); ++v) {
        if (g.degree(v) == 0) p.v0.insert(v);
        if (g.degree(v) == 1) p.v1.insert(v);
    }
    for (VertexId v = 1; v <= g.order(); ++v) {
        if (g.degree(v) >= 2) (g.neighbors(v).intersects(p.v1) ? p.v2 : p.v3).insert(v);
        if (g.degree(v) == 1 && g.neighbors(v).is_subset_of(p.v1)) p.v1_prime.insert(v);
    }
    return p;
}

bool is_independent_set(const Graph& g, VertexSet s) {
    for (VertexId v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (VertexId v = 1; v <= g.order(); ++v) {
        if (seen.contains(v)) continue;
        VertexSet comp = VertexSet::single(v), frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (VertexId u : frontier) next |= g.neighbors(u);
            frontier = next - comp;
            comp |= next;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

bool is_forest(const Graph& g) {
    return g.size() + connected_components(g).size() == static_cast<std::size_t>(g.order());
}

}  // namespace nbhd
