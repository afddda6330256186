#include "nbhd/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "nbhd/errors.hpp"

namespace nbhd {

namespace {

std::vector<VertexId> tree_centers(const Graph& g) {
    std::vector<int> deg(g.order() + 1);
    std::vector<VertexId> layer;
    for (VertexId v = 1; v <= g.order(); ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = g.order();
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<VertexId> next;
        for (VertexId leaf : layer)
            for (VertexId u : g.neighbors(leaf))
                if (--deg[u] == 1) next.push_back(u);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string rooted_code(const Graph& g, VertexId v, VertexId parent) {
    std::vector<std::string> kids;
    for (VertexId u : g.neighbors(v))
        if (u != parent) kids.push_back(rooted_code(g, u, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
}

void require_tree(const Graph& g) {
    if (g.order() < 1 || !is_forest(g) || connected_components(g).size() != 1)
        throw DomainError("graph is not a tree");
}

/// Relabels breadth-first from root, children ordered by subtree code.
Graph canonical_labeling(const Graph& g, VertexId root) {
    std::vector<VertexId> order{root};
    std::vector<VertexId> parent(g.order() + 1, 0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        VertexId v = order[head];
        std::vector<std::pair<std::string, VertexId>> kids;
        for (VertexId u : g.neighbors(v))
            if (u != parent[v]) kids.emplace_back(rooted_code(g, u, v), u);
        std::sort(kids.begin(), kids.end());
        for (auto& [code, u] : kids) {
            parent[u] = v;
            order.push_back(u);
        }
    }
    std::vector<VertexId> label(g.order() + 1);
    for (std::size_t i = 0; i < order.size(); ++i) label[order[i]] = static_cast<VertexId>(i + 1);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(std::min(label[u], label[v]), std::max(label[u], label[v]));
    return Graph(g.order(), edges);
}

}  // namespace

std::string tree_code(const Graph& g) {
    require_tree(g);
    std::string best;
    for (VertexId c : tree_centers(g)) {
        std::string code = rooted_code(g, c, 0);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > kMaxTreeOrder)
        throw ParameterError("trees.n: must be in 1.." + std::to_string(kMaxTreeOrder) + ", got " + std::to_string(n));
    std::map<std::string, Graph> level{{"()", Graph(1, {})}};
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Graph> next;
        for (const auto& [code, tree] : level) {
            for (VertexId v = 1; v < k; ++v) {
                std::vector<Edge> edges = tree.edges();
                edges.emplace_back(v, k);
                Graph grown(k, edges);
                next.try_emplace(tree_code(grown), grown);
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const auto& [code, tree] : level) {
        VertexId root = 0;
        for (VertexId c : tree_centers(tree))
            if (rooted_code(tree, c, 0) == code) {
                root = c;
                break;
            }
        out.push_back(canonical_labeling(tree, root));
    }
    return out;
}

namespace {

int pair_bit(int a, int b, int n) {
    // (1,2),(1,3),...,(1,n),(2,3),... with 0-based a < b
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

std::pair<std::uint32_t, std::vector<int>> min_code(const Graph& g) {
    const int n = g.order();
    std::vector<int> perm(n), best_perm;
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = ~std::uint32_t{0};
    do {
        std::uint32_t code = 0;
        for (auto [u, v] : g.edges()) {
            int a = perm[u - 1], b = perm[v - 1];
            if (a > b) std::swap(a, b);
            code |= std::uint32_t{1} << pair_bit(a, b, n);
            if (code > best) break;
        }
        if (code < best) {
            best = code;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best, best_perm};
}

Graph decode(std::uint32_t code, int n) {
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if ((code >> pair_bit(a, b, n)) & 1u) edges.emplace_back(a + 1, b + 1);
    return Graph(n, edges);
}

}  // namespace

std::uint32_t graph_code(const Graph& g) {
    if (g.order() < 1 || g.order() > kMaxGraphOrder)
        throw ParameterError("graph code: order must be in 1.." + std::to_string(kMaxGraphOrder));
    return min_code(g).first;
}

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 1 || n > kMaxGraphOrder)
        throw ParameterError("graphs.n: must be in 1.." + std::to_string(kMaxGraphOrder) + ", got " + std::to_string(n));
    std::vector<Graph> level{Graph(1, {})};
    for (int k = 2; k <= n; ++k) {
        std::map<std::uint32_t, Graph> next;
        for (const Graph& g : level) {
            for (std::uint32_t nb = 0; nb < (std::uint32_t{1} << (k - 1)); ++nb) {
                std::vector<Edge> edges = g.edges();
                for (VertexId v : VertexSet(nb)) edges.emplace_back(v, k);
                std::uint32_t code = graph_code(Graph(k, edges));
                if (!next.contains(code)) next.emplace(code, decode(code, k));
            }
        }
        level.clear();
        for (auto& [code, g] : next) level.push_back(std::move(g));
    }
    return level;
}

}  // namespace nbhd
