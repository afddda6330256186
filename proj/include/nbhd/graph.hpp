#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nbhd/vertex_set.hpp"

namespace nbhd {

using Edge = std::pair<VertexId, VertexId>;

/// Finite simple graph on vertices 1..n. Immutable once built.
class Graph {
public:
    Graph() = default;
    /// Throws ParameterError on loops, endpoints outside 1..n, or n > kMaxVertices.
    /// Repeated edges are merged.
    Graph(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    /// Edges as (u,v) with u < v, sorted.
    const std::vector<Edge>& edges() const { return edges_; }
    VertexSet vertices() const { return VertexSet::full(n_); }
    VertexSet neighbors(VertexId v) const { return adj_[v - 1]; }
    int degree(VertexId v) const { return adj_[v - 1].size(); }
    bool adjacent(VertexId u, VertexId v) const { return adj_[u - 1].contains(v); }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Families

struct GraphFamilySpec;

struct PathSpec { int n; };
/// Paths P_{n_1},...,P_{n_k} glued at one endpoint each.
struct GeneralizedStarSpec { std::vector<int> arms; };
/// Cartesian product of the star on m+1 vertices with P_2.
struct BookSpec { int m; };
struct CompleteMultipartiteSpec { std::vector<int> parts; };
struct CompleteSpec { int n; };
struct EdgelessSpec { int n; };
struct DisjointUnionSpec { std::vector<GraphFamilySpec> components; };
struct EdgeListSpec { int n; std::vector<Edge> edges; };

struct GraphFamilySpec {
    std::variant<PathSpec, GeneralizedStarSpec, BookSpec, CompleteMultipartiteSpec, CompleteSpec,
                 EdgelessSpec, DisjointUnionSpec, EdgeListSpec>
        value;
};

/// Builds the family member. Labelings:
///  - path: 1..n along the path;
///  - generalized star: arms labeled consecutively from their free end, the shared vertex last;
///  - book: x_0..x_m -> 1..m+1, y_0..y_m -> m+2..2m+2;
///  - multipartite: parts sorted ascending, each labeled consecutively;
///  - disjoint union: components in order, labels offset.
/// Throws ParameterError naming the offending field.
Graph build_family(const GraphFamilySpec& spec);

/// Parses the family DSL: path:5, gstar:3,3,4, book:3, kpartite:1,2,2, complete:4,
/// edgeless:3, file:PATH. Terms joined by '+' form a disjoint union.
GraphFamilySpec parse_family(const std::string& dsl);

/// Shorthand for build_family(parse_family(dsl)).
Graph graph_from_dsl(const std::string& dsl);

/// Edge-list text: first line n, then "u v" per line, 1-based; '#' starts a comment.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

// ---------------------------------------------------------------------------
// Combinatorial invariants

/// N[v] = {v} plus the neighbors of v.
VertexSet closed_neighborhood(const Graph& g, VertexId v);

int min_degree(const Graph& g);

/// Maximum matching size, by exhaustive branch-and-bound.
int matching_number(const Graph& g);

bool is_dominating(const Graph& g, VertexSet s);

/// All inclusion-minimal dominating sets, lex ordered.
std::vector<VertexSet> minimal_dominating_sets(const Graph& g);

struct DominationNumbers {
    int gamma;        ///< smallest minimal dominating set
    int gamma_prime;  ///< largest minimal dominating set
};
DominationNumbers domination_numbers(const Graph& g);

struct VertexPartition {
    VertexSet v0;        ///< isolated
    VertexSet v1;        ///< degree one
    VertexSet v2;        ///< degree >= 2 with a degree-one neighbor
    VertexSet v3;        ///< degree >= 2 without a degree-one neighbor
    VertexSet v1_prime;  ///< degree one whose neighbor also has degree one
};
VertexPartition vertex_partition(const Graph& g);

bool is_independent_set(const Graph& g, VertexSet s);

/// Connected components as vertex sets, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_forest(const Graph& g);

}  // namespace nbhd
