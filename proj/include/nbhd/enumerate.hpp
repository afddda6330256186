#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nbhd/graph.hpp"

namespace nbhd {

/// Largest tree order enumerate_trees accepts.
inline constexpr int kMaxTreeOrder = 12;
/// Largest order enumerate_graphs accepts (brute-force canonical forms).
inline constexpr int kMaxGraphOrder = 7;

/// Canonical string of a tree: AHU encoding rooted at a center, minimized over
/// the (at most two) centers. Two trees share a code iff they are isomorphic.
/// Throws DomainError when g is not a tree.
std::string tree_code(const Graph& g);

/// One representative per isomorphism class of trees on n vertices, sorted by
/// tree_code. Each representative is labeled breadth-first from its canonical
/// root. Throws ParameterError outside 1..kMaxTreeOrder.
std::vector<Graph> enumerate_trees(int n);

/// Adjacency bitmask of g over the pair order (1,2),(1,3),...,(n-1,n), minimized
/// over all vertex permutations. Throws ParameterError above kMaxGraphOrder.
std::uint32_t graph_code(const Graph& g);

/// One representative per isomorphism class of simple graphs on n vertices,
/// sorted by graph_code. Throws ParameterError outside 1..kMaxGraphOrder.
std::vector<Graph> enumerate_graphs(int n);

}  // namespace nbhd
