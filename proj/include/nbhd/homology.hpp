#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nbhd/field.hpp"
#include "nbhd/vertex_set.hpp"

namespace nbhd {

/// Reduced homology of a finite simplicial complex given by its full face list
/// (the empty face included; the list must be closed under subsets).
/// Entry k+1 of the result is dim H~_k, k = -1 .. max face dimension.
/// The complex {} with only the empty face has dim H~_{-1} = 1.
///
/// Ranks come from sparse column reduction with clearing: over GF(p) by modular
/// arithmetic, over the rationals by fraction-free integer column operations
/// (64-bit with overflow detection, arbitrary precision on overflow).
std::vector<std::uint64_t> reduced_homology(std::span<const VertexSet> faces, FieldSpec field);

/// Same quantity by an unrelated route: dense boundary matrices reduced to row
/// echelon form (Bareiss elimination over the integers for the rationals,
/// plain Gauss-Jordan mod p otherwise). Used to cross-check the sparse path.
std::vector<std::uint64_t> reduced_homology_dense(std::span<const VertexSet> faces, FieldSpec field);

/// Rank of an integer matrix over the field, by dense elimination.
std::size_t dense_rank(std::vector<std::vector<std::int64_t>> rows, FieldSpec field);

}  // namespace nbhd
