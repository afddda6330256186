#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nbhd/field.hpp"
#include "nbhd/ideal.hpp"

namespace nbhd {

/// Size guards and parallelism for the Betti engine.
struct EngineOptions {
    int jobs = 1;
    std::size_t max_lattice = std::size_t{1} << 20;
    std::size_t max_faces = std::size_t{1} << 20;
    int max_variables = 24;

    /// Defaults, with max_lattice taken from NBHD_MAX_LATTICE when set.
    static EngineOptions from_environment();
};

/// Graded Betti numbers beta_{i,j}(R/I). Absent entries are zero; (0,0) -> 1 always.
class BettiTable {
public:
    explicit BettiTable(int ambient_n = 0);

    int ambient() const { return n_; }
    std::uint64_t at(int i, int j) const;
    /// Adds rank to beta_{i,j}; zero ranks are ignored.
    void add(int i, int j, std::uint64_t rank);
    const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }

    /// max { j - i : beta_{i,j} != 0 }
    int regularity() const;
    /// max { i : beta_{i,j} != 0 }
    int projective_dimension() const;
    /// reg(I) = reg(R/I) + 1
    int ideal_regularity() const { return regularity() + 1; }
    /// sum_i beta_{i,j} for each i = 0..pd
    std::vector<std::uint64_t> totals() const;
    /// sum_i (-1)^i beta_{i,j} for j = 0..n
    std::vector<std::int64_t> alternating_sums() const;

    bool operator==(const BettiTable&) const = default;

private:
    int n_;
    std::map<std::pair<int, int>, std::uint64_t> entries_;
};

/// Betti table of R/I from reduced homology of the Stanley-Reisner complex
/// restricted to each multidegree in the lcm lattice.
/// Throws DomainError on the zero or unit ideal, ResourceError past a guard.
BettiTable betti_table(const MonomialIdeal& ideal, FieldSpec field, const EngineOptions& opts = {});

/// Independent route: reduced homology of the upper Koszul complexes
/// K^s(I) = { t subset of s : x^(s\t) in I }, shifted to R/I indexing.
BettiTable betti_table_oracle(const MonomialIdeal& ideal, FieldSpec field, const EngineOptions& opts = {});

/// All unions of nonempty sets of generator supports, sorted numerically.
std::vector<VertexSet> lcm_lattice(const MonomialIdeal& ideal, std::size_t max_size);

/// Coefficients c_0..c_n of the numerator of the Hilbert series of R/I over
/// (1-t)^n, via inclusion-exclusion over generator supports (face counting
/// when there are more than 20 generators).
std::vector<std::int64_t> hilbert_numerator(const MonomialIdeal& ideal);

/// Numerator from the f-vector of the Stanley-Reisner complex.
std::vector<std::int64_t> hilbert_numerator_from_faces(const MonomialIdeal& ideal);

/// True iff beta_{i,j}(I) vanishes off j = i + d. Throws DomainError when the
/// generators are not all of one degree d.
bool has_linear_resolution(const MonomialIdeal& ideal, FieldSpec field, const EngineOptions& opts = {});

/// Generator search cap for linear_quotients_order.
inline constexpr std::size_t kMaxLinearQuotientGens = 20;

/// An order g_1..g_s with every (g_1..g_{t-1}) : g_t generated by variables, or
/// nullopt. Candidates are tried in degree-then-lex order; the first complete
/// order found is returned. Throws ResourceError above kMaxLinearQuotientGens.
std::optional<std::vector<Monomial>> linear_quotients_order(const MonomialIdeal& ideal);

/// Every squarefree component I_[d], d from the least to the largest generator
/// degree, has a linear resolution.
bool is_componentwise_linear(const MonomialIdeal& ideal, FieldSpec field, const EngineOptions& opts = {});

/// R/I is sequentially Cohen-Macaulay iff the Alexander dual is componentwise linear.
bool is_sequentially_cm(const MonomialIdeal& ideal, FieldSpec field, const EngineOptions& opts = {});

// ---------------------------------------------------------------------------
// Serialization

/// { "n": int, "entries": [[i, j, rank], ...] } sorted by (i, j).
nlohmann::ordered_json to_json(const BettiTable& table);
BettiTable betti_from_json(const nlohmann::json& j);

/// Betti diagram: columns are homological degrees i, rows are j - i.
///
///            0 1 2
///     total: 1 2 1
///         0: 1 . .
///         1: . 2 1
std::string to_text(const BettiTable& table);

}  // namespace nbhd
