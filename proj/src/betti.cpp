#include "nbhd/betti.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "nbhd/errors.hpp"
#include "nbhd/homology.hpp"

namespace nbhd {

EngineOptions EngineOptions::from_environment() {
    EngineOptions opts;
    if (const char* env = std::getenv("NBHD_MAX_LATTICE"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw ParameterError("NBHD_MAX_LATTICE: expected a positive integer, got '" + std::string(env) + "'");
        opts.max_lattice = static_cast<std::size_t>(v);
    }
    return opts;
}

// ---------------------------------------------------------------------------

BettiTable::BettiTable(int ambient_n) : n_(ambient_n) { entries_[{0, 0}] = 1; }

std::uint64_t BettiTable::at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t rank) {
    if (rank == 0) return;
    if (i < 0 || j < 0 || j > n_) throw DomainError("betti entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    entries_[{i, j}] += rank;
}

int BettiTable::regularity() const {
    int r = 0;
    for (const auto& [ij, b] : entries_) r = std::max(r, ij.second - ij.first);
    return r;
}

int BettiTable::projective_dimension() const {
    int p = 0;
    for (const auto& [ij, b] : entries_) p = std::max(p, ij.first);
    return p;
}

std::vector<std::uint64_t> BettiTable::totals() const {
    std::vector<std::uint64_t> t(static_cast<std::size_t>(projective_dimension() + 1), 0);
    for (const auto& [ij, b] : entries_) t[ij.first] += b;
    return t;
}

std::vector<std::int64_t> BettiTable::alternating_sums() const {
    std::vector<std::int64_t> s(static_cast<std::size_t>(n_ + 1), 0);
    for (const auto& [ij, b] : entries_) s[ij.second] += (ij.first % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(b);
    return s;
}

// ---------------------------------------------------------------------------

std::vector<VertexSet> lcm_lattice(const MonomialIdeal& ideal, std::size_t max_size) {
    std::unordered_set<std::uint32_t> seen;
    std::vector<std::uint32_t> members;
    for (VertexSet g : ideal.supports()) {
        const std::size_t before = members.size();
        auto push = [&](std::uint32_t m) {
            if (seen.insert(m).second) {
                members.push_back(m);
                if (members.size() > max_size)
                    throw ResourceError("lcm lattice exceeds " + std::to_string(max_size) + " elements");
            }
        };
        for (std::size_t k = 0; k < before; ++k) push(members[k] | g.bits());
        push(g.bits());
    }
    std::sort(members.begin(), members.end());
    std::vector<VertexSet> out;
    out.reserve(members.size());
    for (std::uint32_t m : members) out.emplace_back(m);
    return out;
}

namespace {

void require_engine_input(const MonomialIdeal& ideal, const EngineOptions& opts) {
    if (!ideal.is_proper_nonzero()) throw DomainError("betti table: undefined for the zero or unit ideal");
    if (ideal.ambient() > opts.max_variables)
        throw ResourceError("betti table: " + std::to_string(ideal.ambient()) + " variables exceeds the cap of " +
                            std::to_string(opts.max_variables));
}

/// Faces of the Stanley-Reisner complex restricted to sigma: subsets of sigma
/// containing no generator.
std::vector<VertexSet> restricted_faces(VertexSet sigma, const std::vector<VertexSet>& gens, std::size_t max_faces) {
    std::vector<VertexSet> inside;
    for (VertexSet g : gens)
        if (g.is_subset_of(sigma)) inside.push_back(g);
    const std::vector<VertexId> elems = sigma.elements();
    std::vector<VertexSet> faces{VertexSet{}};
    // faces[k] extended only by elements after its largest one
    for (std::size_t head = 0; head < faces.size(); ++head) {
        VertexSet f = faces[head];
        for (VertexId v : elems) {
            if (!f.empty() && v <= f.max()) continue;
            VertexSet grown = f | VertexSet::single(v);
            bool blocked = std::any_of(inside.begin(), inside.end(), [&](VertexSet g) { return g.contains(v) && g.is_subset_of(grown); });
            if (blocked) continue;
            faces.push_back(grown);
            if (faces.size() > max_faces)
                throw ResourceError("restricted complex on " + sigma.to_string() + " exceeds " + std::to_string(max_faces) + " faces");
        }
    }
    return faces;
}

/// Runs per_sigma over the lattice on `jobs` workers and sums the partial tables.
template <class PerSigma>
BettiTable accumulate(const MonomialIdeal& ideal, const std::vector<VertexSet>& lattice, int jobs, PerSigma per_sigma) {
    const std::size_t workers = static_cast<std::size_t>(std::max(1, std::min<int>(jobs, static_cast<int>(lattice.size()))));
    std::vector<BettiTable> partial(workers, BettiTable(ideal.ambient()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](std::size_t w) {
        try {
            for (std::size_t k; (k = next.fetch_add(1)) < lattice.size();) per_sigma(lattice[k], partial[w]);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = lattice.size();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    }
    if (failure) std::rethrow_exception(failure);
    BettiTable total(ideal.ambient());
    for (const auto& p : partial)
        for (const auto& [ij, b] : p.entries())
            if (ij != std::pair{0, 0}) total.add(ij.first, ij.second, b);
    return total;
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& ideal, FieldSpec field, const EngineOptions& opts) {
    require_engine_input(ideal, opts);
    const auto gens = ideal.supports();
    const auto lattice = lcm_lattice(ideal, opts.max_lattice);
    return accumulate(ideal, lattice, opts.jobs, [&](VertexSet sigma, BettiTable& out) {
        const auto faces = restricted_faces(sigma, gens, opts.max_faces);
        const auto h = reduced_homology(faces, field);
        const int j = sigma.size();
        for (std::size_t idx = 0; idx < h.size(); ++idx) {
            const int k = static_cast<int>(idx) - 1;
            out.add(j - k - 1, j, h[idx]);
        }
    });
}

BettiTable betti_table_oracle(const MonomialIdeal& ideal, FieldSpec field, const EngineOptions& opts) {
    require_engine_input(ideal, opts);
    const auto lattice = lcm_lattice(ideal, opts.max_lattice);
    return accumulate(ideal, lattice, opts.jobs, [&](VertexSet sigma, BettiTable& out) {
        if ((std::size_t{1} << sigma.size()) > opts.max_faces)
            throw ResourceError("upper Koszul complex on " + sigma.to_string() + " exceeds " +
                                std::to_string(opts.max_faces) + " candidate faces");
        std::vector<VertexSet> faces;
        // Enumerate subsets tau of sigma and keep those whose complement in sigma lies in I.
        const std::uint32_t s = sigma.bits();
        for (std::uint32_t t = s;; t = (t - 1) & s) {
            if (ideal.contains(Monomial{VertexSet(s & ~t)})) faces.emplace_back(t);
            if (t == 0) break;
        }
        if (faces.empty()) return;
        const auto h = reduced_homology_dense(faces, field);
        // dim H~_{i-1}(K^sigma) = beta_{i,sigma}(I) = beta_{i+1,sigma}(R/I)
        for (std::size_t idx = 0; idx < h.size(); ++idx) out.add(static_cast<int>(idx) + 1, sigma.size(), h[idx]);
    });
}

// ---------------------------------------------------------------------------

std::vector<std::int64_t> hilbert_numerator(const MonomialIdeal& ideal) {
    if (ideal.num_gens() > 20) return hilbert_numerator_from_faces(ideal);
    const int n = ideal.ambient();
    std::vector<std::int64_t> c(static_cast<std::size_t>(n + 1), 0);
    if (ideal.is_unit()) return c;
    const auto gens = ideal.supports();
    // Walk every subset S of generators: contributes (-1)^|S| t^|lcm S|.
    auto walk = [&](auto&& self, std::size_t from, VertexSet lcm, int sign) -> void {
        c[lcm.size()] += sign;
        for (std::size_t k = from; k < gens.size(); ++k) self(self, k + 1, lcm | gens[k], -sign);
    };
    walk(walk, 0, VertexSet{}, 1);
    return c;
}

std::vector<std::int64_t> hilbert_numerator_from_faces(const MonomialIdeal& ideal) {
    const int n = ideal.ambient();
    std::vector<std::int64_t> c(static_cast<std::size_t>(n + 1), 0);
    if (ideal.is_unit()) return c;
    std::vector<std::int64_t> f(static_cast<std::size_t>(n + 1), 0);
    const auto faces = restricted_faces(VertexSet::full(n), ideal.supports(), std::size_t{1} << 25);
    for (VertexSet face : faces) ++f[face.size()];
    // sum_F t^|F| (1-t)^(n-|F|)
    std::vector<std::vector<std::int64_t>> binom(n + 1, std::vector<std::int64_t>(n + 1, 0));
    for (int a = 0; a <= n; ++a) {
        binom[a][0] = 1;
        for (int b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0);
    }
    for (int k = 0; k <= n; ++k)
        for (int e = 0; e <= n - k; ++e) c[k + e] += f[k] * binom[n - k][e] * (e % 2 == 0 ? 1 : -1);
    return c;
}

// ---------------------------------------------------------------------------

bool has_linear_resolution(const MonomialIdeal& ideal, FieldSpec field, const EngineOptions& opts) {
    const int d = ideal.min_degree();
    if (!ideal.is_proper_nonzero()) throw DomainError("linear resolution: undefined for the zero or unit ideal");
    if (d != ideal.max_degree())
        throw DomainError("linear resolution: generators have mixed degrees " + std::to_string(d) + ".." +
                          std::to_string(ideal.max_degree()));
    const BettiTable t = betti_table(ideal, field, opts);
    for (const auto& [ij, b] : t.entries()) {
        auto [i, j] = ij;
        if (i >= 1 && j != (i - 1) + d) return false;
    }
    return true;
}

std::optional<std::vector<Monomial>> linear_quotients_order(const MonomialIdeal& ideal) {
    if (!ideal.is_proper_nonzero()) throw DomainError("linear quotients: undefined for the zero or unit ideal");
    const std::size_t g = ideal.num_gens();
    if (g > kMaxLinearQuotientGens)
        throw ResourceError("linear quotients: " + std::to_string(g) + " generators exceeds the search cap of " +
                            std::to_string(kMaxLinearQuotientGens));
    std::vector<VertexSet> gens = ideal.supports();
    std::stable_sort(gens.begin(), gens.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
    });

    // Whether the colon of the generators in `chosen` by gens[c] is generated by variables
    // depends only on the set chosen, so failed sets are memoized.
    auto linear_colon = [&](std::uint32_t chosen, std::size_t c) {
        VertexSet vars;
        for (std::uint32_t b = chosen; b; b &= b - 1) {
            VertexSet q = gens[std::countr_zero(b)] - gens[c];
            if (q.size() == 1) vars |= q;
        }
        for (std::uint32_t b = chosen; b; b &= b - 1)
            if (!(gens[std::countr_zero(b)] - gens[c]).intersects(vars)) return false;
        return true;
    };
    const std::uint32_t full = g == 32 ? ~0u : ((1u << g) - 1);
    std::vector<char> dead(std::size_t{1} << g, 0);
    std::vector<std::size_t> order;
    auto search = [&](auto&& self, std::uint32_t chosen) -> bool {
        if (chosen == full) return true;
        for (std::size_t c = 0; c < g; ++c) {
            std::uint32_t next = chosen | (1u << c);
            if (next == chosen || dead[next] || !linear_colon(chosen, c)) continue;
            order.push_back(c);
            if (self(self, next)) return true;
            order.pop_back();
        }
        dead[chosen] = 1;
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    std::vector<Monomial> out;
    for (std::size_t c : order) out.push_back(Monomial{gens[c]});
    return out;
}

bool is_componentwise_linear(const MonomialIdeal& ideal, FieldSpec field, const EngineOptions& opts) {
    if (!ideal.is_proper_nonzero()) throw DomainError("componentwise linear: undefined for the zero or unit ideal");
    for (int d = ideal.min_degree(); d <= ideal.max_degree(); ++d)
        if (!has_linear_resolution(squarefree_component(ideal, d), field, opts)) return false;
    return true;
}

bool is_sequentially_cm(const MonomialIdeal& ideal, FieldSpec field, const EngineOptions& opts) {
    return is_componentwise_linear(alexander_dual(ideal), field, opts);
}

// ---------------------------------------------------------------------------

nlohmann::ordered_json to_json(const BettiTable& table) {
    nlohmann::ordered_json j;
    j["n"] = table.ambient();
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& [ij, b] : table.entries()) j["entries"].push_back({ij.first, ij.second, b});
    return j;
}

BettiTable betti_from_json(const nlohmann::json& j) {
    try {
        BettiTable t(j.at("n").get<int>());
        for (const auto& e : j.at("entries")) {
            if (!e.is_array() || e.size() != 3) throw ParameterError("betti json: entries must be [i, j, rank]");
            int i = e[0].get<int>(), jj = e[1].get<int>();
            auto rank = e[2].get<std::uint64_t>();
            if (i == 0 && jj == 0) continue;
            t.add(i, jj, rank);
        }
        return t;
    } catch (const nlohmann::json::exception& ex) {
        throw ParameterError(std::string("betti json: ") + ex.what());
    }
}

std::string to_text(const BettiTable& table) {
    const int pd = table.projective_dimension(), reg = table.regularity();
    const auto totals = table.totals();
    std::vector<std::size_t> width(static_cast<std::size_t>(pd + 1));
    for (int i = 0; i <= pd; ++i) {
        width[i] = std::max(std::to_string(i).size(), std::to_string(totals[i]).size());
    }
    std::size_t label = std::max<std::size_t>(6, std::to_string(reg).size() + 1);
    auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
    std::ostringstream out;
    out << std::string(label, ' ');
    for (int i = 0; i <= pd; ++i) out << ' ' << pad(std::to_string(i), width[i]);
    out << '\n' << pad("total:", label);
    for (int i = 0; i <= pd; ++i) out << ' ' << pad(std::to_string(totals[i]), width[i]);
    out << '\n';
    for (int r = 0; r <= reg; ++r) {
        out << pad(std::to_string(r) + ":", label);
        for (int i = 0; i <= pd; ++i) {
            std::uint64_t b = table.at(i, i + r);
            out << ' ' << pad(b ? std::to_string(b) : ".", width[i]);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace nbhd
