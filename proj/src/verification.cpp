#include "nbhd/verification.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

#include "nbhd/enumerate.hpp"
#include "nbhd/errors.hpp"
#include "nbhd/ideal.hpp"

namespace nbhd {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::discrepancy: return "discrepancy";
        case Verdict::error: return "error";
    }
    return "error";
}

namespace {

nlohmann::json sets_json(const std::vector<VertexSet>& sets) {
    nlohmann::json a = nlohmann::json::array();
    for (VertexSet s : sets) a.push_back(s.elements());
    return a;
}

nlohmann::json ideal_json(const MonomialIdeal& i) { return to_m2(i); }

nlohmann::json table_json(const BettiTable& t) { return nlohmann::json(to_json(t)); }

std::string relation_name(Check::Relation r) {
    switch (r) {
        case Check::Relation::equal: return "=";
        case Check::Relation::at_least: return ">=";
        case Check::Relation::flag: return "flag";
    }
    return "=";
}

}  // namespace

void TheoremReport::expect_equal(std::string quantity, nlohmann::json expected, nlohmann::json computed,
                                 std::string source) {
    Verdict v = expected == computed ? Verdict::pass : Verdict::fail;
    checks.push_back({std::move(quantity), std::move(expected), std::move(computed), std::move(source),
                      Check::Relation::equal, v});
}

void TheoremReport::expect_at_least(std::string quantity, long long bound, long long computed, std::string source) {
    checks.push_back({std::move(quantity), bound, computed, std::move(source), Check::Relation::at_least,
                      computed >= bound ? Verdict::pass : Verdict::fail});
}

void TheoremReport::flag_if_differs(std::string quantity, nlohmann::json stated, nlohmann::json computed,
                                    std::string source) {
    Verdict v = stated == computed ? Verdict::pass : Verdict::discrepancy;
    checks.push_back({std::move(quantity), std::move(stated), std::move(computed), std::move(source),
                      Check::Relation::flag, v});
}

Verdict TheoremReport::verdict() const {
    bool flagged = false;
    for (const auto& c : checks) {
        if (c.verdict == Verdict::fail || c.verdict == Verdict::error) return Verdict::fail;
        flagged |= c.verdict == Verdict::discrepancy;
    }
    return flagged ? Verdict::discrepancy : Verdict::pass;
}

nlohmann::ordered_json TheoremReport::to_json() const {
    nlohmann::ordered_json j;
    j["claim_id"] = claim_id;
    j["instance"] = instance;
    j["field"] = field;
    j["verdict"] = to_string(verdict());
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["quantity"] = c.quantity;
        cj["relation"] = relation_name(c.relation);
        cj["expected"] = c.expected;
        cj["computed"] = c.computed;
        cj["source"] = c.source;
        cj["verdict"] = to_string(c.verdict);
        j["checks"].push_back(std::move(cj));
    }
    return j;
}

std::string csv_header_reports() { return "claim_id,instance,verdict"; }

std::string to_csv_row(const TheoremReport& r) {
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    return quote(r.claim_id) + "," + quote(r.instance) + "," + to_string(r.verdict());
}

// ---------------------------------------------------------------------------

namespace {

TheoremReport new_report(std::string claim, std::string instance, const CheckContext& ctx) {
    TheoremReport r;
    r.claim_id = std::move(claim);
    r.instance = std::move(instance);
    r.field = ctx.field.name();
    return r;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

TheoremReport check_lemma_minimal_primes(const Graph& g, const std::string& instance, const CheckContext& ctx) {
    TheoremReport r = new_report("lemma", instance, ctx);
    const MonomialIdeal ni = closed_neighborhood_ideal(g);
    const auto dominating = minimal_dominating_sets(g);
    const DominationNumbers dn = domination_numbers(g);
    const HeightPair h = height_and_bight(ni);
    const MonomialIdeal dual = alexander_dual(ni);

    r.expect_equal("minimal primes of NI", sets_json(dominating), sets_json(minimal_primes(ni)),
                   "minimal dominating sets");
    r.expect_equal("ht(NI)", dn.gamma, h.height, "domination number");
    r.expect_equal("bight(NI)", dn.gamma_prime, h.big_height, "largest minimal dominating set");
    r.expect_equal("ht(NI dual)", min_degree(g) + 1, height_and_bight(dual).height, "min degree + 1");
    r.expect_equal("NI dual", ideal_json(minimalize(dominating, g.order())), ideal_json(dual),
                   "products over minimal dominating sets");
    return r;
}

TheoremReport check_path_theorem(int n, const CheckContext& ctx) {
    if (n < 2) throw ParameterError("path.n: must be >= 2, got " + std::to_string(n));
    TheoremReport r = new_report("path", "path:" + std::to_string(n), ctx);
    const Graph g = build_family({PathSpec{n}});
    const MonomialIdeal ni = closed_neighborhood_ideal(g);
    const BettiTable b = betti_table(ni, ctx.field, ctx.engine);
    r.expect_equal("reg(R/NI)", n / 2, b.regularity(), "floor(n/2)");
    r.expect_equal("pd(R/NI)", (n + 1) / 2, b.projective_dimension(), "n/2 for even n, (n+1)/2 for odd n");
    r.expect_equal("ht(NI)", (n + 2) / 3, height_and_bight(ni).height, "ceil(n/3)");
    const int ht_di = height_and_bight(dominating_ideal(g)).height;
    r.expect_equal("ht(DI)", min_degree(g) + 1, ht_di, "min degree + 1");
    r.flag_if_differs("ht(DI) stated constant", 3, ht_di, "stated closed form ht(DI(P_n)) = 3");
    return r;
}

TheoremReport check_forest_bounds(const Graph& g, const std::string& instance, const CheckContext& ctx) {
    if (!is_forest(g)) throw DomainError("forest bounds: " + instance + " is not a forest");
    TheoremReport r = new_report("forest", instance, ctx);
    const int a = matching_number(g);
    const BettiTable b = betti_table(closed_neighborhood_ideal(g), ctx.field, ctx.engine);
    r.expect_at_least("reg(R/NI)", a, b.regularity(), "matching number");
    r.expect_at_least("pd(R/NI)", a, b.projective_dimension(), "matching number");
    return r;
}

TheoremReport check_special_class(const Graph& g, const std::string& instance, const CheckContext& ctx) {
    const VertexPartition part = vertex_partition(g);
    for (auto [u, v] : g.edges())
        if (part.v3.contains(u) && part.v3.contains(v))
            throw PreconditionError("special class: V3 is not independent in " + instance + ", edge {" +
                                    std::to_string(u) + "," + std::to_string(v) + "}");
    TheoremReport r = new_report("special", instance, ctx);
    const int a = matching_number(g);
    const MonomialIdeal ni = closed_neighborhood_ideal(g);
    const BettiTable b = betti_table(ni, ctx.field, ctx.engine);
    r.expect_equal("a_G", part.v2.size() + part.v1_prime.size() / 2, a, "|V2| + |V1'|/2");
    r.expect_equal("reg(R/NI)", a, b.regularity(), "matching number");
    r.expect_equal("pd(R/NI)", g.order() - a, b.projective_dimension(), "n - a_G");
    r.expect_equal("bight(NI)", g.order() - a, height_and_bight(ni).big_height, "n - a_G");
    return r;
}

TheoremReport check_generalized_star(const std::vector<int>& arms, const CheckContext& ctx) {
    const Graph g = build_family({GeneralizedStarSpec{arms}});
    TheoremReport r = new_report("star", "gstar:" + join(arms), ctx);
    const int a = matching_number(g);
    const BettiTable b = betti_table(closed_neighborhood_ideal(g), ctx.field, ctx.engine);
    r.expect_equal("reg(R/NI)", a, b.regularity(), "matching number");
    if (arms.size() <= 2) r.expect_equal("reg(R/NI) as a path", g.order() / 2, b.regularity(), "floor(n/2)");
    return r;
}

TheoremReport check_book(int m, const CheckContext& ctx) {
    if (m < 1 || m > 5) throw ParameterError("book.m: must be in 1..5, got " + std::to_string(m));
    const Graph g = build_family({BookSpec{m}});
    TheoremReport r = new_report("book", "book:" + std::to_string(m), ctx);
    const BettiTable b = betti_table(closed_neighborhood_ideal(g), ctx.field, ctx.engine);
    r.expect_equal("a_G", m + 1, matching_number(g), "m + 1");
    r.expect_equal("reg(R/NI)", m + 1, b.regularity(), "m + 1");
    return r;
}

// ---------------------------------------------------------------------------

namespace {

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::int64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

/// Closed form for complete multipartite graphs with every part of size > 1.
/// Entries keyed (i, j); (0,0) included.
std::map<std::pair<int, int>, std::int64_t> rpartite_betti_no_singletons(const std::vector<int>& parts) {
    std::map<std::pair<int, int>, std::int64_t> beta{{{0, 0}, 1}};
    const int r = static_cast<int>(parts.size());
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    for (int i = 1; i <= n; ++i) {
        // Edge ideal term: sum over l >= 2 chosen parts j_1 < ... < j_l, weight l-1,
        // of sum over alpha_1 + ... + alpha_l = i+1 (alpha >= 1) of prod C(n_{j_t}, alpha_t).
        std::int64_t edge = 0;
        for (std::uint32_t subset = 1; subset < (1u << r); ++subset) {
            const int l = std::popcount(subset);
            if (l < 2) continue;
            // poly = prod_t ((1+x)^{n_t} - 1), truncated at degree i+1
            std::vector<std::int64_t> poly(static_cast<std::size_t>(i + 2), 0);
            poly[0] = 1;
            for (int t = 0; t < r; ++t) {
                if (!((subset >> t) & 1u)) continue;
                std::vector<std::int64_t> next(poly.size(), 0);
                for (std::size_t d = 0; d < poly.size(); ++d)
                    for (int a = 1; d + a < poly.size(); ++a) next[d + a] += poly[d] * binomial(parts[t], a);
                poly = std::move(next);
            }
            edge += (l - 1) * poly[i + 1];
        }
        if (edge) beta[{i, i + 1}] += edge;
        // gamma_{i,j} = sum over parts with n_t = j - i + 1 of C(n - n_t, i - 1)
        for (int t = 0; t < r; ++t) {
            std::int64_t g = binomial(n - parts[t], i - 1);
            if (g) beta[{i, i + parts[t] - 1}] += g;
        }
    }
    return beta;
}

}  // namespace

BettiTable evaluate_rpartite_betti(std::vector<int> parts) {
    if (parts.empty()) throw ParameterError("kpartite.parts: needs at least one part");
    std::sort(parts.begin(), parts.end());
    if (parts.front() < 1) throw ParameterError("kpartite.parts: sizes must be >= 1");
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    const int s = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
    const std::vector<int> rest(parts.begin() + s, parts.end());
    const auto reduced = rpartite_betti_no_singletons(rest);
    // Tensor with the Koszul complex on the s singleton variables:
    // beta_{i,j} = sum_l C(s, i-l) beta'_{l, j-i+l}
    std::map<std::pair<int, int>, std::int64_t> beta;
    for (const auto& [lj, b] : reduced)
        for (int a = 0; a <= s; ++a) beta[{lj.first + a, lj.second + a}] += binomial(s, a) * b;
    BettiTable table(n);
    for (const auto& [ij, b] : beta)
        if (ij != std::pair{0, 0}) table.add(ij.first, ij.second, static_cast<std::uint64_t>(b));
    return table;
}

int rpartite_pd_di(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end());
    const int r = static_cast<int>(parts.size());
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    const int last_singleton = static_cast<int>(std::count(parts.begin(), parts.end(), 1));  // 0 when none
    return last_singleton <= r - 2 ? n - 1 : r;
}

TheoremReport check_r_partite(std::vector<int> parts, const CheckContext& ctx) {
    if (parts.empty()) throw ParameterError("kpartite.parts: needs at least one part");
    std::sort(parts.begin(), parts.end());
    const Graph g = build_family({CompleteMultipartiteSpec{parts}});
    TheoremReport r = new_report("rpartite", "kpartite:" + join(parts), ctx);
    const int n = g.order(), nr = parts.back(), rr = static_cast<int>(parts.size());
    const int s = static_cast<int>(std::count(parts.begin(), parts.end(), 1));

    // Expected DI: one product per part (a bare variable for a singleton part),
    // plus the edges between non-singleton parts.
    std::vector<VertexSet> expected_gens;
    int label = 1;
    for (int p : parts) {
        VertexSet part;
        for (int k = 0; k < p; ++k) part.insert(label++);
        expected_gens.push_back(part);
    }
    const VertexSet singletons = VertexSet::full(s);
    for (auto [u, v] : g.edges())
        if (!singletons.contains(u) && !singletons.contains(v)) expected_gens.push_back(VertexSet{u, v});
    const MonomialIdeal expected_di = minimalize(expected_gens, n);

    const MonomialIdeal di = dominating_ideal(g);
    const MonomialIdeal ni = closed_neighborhood_ideal(g);
    r.expect_equal("DI generators", ideal_json(expected_di), ideal_json(di),
                   s == 0 ? "edge ideal + part products" : "singleton variables + DI of the remaining parts");

    r.expect_equal("ht(DI)", n - nr + 1, height_and_bight(di).height, "n - n_r + 1");
    if (rr >= 2)
        r.expect_equal("ht(NI)", std::min(parts.front(), 2), height_and_bight(ni).height, "min(n_1, 2)");
    else
        r.flag_if_differs("ht(NI)", std::min(parts.front(), 2), height_and_bight(ni).height,
                          "min(n_1, 2); stated for r >= 2");

    const BettiTable b_di = betti_table(di, ctx.field, ctx.engine);
    const BettiTable b_ni = betti_table(ni, ctx.field, ctx.engine);
    r.expect_equal("betti(R/DI)", table_json(evaluate_rpartite_betti(parts)), table_json(b_di),
                   "edge ideal Betti numbers + gamma correction, Koszul shift for singleton parts");

    std::optional<std::vector<Monomial>> order = linear_quotients_order(di);
    r.expect_equal("DI has linear quotients", true, order.has_value(), "closed form");
    r.expect_equal("DI componentwise linear", true, is_componentwise_linear(di, ctx.field, ctx.engine), "closed form");
    r.expect_equal("R/NI sequentially CM", true, is_sequentially_cm(ni, ctx.field, ctx.engine), "closed form");

    r.expect_equal("reg(DI)", nr, b_di.ideal_regularity(), "n_r");
    r.expect_equal("pd(R/NI)", nr, b_ni.projective_dimension(), "n_r");
    const int ix = rpartite_pd_di(parts);
    const std::string ix_source = s <= rr - 2 ? "n - 1 (max{i : n_i = 1} <= r - 2)" : "r";
    r.expect_equal("pd(R/DI)", ix, b_di.projective_dimension(), ix_source);
    r.expect_equal("reg(NI)", ix, b_ni.ideal_regularity(), ix_source);
    return r;
}

TheoremReport check_path_ideal_oracle(int n, const CheckContext& ctx) {
    if (n < 3) throw ParameterError("path-ideal.n: must be >= 3, got " + std::to_string(n));
    TheoremReport r = new_report("path-ideal", "I3(P_" + std::to_string(n) + ")", ctx);
    const int p = n / 4, d = n % 4;
    const BettiTable b = betti_table(path_ideal_3(n), ctx.field, ctx.engine);
    r.expect_equal("pd(R/I3)", d != 3 ? 2 * p : 2 * p + 1, b.projective_dimension(), "n = 4p + d: 2p, or 2p + 1 when d = 3");
    r.expect_equal("reg(R/I3)", d != 3 ? 2 * p : 2 * (p + 1), b.regularity(), "n = 4p + d: 2p, or 2(p + 1) when d = 3");
    return r;
}

// ---------------------------------------------------------------------------

std::string csv_header_sweep() { return "tree_id,n,a_G,reg,pd,verdict"; }

std::string to_csv_row(const SweepRecord& r) {
    std::string row = r.tree_id + "," + std::to_string(r.n) + "," + std::to_string(r.matching) + ",";
    if (r.verdict == Verdict::error) return row + ",," + to_string(r.verdict);
    return row + std::to_string(r.reg) + "," + std::to_string(r.pd) + "," + to_string(r.verdict);
}

void sweep_forest_conjecture(int max_n, const std::function<void(const SweepRecord&)>& sink, const CheckContext& ctx,
                             int jobs, int min_n, const std::set<std::string>& skip) {
    if (max_n < 1 || max_n > kMaxSweepOrder)
        throw ParameterError("sweep.max_n: must be in 1.." + std::to_string(kMaxSweepOrder) + ", got " +
                             std::to_string(max_n));
    if (min_n < 1) throw ParameterError("sweep.min_n: must be >= 1");
    EngineOptions engine = ctx.engine;
    engine.jobs = 1;
    for (int n = min_n; n <= max_n; ++n) {
        const std::vector<Graph> trees = enumerate_trees(n);
        std::vector<std::optional<SweepRecord>> results(trees.size());
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t k; (k = next.fetch_add(1)) < trees.size();) {
                SweepRecord rec;
                rec.tree_id = tree_code(trees[k]);
                if (skip.contains(rec.tree_id)) continue;
                rec.n = n;
                rec.matching = matching_number(trees[k]);
                const MonomialIdeal ni = closed_neighborhood_ideal(trees[k]);
                try {
                    const BettiTable b = betti_table(ni, ctx.field, engine);
                    rec.reg = b.regularity();
                    rec.pd = b.projective_dimension();
                    rec.verdict = rec.reg == rec.matching ? Verdict::pass : Verdict::fail;
                    if (rec.verdict == Verdict::fail) rec.counterexample = to_m2(ni) + " " + to_json(b).dump();
                } catch (const ResourceError& e) {
                    rec.verdict = Verdict::error;
                    rec.error = e.what();
                }
                results[k] = std::move(rec);
            }
        };
        const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(trees.size())));
        if (workers == 1) {
            work();
        } else {
            std::vector<std::jthread> threads;
            for (int w = 0; w < workers; ++w) threads.emplace_back(work);
        }
        for (auto& rec : results)
            if (rec) sink(*rec);
    }
}

}  // namespace nbhd
