#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "nbhd/betti.hpp"
#include "nbhd/enumerate.hpp"
#include "nbhd/errors.hpp"
#include "nbhd/verification.hpp"

using namespace nbhd;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kResource = 3 };

struct Options {
    std::string graph;
    std::string kind = "ni";
    std::string field = "q";
    std::string format;
    std::string claim;
    std::string params;
    int jobs = std::max(1u, std::thread::hardware_concurrency());
    int max_n = 0;
    int min_n = 1;
    std::string out;
    bool resume = false;
};

std::vector<FieldSpec> fields_of(const std::string& text) {
    if (text == "both") return {FieldSpec::rationals(), FieldSpec::prime_field(2)};
    return {FieldSpec::parse(text)};
}

EngineOptions engine_of(const Options& o) {
    EngineOptions e = EngineOptions::from_environment();
    e.jobs = o.jobs;
    return e;
}

MonomialIdeal ideal_of(const Graph& g, const std::string& kind) {
    if (kind == "ni") return closed_neighborhood_ideal(g);
    if (kind == "di") return dominating_ideal(g);
    if (kind == "edge") return edge_ideal(g);
    throw ParameterError("kind: expected ni, di or edge, got '" + kind + "'");
}

std::vector<int> parse_ints(const std::string& csv, const std::string& field) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto dots = tok.find("..");
        try {
            std::size_t used = 0;
            if (dots == std::string::npos) {
                out.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } else {
                int lo = std::stoi(tok.substr(0, dots)), hi = std::stoi(tok.substr(dots + 2), &used);
                if (used != tok.size() - dots - 2 || hi < lo) throw std::invalid_argument(tok);
                for (int k = lo; k <= hi; ++k) out.push_back(k);
            }
        } catch (const std::logic_error&) {
            throw ParameterError(field + ": expected integers or ranges a..b, got '" + tok + "'");
        }
    }
    if (out.empty()) throw ParameterError(field + ": empty");
    return out;
}

int cmd_ideal(const Options& o) {
    const MonomialIdeal ideal = ideal_of(graph_from_dsl(o.graph), o.kind);
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["n"] = ideal.ambient();
        j["generators"] = nlohmann::json::array();
        for (const Monomial& m : ideal.gens()) j["generators"].push_back(m.support.elements());
        std::cout << j.dump() << "\n";
    } else {
        std::cout << to_m2(ideal) << "\n";
    }
    return kPass;
}

int cmd_betti(const Options& o) {
    if (o.kind == "edge") throw ParameterError("kind: betti takes ni or di");
    const MonomialIdeal ideal = ideal_of(graph_from_dsl(o.graph), o.kind);
    const EngineOptions engine = engine_of(o);
    std::vector<BettiTable> tables;
    for (const FieldSpec& f : fields_of(o.field)) tables.push_back(betti_table(ideal, f, engine));
    if (o.format == "text")
        std::cout << to_text(tables.front());
    else
        std::cout << to_json(tables.front()).dump() << "\n";
    if (tables.size() == 2 && !(tables[0] == tables[1])) {
        std::cerr << "error: betti tables differ between QQ and GF(2): " << to_json(tables[1]).dump() << "\n";
        return kFail;
    }
    return kPass;
}

int cmd_invariants(const Options& o) {
    const Graph g = graph_from_dsl(o.graph);
    const MonomialIdeal ni = closed_neighborhood_ideal(g);
    const EngineOptions engine = engine_of(o);
    std::vector<BettiTable> tables;
    for (const FieldSpec& f : fields_of(o.field)) tables.push_back(betti_table(ni, f, engine));
    const HeightPair h = height_and_bight(ni);
    const DominationNumbers dn = domination_numbers(g);
    nlohmann::ordered_json j;
    j["graph"] = o.graph;
    j["n"] = g.order();
    j["reg"] = tables.front().regularity();
    j["pd"] = tables.front().projective_dimension();
    j["ht"] = h.height;
    j["bight"] = h.big_height;
    j["gamma"] = dn.gamma;
    j["gamma_prime"] = dn.gamma_prime;
    j["a_G"] = matching_number(g);
    std::cout << j.dump() << "\n";
    if (tables.size() == 2 && !(tables[0] == tables[1])) {
        std::cerr << "error: betti tables of NI differ between QQ and GF(2)\n";
        return kFail;
    }
    return kPass;
}

std::vector<TheoremReport> run_claim(const Options& o, const CheckContext& ctx) {
    std::vector<TheoremReport> reports;
    const std::string& c = o.claim;
    auto graph_claim = [&](auto checker, auto pool) {
        if (!o.graph.empty()) {
            reports.push_back(checker(graph_from_dsl(o.graph), o.graph, ctx));
            return;
        }
        if (o.params.empty()) throw ParameterError("verify: --claim " + c + " needs --graph or --params");
        for (int n : parse_ints(o.params, "params"))
            for (const Graph& g : pool(n)) {
                std::ostringstream label;
                write_edge_list(label, g);
                std::string inst = label.str();
                std::replace(inst.begin(), inst.end(), '\n', ';');
                if (c == "special" && !is_independent_set(g, vertex_partition(g).v3)) continue;
                reports.push_back(checker(g, inst, ctx));
            }
    };
    if (c == "lemma") {
        graph_claim(check_lemma_minimal_primes, enumerate_graphs);
    } else if (c == "forest") {
        graph_claim(check_forest_bounds, enumerate_trees);
    } else if (c == "special") {
        graph_claim(check_special_class, enumerate_graphs);
    } else if (c == "path") {
        for (int n : parse_ints(o.params, "params")) reports.push_back(check_path_theorem(n, ctx));
    } else if (c == "star") {
        reports.push_back(check_generalized_star(parse_ints(o.params, "params"), ctx));
    } else if (c == "book") {
        for (int m : parse_ints(o.params, "params")) reports.push_back(check_book(m, ctx));
    } else if (c == "rpartite") {
        reports.push_back(check_r_partite(parse_ints(o.params, "params"), ctx));
    } else if (c == "path-ideal") {
        for (int n : parse_ints(o.params, "params")) reports.push_back(check_path_ideal_oracle(n, ctx));
    } else {
        throw ParameterError("claim: unknown claim '" + c + "'");
    }
    return reports;
}

int cmd_verify(const Options& o) {
    int code = kPass;
    bool header = false;
    std::vector<std::vector<TheoremReport>> per_field;
    for (const FieldSpec& f : fields_of(o.field)) {
        CheckContext ctx{f, engine_of(o)};
        per_field.push_back(run_claim(o, ctx));
        for (const TheoremReport& r : per_field.back()) {
            if (o.format == "csv") {
                if (!header) std::cout << csv_header_reports() << "\n";
                header = true;
                std::cout << to_csv_row(r) << "\n";
            } else {
                std::cout << r.to_json().dump() << "\n";
            }
            for (const Check& ch : r.checks) {
                if (ch.verdict == Verdict::discrepancy)
                    std::cerr << "discrepancy: " << r.claim_id << " " << r.instance << " " << ch.quantity
                              << " stated " << ch.expected.dump() << " computed " << ch.computed.dump() << "\n";
                if (ch.verdict == Verdict::fail)
                    std::cerr << "fail: " << r.claim_id << " " << r.instance << " " << ch.quantity << " expected "
                              << ch.expected.dump() << " computed " << ch.computed.dump() << "\n";
            }
            if (r.verdict() == Verdict::fail) code = kFail;
        }
    }
    if (per_field.size() == 2) {
        for (std::size_t k = 0; k < per_field[0].size(); ++k)
            for (std::size_t q = 0; q < per_field[0][k].checks.size(); ++q)
                if (per_field[0][k].checks[q].computed != per_field[1][k].checks[q].computed) {
                    std::cerr << "error: " << per_field[0][k].instance << " " << per_field[0][k].checks[q].quantity
                              << " differs between QQ and GF(2)\n";
                    code = kFail;
                }
    }
    return code;
}

// Rows already in a sweep file, keyed by tree id. Error rows are dropped so
// they are recomputed.
std::map<std::string, std::string> load_sweep(const std::string& path, std::map<std::string, int>& order_of) {
    std::map<std::string, std::string> rows;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == csv_header_sweep()) continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos || line.ends_with(",error")) continue;
        rows[line.substr(0, c1)] = line;
        order_of[line.substr(0, c1)] = std::stoi(line.substr(c1 + 1, c2 - c1 - 1));
    }
    return rows;
}

int cmd_sweep(const Options& o) {
    if (o.out.empty()) throw ParameterError("out: required");
    std::map<std::string, int> order_of;
    std::map<std::string, std::string> done;
    if (o.resume) done = load_sweep(o.out, order_of);
    std::set<std::string> skip;
    for (const auto& [id, row] : done) skip.insert(id);

    // The checkpoint file gets rows as they finish; it is rewritten in canonical
    // order at the end.
    const std::string partial = o.out + ".partial";
    std::ofstream progress(partial, std::ios::trunc);
    for (const auto& [id, row] : done) progress << row << "\n";
    std::ofstream counterexamples;
    const std::vector<FieldSpec> fields = fields_of(o.field);
    std::map<std::string, SweepRecord> fresh;
    int fails = 0, errors = 0;

    CheckContext ctx{fields.front(), engine_of(o)};
    sweep_forest_conjecture(
        o.max_n,
        [&](const SweepRecord& r) {
            progress << to_csv_row(r) << "\n" << std::flush;
            fresh[r.tree_id] = r;
            order_of[r.tree_id] = r.n;
            if (r.verdict == Verdict::fail) {
                ++fails;
                if (!counterexamples.is_open()) counterexamples.open(o.out + ".counterexamples");
                counterexamples << r.tree_id << " " << *r.counterexample << "\n" << std::flush;
                std::cerr << "counterexample: " << r.tree_id << " a_G " << r.matching << " reg " << r.reg << " "
                          << *r.counterexample << "\n";
            }
            if (r.verdict == Verdict::error) {
                ++errors;
                std::cerr << "error: " << r.tree_id << " " << *r.error << "\n";
            }
        },
        ctx, o.jobs, o.min_n, skip);

    int code = fails ? kFail : errors ? kResource : kPass;
    if (fields.size() == 2) {
        CheckContext alt{fields[1], engine_of(o)};
        sweep_forest_conjecture(
            o.max_n,
            [&](const SweepRecord& r) {
                auto it = fresh.find(r.tree_id);
                if (it != fresh.end() && (it->second.reg != r.reg || it->second.pd != r.pd)) {
                    std::cerr << "error: " << r.tree_id << " differs between QQ and GF(2)\n";
                    code = kFail;
                }
            },
            alt, o.jobs, o.min_n, skip);
    }

    std::vector<std::pair<std::pair<int, std::string>, std::string>> all;
    for (const auto& [id, row] : done) all.push_back({{order_of[id], id}, row});
    for (const auto& [id, rec] : fresh) all.push_back({{rec.n, id}, to_csv_row(rec)});
    std::sort(all.begin(), all.end());
    {
        std::ofstream out(o.out, std::ios::trunc);
        out << csv_header_sweep() << "\n";
        for (const auto& [key, row] : all) out << row << "\n";
        if (!out) throw ResourceError("out: cannot write " + o.out);
    }
    progress.close();
    std::filesystem::remove(partial);
    std::cerr << "sweep: " << all.size() << " trees, " << fresh.size() << " computed, " << fails << " fail, "
              << errors << " error\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed neighborhood and dominating ideals of graphs"};
    app.require_subcommand(1, 1);
    Options o;

    auto graph_flag = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--graph", o.graph,
                                    "path:N, gstar:A,B,..., book:M, kpartite:A,B,..., complete:N, edgeless:N, "
                                    "file:PATH, joined with '+'");
        if (required) opt->required();
    };
    auto jobs_flag = [&](CLI::App* sub) {
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    };
    auto field_flag = [&](CLI::App* sub) {
        sub->add_option("--field", o.field, "q, f2, gfP or both")->capture_default_str();
    };

    auto* ideal = app.add_subcommand("ideal", "print NI(G), DI(G) or the edge ideal");
    graph_flag(ideal, true);
    ideal->add_option("--kind", o.kind)->check(CLI::IsMember({"ni", "di", "edge"}))->capture_default_str();
    ideal->add_option("--format", o.format)->check(CLI::IsMember({"m2", "json"}));

    auto* betti = app.add_subcommand("betti", "graded Betti table of R/NI(G) or R/DI(G)");
    graph_flag(betti, true);
    betti->add_option("--kind", o.kind)->check(CLI::IsMember({"ni", "di"}))->capture_default_str();
    betti->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
    field_flag(betti);
    jobs_flag(betti);

    auto* inv = app.add_subcommand("invariants", "reg, pd, ht, bight, gamma, gamma', a_G as JSON");
    graph_flag(inv, true);
    field_flag(inv);
    jobs_flag(inv);

    auto* verify = app.add_subcommand("verify", "run a theorem checker");
    verify
        ->add_option("--claim", o.claim)
        ->required()
        ->check(CLI::IsMember({"lemma", "path", "forest", "special", "star", "book", "rpartite", "path-ideal"}));
    verify->add_option("--params", o.params, "comma-separated integers; a..b expands to a range");
    graph_flag(verify, false);
    verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
    field_flag(verify);
    jobs_flag(verify);

    auto* sweep = app.add_subcommand("sweep", "reg(R/NI(T)) = a_T over all trees up to max-n vertices");
    sweep->add_option("--max-n", o.max_n)->required();
    sweep->add_option("--min-n", o.min_n)->capture_default_str();
    sweep->add_option("--out", o.out, "CSV output")->required();
    sweep->add_flag("--resume", o.resume, "skip trees already recorded in --out");
    field_flag(sweep);
    jobs_flag(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*ideal) return cmd_ideal(o);
        if (*betti) return cmd_betti(o);
        if (*inv) return cmd_invariants(o);
        if (*verify) return cmd_verify(o);
        return cmd_sweep(o);
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kResource;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kUsage;
    }
}
