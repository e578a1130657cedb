#include "facetbetti/commands.hpp"

#include <chrono>
#include <sstream>

#include "facetbetti/complexops.hpp"
#include "facetbetti/generate.hpp"
#include "facetbetti/lattice.hpp"

namespace facetbetti {

using nlohmann::json;

namespace {

json names(const UniversePtr& universe, VertexSet s) { return universe->names_of(s); }

json base_report(const std::string& command, const ParsedComplex* input, const CommandOptions* options) {
    json r;
    r["schema_version"] = kReportSchemaVersion;
    r["command"] = command;
    if (input) {
        r["input"] = complex_to_json(input->complex);
        r["input"]["warnings"] = input->warnings;
    }
    if (options) {
        r["backend"] = options->backend;
        r["field"] = options->field.to_string();
    }
    return r;
}

class Stopwatch {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void stamp(CommandResult& result, const Stopwatch& clock, const CommandOptions& options) {
    if (options.timing) result.report["timing_ms"] = clock.ms();
}

std::string resolve_backend(const SimplicialComplex& complex, const std::string& backend) {
    if (backend != "auto") return backend;
    return is_forest(complex).forest ? "forest" : "hochster";
}

}  // namespace

json complex_to_json(const SimplicialComplex& complex) {
    json facets = json::array();
    for (VertexSet f : complex.facets()) facets.push_back(names(complex.universe(), f));
    return {{"vertices", names(complex.universe(), complex.ground())}, {"facets", facets}};
}

json betti_to_json(const BettiTable& table) {
    json j;
    j["field"] = table.field ? json(table.field->to_string()) : json(nullptr);
    j["n"] = table.n();
    j["pd"] = table.pd();
    json matrix = json::array();
    for (int i = 0; i <= table.pd(); ++i) {
        json row = json::array();
        for (int d = 0; d <= table.n(); ++d) row.push_back(table.at(i, d));
        matrix.push_back(row);
    }
    j["graded"] = matrix;
    json multi = json::array();
    // Entries grouped by homological degree, supports in canonical order.
    for (int i = 0; i <= table.pd(); ++i) {
        std::vector<std::pair<VertexSet, std::int64_t>> row;
        for (const auto& [key, value] : table.multigraded) {
            if (key.first == i) row.emplace_back(key.second, value);
        }
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) {
            return x.first.size() != y.first.size() ? x.first.size() < y.first.size()
                                                    : canonical_less(x.first, y.first);
        });
        for (const auto& [support, value] : row) {
            multi.push_back({{"i", i}, {"support", names(table.universe, support)}, {"value", value}});
        }
    }
    j["multigraded"] = multi;
    json t = json::object();
    for (const auto& [a, ta] : t_vector(table)) t[std::to_string(a)] = ta;
    j["t_vector"] = t;
    return j;
}

json witness_to_json(const UniversePtr& universe, const WitnessPair& pair) {
    return {{"a", pair.a},
            {"b", pair.b},
            {"u", names(universe, pair.u)},
            {"w", names(universe, pair.w)},
            {"beta_u", pair.beta_u},
            {"beta_w", pair.beta_w},
            {"trace", format_trace(universe, pair.trace)}};
}

BettiTable compute_betti(const SimplicialComplex& complex, const std::string& backend, const Field& field,
                         std::size_t max_faces) {
    const std::string chosen = resolve_backend(complex, backend);
    if (chosen == "hochster") return betti_hochster(facet_ideal(complex), field, max_faces);
    if (chosen == "lcm") return betti_lcm_interval(facet_ideal(complex), field, max_faces);
    if (chosen == "forest") return betti_forest(complex);
    throw ParseError("unknown backend '" + backend + "' (hochster, lcm, forest, auto)");
}

CommandResult error_report(const std::string& command, const std::string& kind, const std::string& message,
                           int exit_code, const std::vector<std::string>& trace) {
    CommandResult result;
    result.report = base_report(command, nullptr, nullptr);
    result.report["error"] = {{"kind", kind}, {"message", message}};
    if (!trace.empty()) result.report["error"]["trace"] = trace;
    result.exit_code = exit_code;
    return result;
}

CommandResult cmd_betti(const ParsedComplex& input, const CommandOptions& options) {
    return guarded("betti", [&] {
        Stopwatch clock;
        CommandResult result{base_report("betti", &input, &options), kExitOk};
        const auto& complex = input.complex;
        if (options.backend != "all") {
            const std::string chosen = resolve_backend(complex, options.backend);
            result.report["backend"] = chosen;
            result.report["betti"] = betti_to_json(compute_betti(complex, chosen, options.field, options.max_faces));
            stamp(result, clock, options);
            return result;
        }

        json tables = json::object();
        std::vector<std::pair<std::string, BettiTable>> computed;
        const MonomialIdeal ideal = facet_ideal(complex);
        computed.emplace_back("hochster", betti_hochster(ideal, options.field, options.max_faces));
        computed.emplace_back("lcm", betti_lcm_interval(ideal, options.field, options.max_faces));
        // At least one exact pass over the rationals.
        if (!options.field.is_rational()) {
            computed.emplace_back("hochster_Q", betti_hochster(ideal, Field::rationals(), options.max_faces));
        }
        const auto verdict = is_forest(complex);
        if (verdict.forest) {
            computed.emplace_back("forest", betti_forest(complex));
        } else {
            result.report["forest_skipped"] = "not a forest";
        }
        json mismatches = json::array();
        for (const auto& [name, table] : computed) {
            tables[name] = betti_to_json(table);
            if (!same_betti_numbers(table, computed.front().second)) mismatches.push_back(name + " != hochster");
        }
        result.report["tables"] = tables;
        result.report["betti"] = tables["hochster"];
        result.report["agreement"] = mismatches.empty();
        if (!mismatches.empty()) {
            result.report["findings"] = mismatches;
            result.exit_code = kExitInvariant;
        }
        stamp(result, clock, options);
        return result;
    });
}

CommandResult cmd_witness(const ParsedComplex& input, int a, int b, const CommandOptions& options) {
    return guarded("witness", [&] {
        Stopwatch clock;
        CommandResult result{base_report("witness", &input, &options), kExitOk};
        const auto& complex = input.complex;
        if (a < 1 || b < 1) throw PreconditionError("a and b must be positive, got a=" + std::to_string(a) +
                                                     " b=" + std::to_string(b));
        const auto top = top_degree_betti(complex, a + b);
        const int n = complex.vertices().size();
        result.report["hypotheses"] = {{"beta_top", top.value}, {"i", a + b}, {"n", n}};
        const WitnessPair pair = witness_pair(complex, a, b);
        result.report["witness"] = witness_to_json(complex.universe(), pair);
        const WitnessCheck check = verify_witness(complex, pair, Field::rationals());
        result.report["verification"] = {{"backend", "hochster"},
                                         {"field", "Q"},
                                         {"complementary", check.complementary},
                                         {"beta_u", check.beta_u},
                                         {"beta_w", check.beta_w},
                                         {"verified", check.ok()}};
        if (!check.ok()) result.exit_code = kExitInvariant;
        stamp(result, clock, options);
        return result;
    });
}

CommandResult cmd_subadditivity(const ParsedComplex& input, const CommandOptions& options) {
    return guarded("subadditivity", [&] {
        Stopwatch clock;
        CommandResult result{base_report("subadditivity", &input, &options), kExitOk};
        const auto& complex = input.complex;
        const bool forest = is_forest(complex).forest;
        const std::string chosen = resolve_backend(complex, options.backend == "all" ? "auto" : options.backend);
        result.report["backend"] = chosen;
        const BettiTable table = compute_betti(complex, chosen, options.field, options.max_faces);
        const auto report = check_subadditivity(table);
        json rows = json::array();
        for (const auto& r : report.rows) {
            rows.push_back({{"a", r.a}, {"b", r.b}, {"t_a", r.t_a}, {"t_b", r.t_b}, {"t_a_plus_b", r.t_ab},
                            {"holds", r.holds}});
        }
        result.report["is_forest"] = forest;
        result.report["pd"] = table.pd();
        result.report["t_vector"] = betti_to_json(table)["t_vector"];
        result.report["rows"] = rows;
        result.report["holds"] = report.holds;
        if (!report.holds) {
            result.report["findings"] = json::array({forest ? "subadditivity fails on a forest"
                                                            : "subadditivity fails on this ideal"});
            result.exit_code = kExitInvariant;
        }
        stamp(result, clock, options);
        return result;
    });
}

CommandResult cmd_complements(const ParsedComplex& input, const std::string& monomial, const CommandOptions& options) {
    return guarded("complements", [&] {
        Stopwatch clock;
        CommandResult result{base_report("complements", &input, &options), kExitOk};
        const auto& complex = input.complex;
        const auto& universe = complex.universe();
        const MonomialIdeal ideal = facet_ideal(complex);
        const LcmLattice lattice(ideal);
        const VertexSet m = parse_monomial(*universe, monomial);
        json list = json::array();
        for (VertexSet c : complements_of(lattice, ideal, m)) list.push_back(names(universe, c));
        result.report["monomial"] = names(universe, m);
        result.report["lattice_size"] = lattice.size();
        result.report["complements"] = list;
        stamp(result, clock, options);
        return result;
    });
}

CommandResult cmd_question(const ParsedComplex& input, int a, int b, const CommandOptions& options) {
    return guarded("question", [&] {
        Stopwatch clock;
        CommandResult result{base_report("question", &input, &options), kExitOk};
        const auto& complex = input.complex;
        const auto& universe = complex.universe();
        const auto search = question_main_search(facet_ideal(complex), a, b, options.field, options.max_faces);
        json pairs = json::array();
        for (const auto& [m, other] : search.pairs) {
            pairs.push_back({{"m", names(universe, m)}, {"complement", names(universe, other)}});
        }
        result.report["a"] = a;
        result.report["b"] = b;
        result.report["is_forest"] = is_forest(complex).forest;
        result.report["beta_top"] = search.top_beta;
        result.report["status"] = to_string(search.status);
        result.report["pairs"] = pairs;
        if (!search.message.empty()) result.report["message"] = search.message;
        switch (search.status) {
            case SearchStatus::Found: break;
            case SearchStatus::Inapplicable: result.exit_code = kExitPrecondition; break;
            case SearchStatus::NoneFound:
                result.report["findings"] = json::array({"no complement pair carries beta_a and beta_b"});
                result.exit_code = kExitInvariant;
                break;
            case SearchStatus::Incomplete: result.exit_code = kExitResource; break;
        }
        stamp(result, clock, options);
        return result;
    });
}

CommandResult cmd_is_forest(const ParsedComplex& input, const CommandOptions& options) {
    return guarded("is-forest", [&] {
        Stopwatch clock;
        CommandResult result{base_report("is-forest", &input, &options), kExitOk};
        const auto& complex = input.complex;
        const auto& universe = complex.universe();
        const auto verdict = is_forest(complex);
        result.report["is_forest"] = verdict.forest;
        result.report["greedy_leaf_removal"] = greedy_leaf_removal(complex);
        json leaves = json::array();
        for (const auto& cert : find_leaves(complex)) {
            json l = {{"leaf", names(universe, cert.leaf)}, {"free_vertices", names(universe, cert.free_vertices)}};
            l["joint"] = cert.joint ? names(universe, *cert.joint) : json(nullptr);
            leaves.push_back(l);
        }
        result.report["leaves"] = leaves;
        json order = json::array();
        for (VertexSet f : verdict.leaf_order) order.push_back(names(universe, f));
        json counter = json::array();
        for (VertexSet f : verdict.counterexample) counter.push_back(names(universe, f));
        if (verdict.forest) {
            result.report["leaf_order"] = order;
        } else {
            result.report["counterexample"] = counter;
        }
        result.report["components"] = connected_components(complex).size();
        stamp(result, clock, options);
        return result;
    });
}

CommandResult cmd_generate(const std::string& kind, int n, int q, std::size_t count, const CommandOptions& options) {
    return guarded("generate", [&] {
        Stopwatch clock;
        CommandResult result{base_report("generate", nullptr, nullptr), kExitOk};
        GeneratedCorpus corpus;
        if (kind == "forest-random") {
            corpus = forest_random(n, q, count, options.seed);
        } else if (kind == "forest-exhaustive") {
            corpus = forest_exhaustive(n);
        } else if (kind == "squarefree-exhaustive") {
            corpus = squarefree_exhaustive(n, q);
        } else {
            throw ParseError("unknown generator kind '" + kind + "'");
        }
        json list = json::array();
        for (const auto& g : corpus.complexes) {
            json c = complex_to_json(g.complex);
            c["is_forest"] = g.forest;
            list.push_back(c);
        }
        result.report["kind"] = kind;
        result.report["params"] = {{"n", n}, {"q", q}, {"count", count}, {"seed", options.seed}};
        result.report["generated"] = corpus.complexes.size();
        result.report["rejected"] = corpus.rejected;
        result.report["complexes"] = list;
        stamp(result, clock, options);
        return result;
    });
}

namespace {

void flatten(const json& node, const std::string& path, std::ostringstream& out) {
    if (node.is_object()) {
        for (auto it = node.begin(); it != node.end(); ++it) {
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
        }
    } else if (node.is_array() && std::any_of(node.begin(), node.end(), [](const json& x) { return x.is_structured(); })) {
        for (std::size_t k = 0; k < node.size(); ++k) flatten(node[k], path + "." + std::to_string(k), out);
    } else if (node.is_array()) {
        out << path << '\t';
        for (std::size_t k = 0; k < node.size(); ++k) {
            if (k) out << ' ';
            out << (node[k].is_string() ? node[k].get<std::string>() : node[k].dump());
        }
        out << '\n';
    } else {
        out << path << '\t' << (node.is_string() ? node.get<std::string>() : node.dump()) << '\n';
    }
}

}  // namespace

std::string report_to_tsv(const json& report) {
    std::ostringstream out;
    flatten(report, "", out);
    return out.str();
}

std::string corpus_to_text(const json& report) {
    std::string out;
    std::size_t k = 0;
    for (const auto& c : report.value("complexes", json::array())) {
        out += "# complex " + std::to_string(k++) + (c.value("is_forest", false) ? " forest" : " non-forest") + "\n";
        for (const auto& facet : c["facets"]) {
            bool first = true;
            for (const auto& v : facet) {
                if (!first) out += ' ';
                out += v.get<std::string>();
                first = false;
            }
            out += '\n';
        }
        out += '\n';
    }
    return out;
}

}  // namespace facetbetti
