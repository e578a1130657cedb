// Command-line front end: betti, witness, subadditivity, complements,
// question, is-forest, generate.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "facetbetti/commands.hpp"

using namespace facetbetti;

namespace {

ParsedComplex load(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return parse_complex(buf.str());
    }
    return read_complex_file(path);
}

int emit(const CommandResult& result, const std::string& out) {
    if (out == "tsv") {
        std::cout << report_to_tsv(result.report);
    } else if (out == "text" && result.report.contains("complexes")) {
        std::cout << corpus_to_text(result.report);
    } else {
        std::cout << result.report.dump(2) << '\n';
    }
    if (result.report.contains("error")) {
        std::cerr << "error: " << result.report["error"]["message"].get<std::string>() << '\n';
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti numbers, lcm-lattice complements and syzygy subadditivity for facet ideals"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string backend = "auto", field_text = "GF2", out = "json", input;
    std::uint64_t seed = 0;
    std::size_t max_faces = kDefaultMaxFaces;
    bool no_timing = false;
    app.add_option("--backend", backend, "hochster | lcm | forest | all | auto")
        ->check(CLI::IsMember({"hochster", "lcm", "forest", "all", "auto"}));
    app.add_option("--field", field_text, "Q or GF(p)");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--max-faces", max_faces, "cap on enumerated faces per homology computation");
    app.add_option("--out", out, "json | tsv | text (generate only)")->check(CLI::IsMember({"json", "tsv", "text"}));
    app.add_flag("--no-timing", no_timing, "omit timing fields");

    auto add_input = [&](CLI::App* sub) { sub->add_option("input", input, "facet-list file, or - for stdin")->required(); };

    auto* betti = app.add_subcommand("betti", "graded and multigraded Betti numbers of S/I");
    add_input(betti);

    int a = 0, b = 0;
    auto* witness = app.add_subcommand("witness", "complement witness pair for beta_{a+b,n} != 0 on a forest");
    add_input(witness);
    witness->add_option("a", a)->required();
    witness->add_option("b", b)->required();

    auto* subadd = app.add_subcommand("subadditivity", "check t_{a+b} <= t_a + t_b");
    add_input(subadd);

    std::string monomial;
    auto* complements = app.add_subcommand("complements", "complements of a monomial in the lcm lattice");
    add_input(complements);
    complements->add_option("monomial", monomial, "e.g. bcd or b*c*d")->required();

    auto* question = app.add_subcommand("question", "search complement pairs carrying beta_a and beta_b");
    add_input(question);
    question->add_option("a", a)->required();
    question->add_option("b", b)->required();

    auto* forest = app.add_subcommand("is-forest", "exhaustive forest check with certificate");
    add_input(forest);

    std::string kind;
    int n = 0, q = 1;
    std::size_t count = 10;
    auto* generate = app.add_subcommand("generate", "test corpora of complexes");
    generate->add_option("kind", kind, "forest-random | forest-exhaustive | squarefree-exhaustive")
        ->required()
        ->check(CLI::IsMember({"forest-random", "forest-exhaustive", "squarefree-exhaustive"}));
    generate->add_option("-n,--vertices", n, "vertex bound")->required();
    generate->add_option("-q,--facets", q, "facet bound");
    generate->add_option("--count", count, "number of random complexes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    CommandOptions options;
    options.backend = backend;
    options.seed = seed;
    options.max_faces = max_faces;
    options.timing = !no_timing;

    auto run = [&]() -> CommandResult {
        options.field = Field::parse(field_text);
        if (*generate) return cmd_generate(kind, n, q, count, options);
        const ParsedComplex parsed = load(input);
        if (*betti) return cmd_betti(parsed, options);
        if (*witness) return cmd_witness(parsed, a, b, options);
        if (*subadd) return cmd_subadditivity(parsed, options);
        if (*complements) return cmd_complements(parsed, monomial, options);
        if (*question) return cmd_question(parsed, a, b, options);
        return cmd_is_forest(parsed, options);
    };
    const std::string name = app.get_subcommands().front()->get_name();
    return emit(guarded(name, run), out);
}
