#ifndef FACETBETTI_COMMANDS_HPP
#define FACETBETTI_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "facetbetti/betti.hpp"
#include "facetbetti/io.hpp"
#include "facetbetti/witness.hpp"

namespace facetbetti {

inline constexpr int kReportSchemaVersion = 1;

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitPrecondition = 2,
    kExitInvariant = 3,
    kExitResource = 4,
};

struct CommandOptions {
    /// hochster | lcm | forest | all | auto (forest when possible, else hochster)
    std::string backend = "auto";
    Field field = Field::prime(2);
    std::uint64_t seed = 0;
    std::size_t max_faces = kDefaultMaxFaces;
    bool timing = true;
};

struct CommandResult {
    nlohmann::json report;
    int exit_code = kExitOk;
};

nlohmann::json complex_to_json(const SimplicialComplex& complex);
nlohmann::json betti_to_json(const BettiTable& table);
nlohmann::json witness_to_json(const UniversePtr& universe, const WitnessPair& pair);

/// Betti table by the named backend; throws PreconditionError for `forest`
/// on a non-forest.
BettiTable compute_betti(const SimplicialComplex& complex, const std::string& backend, const Field& field,
                         std::size_t max_faces);

CommandResult cmd_betti(const ParsedComplex& input, const CommandOptions& options);
CommandResult cmd_witness(const ParsedComplex& input, int a, int b, const CommandOptions& options);
CommandResult cmd_subadditivity(const ParsedComplex& input, const CommandOptions& options);
CommandResult cmd_complements(const ParsedComplex& input, const std::string& monomial, const CommandOptions& options);
CommandResult cmd_question(const ParsedComplex& input, int a, int b, const CommandOptions& options);
CommandResult cmd_is_forest(const ParsedComplex& input, const CommandOptions& options);
/// kind: forest-random | forest-exhaustive | squarefree-exhaustive
CommandResult cmd_generate(const std::string& kind, int n, int q, std::size_t count, const CommandOptions& options);

/// Runs `body`, turning library exceptions into an error report with the
/// matching exit code.
template <class Body>
CommandResult guarded(const std::string& command, Body&& body);

/// Flattens a report into "path<TAB>value" lines.
std::string report_to_tsv(const nlohmann::json& report);

/// Generated complexes as facet-list blocks separated by blank lines.
std::string corpus_to_text(const nlohmann::json& report);

CommandResult error_report(const std::string& command, const std::string& kind, const std::string& message,
                           int exit_code, const std::vector<std::string>& trace = {});

template <class Body>
CommandResult guarded(const std::string& command, Body&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        return error_report(command, "parse", e.what(), kExitUsage);
    } catch (const PreconditionError& e) {
        return error_report(command, "precondition", e.what(), kExitPrecondition);
    } catch (const InvariantViolation& e) {
        return error_report(command, "invariant", e.what(), kExitInvariant, e.trace());
    } catch (const ResourceError& e) {
        return error_report(command, "resource", e.what(), kExitResource);
    } catch (const UniverseMismatch& e) {
        return error_report(command, "usage", e.what(), kExitUsage);
    }
}

}  // namespace facetbetti

#endif
