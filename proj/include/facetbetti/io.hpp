#ifndef FACETBETTI_IO_HPP
#define FACETBETTI_IO_HPP

#include <string>
#include <vector>

#include "facetbetti/core.hpp"

namespace facetbetti {

struct ParsedComplex {
    SimplicialComplex complex;
    std::vector<std::string> warnings;
};

/**
 * Facet-list text: one facet per line as whitespace-separated vertex names,
 * '#' starts a comment, blank lines are skipped. Vertex order of first
 * appearance fixes the universe. Non-maximal lines are dropped with a
 * warning.
 */
ParsedComplex parse_complex(const std::string& text);
ParsedComplex read_complex_file(const std::string& path);

/// Inverse of parse_complex: facets in canonical order, names in universe order.
std::string format_complex(const SimplicialComplex& complex);

/// Splits a generated stream into blocks separated by blank lines.
std::vector<std::string> split_complex_stream(const std::string& text);

/// Reads "b c d", "b,c,d", "b*c*d" or, when every name is one character,
/// "bcd". "1" is the unit monomial.
VertexSet parse_monomial(const VertexUniverse& universe, const std::string& text);

}  // namespace facetbetti

#endif
