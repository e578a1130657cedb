#include "facetbetti/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace facetbetti {

ParsedComplex parse_complex(const std::string& text) {
    std::vector<std::string> names;
    std::vector<std::pair<int, std::vector<std::string>>> lines;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::vector<std::string> facet;
        std::string token;
        while (tokens >> token) {
            if (!VertexUniverse::valid_name(token)) {
                throw ParseError("invalid vertex name '" + token + "'", number);
            }
            if (std::find(facet.begin(), facet.end(), token) == facet.end()) facet.push_back(token);
            if (std::find(names.begin(), names.end(), token) == names.end()) {
                names.push_back(token);
                if (names.size() > static_cast<std::size_t>(VertexSet::kMaxVertices)) {
                    throw ParseError("more than 64 distinct vertices", number);
                }
            }
        }
        if (!facet.empty()) lines.emplace_back(number, std::move(facet));
    }
    auto universe = make_universe(names);
    std::vector<VertexSet> facets;
    for (const auto& [n, facet] : lines) facets.push_back(universe->parse_set(facet));
    ParsedComplex out{SimplicialComplex(universe, facets), {}};
    for (std::size_t k = 0; k < facets.size(); ++k) {
        if (!out.complex.has_facet(facets[k])) {
            out.warnings.push_back("line " + std::to_string(lines[k].first) + ": " + universe->to_string(facets[k]) +
                                   " is not maximal and was dropped");
        } else if (std::find(facets.begin(), facets.begin() + static_cast<std::ptrdiff_t>(k), facets[k]) !=
                   facets.begin() + static_cast<std::ptrdiff_t>(k)) {
            out.warnings.push_back("line " + std::to_string(lines[k].first) + ": duplicate facet " +
                                   universe->to_string(facets[k]));
        }
    }
    return out;
}

ParsedComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex(buf.str());
}

std::string format_complex(const SimplicialComplex& complex) {
    std::string out;
    for (VertexSet f : complex.facets()) {
        bool first = true;
        f.for_each([&](int v) {
            if (!first) out += ' ';
            out += complex.universe()->name(v);
            first = false;
        });
        out += '\n';
    }
    return out;
}

std::vector<std::string> split_complex_stream(const std::string& text) {
    std::vector<std::string> blocks;
    std::istringstream in(text);
    std::string line, current;
    bool has_content = false;
    auto flush = [&] {
        if (has_content) blocks.push_back(current);
        current.clear();
        has_content = false;
    };
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            flush();
            continue;
        }
        current += line + '\n';
        has_content = true;
    }
    flush();
    return blocks;
}

VertexSet parse_monomial(const VertexUniverse& universe, const std::string& text) {
    std::string cleaned = text;
    std::replace_if(cleaned.begin(), cleaned.end(), [](char c) { return c == ',' || c == '*'; }, ' ');
    std::istringstream tokens(cleaned);
    std::vector<std::string> parts;
    std::string token;
    while (tokens >> token) parts.push_back(token);
    if (parts.size() == 1 && parts[0] == "1") return VertexSet{};
    if (parts.size() == 1 && universe.index_of(parts[0]) < 0) {
        const bool single_chars = std::all_of(universe.names().begin(), universe.names().end(),
                                              [](const std::string& n) { return n.size() == 1; });
        if (single_chars) {
            std::vector<std::string> chars;
            for (char c : parts[0]) chars.emplace_back(1, c);
            parts = std::move(chars);
        }
    }
    if (parts.empty()) throw ParseError("empty monomial");
    return universe.parse_set(parts);
}

}  // namespace facetbetti
