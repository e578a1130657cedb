#ifndef FACETBETTI_TESTS_SUPPORT_HPP
#define FACETBETTI_TESTS_SUPPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "facetbetti/core.hpp"

namespace testing {

/// "ab bc cd" -> complex with one-letter vertices, universe in order of
/// first appearance.
inline facetbetti::SimplicialComplex cx(const std::string& text) {
    std::vector<std::vector<std::string>> facets;
    std::istringstream in(text);
    std::string word;
    while (in >> word) {
        std::vector<std::string> f;
        for (char c : word) f.emplace_back(1, c);
        facets.push_back(f);
    }
    return facetbetti::SimplicialComplex::from_names(facets);
}

/// Subset of the complex's universe from one-letter names ("bcd").
inline facetbetti::VertexSet vs(const facetbetti::SimplicialComplex& c, const std::string& letters) {
    std::vector<std::string> names;
    for (char ch : letters) names.emplace_back(1, ch);
    return c.universe()->parse_set(names);
}

inline std::vector<std::uint64_t> masks(const facetbetti::SimplicialComplex& c) {
    std::vector<std::uint64_t> out;
    for (auto f : c.facets()) out.push_back(f.bits());
    return out;
}

}  // namespace testing

#endif
