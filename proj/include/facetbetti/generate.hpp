#ifndef FACETBETTI_GENERATE_HPP
#define FACETBETTI_GENERATE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "facetbetti/core.hpp"

namespace facetbetti {

/// Upper bound on vertices for the exhaustive generators.
inline constexpr int kMaxExhaustiveVertices = 10;

struct GeneratedComplex {
    SimplicialComplex complex;
    bool forest = false;
};

struct GeneratedCorpus {
    std::vector<GeneratedComplex> complexes;
    /// Candidates dropped because the exhaustive forest check refused them.
    std::size_t rejected = 0;
};

/**
 * Isomorphism-invariant key of a facet list: facets relabeled onto
 * 0..k-1 (k = number of used vertices) so that the sorted mask list is
 * lexicographically smallest. Vertices are first split by a degree profile
 * and only permuted within equal-profile cells.
 */
std::vector<std::uint64_t> canonical_shape(const std::vector<VertexSet>& facets);

/// Every nonempty forest on at most n vertices, one per isomorphism class,
/// grown by leaf attachment and confirmed with is_forest.
GeneratedCorpus forest_exhaustive(int n);

/// Every nonempty antichain of nonempty subsets using at most n vertices and
/// at most q facets, one per isomorphism class, tagged with is_forest.
GeneratedCorpus squarefree_exhaustive(int n, int q);

/// Random forests by leaf attachment: each new facet takes a proper part of
/// one existing facet plus fresh vertices. Candidates are validated with
/// is_forest; failures are counted, not emitted.
GeneratedCorpus forest_random(int n, int q, std::size_t count, std::uint64_t seed);

/// Uniform draw from [lo, hi] that does not depend on the standard library's
/// distribution implementation.
std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

/// Random antichain of 1..max_generators subsets of {0..n-1}, each of size
/// 1..max_degree, as a complex over all n letters.
SimplicialComplex random_squarefree(int n, int max_generators, int max_degree, std::mt19937_64& rng);

/// Relabel a mask list over 0..k-1 as a complex on letters a, b, ...
SimplicialComplex complex_from_masks(const std::vector<std::uint64_t>& masks);

}  // namespace facetbetti

#endif
