#ifndef FACETBETTI_WITNESS_HPP
#define FACETBETTI_WITNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "facetbetti/betti.hpp"
#include "facetbetti/core.hpp"

namespace facetbetti {

/// One step of a complement construction.
struct TraceStep {
    int depth = 0;
    /// "facet-complement", "pair", "base", "lift", ...
    std::string step;
    /// The complex worked on at this step, as text.
    std::string complex;
    VertexSet leaf;
    int degree = 0;
    VertexSet result;
    std::string note;
};

std::vector<std::string> format_trace(const UniversePtr& universe, const std::vector<TraceStep>& trace);

struct FacetComplement {
    VertexSet u;
    /// β_{i-1,|u|}(Δ_[u]).
    std::int64_t beta = 0;
    std::vector<TraceStep> trace;
};

/**
 * For a forest Δ with at least two facets, β_{i,n}(Δ) ≠ 0 and a facet G,
 * builds u with Δ_[u], Δ_[G] complements in Δ and β_{i-1,|u|}(Δ_[u]) ≠ 0.
 *
 * Picks the canonical-first leaf F ≠ G, localizes at F to get Γ, takes the
 * canonical-first facet H∖F of Γ inside G∖F and recurses on (Γ, H∖F, i-1);
 * the answer is F ∪ v. When Γ is a single facet (so i = 2) the recursion
 * stops with v = ∅.
 */
FacetComplement witness_facet_complement(const SimplicialComplex& complex, VertexSet facet, int i);

struct WitnessPair {
    VertexSet u;
    VertexSet w;
    int a = 0;
    int b = 0;
    /// β_{a,|u|}(Δ_[u]).
    std::int64_t beta_u = 0;
    /// β_{b,|w|}(Δ_[w]).
    std::int64_t beta_w = 0;
    std::vector<TraceStep> trace;
};

/// Complements Δ_[u], Δ_[w] with β_{a,|u|}(Δ_[u]) ≠ 0 and β_{b,|w|}(Δ_[w]) ≠ 0,
/// for a forest with at least two facets and β_{a+b,n}(Δ) ≠ 0.
WitnessPair witness_pair(const SimplicialComplex& complex, int a, int b);

struct WitnessCheck {
    bool complementary = false;
    std::int64_t beta_u = 0;
    std::int64_t beta_w = 0;
    bool ok() const { return complementary && beta_u != 0 && beta_w != 0; }
};

/// Recomputes complementarity and both Betti numbers with the Hochster oracle.
WitnessCheck verify_witness(const SimplicialComplex& complex, const WitnessPair& pair,
                            const Field& field = Field::rationals());

/// Oracle check of a facet complement: returns β_{i-1,|u|}(Δ_[u]) by the
/// Hochster formula, or 0 when u and G are not complements.
std::int64_t verify_facet_complement(const SimplicialComplex& complex, VertexSet facet, VertexSet u, int i,
                                     const Field& field = Field::rationals());

struct SubadditivityRow {
    int a = 0;
    int b = 0;
    int t_a = 0;
    int t_b = 0;
    int t_ab = 0;
    bool holds = false;
};

struct SubadditivityReport {
    std::vector<SubadditivityRow> rows;
    bool holds = true;
};

/// Every a, b ≥ 1 with a + b ≤ pd: t_{a+b} ≤ t_a + t_b.
SubadditivityReport check_subadditivity(const BettiTable& table);

enum class SearchStatus {
    /// β_{a+b,n} = 0, so the question does not apply.
    Inapplicable,
    Found,
    /// Exhaustive search found no pair.
    NoneFound,
    /// A resource cap stopped the Betti computation.
    Incomplete,
};

std::string to_string(SearchStatus status);

struct ComplementSearch {
    SearchStatus status = SearchStatus::Inapplicable;
    std::int64_t top_beta = 0;
    /// (m, m′) with m, m′ complements, β_{a,m} ≠ 0 and β_{b,m′} ≠ 0.
    std::vector<std::pair<VertexSet, VertexSet>> pairs;
    std::string message;
};

/// Exhaustive scan of L∖{0̂,1̂} for complement pairs carrying β_a and β_b,
/// given β_{a+b,n}(S/I) ≠ 0. Uses the Hochster oracle over `field`.
ComplementSearch question_main_search(const MonomialIdeal& ideal, int a, int b, const Field& field,
                                      std::size_t max_faces = kDefaultMaxFaces);
/// Same, with a precomputed multigraded table.
ComplementSearch question_main_search(const MonomialIdeal& ideal, const BettiTable& table, int a, int b);

}  // namespace facetbetti

#endif
