#ifndef FACETBETTI_COMPLEXOPS_HPP
#define FACETBETTI_COMPLEXOPS_HPP

#include <optional>
#include <vector>

#include "facetbetti/core.hpp"

namespace facetbetti {

/// Δ_[u]: the facets of Δ contained in u, over ground set u.
SimplicialComplex induced_subcollection(const SimplicialComplex& complex, VertexSet u);

/// Δ∖⟨F⟩. Throws PreconditionError if F is not a facet.
SimplicialComplex remove_facet(const SimplicialComplex& complex, VertexSet facet);

/**
 * (Δ∖⟨F⟩)_{F̄}: the inclusion-minimal sets among G∖F for the facets G ≠ F,
 * over ground set V(Δ)∖F. This is the facet complex of the facet ideal
 * localized at the prime generated by the variables outside F.
 */
SimplicialComplex localization(const SimplicialComplex& complex, VertexSet facet);

/// A leaf together with the facet witnessing the leaf condition.
struct LeafCertificate {
    VertexSet leaf;
    /// A facet G ≠ leaf holding leaf ∩ (union of the other facets); empty when
    /// the leaf is the only facet.
    std::optional<VertexSet> joint;
    /// Vertices of the leaf lying in no other facet.
    VertexSet free_vertices;
};

/// Leaves of Δ in canonical facet order. Empty for Δ without facets.
std::vector<LeafCertificate> find_leaves(const SimplicialComplex& complex);

/// Leaf test for the subcollection given by `facets` (an antichain).
std::optional<LeafCertificate> leaf_certificate(const std::vector<VertexSet>& facets, std::size_t index);

/// Vertices of `facet` that belong to no other facet of Δ.
VertexSet free_vertices(const SimplicialComplex& complex, VertexSet facet);

struct ForestVerdict {
    bool forest = false;
    /// On success: facets in an order where each is a leaf of itself plus its
    /// predecessors. Built by stripping leaves from the full complex.
    std::vector<VertexSet> leaf_order;
    /// On failure: a smallest subcollection without a leaf.
    std::vector<VertexSet> counterexample;
};

/// Exhaustive check that every nonempty subcollection has a leaf.
ForestVerdict is_forest(const SimplicialComplex& complex);

/// Greedy leaf stripping. A "false" is conclusive (Δ itself or a subcollection
/// has no leaf); a "true" is only a hint and must be confirmed by is_forest.
bool greedy_leaf_removal(const SimplicialComplex& complex);

/// Components by transitive vertex sharing, each over its own vertex set,
/// ordered by their canonical-first facet.
std::vector<SimplicialComplex> connected_components(const SimplicialComplex& complex);

/// u ∪ v = V(Δ) and Δ_[u], Δ_[v] share no facet.
bool is_complement_pair(const SimplicialComplex& complex, VertexSet u, VertexSet v);

}  // namespace facetbetti

#endif
