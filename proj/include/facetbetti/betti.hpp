#ifndef FACETBETTI_BETTI_HPP
#define FACETBETTI_BETTI_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "facetbetti/core.hpp"
#include "facetbetti/homology.hpp"

namespace facetbetti {

/// Graded Betti numbers β_{i,j}, nonzero entries only.
using GradedBetti = std::map<std::pair<int, int>, std::int64_t>;

/**
 * Betti numbers of S/I where S is the polynomial ring on the ground set.
 * Only nonzero entries are stored. `field` is empty for tables computed by
 * the field-free forest recursion.
 */
struct BettiTable {
    UniversePtr universe;
    VertexSet ground;
    std::optional<Field> field;
    GradedBetti graded;
    std::map<std::pair<int, VertexSet>, std::int64_t> multigraded;

    std::int64_t at(int i, int j) const;
    std::int64_t at(int i, VertexSet m) const;
    /// Adds to both the multigraded entry and its graded total.
    void add(int i, VertexSet m, std::int64_t value);
    int n() const { return ground.size(); }
    /// Projective dimension: largest i with a nonzero row.
    int pd() const;
};

/// Same graded and multigraded numbers (fields are not compared).
bool same_betti_numbers(const BettiTable& a, const BettiTable& b);

/// t_a = max{ j : β_{a,j} ≠ 0 } for 1 ≤ a ≤ pd with a nonzero row.
std::map<int, int> t_vector(const BettiTable& table);
std::map<int, int> t_vector(const GradedBetti& graded);

/// β_{i,m_u}(S/I) = dim H̃_{|u|-i-1}(SR(I)|_u) for every nonempty u ⊆ ground.
BettiTable betti_hochster(const MonomialIdeal& ideal, const Field& field,
                          std::size_t max_faces = kDefaultMaxFaces);

/// Reduced homology of the Stanley-Reisner complex of I restricted to u.
HomologyProfile hochster_restriction_homology(const MonomialIdeal& ideal, VertexSet u, const Field& field,
                                              std::size_t max_faces = kDefaultMaxFaces);

/// Single multigraded entry β_{i,m_u}(S/I) by the restriction formula.
std::int64_t hochster_entry(const MonomialIdeal& ideal, int i, VertexSet u, const Field& field,
                            std::size_t max_faces = kDefaultMaxFaces);

/// β_{i,m}(S/I) = dim H̃_{i-2}(order complex of the open interval (0̂, m)) in LCM(I).
BettiTable betti_lcm_interval(const MonomialIdeal& ideal, const Field& field,
                              std::size_t max_faces = kDefaultMaxFaces);

/**
 * Splitting recursion for forests. Connected complexes split off a leaf F:
 *   β_{i,j}(Δ) = β_{i,j}(Δ∖⟨F⟩) + β_{i-1,j-|F|}((Δ∖⟨F⟩)_{F̄}),
 * disconnected ones convolve their components. Graded tables are memoized
 * by the relabeling-invariant shape of the complex, so one engine should
 * be reused across related queries. Not thread-safe.
 */
class ForestBetti {
  public:
    /// Graded table of S/F(Δ). Throws PreconditionError when a leaf is
    /// needed and none exists.
    const GradedBetti& graded(const SimplicialComplex& complex);
    /// Graded plus multigraded table. Checks is_forest first.
    BettiTable table(const SimplicialComplex& complex);

    std::size_t cache_size() const { return cache_.size(); }

  private:
    std::map<std::vector<std::uint64_t>, GradedBetti> cache_;
};

BettiTable betti_forest(const SimplicialComplex& complex);

/// Leaf used by the recursion: most free vertices, ties to the canonical-first.
VertexSet splitting_leaf(const SimplicialComplex& complex);

struct TopDegreeResult {
    std::int64_t value = 0;
    /// The localization chain hit a complex without a free vertex and the
    /// remaining value came from the Hochster oracle over ℚ.
    bool used_oracle = false;
};

/// β_{i,n}(Δ) with n = |V(Δ)|, through β_{i,n}(Δ) = β_{i-1,n-|F|}(Γ) for a
/// facet F with a free vertex.
TopDegreeResult top_degree_betti(const SimplicialComplex& complex, int i);

}  // namespace facetbetti

#endif
