#ifndef FACETBETTI_LATTICE_HPP
#define FACETBETTI_LATTICE_HPP

#include <unordered_set>
#include <vector>

#include "facetbetti/core.hpp"

namespace facetbetti {

/**
 * The lcm lattice of a square-free monomial ideal: every lcm of a nonempty
 * set of minimal generators, plus the unit monomial as bottom. Elements are
 * stored by support; divisibility is inclusion.
 */
class LcmLattice {
  public:
    explicit LcmLattice(const MonomialIdeal& ideal);

    const UniversePtr& universe() const { return universe_; }
    /// Ordered by degree, then canonically; the bottom comes first.
    const std::vector<VertexSet>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<VertexSet>& atoms() const { return atoms_; }
    VertexSet bottom() const { return VertexSet{}; }
    VertexSet top() const { return top_; }
    bool contains(VertexSet m) const { return members_.count(m) != 0; }
    /// Elements other than 0̂ and 1̂.
    std::vector<VertexSet> proper_part() const;
    /// Elements x with 0̂ < x < m.
    std::vector<VertexSet> open_interval_below(VertexSet m) const;

  private:
    UniversePtr universe_;
    std::vector<VertexSet> atoms_;
    std::vector<VertexSet> elements_;
    std::unordered_set<VertexSet, VertexSetHash> members_;
    VertexSet top_;
};

/// Throws PreconditionError if the ideal has no generators or is the unit ideal.
LcmLattice build_lattice(const MonomialIdeal& ideal);

/// lcm(m, m′) = 1̂ and gcd(m, m′) ∉ I. Both must lie in L∖{0̂,1̂}.
bool are_complements(const LcmLattice& lattice, const MonomialIdeal& ideal, VertexSet m, VertexSet other);
bool are_complements(const LcmLattice& lattice, const MonomialIdeal& ideal, const Monomial& m,
                     const Monomial& other);

/// All complements of m in L∖{0̂,1̂}, in lattice order. Throws
/// PreconditionError when m is 0̂, 1̂ or outside L.
std::vector<VertexSet> complements_of(const LcmLattice& lattice, const MonomialIdeal& ideal, VertexSet m);

}  // namespace facetbetti

#endif
