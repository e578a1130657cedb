#include "facetbetti/lattice.hpp"

#include <algorithm>

namespace facetbetti {

LcmLattice::LcmLattice(const MonomialIdeal& ideal) : universe_(ideal.universe()), atoms_(ideal.generators()) {
    if (atoms_.empty()) throw PreconditionError("lcm lattice of the zero ideal is undefined");
    if (!ideal.is_proper()) throw PreconditionError("lcm lattice of the unit ideal is undefined");

    members_.insert(VertexSet{});
    std::vector<VertexSet> frontier;
    for (VertexSet g : atoms_) {
        if (members_.insert(g).second) frontier.push_back(g);
    }
    // Closing under joins with atoms reaches every lcm of a generator subset.
    while (!frontier.empty()) {
        std::vector<VertexSet> next;
        for (VertexSet x : frontier) {
            for (VertexSet g : atoms_) {
                const VertexSet y = x | g;
                if (members_.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    elements_.assign(members_.begin(), members_.end());
    std::sort(elements_.begin(), elements_.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : canonical_less(a, b);
    });
    top_ = ideal.generator_lcm();
}

std::vector<VertexSet> LcmLattice::proper_part() const {
    std::vector<VertexSet> out;
    for (VertexSet x : elements_) {
        if (!x.empty() && x != top_) out.push_back(x);
    }
    return out;
}

std::vector<VertexSet> LcmLattice::open_interval_below(VertexSet m) const {
    std::vector<VertexSet> out;
    for (VertexSet x : elements_) {
        if (!x.empty() && x.proper_subset_of(m)) out.push_back(x);
    }
    return out;
}

LcmLattice build_lattice(const MonomialIdeal& ideal) { return LcmLattice(ideal); }

namespace {

void require_proper_element(const LcmLattice& lattice, VertexSet m) {
    const auto& u = *lattice.universe();
    if (!lattice.contains(m)) throw PreconditionError(u.to_string(m) + " is not in the lcm lattice");
    if (m.empty()) throw PreconditionError("the bottom element 1 has no complements");
    if (m == lattice.top()) throw PreconditionError(u.to_string(m) + " is the top element of the lcm lattice");
}

}  // namespace

bool are_complements(const LcmLattice& lattice, const MonomialIdeal& ideal, VertexSet m, VertexSet other) {
    require_proper_element(lattice, m);
    require_proper_element(lattice, other);
    return (m | other) == lattice.top() && !ideal.contains(m & other);
}

bool are_complements(const LcmLattice& lattice, const MonomialIdeal& ideal, const Monomial& m,
                     const Monomial& other) {
    if (!same_universe(m.universe(), lattice.universe()) || !same_universe(other.universe(), lattice.universe())) {
        throw UniverseMismatch("are_complements: universe mismatch");
    }
    return are_complements(lattice, ideal, m.support(), other.support());
}

std::vector<VertexSet> complements_of(const LcmLattice& lattice, const MonomialIdeal& ideal, VertexSet m) {
    require_proper_element(lattice, m);
    std::vector<VertexSet> out;
    for (VertexSet x : lattice.proper_part()) {
        if (are_complements(lattice, ideal, m, x)) out.push_back(x);
    }
    return out;
}

}  // namespace facetbetti
