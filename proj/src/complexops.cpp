#include "facetbetti/complexops.hpp"

#include <algorithm>
#include <numeric>

namespace facetbetti {

SimplicialComplex induced_subcollection(const SimplicialComplex& complex, VertexSet u) {
    if (!u.subset_of(complex.ground())) {
        throw UniverseMismatch("induced subcollection on " + complex.universe()->to_string(u) +
                               " leaves the ground set");
    }
    std::vector<VertexSet> kept;
    for (VertexSet f : complex.facets()) {
        if (f.subset_of(u)) kept.push_back(f);
    }
    return SimplicialComplex(complex.universe(), u, std::move(kept));
}

SimplicialComplex remove_facet(const SimplicialComplex& complex, VertexSet facet) {
    if (!complex.has_facet(facet)) {
        throw PreconditionError(complex.universe()->to_string(facet) + " is not a facet of " +
                                complex.to_string());
    }
    std::vector<VertexSet> kept;
    for (VertexSet f : complex.facets()) {
        if (f != facet) kept.push_back(f);
    }
    return SimplicialComplex(complex.universe(), complex.ground(), std::move(kept));
}

SimplicialComplex localization(const SimplicialComplex& complex, VertexSet facet) {
    if (!complex.has_facet(facet)) {
        throw PreconditionError(complex.universe()->to_string(facet) + " is not a facet of " +
                                complex.to_string());
    }
    std::vector<VertexSet> rests;
    for (VertexSet g : complex.facets()) {
        if (g == facet) continue;
        const VertexSet rest = g - facet;
        // Facets form an antichain, so no other facet sits inside F.
        if (rest.empty()) {
            throw InvariantViolation("facet " + complex.universe()->to_string(g) + " lies inside " +
                                     complex.universe()->to_string(facet));
        }
        rests.push_back(rest);
    }
    return SimplicialComplex(complex.universe(), complex.vertices() - facet,
                             minimal_elements(std::move(rests)));
}

std::optional<LeafCertificate> leaf_certificate(const std::vector<VertexSet>& facets, std::size_t index) {
    const VertexSet f = facets[index];
    if (facets.size() == 1) return LeafCertificate{f, std::nullopt, f};
    VertexSet others;
    for (std::size_t k = 0; k < facets.size(); ++k) {
        if (k != index) others |= facets[k];
    }
    const VertexSet shared = f & others;
    for (std::size_t k = 0; k < facets.size(); ++k) {
        if (k != index && shared.subset_of(facets[k])) {
            return LeafCertificate{f, facets[k], f - others};
        }
    }
    return std::nullopt;
}

std::vector<LeafCertificate> find_leaves(const SimplicialComplex& complex) {
    std::vector<LeafCertificate> out;
    const auto& facets = complex.facets();
    for (std::size_t k = 0; k < facets.size(); ++k) {
        if (auto cert = leaf_certificate(facets, k)) out.push_back(*cert);
    }
    return out;
}

VertexSet free_vertices(const SimplicialComplex& complex, VertexSet facet) {
    VertexSet others;
    for (VertexSet g : complex.facets()) {
        if (g != facet) others |= g;
    }
    return facet - others;
}

namespace {

bool has_leaf(const std::vector<VertexSet>& facets) {
    for (std::size_t k = 0; k < facets.size(); ++k) {
        if (leaf_certificate(facets, k)) return true;
    }
    return false;
}

// Strips leaves (canonical-first) until none is left; returns the stripped
// facets in removal order and leaves the stuck remainder in `facets`.
std::vector<VertexSet> strip_leaves(std::vector<VertexSet>& facets) {
    std::vector<VertexSet> removed;
    while (!facets.empty()) {
        bool found = false;
        for (std::size_t k = 0; k < facets.size(); ++k) {
            if (leaf_certificate(facets, k)) {
                removed.push_back(facets[k]);
                facets.erase(facets.begin() + static_cast<std::ptrdiff_t>(k));
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    return removed;
}

}  // namespace

bool greedy_leaf_removal(const SimplicialComplex& complex) {
    auto facets = complex.facets();
    strip_leaves(facets);
    return facets.empty();
}

ForestVerdict is_forest(const SimplicialComplex& complex) {
    const auto& facets = complex.facets();
    const std::size_t q = facets.size();
    if (q > 30) throw ResourceError("is_forest: " + std::to_string(q) + " facets exceed the exhaustive limit of 30");
    ForestVerdict verdict;
    std::uint64_t worst = 0;
    int worst_size = 64;
    std::vector<VertexSet> sub;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << q); ++mask) {
        const int size = std::popcount(mask);
        if (size >= worst_size) continue;
        sub.clear();
        for (std::size_t k = 0; k < q; ++k) {
            if ((mask >> k) & 1U) sub.push_back(facets[k]);
        }
        if (!has_leaf(sub)) {
            worst = mask;
            worst_size = size;
            if (size == 1) break;
        }
    }
    if (worst != 0) {
        for (std::size_t k = 0; k < q; ++k) {
            if ((worst >> k) & 1U) verdict.counterexample.push_back(facets[k]);
        }
        return verdict;
    }
    verdict.forest = true;
    auto remaining = facets;
    auto order = strip_leaves(remaining);
    if (!remaining.empty()) throw InvariantViolation("leaf stripping stalled on a forest");
    std::reverse(order.begin(), order.end());
    verdict.leaf_order = std::move(order);
    return verdict;
}

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& complex) {
    const auto& facets = complex.facets();
    std::vector<std::size_t> parent(facets.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t a = 0; a < facets.size(); ++a) {
        for (std::size_t b = a + 1; b < facets.size(); ++b) {
            if (facets[a].intersects(facets[b])) parent[find(a)] = find(b);
        }
    }
    std::vector<std::vector<VertexSet>> groups;
    std::vector<std::size_t> root_of_group;
    for (std::size_t k = 0; k < facets.size(); ++k) {
        const std::size_t r = find(k);
        auto it = std::find(root_of_group.begin(), root_of_group.end(), r);
        if (it == root_of_group.end()) {
            root_of_group.push_back(r);
            groups.push_back({facets[k]});
        } else {
            groups[static_cast<std::size_t>(it - root_of_group.begin())].push_back(facets[k]);
        }
    }
    std::vector<SimplicialComplex> out;
    for (auto& g : groups) {
        VertexSet v;
        for (VertexSet f : g) v |= f;
        out.emplace_back(complex.universe(), v, std::move(g));
    }
    return out;
}

bool is_complement_pair(const SimplicialComplex& complex, VertexSet u, VertexSet v) {
    if ((u | v) != complex.vertices()) return false;
    // A facet lies in both Δ_[u] and Δ_[v] exactly when it lies in u ∩ v.
    const VertexSet both = u & v;
    return std::none_of(complex.facets().begin(), complex.facets().end(),
                        [&](VertexSet f) { return f.subset_of(both); });
}

}  // namespace facetbetti
