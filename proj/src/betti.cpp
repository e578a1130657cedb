#include "facetbetti/betti.hpp"

#include <algorithm>

#include "facetbetti/complexops.hpp"
#include "facetbetti/lattice.hpp"

namespace facetbetti {

std::int64_t BettiTable::at(int i, int j) const {
    auto it = graded.find({i, j});
    return it == graded.end() ? 0 : it->second;
}

std::int64_t BettiTable::at(int i, VertexSet m) const {
    auto it = multigraded.find({i, m});
    return it == multigraded.end() ? 0 : it->second;
}

void BettiTable::add(int i, VertexSet m, std::int64_t value) {
    if (value == 0) return;
    if ((multigraded[{i, m}] += value) == 0) multigraded.erase({i, m});
    if ((graded[{i, m.size()}] += value) == 0) graded.erase({i, m.size()});
}

int BettiTable::pd() const {
    int p = 0;
    for (const auto& [key, value] : graded) p = std::max(p, key.first);
    return p;
}

bool same_betti_numbers(const BettiTable& a, const BettiTable& b) {
    return a.graded == b.graded && a.multigraded == b.multigraded;
}

std::map<int, int> t_vector(const GradedBetti& graded) {
    std::map<int, int> t;
    for (const auto& [key, value] : graded) {
        if (key.first < 1 || value == 0) continue;
        auto [it, inserted] = t.emplace(key.first, key.second);
        if (!inserted) it->second = std::max(it->second, key.second);
    }
    return t;
}

std::map<int, int> t_vector(const BettiTable& table) { return t_vector(table.graded); }

namespace {

void require_proper(const MonomialIdeal& ideal) {
    if (!ideal.is_proper()) throw PreconditionError("S/I is zero for the unit ideal");
}

BettiTable fresh_table(const UniversePtr& universe, VertexSet ground, std::optional<Field> field) {
    BettiTable t;
    t.universe = universe;
    t.ground = ground;
    t.field = field;
    t.add(0, VertexSet{}, 1);
    return t;
}

template <class F>
void for_each_subset(VertexSet s, F&& f) {
    const std::uint64_t all = s.bits();
    std::uint64_t w = all;
    while (true) {
        f(VertexSet(w));
        if (w == 0) break;
        w = (w - 1) & all;
    }
}

}  // namespace

HomologyProfile hochster_restriction_homology(const MonomialIdeal& ideal, VertexSet u, const Field& field,
                                              std::size_t max_faces) {
    require_proper(ideal);
    std::vector<Face> facets;
    for_each_subset(u, [&](VertexSet w) {
        if (ideal.contains(w)) return;
        const VertexSet outside = u - w;
        bool maximal = true;
        outside.for_each([&](int v) { maximal = maximal && ideal.contains(w | VertexSet::single(v)); });
        if (!maximal) return;
        Face face;
        compress(w, u).for_each([&](int v) { face.push_back(static_cast<std::uint32_t>(v)); });
        facets.push_back(std::move(face));
    });
    try {
        return reduced_homology(AbstractComplex(static_cast<std::size_t>(u.size()), std::move(facets)), field,
                                max_faces);
    } catch (const ResourceError& e) {
        throw ResourceError(std::string(e.what()) + " (restriction to " + ideal.universe()->to_string(u) + ")");
    }
}

std::int64_t hochster_entry(const MonomialIdeal& ideal, int i, VertexSet u, const Field& field,
                            std::size_t max_faces) {
    require_proper(ideal);
    if (i == 0) return u.empty() ? 1 : 0;
    if (i < 0 || u.empty()) return 0;
    // A full simplex has no reduced homology.
    if (!ideal.contains(u)) return 0;
    return hochster_restriction_homology(ideal, u, field, max_faces).dim(u.size() - i - 1);
}

BettiTable betti_hochster(const MonomialIdeal& ideal, const Field& field, std::size_t max_faces) {
    require_proper(ideal);
    BettiTable table = fresh_table(ideal.universe(), ideal.ground(), field);
    for_each_subset(ideal.ground(), [&](VertexSet u) {
        if (u.empty() || !ideal.contains(u)) return;
        const auto profile = hochster_restriction_homology(ideal, u, field, max_faces);
        for (const auto& [degree, value] : profile.dims) {
            const int i = u.size() - degree - 1;
            if (i >= 1) table.add(i, u, value);
        }
    });
    return table;
}

BettiTable betti_lcm_interval(const MonomialIdeal& ideal, const Field& field, std::size_t max_faces) {
    require_proper(ideal);
    BettiTable table = fresh_table(ideal.universe(), ideal.ground(), field);
    if (ideal.generators().empty()) return table;
    const LcmLattice lattice(ideal);
    for (VertexSet m : lattice.elements()) {
        if (m.empty()) continue;
        const auto interval = lattice.open_interval_below(m);
        FinitePoset poset(interval.size());
        for (std::size_t a = 0; a < interval.size(); ++a) {
            for (std::size_t b = 0; b < interval.size(); ++b) {
                if (interval[a].proper_subset_of(interval[b])) poset.set_less(a, b);
            }
        }
        HomologyProfile profile;
        try {
            profile = reduced_homology(order_complex(poset, max_faces), field, max_faces);
        } catch (const ResourceError& e) {
            throw ResourceError(std::string(e.what()) + " (interval below " + ideal.universe()->to_string(m) + ")");
        }
        for (const auto& [degree, value] : profile.dims) table.add(degree + 2, m, value);
    }
    return table;
}

VertexSet splitting_leaf(const SimplicialComplex& complex) {
    const auto leaves = find_leaves(complex);
    if (leaves.empty()) {
        throw PreconditionError("complex " + complex.to_string() + " has no leaf");
    }
    const LeafCertificate* best = &leaves.front();
    for (const auto& leaf : leaves) {
        if (leaf.free_vertices.size() > best->free_vertices.size()) best = &leaf;
    }
    return best->leaf;
}

namespace {

GradedBetti convolve(const GradedBetti& a, const GradedBetti& b) {
    GradedBetti out;
    for (const auto& [ka, va] : a) {
        for (const auto& [kb, vb] : b) out[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::vector<std::uint64_t> shape_key(const SimplicialComplex& complex) {
    const VertexSet frame = complex.vertices();
    std::vector<std::uint64_t> key;
    key.reserve(complex.facet_count());
    for (VertexSet f : complex.facets()) key.push_back(compress(f, frame).bits());
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace

const GradedBetti& ForestBetti::graded(const SimplicialComplex& complex) {
    auto key = shape_key(complex);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    GradedBetti result;
    if (complex.empty()) {
        result[{0, 0}] = 1;
    } else if (auto components = connected_components(complex); components.size() > 1) {
        result[{0, 0}] = 1;
        for (const auto& c : components) result = convolve(result, graded(c));
    } else {
        const VertexSet leaf = splitting_leaf(complex);
        result = graded(remove_facet(complex, leaf));
        for (const auto& [key2, value] : graded(localization(complex, leaf))) {
            result[{key2.first + 1, key2.second + leaf.size()}] += value;
        }
        std::erase_if(result, [](const auto& kv) { return kv.second == 0; });
    }
    return cache_.emplace(std::move(key), std::move(result)).first->second;
}

BettiTable ForestBetti::table(const SimplicialComplex& complex) {
    if (auto verdict = is_forest(complex); !verdict.forest) {
        throw PreconditionError("not a forest: subcollection " +
                                SimplicialComplex(complex.universe(), complex.ground(), verdict.counterexample)
                                    .to_string() +
                                " has no leaf");
    }
    BettiTable table = fresh_table(complex.universe(), complex.ground(), std::nullopt);
    if (complex.empty()) return table;
    // Multidegrees with nonzero entries are unions of facets.
    const LcmLattice lattice(facet_ideal(complex));
    for (VertexSet u : lattice.elements()) {
        if (u.empty()) continue;
        for (const auto& [key, value] : graded(induced_subcollection(complex, u))) {
            if (key.second == u.size()) table.add(key.first, u, value);
        }
    }
    if (table.graded != graded(complex)) {
        throw InvariantViolation("forest recursion: multigraded entries do not sum to the graded table of " +
                                 complex.to_string());
    }
    return table;
}

BettiTable betti_forest(const SimplicialComplex& complex) {
    ForestBetti engine;
    return engine.table(complex);
}

TopDegreeResult top_degree_betti(const SimplicialComplex& complex, int i) {
    SimplicialComplex current = complex;
    int degree = i;
    while (true) {
        if (current.empty()) return {degree == 0 ? 1 : 0, false};
        if (degree <= 0) return {0, false};
        VertexSet chosen;
        if (auto leaves = find_leaves(current); !leaves.empty()) {
            chosen = splitting_leaf(current);
        } else {
            int best = 0;
            for (VertexSet f : current.facets()) {
                const int free = free_vertices(current, f).size();
                if (free > best) {
                    best = free;
                    chosen = f;
                }
            }
        }
        if (chosen.empty()) {
            const VertexSet v = current.vertices();
            const MonomialIdeal ideal(current.universe(), v, current.facets());
            return {hochster_entry(ideal, degree, v, Field::rationals()), true};
        }
        SimplicialComplex next = localization(current, chosen);
        if (next.vertices() != current.vertices() - chosen) return {0, false};
        current = std::move(next);
        --degree;
    }
}

}  // namespace facetbetti
