#include "facetbetti/core.hpp"

#include <algorithm>
#include <sstream>

namespace facetbetti {

std::vector<int> VertexSet::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

bool canonical_less(VertexSet a, VertexSet b) {
    if (a == b) return false;
    // The sorted lists agree below the lowest differing element d. If a holds
    // d, then a < b unless b has nothing left past d (b is a prefix of a).
    const int d = VertexSet(a.bits() ^ b.bits()).lowest();
    const std::uint64_t above = d >= 63 ? 0 : (~std::uint64_t{0} << (d + 1));
    if (a.contains(d)) return (b.bits() & above) != 0;
    return (a.bits() & above) == 0;
}

VertexSet compress(VertexSet s, VertexSet frame) {
    std::uint64_t out = 0;
    int k = 0;
    frame.for_each([&](int v) {
        if (s.contains(v)) out |= std::uint64_t{1} << k;
        ++k;
    });
    return VertexSet(out);
}

VertexUniverse::VertexUniverse(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > static_cast<std::size_t>(VertexSet::kMaxVertices)) {
        throw ResourceError("vertex universe holds " + std::to_string(names_.size()) +
                            " names; at most 64 are supported");
    }
    for (std::size_t k = 0; k < names_.size(); ++k) {
        if (!valid_name(names_[k])) throw ParseError("invalid vertex name '" + names_[k] + "'");
        if (!index_.emplace(names_[k], static_cast<int>(k)).second) {
            throw ParseError("duplicate vertex name '" + names_[k] + "'");
        }
    }
}

bool VertexUniverse::valid_name(std::string_view name) {
    if (name.empty()) return false;
    auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(name.front())) return false;
    return std::all_of(name.begin(), name.end(),
                       [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

int VertexUniverse::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : it->second;
}

VertexSet VertexUniverse::parse_set(const std::vector<std::string>& names) const {
    VertexSet s;
    for (const auto& n : names) {
        const int v = index_of(n);
        if (v < 0) throw ParseError("unknown vertex '" + n + "'");
        s |= VertexSet::single(v);
    }
    return s;
}

std::vector<std::string> VertexUniverse::names_of(VertexSet s) const {
    std::vector<std::string> out;
    s.for_each([&](int v) { out.push_back(name(v)); });
    return out;
}

std::string VertexUniverse::to_string(VertexSet s) const {
    if (s.empty()) return "1";
    std::string out;
    bool multi_char = false;
    s.for_each([&](int v) { multi_char = multi_char || name(v).size() > 1; });
    s.for_each([&](int v) {
        if (multi_char && !out.empty()) out += '*';
        out += name(v);
    });
    return out;
}

UniversePtr make_universe(std::vector<std::string> names) {
    return std::make_shared<const VertexUniverse>(std::move(names));
}

UniversePtr make_letter_universe(int n) {
    std::vector<std::string> names;
    for (int k = 0; k < n; ++k) {
        names.push_back(k < 26 ? std::string(1, static_cast<char>('a' + k)) : "x" + std::to_string(k));
    }
    return make_universe(std::move(names));
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    return a == b || (a && b && *a == *b);
}

Monomial::Monomial(UniversePtr universe, VertexSet support)
    : universe_(std::move(universe)), support_(support) {
    if (!support_.subset_of(universe_->all())) {
        throw UniverseMismatch("monomial support exceeds its universe");
    }
}

bool Monomial::divides(const Monomial& other) const {
    if (!same_universe(universe_, other.universe_)) throw UniverseMismatch("divides: universe mismatch");
    return support_.subset_of(other.support_);
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (!same_universe(a.universe(), b.universe())) throw UniverseMismatch("lcm: universe mismatch");
    return Monomial(a.universe(), a.support() | b.support());
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    if (!same_universe(a.universe(), b.universe())) throw UniverseMismatch("gcd: universe mismatch");
    return Monomial(a.universe(), a.support() & b.support());
}

void sort_canonical(std::vector<VertexSet>& sets) {
    std::sort(sets.begin(), sets.end(), canonical_less);
}

std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets) {
    // Larger sets first, so every dominating set is seen before what it covers.
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> out;
    for (VertexSet s : sets) {
        if (std::none_of(out.begin(), out.end(), [&](VertexSet t) { return s.subset_of(t); })) {
            out.push_back(s);
        }
    }
    sort_canonical(out);
    return out;
}

std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> out;
    for (VertexSet s : sets) {
        if (std::none_of(out.begin(), out.end(), [&](VertexSet t) { return t.subset_of(s); })) {
            out.push_back(s);
        }
    }
    sort_canonical(out);
    return out;
}

SimplicialComplex::SimplicialComplex(UniversePtr universe, VertexSet ground,
                                     std::vector<VertexSet> facets)
    : universe_(std::move(universe)), ground_(ground), facets_(maximal_elements(std::move(facets))) {
    if (!ground_.subset_of(universe_->all())) throw UniverseMismatch("ground set exceeds universe");
    for (VertexSet f : facets_) {
        if (!f.subset_of(ground_)) {
            throw UniverseMismatch("facet " + universe_->to_string(f) + " leaves the ground set");
        }
    }
}

SimplicialComplex::SimplicialComplex(UniversePtr universe, std::vector<VertexSet> facets)
    : SimplicialComplex(universe, universe->all(), std::move(facets)) {}

SimplicialComplex SimplicialComplex::from_names(const std::vector<std::vector<std::string>>& facets) {
    std::vector<std::string> names;
    for (const auto& f : facets) {
        for (const auto& v : f) {
            if (std::find(names.begin(), names.end(), v) == names.end()) names.push_back(v);
        }
    }
    auto universe = make_universe(names);
    std::vector<VertexSet> sets;
    for (const auto& f : facets) sets.push_back(universe->parse_set(f));
    return SimplicialComplex(universe, std::move(sets));
}

bool SimplicialComplex::has_facet(VertexSet f) const {
    return std::find(facets_.begin(), facets_.end(), f) != facets_.end();
}

VertexSet SimplicialComplex::vertices() const {
    VertexSet v;
    for (VertexSet f : facets_) v |= f;
    return v;
}

bool SimplicialComplex::is_face(VertexSet s) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return s.subset_of(f); });
}

SimplicialComplex SimplicialComplex::with_face(VertexSet face) const {
    auto facets = facets_;
    facets.push_back(face);
    return SimplicialComplex(universe_, ground_ | face, std::move(facets));
}

SimplicialComplex SimplicialComplex::with_ground(VertexSet ground) const {
    return SimplicialComplex(universe_, ground, facets_);
}

std::string SimplicialComplex::to_string() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t k = 0; k < facets_.size(); ++k) {
        if (k) os << ",";
        os << universe_->to_string(facets_[k]);
    }
    os << ">";
    return os.str();
}

MonomialIdeal::MonomialIdeal(UniversePtr universe, VertexSet ground, std::vector<VertexSet> generators)
    : universe_(std::move(universe)), ground_(ground), generators_(minimal_elements(std::move(generators))) {
    if (!ground_.subset_of(universe_->all())) throw UniverseMismatch("ground set exceeds universe");
    for (VertexSet g : generators_) {
        if (!g.subset_of(ground_)) throw UniverseMismatch("generator outside the ring's variables");
    }
}

bool MonomialIdeal::is_proper() const {
    return std::none_of(generators_.begin(), generators_.end(), [](VertexSet g) { return g.empty(); });
}

bool MonomialIdeal::contains(VertexSet support) const {
    return std::any_of(generators_.begin(), generators_.end(),
                       [&](VertexSet g) { return g.subset_of(support); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (!same_universe(universe_, m.universe())) throw UniverseMismatch("ideal membership: universe mismatch");
    return contains(m.support());
}

VertexSet MonomialIdeal::generator_lcm() const {
    VertexSet top;
    for (VertexSet g : generators_) top |= g;
    return top;
}

std::string MonomialIdeal::to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < generators_.size(); ++k) {
        if (k) out += ",";
        out += universe_->to_string(generators_[k]);
    }
    return out + ")";
}

bool ideal_contains(const MonomialIdeal& ideal, const Monomial& m) { return ideal.contains(m); }

SimplicialComplex facet_complex(const MonomialIdeal& ideal) {
    return SimplicialComplex(ideal.universe(), ideal.ground(), ideal.generators());
}

MonomialIdeal facet_ideal(const SimplicialComplex& complex) {
    return MonomialIdeal(complex.universe(), complex.ground(), complex.facets());
}

}  // namespace facetbetti
