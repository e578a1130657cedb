#include <doctest.h>

#include <random>

#include "facetbetti/complexops.hpp"
#include "facetbetti/errors.hpp"
#include "facetbetti/generate.hpp"
#include "facetbetti/lattice.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace facetbetti;
using testing::cx;
using testing::masks;
using testing::vs;

namespace {

// Minimal nonempty sets among G∖F, straight from the definition.
std::vector<VertexSet> localization_by_definition(const SimplicialComplex& c, VertexSet f) {
    std::vector<VertexSet> diffs;
    for (auto g : c.facets()) {
        if (g != f) diffs.push_back(g - f);
    }
    std::vector<VertexSet> out;
    for (auto d : diffs) {
        bool minimal = !d.empty();
        for (auto e : diffs) {
            if (e.proper_subset_of(d)) minimal = false;
        }
        if (minimal && std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    }
    sort_canonical(out);
    return out;
}

std::vector<SimplicialComplex> forest_corpus() {
    std::vector<SimplicialComplex> out;
    for (auto& g : forest_exhaustive(5).complexes) out.push_back(g.complex);
    for (auto& g : forest_random(9, 7, 60, 3).complexes) out.push_back(g.complex);
    return out;
}

}  // namespace

TEST_CASE("induced subcollections") {
    const auto path = cx("ab bc cd de");
    const auto sub = induced_subcollection(path, vs(path, "bcd"));
    CHECK(sub.facets() == std::vector<VertexSet>{vs(path, "bc"), vs(path, "cd")});
    CHECK(sub.ground() == vs(path, "bcd"));
    CHECK(induced_subcollection(path, path.vertices()) == path);
    const auto none = induced_subcollection(path, vs(path, "ac"));
    CHECK(none.empty());
    CHECK(none.ground() == vs(path, "ac"));
}

TEST_CASE("facet removal") {
    const auto path = cx("ab bc cd de");
    CHECK(remove_facet(path, vs(path, "ab")).to_string() == "<bc,cd,de>");
    CHECK(remove_facet(path, vs(path, "ab")).ground() == path.ground());
    const auto single = cx("xyz");
    CHECK(remove_facet(single, vs(single, "xyz")).empty());
    const auto points = cx("x y");
    CHECK(remove_facet(points, vs(points, "x")).to_string() == "<y>");
    CHECK_THROWS_AS(remove_facet(path, vs(path, "bd")), PreconditionError);
}

TEST_CASE("localization") {
    const auto path = cx("ab bc cd de");
    const auto gamma = localization(path, vs(path, "ab"));
    CHECK(gamma.facets() == std::vector<VertexSet>{vs(path, "c"), vs(path, "de")});
    CHECK(gamma.ground() == vs(path, "cde"));
    const auto points = cx("x y");
    CHECK(localization(points, vs(points, "x")).to_string() == "<y>");
    const auto two = cx("ab bc");
    CHECK(localization(two, vs(two, "ab")).to_string() == "<c>");
    CHECK_THROWS_AS(localization(path, vs(path, "ac")), PreconditionError);
}

TEST_CASE("localization matches its definition on random complexes") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const auto c = random_squarefree(7, 6, 4, rng);
        for (auto f : c.facets()) {
            const auto gamma = localization(c, f);
            CHECK(gamma.facets() == localization_by_definition(c, f));
            CHECK(gamma.ground() == c.vertices() - f);
        }
    }
}

TEST_CASE("leaves of small complexes") {
    const auto path = cx("ab bc cd de");
    const auto leaves = find_leaves(path);
    REQUIRE(leaves.size() == 2);
    CHECK(leaves[0].leaf == vs(path, "ab"));
    CHECK(leaves[0].joint == vs(path, "bc"));
    CHECK(leaves[0].free_vertices == vs(path, "a"));
    CHECK(leaves[1].leaf == vs(path, "de"));
    CHECK(leaves[1].joint == vs(path, "cd"));

    CHECK(find_leaves(cx("ab bc ca")).empty());

    const auto single = cx("xyz");
    const auto only = find_leaves(single);
    REQUIRE(only.size() == 1);
    CHECK_FALSE(only[0].joint.has_value());
    CHECK(only[0].free_vertices == vs(single, "xyz"));
    CHECK(free_vertices(path, vs(path, "bc")).empty());
}

TEST_CASE("forest recognition with certificates") {
    const auto path = cx("ab bc cd de");
    const auto yes = is_forest(path);
    CHECK(yes.forest);
    CHECK(yes.leaf_order.size() == 4);
    CHECK(yes.counterexample.empty());

    const auto tri = cx("ab bc ca");
    const auto no = is_forest(tri);
    CHECK_FALSE(no.forest);
    CHECK(no.counterexample == tri.facets());

    CHECK(is_forest(cx("xyz")).forest);
    auto u = make_letter_universe(0);
    CHECK(is_forest(SimplicialComplex(u, {})).forest);

    // The triangle hides inside a larger complex that still has leaves.
    const auto hidden = cx("ab bc ca cd");
    CHECK_FALSE(find_leaves(hidden).empty());
    const auto verdict = is_forest(hidden);
    CHECK_FALSE(verdict.forest);
    CHECK(verdict.counterexample.size() == 3);
}

TEST_CASE("leaf order strips the complex one leaf at a time") {
    for (const auto& c : forest_corpus()) {
        const auto verdict = is_forest(c);
        REQUIRE(verdict.forest);
        auto rest = c;
        for (auto f : verdict.leaf_order) {
            bool is_leaf = false;
            for (const auto& cert : find_leaves(rest)) is_leaf = is_leaf || cert.leaf == f;
            CHECK(is_leaf);
            rest = remove_facet(rest, f);
        }
        CHECK(rest.empty());
    }
}

TEST_CASE("is_forest agrees with a definition-level oracle") {
    for (const auto& g : squarefree_exhaustive(5, 10).complexes) {
        const bool expected = oracle::is_forest(masks(g.complex));
        CHECK(is_forest(g.complex).forest == expected);
        CHECK(g.forest == expected);
        // Greedy stripping is only a pre-filter; disagreements are logged.
        if (greedy_leaf_removal(g.complex) != expected) {
            MESSAGE("greedy verdict differs on " << g.complex.to_string());
        }
    }
}

TEST_CASE("forest properties on the corpus") {
    for (const auto& c : forest_corpus()) {
        const auto leaves = find_leaves(c);
        if (c.facet_count() >= 2) CHECK(leaves.size() >= 2);
        for (const auto& cert : leaves) CHECK_FALSE(cert.free_vertices.empty());
        for (auto f : c.facets()) {
            CHECK(is_forest(remove_facet(c, f)).forest);
            CHECK(is_forest(localization(c, f)).forest);
        }
    }
}

TEST_CASE("induced subcollections commute with localization") {
    for (const auto& c : forest_corpus()) {
        const VertexSet all = c.vertices();
        for (auto f : c.facets()) {
            if (free_vertices(c, f).empty()) continue;
            const auto gamma = localization(c, f);
            const VertexSet rest = all - f;
            // Every u ⊆ F̄, enumerated as submasks.
            for (std::uint64_t s = rest.bits();; s = (s - 1) & rest.bits()) {
                const VertexSet u(s);
                const auto local = induced_subcollection(c, f | u);
                if (local.has_facet(f)) {
                    const auto lhs = induced_subcollection(gamma, u);
                    const auto rhs = localization(local, f);
                    CHECK(lhs.facets() == rhs.facets());
                    if (lhs.vertices() == u) CHECK(local.vertices() == (f | u));
                }
                if (s == 0) break;
            }
        }
    }
}

TEST_CASE("connected components") {
    CHECK(connected_components(cx("x y")).size() == 2);
    CHECK(connected_components(cx("ab bc cd de")).size() == 1);
    const auto two = cx("ab cd");
    const auto parts = connected_components(two);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].ground() == vs(two, "ab"));
    CHECK(parts[1].ground() == vs(two, "cd"));
    CHECK(connected_components(cx("ab cd bc")).size() == 1);
}

TEST_CASE("complement pairs") {
    const auto path = cx("ab bc cd de");
    CHECK(is_complement_pair(path, vs(path, "bcd"), vs(path, "abde")));
    CHECK(is_complement_pair(path, vs(path, "ab"), vs(path, "cde")));
    CHECK_FALSE(is_complement_pair(path, vs(path, "abc"), vs(path, "abc")));
    CHECK_FALSE(is_complement_pair(path, vs(path, "abcd"), vs(path, "bcde")));
}

TEST_CASE("complement pairs agree with the lattice predicate") {
    std::vector<SimplicialComplex> corpus;
    for (auto& g : squarefree_exhaustive(5, 10).complexes) corpus.push_back(g.complex);
    std::mt19937_64 rng(8);
    for (int k = 0; k < 150; ++k) corpus.push_back(random_squarefree(8, 6, 4, rng));
    for (const auto& c : corpus) {
        const auto spanned = c.with_ground(c.vertices());
        const auto ideal = facet_ideal(spanned);
        const LcmLattice lattice(ideal);
        const auto proper = lattice.proper_part();
        for (auto m : proper) {
            for (auto other : proper) {
                CHECK(are_complements(lattice, ideal, m, other) == is_complement_pair(spanned, m, other));
            }
        }
    }
}
