#include <doctest.h>

#include <algorithm>
#include <random>

#include "facetbetti/betti.hpp"
#include "facetbetti/errors.hpp"
#include "facetbetti/generate.hpp"
#include "facetbetti/lattice.hpp"
#include "support.hpp"

using namespace facetbetti;
using testing::cx;
using testing::vs;

TEST_CASE("lattice of two variables is Boolean") {
    const auto c = cx("x y");
    const LcmLattice l(facet_ideal(c));
    CHECK(l.elements() == std::vector<VertexSet>{VertexSet{}, vs(c, "x"), vs(c, "y"), vs(c, "xy")});
    CHECK(l.top() == vs(c, "xy"));
    CHECK(l.atoms().size() == 2);
    CHECK(complements_of(l, facet_ideal(c), vs(c, "x")) == std::vector<VertexSet>{vs(c, "y")});
}

TEST_CASE("principal lattice has no proper part") {
    const auto c = cx("xyz");
    const auto ideal = facet_ideal(c);
    const LcmLattice l(ideal);
    CHECK(l.size() == 2);
    CHECK(l.proper_part().empty());
    CHECK_THROWS_AS(complements_of(l, ideal, vs(c, "xyz")), PreconditionError);
    CHECK_THROWS_AS(complements_of(l, ideal, VertexSet{}), PreconditionError);
}

TEST_CASE("path lattice and its complements") {
    const auto path = cx("ab bc cd de");
    const auto ideal = facet_ideal(path);
    const LcmLattice l(ideal);
    CHECK(l.contains(vs(path, "bcd")));
    CHECK(l.contains(vs(path, "abde")));
    CHECK_FALSE(l.contains(vs(path, "bd")));
    CHECK(l.size() == 12);
    CHECK(are_complements(l, ideal, vs(path, "bcd"), vs(path, "abde")));
    CHECK_FALSE(are_complements(l, ideal, vs(path, "bcd"), vs(path, "abcd")));
    CHECK_FALSE(are_complements(l, ideal, vs(path, "bcd"), vs(path, "bcd")));
    CHECK(complements_of(l, ideal, vs(path, "bcd")) == std::vector<VertexSet>{vs(path, "abde")});
    CHECK_THROWS_AS(are_complements(l, ideal, vs(path, "bd"), vs(path, "abde")), PreconditionError);

    const Monomial m(path.universe(), vs(path, "bcd")), m2(path.universe(), vs(path, "abde"));
    CHECK(are_complements(l, ideal, m, m2));
}

TEST_CASE("open intervals below an element") {
    const auto path = cx("ab bc cd de");
    const LcmLattice l(facet_ideal(path));
    auto below = l.open_interval_below(vs(path, "abde"));
    CHECK(below == std::vector<VertexSet>{vs(path, "ab"), vs(path, "de")});
    below = l.open_interval_below(vs(path, "abcd"));
    std::vector<VertexSet> expected{vs(path, "ab"), vs(path, "bc"), vs(path, "cd"), vs(path, "abc"), vs(path, "bcd")};
    std::sort(below.begin(), below.end());
    std::sort(expected.begin(), expected.end());
    CHECK(below == expected);
    CHECK(l.open_interval_below(vs(path, "ab")).empty());
}

TEST_CASE("zero and unit ideals are rejected") {
    auto u = make_letter_universe(3);
    CHECK_THROWS_AS(build_lattice(MonomialIdeal(u, u->all(), {})), PreconditionError);
    CHECK_THROWS_AS(build_lattice(MonomialIdeal(u, u->all(), {VertexSet{}})), PreconditionError);
}

TEST_CASE("lattice structure on random ideals") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = random_squarefree(8, 6, 4, rng);
        const auto ideal = facet_ideal(c);
        const LcmLattice l(ideal);
        auto gens = ideal.generators();
        auto atoms = l.atoms();
        std::sort(gens.begin(), gens.end());
        std::sort(atoms.begin(), atoms.end());
        CHECK(atoms == gens);
        CHECK(l.top() == ideal.generator_lcm());
        for (auto x : l.elements()) {
            CHECK(x.subset_of(l.top()));
            // Every element is the join of the atoms below it.
            VertexSet join;
            for (auto a : l.atoms()) {
                if (a.subset_of(x)) join |= a;
            }
            CHECK(join == x);
            for (auto y : l.elements()) CHECK(l.contains(x | y));
        }
    }
}

TEST_CASE("complementation is symmetric") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const auto ideal = facet_ideal(random_squarefree(7, 6, 4, rng));
        const LcmLattice l(ideal);
        for (auto m : l.proper_part()) {
            for (auto other : complements_of(l, ideal, m)) {
                const auto back = complements_of(l, ideal, other);
                CHECK(std::find(back.begin(), back.end(), m) != back.end());
            }
        }
    }
}

TEST_CASE("every element has a complement when the top degree carries a Betti number") {
    // Background consequence, reported only.
    int checked = 0, findings = 0;
    for (const auto& g : squarefree_exhaustive(5, 10).complexes) {
        const auto c = g.complex.with_ground(g.complex.vertices());
        const auto ideal = facet_ideal(c);
        const auto table = betti_hochster(ideal, Field::rationals());
        const int pd = table.pd();
        if (table.at(pd, c.vertices()) == 0) continue;
        const LcmLattice l(ideal);
        for (auto m : l.proper_part()) {
            ++checked;
            if (complements_of(l, ideal, m).empty()) {
                ++findings;
                MESSAGE("no complement for " << c.universe()->to_string(m) << " in " << c.to_string());
            }
        }
    }
    MESSAGE(checked << " lattice elements checked, " << findings << " without complement");
    CHECK(checked > 0);
}
