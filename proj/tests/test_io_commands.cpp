#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "facetbetti/commands.hpp"
#include "facetbetti/complexops.hpp"
#include "facetbetti/errors.hpp"
#include "facetbetti/generate.hpp"
#include "facetbetti/io.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace facetbetti;
using testing::cx;
using testing::vs;

namespace {

std::string data(const std::string& name) { return std::string(FACETBETTI_DATA_DIR) + "/" + name; }

CommandOptions quiet() {
    CommandOptions o;
    o.timing = false;
    return o;
}

std::set<std::vector<std::uint64_t>> shapes(const GeneratedCorpus& corpus, bool forests_only) {
    std::set<std::vector<std::uint64_t>> out;
    for (const auto& g : corpus.complexes) {
        if (!forests_only || g.forest) out.insert(canonical_shape(g.complex.facets()));
    }
    return out;
}

std::set<std::set<std::string>> named_facets(const SimplicialComplex& c) {
    std::set<std::set<std::string>> out;
    for (auto f : c.facets()) {
        const auto names = c.universe()->names_of(f);
        out.emplace(names.begin(), names.end());
    }
    return out;
}

}  // namespace

TEST_CASE("parsing facet lists") {
    const auto p = parse_complex("# a path\nab bc\n\nbc  cd # trailing\ncd de\nbc\n");
    CHECK(p.complex.universe()->names() == std::vector<std::string>{"ab", "bc", "cd", "de"});
    CHECK(p.complex.facet_count() == 3);
    REQUIRE(p.warnings.size() == 1);
    CHECK(p.warnings[0].find("line 6") != std::string::npos);

    const auto dup = parse_complex("a b\nb a\n");
    REQUIRE(dup.warnings.size() == 1);
    CHECK(dup.warnings[0].find("duplicate") != std::string::npos);

    const auto empty = parse_complex("# nothing\n\n");
    CHECK(empty.complex.empty());
    CHECK(empty.complex.universe()->size() == 0);

    CHECK_THROWS_WITH_AS(parse_complex("a b\nc 9z\n"), "line 2: invalid vertex name '9z'", ParseError);
    CHECK_THROWS_AS(read_complex_file(data("missing.txt")), ParseError);
}

TEST_CASE("fixture files") {
    const auto path = read_complex_file(data("path.txt")).complex;
    CHECK(path.to_string() == "<ab,bc,cd,de>");
    CHECK(read_complex_file(data("triangle.txt")).complex.facet_count() == 3);
    CHECK(read_complex_file(data("two_points.txt")).complex.to_string() == "<x,y>");
    CHECK(read_complex_file(data("empty.txt")).complex.empty());
    CHECK(is_forest(read_complex_file(data("tree.txt")).complex).forest);
}

TEST_CASE("format and parse round trip") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = random_squarefree(9, 6, 5, rng);
        const auto spanned = c.with_ground(c.vertices());
        const auto back = parse_complex(format_complex(spanned)).complex;
        CHECK(named_facets(back) == named_facets(spanned));
    }
    for (const auto& g : forest_exhaustive(5).complexes) {
        const auto back = parse_complex(format_complex(g.complex)).complex;
        CHECK(back == g.complex);
    }
}

TEST_CASE("monomial syntax") {
    const auto path = cx("ab bc cd de");
    const auto& u = *path.universe();
    for (const char* text : {"bcd", "b c d", "b,c,d", "b*c*d", "d*b*c"}) CHECK(parse_monomial(u, text) == vs(path, "bcd"));
    CHECK(parse_monomial(u, "1").empty());
    CHECK_THROWS_AS(parse_monomial(u, "bq"), ParseError);
    CHECK_THROWS_AS(parse_monomial(u, ""), ParseError);
    const auto multi = parse_complex("x1 x2\nx2 y\n").complex;
    CHECK(parse_monomial(*multi.universe(), "x1*y").size() == 2);
}

TEST_CASE("generated streams split into blocks") {
    const auto blocks = split_complex_stream("# one\na b\n\n\n# two\nc\n\n");
    CHECK(blocks.size() == 2);
}

TEST_CASE("exhaustive forests for three vertices") {
    const auto corpus = forest_exhaustive(3);
    const auto found = shapes(corpus, false);
    CHECK(found.count(canonical_shape(cx("x y").facets())) == 1);
    CHECK(found.count(canonical_shape(cx("xy").facets())) == 1);
    CHECK(found.count(canonical_shape(cx("xy yz").facets())) == 1);
    CHECK(found.count(canonical_shape(cx("xy yz xz").facets())) == 0);
    for (const auto& g : corpus.complexes) {
        CHECK(g.forest);
        CHECK(oracle::is_forest(testing::masks(g.complex)));
    }
}

TEST_CASE("exhaustive forests match the filtered antichain enumeration") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(shapes(forest_exhaustive(n), false) == shapes(squarefree_exhaustive(n, 1 << n), true));
    }
}

TEST_CASE("antichain enumeration includes the triangle") {
    const auto corpus = squarefree_exhaustive(3, 3);
    bool seen = false;
    for (const auto& g : corpus.complexes) {
        if (canonical_shape(g.complex.facets()) == canonical_shape(cx("ab bc ca").facets())) {
            seen = true;
            CHECK_FALSE(g.forest);
        }
    }
    CHECK(seen);
}

TEST_CASE("antichain enumeration counts isomorphism classes") {
    // Brute force: every antichain of nonempty subsets of {0..n-1}, minimized over all relabelings.
    for (int n = 1; n <= 4; ++n) {
        for (int q : {2, 3, 100}) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::vector<std::vector<int>> perms;
            do perms.push_back(perm);
            while (std::next_permutation(perm.begin(), perm.end()));
            const std::uint32_t subsets = (1U << n) - 1;
            std::set<std::vector<std::uint64_t>> classes;
            for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << subsets); ++pick) {
                std::vector<std::uint64_t> family;
                for (std::uint32_t k = 0; k < subsets; ++k) {
                    if ((pick >> k) & 1U) family.push_back(k + 1);
                }
                if (static_cast<int>(family.size()) > q) continue;
                bool antichain = true;
                for (auto a : family) {
                    for (auto b : family) antichain = antichain && (a == b || (a & b) != a);
                }
                if (!antichain) continue;
                std::vector<std::uint64_t> best;
                for (const auto& p : perms) {
                    std::vector<std::uint64_t> moved;
                    for (auto f : family) {
                        std::uint64_t m = 0;
                        for (int v = 0; v < n; ++v) {
                            if ((f >> v) & 1U) m |= std::uint64_t{1} << p[static_cast<std::size_t>(v)];
                        }
                        moved.push_back(m);
                    }
                    std::sort(moved.begin(), moved.end());
                    if (best.empty() || moved < best) best = moved;
                }
                classes.insert(best);
            }
            CHECK_MESSAGE(squarefree_exhaustive(n, q).complexes.size() == classes.size(), "n=" << n << " q=" << q);
        }
    }
}

TEST_CASE("canonical shapes are relabeling invariant") {
    CHECK(canonical_shape(cx("ab bc cd").facets()) == canonical_shape(cx("xy zw yz").facets()));
    CHECK(canonical_shape(cx("ab bc").facets()) != canonical_shape(cx("ab cd").facets()));
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = random_squarefree(6, 5, 3, rng);
        std::vector<int> perm{0, 1, 2, 3, 4, 5};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<VertexSet> moved;
        for (auto f : c.facets()) {
            VertexSet m;
            f.for_each([&](int v) { m |= VertexSet::single(perm[static_cast<std::size_t>(v)]); });
            moved.push_back(m);
        }
        CHECK(canonical_shape(moved) == canonical_shape(c.facets()));
    }
}

TEST_CASE("random forests are reproducible and validated") {
    const auto a = forest_random(9, 6, 40, 123);
    const auto b = forest_random(9, 6, 40, 123);
    REQUIRE(a.complexes.size() == 40);
    for (std::size_t k = 0; k < a.complexes.size(); ++k) {
        CHECK(a.complexes[k].complex == b.complexes[k].complex);
        CHECK(a.complexes[k].forest);
        CHECK(oracle::is_forest(testing::masks(a.complexes[k].complex)));
        CHECK(a.complexes[k].complex.vertices().size() <= 9);
        CHECK(a.complexes[k].complex.facet_count() <= 6);
    }
    CHECK(a.rejected == b.rejected);
    const auto other = forest_random(9, 6, 40, 124);
    bool differs = false;
    for (std::size_t k = 0; k < other.complexes.size(); ++k) differs = differs || !(other.complexes[k].complex == a.complexes[k].complex);
    CHECK(differs);
}

TEST_CASE("uniform draws stay in range") {
    std::mt19937_64 rng(1);
    std::set<std::uint64_t> seen;
    for (int k = 0; k < 2000; ++k) {
        const auto x = uniform_int(rng, 3, 7);
        CHECK(x >= 3);
        CHECK(x <= 7);
        seen.insert(x);
    }
    CHECK(seen.size() == 5);
    CHECK(uniform_int(rng, 5, 5) == 5);
}

TEST_CASE("generator guards") {
    CHECK_THROWS_AS(forest_exhaustive(11), ResourceError);
    CHECK_THROWS_AS(squarefree_exhaustive(11, 2), ResourceError);
    CHECK_THROWS_AS(forest_random(0, 2, 1, 0), PreconditionError);
}

TEST_CASE("betti command reports") {
    const auto input = read_complex_file(data("path.txt"));
    auto options = quiet();
    options.backend = "all";
    const auto r = cmd_betti(input, options);
    CHECK(r.exit_code == kExitOk);
    const auto& j = r.report;
    CHECK(j["schema_version"] == 1);
    CHECK(j["agreement"] == true);
    CHECK(j["betti"]["pd"] == 3);
    CHECK(j["betti"]["graded"][3][5] == 1);
    CHECK(j["betti"]["t_vector"]["2"] == 4);
    CHECK(j.contains("tables"));
    CHECK(j["tables"].contains("hochster_Q"));
    CHECK_FALSE(j.contains("timing_ms"));
    bool top = false;
    for (const auto& e : j["betti"]["multigraded"]) {
        if (e["i"] == 3) top = e["support"] == nlohmann::json::array({"a", "b", "c", "d", "e"}) && e["value"] == 1;
    }
    CHECK(top);

    options.backend = "forest";
    const auto tri = cmd_betti(read_complex_file(data("triangle.txt")), options);
    CHECK(tri.exit_code == kExitPrecondition);
    CHECK(tri.report["error"]["message"].get<std::string>().find("not a forest") != std::string::npos);

    const auto empty = cmd_betti(read_complex_file(data("empty.txt")), quiet());
    CHECK(empty.exit_code == kExitOk);
    CHECK(empty.report["betti"]["graded"] == nlohmann::json::array({nlohmann::json::array({1})}));

    auto capped = quiet();
    capped.backend = "hochster";
    capped.max_faces = 1;
    CHECK(cmd_betti(input, capped).exit_code == kExitResource);
}

TEST_CASE("reports are deterministic") {
    const auto input = read_complex_file(data("tree.txt"));
    auto options = quiet();
    options.backend = "all";
    CHECK(cmd_betti(input, options).report.dump() == cmd_betti(input, options).report.dump());
    CHECK(cmd_witness(input, 1, 2, options).report.dump() == cmd_witness(input, 1, 2, options).report.dump());
    options.seed = 99;
    CHECK(cmd_generate("forest-random", 8, 5, 10, options).report.dump() ==
          cmd_generate("forest-random", 8, 5, 10, options).report.dump());

    auto timed = options;
    timed.timing = true;
    auto with_time = cmd_betti(input, timed).report;
    CHECK(with_time.contains("timing_ms"));
    with_time.erase("timing_ms");
    CHECK(with_time.dump() == cmd_betti(input, options).report.dump());
}

TEST_CASE("witness and other commands") {
    const auto path = read_complex_file(data("path.txt"));
    const auto ok = cmd_witness(path, 1, 2, quiet());
    CHECK(ok.exit_code == kExitOk);
    CHECK(ok.report["verification"]["verified"] == true);
    CHECK(ok.report["witness"]["u"] == nlohmann::json::array({"a", "b"}));
    CHECK(ok.report["witness"]["w"] == nlohmann::json::array({"c", "d", "e"}));

    const auto bad = cmd_witness(path, 2, 2, quiet());
    CHECK(bad.exit_code == kExitPrecondition);
    CHECK(bad.report["error"]["message"] == "β_{4,5} = 0");

    const auto points = cmd_witness(read_complex_file(data("two_points.txt")), 1, 1, quiet());
    CHECK(points.report["witness"]["u"] == nlohmann::json::array({"x"}));
    CHECK(points.report["witness"]["w"] == nlohmann::json::array({"y"}));

    const auto comp = cmd_complements(path, "bcd", quiet());
    CHECK(comp.report["complements"] == nlohmann::json::array({nlohmann::json::array({"a", "b", "d", "e"})}));
    CHECK(cmd_complements(path, "abcde", quiet()).exit_code == kExitPrecondition);
    CHECK(cmd_complements(path, "bzz", quiet()).exit_code == kExitUsage);

    const auto sub = cmd_subadditivity(path, quiet());
    CHECK(sub.report["holds"] == true);
    CHECK(sub.report["rows"].size() == 3);

    const auto q = cmd_question(read_complex_file(data("triangle.txt")), 1, 1, quiet());
    CHECK(q.exit_code == kExitOk);
    CHECK(q.report["status"] == "found");
    CHECK(q.report["is_forest"] == false);
    CHECK(cmd_question(path, 2, 2, quiet()).exit_code == kExitPrecondition);

    const auto forest = cmd_is_forest(read_complex_file(data("triangle.txt")), quiet());
    CHECK(forest.report["is_forest"] == false);
    CHECK(forest.report["counterexample"].size() == 3);

    const auto gen = cmd_generate("forest-exhaustive", 3, 1, 0, quiet());
    CHECK(gen.report["generated"] == forest_exhaustive(3).complexes.size());
    CHECK(cmd_generate("forest-exhaustive", 12, 1, 0, quiet()).exit_code == kExitResource);
    CHECK(cmd_generate("nonsense", 3, 1, 0, quiet()).exit_code == kExitUsage);
}

TEST_CASE("tsv and text renderings") {
    const auto r = cmd_betti(read_complex_file(data("path.txt")), quiet());
    const auto tsv = report_to_tsv(r.report);
    CHECK(tsv.find("betti.pd\t3\n") != std::string::npos);
    CHECK(tsv.find("schema_version\t1\n") != std::string::npos);

    const auto gen = cmd_generate("forest-exhaustive", 3, 1, 0, quiet());
    const auto text = corpus_to_text(gen.report);
    const auto blocks = split_complex_stream(text);
    CHECK(blocks.size() == forest_exhaustive(3).complexes.size());
    for (const auto& b : blocks) CHECK(is_forest(parse_complex(b).complex).forest);
}
