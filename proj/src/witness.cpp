#include "facetbetti/witness.hpp"

#include <algorithm>

#include "facetbetti/complexops.hpp"
#include "facetbetti/lattice.hpp"

namespace facetbetti {

std::vector<std::string> format_trace(const UniversePtr& universe, const std::vector<TraceStep>& trace) {
    std::vector<std::string> out;
    for (const auto& s : trace) {
        std::string line = std::string(static_cast<std::size_t>(2 * s.depth), ' ') + s.step + " on " + s.complex;
        if (!s.leaf.empty()) line += " leaf=" + universe->to_string(s.leaf);
        line += " degree=" + std::to_string(s.degree);
        line += " result=" + universe->to_string(s.result);
        if (!s.note.empty()) line += " (" + s.note + ")";
        out.push_back(std::move(line));
    }
    return out;
}

namespace {

class Construction {
  public:
    explicit Construction(UniversePtr universe) : universe_(std::move(universe)) {}

    std::vector<TraceStep> trace;

    [[noreturn]] void fail(const std::string& what) const {
        throw InvariantViolation(what, format_trace(universe_, trace));
    }

    std::string name(VertexSet s) const { return universe_->to_string(s); }

    std::int64_t top(const SimplicialComplex& c, int i) const { return top_degree_betti(c, i).value; }

    // Finds u such that Δ_[G] has the complement Δ_[u] with β_{i-1,|u|}(Δ_[u]) ≠ 0.
    VertexSet facet_complement(const SimplicialComplex& complex, VertexSet g, int i, int depth) {
        if (complex.facet_count() < 2) fail("facet complement asked on " + complex.to_string() + " with one facet");
        if (top(complex, i) == 0) {
            fail("β_" + std::to_string(i) + ",top vanishes for " + complex.to_string() + " mid-recursion");
        }
        VertexSet leaf;
        for (const auto& cert : find_leaves(complex)) {
            if (cert.leaf != g) {
                leaf = cert.leaf;
                break;
            }
        }
        if (leaf.empty()) fail("no leaf other than " + name(g) + " in " + complex.to_string());

        const SimplicialComplex gamma = localization(complex, leaf);
        if (gamma.vertices() != complex.vertices() - leaf) {
            fail("localization " + gamma.to_string() + " lost vertices of " + name(complex.vertices() - leaf));
        }
        VertexSet h;
        bool found = false;
        for (VertexSet f : gamma.facets()) {
            if (f.subset_of(g - leaf)) {
                h = f;
                found = true;
                break;
            }
        }
        if (!found) fail("no facet of " + gamma.to_string() + " inside " + name(g - leaf));

        VertexSet v;
        const std::size_t slot = trace.size();
        trace.push_back({depth, "facet-complement", complex.to_string(), leaf, i, {}, "G=" + name(g)});
        if (gamma.facet_count() == 1) {
            if (i != 2) fail("localization reached one facet with i=" + std::to_string(i));
            trace.push_back({depth + 1, "base", gamma.to_string(), {}, i - 1, {}, "single facet, v=1"});
        } else {
            v = facet_complement(gamma, h, i - 1, depth + 1);
        }
        const VertexSet u = leaf | v;
        trace[slot].result = u;
        if (!is_complement_pair(complex, u, g)) {
            fail(name(u) + " and " + name(g) + " are not complements in " + complex.to_string());
        }
        if (top(induced_subcollection(complex, u), i - 1) == 0) {
            fail("β_" + std::to_string(i - 1) + " vanishes on the lifted set " + name(u));
        }
        return u;
    }

    static VertexSet degree_one_facet(const SimplicialComplex& complex) {
        VertexSet best = complex.facets().front();
        for (VertexSet f : complex.facets()) {
            if (f.size() > best.size()) best = f;
        }
        return best;
    }

    // Complements Δ_[u], Δ_[w] carrying β_a and β_b.
    std::pair<VertexSet, VertexSet> pair(const SimplicialComplex& complex, int a, int b, int depth) {
        if (a == 1) {
            const VertexSet g = degree_one_facet(complex);
            trace.push_back({depth, "pair a=1", complex.to_string(), {}, a + b, g, "u=G"});
            return {g, facet_complement(complex, g, b + 1, depth + 1)};
        }
        if (b == 1) {
            const VertexSet g = degree_one_facet(complex);
            trace.push_back({depth, "pair b=1", complex.to_string(), {}, a + b, g, "w=G"});
            return {facet_complement(complex, g, a + 1, depth + 1), g};
        }
        const auto leaves = find_leaves(complex);
        if (leaves.empty()) fail("no leaf in " + complex.to_string());
        const VertexSet leaf = leaves.front().leaf;
        const SimplicialComplex gamma = localization(complex, leaf);
        if (gamma.vertices() != complex.vertices() - leaf) {
            fail("localization " + gamma.to_string() + " lost vertices");
        }
        if (gamma.facet_count() < 2) fail("localization " + gamma.to_string() + " has fewer than two facets");
        const std::size_t slot = trace.size();
        trace.push_back({depth, "pair", complex.to_string(), leaf, a + b, {}, ""});

        const auto [u1, v1] = pair(gamma, a - 1, b, depth + 1);
        const VertexSet u = u1 | leaf;
        const VertexSet v = v1 | leaf;
        const SimplicialComplex sub_v = induced_subcollection(complex, v);
        if (!sub_v.spans_ground()) fail("Δ_[" + name(v) + "] does not span " + name(v));
        if (top(sub_v, b + 1) == 0) {
            fail("β_" + std::to_string(b + 1) + "," + std::to_string(v.size()) + "(Δ_[" + name(v) + "]) = 0");
        }
        trace.push_back({depth + 1, "lift", sub_v.to_string(), leaf, b + 1, v, "u=" + name(u)});
        const VertexSet w = facet_complement(sub_v, leaf, b + 1, depth + 1);
        trace[slot].result = u | w;
        trace[slot].note = "u=" + name(u) + " w=" + name(w);
        if (!is_complement_pair(complex, u, w)) {
            fail(name(u) + " and " + name(w) + " are not complements in " + complex.to_string());
        }
        return {u, w};
    }

  private:
    UniversePtr universe_;
};

void require_forest_hypotheses(const SimplicialComplex& complex, int i) {
    if (complex.facet_count() < 2) {
        throw PreconditionError("the complex needs at least two facets, " + complex.to_string() + " has " +
                                std::to_string(complex.facet_count()));
    }
    if (!complex.spans_ground()) {
        throw PreconditionError("the complex does not use every vertex of its ground set");
    }
    if (auto verdict = is_forest(complex); !verdict.forest) {
        throw PreconditionError("not a forest: subcollection " +
                                SimplicialComplex(complex.universe(), complex.ground(), verdict.counterexample)
                                    .to_string() +
                                " has no leaf");
    }
    const int n = complex.vertices().size();
    if (top_degree_betti(complex, i).value == 0) {
        throw PreconditionError("β_{" + std::to_string(i) + "," + std::to_string(n) + "} = 0");
    }
}

}  // namespace

FacetComplement witness_facet_complement(const SimplicialComplex& complex, VertexSet facet, int i) {
    require_forest_hypotheses(complex, i);
    if (!complex.has_facet(facet)) {
        throw PreconditionError(complex.universe()->to_string(facet) + " is not a facet");
    }
    Construction c(complex.universe());
    FacetComplement out;
    out.u = c.facet_complement(complex, facet, i, 0);
    out.beta = top_degree_betti(induced_subcollection(complex, out.u), i - 1).value;
    out.trace = std::move(c.trace);
    return out;
}

WitnessPair witness_pair(const SimplicialComplex& complex, int a, int b) {
    if (a < 1 || b < 1) throw PreconditionError("a and b must be positive");
    require_forest_hypotheses(complex, a + b);
    Construction c(complex.universe());
    WitnessPair out;
    std::tie(out.u, out.w) = c.pair(complex, a, b, 0);
    out.a = a;
    out.b = b;
    out.beta_u = top_degree_betti(induced_subcollection(complex, out.u), a).value;
    out.beta_w = top_degree_betti(induced_subcollection(complex, out.w), b).value;
    out.trace = std::move(c.trace);
    if (out.beta_u == 0 || out.beta_w == 0) {
        throw InvariantViolation("witness pair carries a vanishing Betti number",
                                 format_trace(complex.universe(), out.trace));
    }
    return out;
}

namespace {

std::int64_t oracle_top(const SimplicialComplex& complex, VertexSet u, int i, const Field& field) {
    const SimplicialComplex sub = induced_subcollection(complex, u);
    const MonomialIdeal ideal = facet_ideal(sub);
    if (!ideal.is_proper()) return 0;
    return hochster_entry(ideal, i, u, field);
}

bool proper_nonempty(const SimplicialComplex& complex, VertexSet s) {
    return !s.empty() && s.proper_subset_of(complex.vertices());
}

}  // namespace

WitnessCheck verify_witness(const SimplicialComplex& complex, const WitnessPair& pair, const Field& field) {
    WitnessCheck check;
    check.complementary = proper_nonempty(complex, pair.u) && proper_nonempty(complex, pair.w) &&
                          is_complement_pair(complex, pair.u, pair.w);
    check.beta_u = oracle_top(complex, pair.u, pair.a, field);
    check.beta_w = oracle_top(complex, pair.w, pair.b, field);
    return check;
}

std::int64_t verify_facet_complement(const SimplicialComplex& complex, VertexSet facet, VertexSet u, int i,
                                     const Field& field) {
    if (!proper_nonempty(complex, u) || !is_complement_pair(complex, u, facet)) return 0;
    return oracle_top(complex, u, i - 1, field);
}

SubadditivityReport check_subadditivity(const BettiTable& table) {
    SubadditivityReport report;
    const int pd = table.pd();
    const auto t = t_vector(table);
    auto get = [&](int a) {
        auto it = t.find(a);
        if (it == t.end()) throw InvariantViolation("row " + std::to_string(a) + " of the Betti table is zero");
        return it->second;
    };
    for (int a = 1; a < pd; ++a) {
        for (int b = 1; a + b <= pd; ++b) {
            SubadditivityRow row{a, b, get(a), get(b), get(a + b), false};
            row.holds = row.t_ab <= row.t_a + row.t_b;
            report.holds = report.holds && row.holds;
            report.rows.push_back(row);
        }
    }
    return report;
}

std::string to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::Inapplicable: return "inapplicable";
        case SearchStatus::Found: return "found";
        case SearchStatus::NoneFound: return "none";
        case SearchStatus::Incomplete: return "incomplete";
    }
    return "unknown";
}

ComplementSearch question_main_search(const MonomialIdeal& ideal, const BettiTable& table, int a, int b) {
    ComplementSearch out;
    if (a < 1 || b < 1) throw PreconditionError("a and b must be positive");
    const int n = ideal.ground().size();
    out.top_beta = table.at(a + b, ideal.ground());
    if (out.top_beta == 0) {
        out.status = SearchStatus::Inapplicable;
        out.message = "β_{" + std::to_string(a + b) + "," + std::to_string(n) + "} = 0";
        return out;
    }
    const LcmLattice lattice(ideal);
    const auto proper = lattice.proper_part();
    for (VertexSet m : proper) {
        if (table.at(a, m) == 0) continue;
        for (VertexSet other : proper) {
            if (table.at(b, other) != 0 && are_complements(lattice, ideal, m, other)) out.pairs.emplace_back(m, other);
        }
    }
    out.status = out.pairs.empty() ? SearchStatus::NoneFound : SearchStatus::Found;
    if (out.pairs.empty()) out.message = "no complement pair carries the requested Betti numbers";
    return out;
}

ComplementSearch question_main_search(const MonomialIdeal& ideal, int a, int b, const Field& field,
                                      std::size_t max_faces) {
    if (!ideal.is_proper() || ideal.generators().empty()) {
        ComplementSearch out;
        out.message = "the ideal is zero or the unit ideal";
        return out;
    }
    try {
        return question_main_search(ideal, betti_hochster(ideal, field, max_faces), a, b);
    } catch (const ResourceError& e) {
        ComplementSearch out;
        out.status = SearchStatus::Incomplete;
        out.message = e.what();
        return out;
    }
}

}  // namespace facetbetti
