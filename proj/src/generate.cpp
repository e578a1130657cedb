#include "facetbetti/generate.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <set>

#include "facetbetti/complexops.hpp"

namespace facetbetti {

std::vector<std::uint64_t> canonical_shape(const std::vector<VertexSet>& input) {
    VertexSet used;
    for (VertexSet f : input) used |= f;
    std::vector<VertexSet> facets;
    for (VertexSet f : input) facets.push_back(compress(f, used));
    const int k = used.size();

    std::vector<std::vector<int>> profile(static_cast<std::size_t>(k));
    for (VertexSet f : facets) f.for_each([&](int v) { profile[static_cast<std::size_t>(v)].push_back(f.size()); });
    for (auto& p : profile) std::sort(p.begin(), p.end());
    std::vector<int> order(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& pa = profile[static_cast<std::size_t>(a)];
        const auto& pb = profile[static_cast<std::size_t>(b)];
        return pa.size() != pb.size() ? pa.size() > pb.size() : pa > pb;
    });
    std::vector<std::vector<int>> cells;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i == 0 || profile[static_cast<std::size_t>(order[i])] != profile[static_cast<std::size_t>(order[i - 1])]) {
            cells.emplace_back();
        }
        cells.back().push_back(order[i]);
    }
    for (auto& c : cells) std::sort(c.begin(), c.end());

    std::vector<std::uint64_t> best, candidate;
    std::vector<int> label(static_cast<std::size_t>(k));
    while (true) {
        int next = 0;
        for (const auto& c : cells) {
            for (int v : c) label[static_cast<std::size_t>(v)] = next++;
        }
        candidate.clear();
        for (VertexSet f : facets) {
            std::uint64_t m = 0;
            f.for_each([&](int v) { m |= std::uint64_t{1} << label[static_cast<std::size_t>(v)]; });
            candidate.push_back(m);
        }
        std::sort(candidate.begin(), candidate.end());
        if (best.empty() || candidate < best) best = candidate;

        std::size_t c = 0;
        while (c < cells.size() && !std::next_permutation(cells[c].begin(), cells[c].end())) ++c;
        if (c == cells.size()) break;
    }
    return best;
}

SimplicialComplex complex_from_masks(const std::vector<std::uint64_t>& masks) {
    std::uint64_t used = 0;
    for (auto m : masks) used |= m;
    const int k = used == 0 ? 0 : 64 - std::countl_zero(used);
    std::vector<VertexSet> facets;
    for (auto m : masks) facets.emplace_back(m);
    return SimplicialComplex(make_letter_universe(k), std::move(facets));
}

namespace {

void require_exhaustive_size(int n) {
    if (n < 0 || n > kMaxExhaustiveVertices) {
        throw ResourceError("exhaustive generation supports 0 <= n <= " + std::to_string(kMaxExhaustiveVertices));
    }
}

struct ShapeOrder {
    bool operator()(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
        std::uint64_t ua = 0, ub = 0;
        for (auto m : a) ua |= m;
        for (auto m : b) ub |= m;
        if (std::popcount(ua) != std::popcount(ub)) return std::popcount(ua) < std::popcount(ub);
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

constexpr std::size_t kMaxCorpus = 2'000'000;

}  // namespace

GeneratedCorpus forest_exhaustive(int n) {
    require_exhaustive_size(n);
    GeneratedCorpus corpus;
    std::set<std::vector<std::uint64_t>, ShapeOrder> forests;
    std::set<std::vector<std::uint64_t>> seen;
    std::deque<std::vector<std::uint64_t>> queue{{}};
    while (!queue.empty()) {
        const auto shape = std::move(queue.front());
        queue.pop_front();
        std::uint64_t used = 0;
        for (auto m : shape) used |= m;
        const int k = std::popcount(used);

        // Old-vertex parts: empty, or a proper subset of one facet.
        std::set<std::uint64_t> bases{0};
        for (auto g : shape) {
            for (std::uint64_t s = (g - 1) & g; s != 0; s = (s - 1) & g) bases.insert(s);
        }
        for (auto s : bases) {
            for (int t = 1; k + t <= n; ++t) {
                const std::uint64_t fresh = ((std::uint64_t{1} << t) - 1) << k;
                std::vector<VertexSet> facets;
                for (auto m : shape) facets.emplace_back(m);
                facets.emplace_back(s | fresh);
                auto key = canonical_shape(facets);
                if (!seen.insert(key).second) continue;
                if (seen.size() > kMaxCorpus) throw ResourceError("forest enumeration exceeded the corpus cap");
                if (!is_forest(complex_from_masks(key)).forest) {
                    ++corpus.rejected;
                    continue;
                }
                forests.insert(key);
                queue.push_back(std::move(key));
            }
        }
    }
    for (const auto& key : forests) corpus.complexes.push_back({complex_from_masks(key), true});
    return corpus;
}

GeneratedCorpus squarefree_exhaustive(int n, int q) {
    require_exhaustive_size(n);
    if (q < 1) throw PreconditionError("squarefree-exhaustive needs q >= 1");
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::set<std::vector<std::uint64_t>, ShapeOrder> shapes;
    std::vector<std::uint64_t> chosen;
    std::size_t visited = 0;
    auto extend = [&](auto&& self, std::uint64_t from) -> void {
        for (std::uint64_t s = from; s < limit; ++s) {
            const bool comparable = std::any_of(chosen.begin(), chosen.end(), [&](std::uint64_t c) {
                return (c & s) == c || (c & s) == s;
            });
            if (comparable) continue;
            if (++visited > 20'000'000) throw ResourceError("antichain enumeration exceeded 2e7 candidates");
            chosen.push_back(s);
            std::vector<VertexSet> facets(chosen.begin(), chosen.end());
            shapes.insert(canonical_shape(facets));
            if (chosen.size() < static_cast<std::size_t>(q)) self(self, s + 1);
            chosen.pop_back();
        }
    };
    extend(extend, 1);
    GeneratedCorpus corpus;
    for (const auto& key : shapes) {
        auto complex = complex_from_masks(key);
        const bool forest = is_forest(complex).forest;
        corpus.complexes.push_back({std::move(complex), forest});
    }
    return corpus;
}

std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return lo + rng();
    const std::uint64_t bound = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= bound);
    return lo + x % span;
}

GeneratedCorpus forest_random(int n, int q, std::size_t count, std::uint64_t seed) {
    if (n < 1 || n > 63 || q < 1) throw PreconditionError("forest-random needs 1 <= n <= 63 and q >= 1");
    std::mt19937_64 rng(seed);
    GeneratedCorpus corpus;
    std::size_t attempts = 0;
    while (corpus.complexes.size() < count) {
        if (++attempts > 100 * count + 100) throw ResourceError("forest-random: too many rejected samples");
        const auto target = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::uint64_t>(q)));
        int k = static_cast<int>(uniform_int(rng, 1, static_cast<std::uint64_t>(std::min(n, 3))));
        std::vector<std::uint64_t> facets{(std::uint64_t{1} << k) - 1};
        while (facets.size() < target && k < n) {
            std::uint64_t base = 0;
            if (uniform_int(rng, 0, 4) != 0) {
                const std::uint64_t g = facets[uniform_int(rng, 0, facets.size() - 1)];
                VertexSet(g).for_each([&](int v) {
                    if (uniform_int(rng, 0, 1)) base |= std::uint64_t{1} << v;
                });
                if (base == g) {
                    const auto drop = VertexSet(g).elements()[uniform_int(rng, 0, static_cast<std::uint64_t>(VertexSet(g).size() - 1))];
                    base &= ~(std::uint64_t{1} << drop);
                }
            }
            const int t = static_cast<int>(uniform_int(rng, 1, static_cast<std::uint64_t>(std::min(n - k, 2))));
            facets.push_back(base | (((std::uint64_t{1} << t) - 1) << k));
            k += t;
        }
        auto complex = complex_from_masks(facets);
        if (!is_forest(complex).forest) {
            ++corpus.rejected;
            continue;
        }
        corpus.complexes.push_back({std::move(complex), true});
    }
    return corpus;
}

SimplicialComplex random_squarefree(int n, int max_generators, int max_degree, std::mt19937_64& rng) {
    const auto count = uniform_int(rng, 1, static_cast<std::uint64_t>(max_generators));
    std::vector<VertexSet> gens;
    for (std::uint64_t g = 0; g < count; ++g) {
        const auto size = uniform_int(rng, 1, static_cast<std::uint64_t>(std::min(n, max_degree)));
        VertexSet s;
        while (static_cast<std::uint64_t>(s.size()) < size) {
            s |= VertexSet::single(static_cast<int>(uniform_int(rng, 0, static_cast<std::uint64_t>(n - 1))));
        }
        gens.push_back(s);
    }
    return SimplicialComplex(make_letter_universe(n), std::move(gens));
}

}  // namespace facetbetti
