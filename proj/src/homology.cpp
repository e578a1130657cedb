#include "facetbetti/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace facetbetti {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

struct FaceHash {
    std::size_t operator()(const Face& f) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto v : f) {
            h ^= v + 0x9E3779B97F4A7C15ULL;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

// Arithmetic policies for the sparse elimination below.
struct PrimeArith {
    using value_type = std::uint32_t;
    std::uint64_t p;

    value_type from_int(std::int64_t x) const {
        const auto m = static_cast<std::int64_t>(p);
        return static_cast<value_type>(((x % m) + m) % m);
    }
    bool is_zero(value_type x) const { return x == 0; }
    value_type inverse(value_type x) const {
        // Fermat: x^(p-2).
        std::uint64_t result = 1, base = x, e = p - 2;
        while (e) {
            if (e & 1U) result = result * base % p;
            base = base * base % p;
            e >>= 1U;
        }
        return static_cast<value_type>(result);
    }
    value_type mul(value_type a, value_type b) const { return static_cast<value_type>(std::uint64_t{a} * b % p); }
    // a - f*b
    value_type sub_mul(value_type a, value_type f, value_type b) const {
        return static_cast<value_type>((a + p - std::uint64_t{f} * b % p) % p);
    }
};

struct RationalArith {
    using value_type = mpq_class;

    value_type from_int(std::int64_t x) const { return mpq_class(static_cast<long>(x)); }
    bool is_zero(const value_type& x) const { return sgn(x) == 0; }
    value_type inverse(const value_type& x) const { return 1 / x; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type sub_mul(const value_type& a, const value_type& f, const value_type& b) const { return a - f * b; }
};

template <class Arith>
std::size_t sparse_rank(const std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>& input,
                        const Arith& ar) {
    using T = typename Arith::value_type;
    using Row = std::vector<std::pair<std::uint32_t, T>>;

    // Pivot rows are normalized to a leading 1 and keyed by leading column.
    std::unordered_map<std::uint32_t, Row> pivots;
    Row row, scratch;
    for (const auto& in : input) {
        row.clear();
        for (const auto& [c, v] : in) {
            T x = ar.from_int(v);
            if (!ar.is_zero(x)) row.emplace_back(c, std::move(x));
        }
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                const T inv = ar.inverse(row.front().second);
                for (auto& e : row) e.second = ar.mul(e.second, inv);
                pivots.emplace(row.front().first, std::move(row));
                row = Row{};
                break;
            }
            const Row& piv = it->second;
            const T factor = row.front().second;
            scratch.clear();
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < piv.size()) {
                if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    scratch.push_back(std::move(row[i++]));
                } else if (i == row.size() || piv[j].first < row[i].first) {
                    T x = ar.sub_mul(ar.from_int(0), factor, piv[j].second);
                    if (!ar.is_zero(x)) scratch.emplace_back(piv[j].first, std::move(x));
                    ++j;
                } else {
                    T x = ar.sub_mul(row[i].second, factor, piv[j].second);
                    if (!ar.is_zero(x)) scratch.emplace_back(row[i].first, std::move(x));
                    ++i;
                    ++j;
                }
            }
            std::swap(row, scratch);
        }
    }
    return pivots.size();
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw ParseError("field characteristic " + std::to_string(p) + " is not prime");
    if (p > 2147483647U) throw ParseError("field characteristic too large");
    return Field(p);
}

Field Field::parse(const std::string& text) {
    std::string t;
    for (char c : text) {
        if (c != '(' && c != ')' && c != ' ') t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (t == "q" || t == "qq" || t == "rational" || t == "rationals") return rationals();
    if (t.rfind("gf", 0) == 0) t = t.substr(2);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        t.size() > 10) {
        throw ParseError("unknown field '" + text + "' (expected Q or GF(p))");
    }
    return prime(static_cast<std::uint32_t>(std::stoul(t)));
}

std::string Field::to_string() const { return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")"; }

AbstractComplex::AbstractComplex(std::size_t vertex_count, std::vector<Face> facets)
    : vertex_count_(vertex_count) {
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (auto v : f) {
            if (v >= vertex_count_) throw PreconditionError("face vertex out of range");
        }
    }
    std::sort(facets.begin(), facets.end(),
              [](const Face& a, const Face& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (auto& f : facets) {
        const bool dominated = std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) {
            return std::includes(g.begin(), g.end(), f.begin(), f.end());
        });
        if (!dominated) facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end());
}

int AbstractComplex::dimension() const {
    int d = -2;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

AbstractComplex AbstractComplex::cone() const {
    const auto apex = static_cast<std::uint32_t>(vertex_count_);
    std::vector<Face> facets = facets_;
    for (auto& f : facets) f.push_back(apex);
    if (facets.empty()) facets.push_back({apex});
    return AbstractComplex(vertex_count_ + 1, std::move(facets));
}

std::vector<std::vector<Face>> AbstractComplex::faces_by_dimension(std::size_t max_faces) const {
    std::vector<std::unordered_set<Face, FaceHash>> seen(static_cast<std::size_t>(dimension() + 2));
    std::size_t total = 0;
    Face sub;
    for (const auto& f : facets_) {
        const std::size_t k = f.size();
        if (k >= 63 || (std::size_t{1} << k) > max_faces) {
            throw ResourceError("face enumeration: a facet with " + std::to_string(k) +
                                " vertices exceeds the cap of " + std::to_string(max_faces) + " faces");
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            sub.clear();
            for (std::size_t j = 0; j < k; ++j) {
                if ((mask >> j) & 1U) sub.push_back(f[j]);
            }
            if (seen[sub.size()].insert(sub).second && ++total > max_faces) {
                throw ResourceError("face enumeration exceeded the cap of " + std::to_string(max_faces) + " faces");
            }
        }
    }
    std::vector<std::vector<Face>> out;
    for (auto& s : seen) {
        std::vector<Face> layer(s.begin(), s.end());
        std::sort(layer.begin(), layer.end());
        out.push_back(std::move(layer));
    }
    return out;
}

std::size_t matrix_rank(const std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>& rows,
                        const Field& field) {
    if (field.is_rational()) return sparse_rank(rows, RationalArith{});
    return sparse_rank(rows, PrimeArith{field.characteristic()});
}

HomologyProfile reduced_homology(const AbstractComplex& complex, const Field& field, std::size_t max_faces) {
    HomologyProfile profile;
    profile.field = field;
    if (complex.is_void()) return profile;

    const auto layers = complex.faces_by_dimension(max_faces);
    // ranks[k] = rank of the boundary map from layer k to layer k-1.
    std::vector<std::size_t> ranks(layers.size() + 1, 0);
    for (std::size_t k = 1; k < layers.size(); ++k) {
        std::unordered_map<Face, std::uint32_t, FaceHash> index;
        for (std::size_t r = 0; r < layers[k - 1].size(); ++r) index.emplace(layers[k - 1][r], static_cast<std::uint32_t>(r));
        std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows;
        rows.reserve(layers[k].size());
        Face boundary;
        for (const auto& face : layers[k]) {
            std::vector<std::pair<std::uint32_t, std::int64_t>> row;
            for (std::size_t j = 0; j < face.size(); ++j) {
                boundary.assign(face.begin(), face.end());
                boundary.erase(boundary.begin() + static_cast<std::ptrdiff_t>(j));
                row.emplace_back(index.at(boundary), j % 2 == 0 ? 1 : -1);
            }
            rows.push_back(std::move(row));
        }
        ranks[k] = matrix_rank(rows, field);
    }
    for (std::size_t k = 0; k < layers.size(); ++k) {
        const auto betti = static_cast<std::int64_t>(layers[k].size()) - static_cast<std::int64_t>(ranks[k]) -
                           static_cast<std::int64_t>(ranks[k + 1]);
        if (betti != 0) profile.dims[static_cast<int>(k) - 1] = betti;
    }
    return profile;
}

AbstractComplex order_complex(const FinitePoset& poset, std::size_t max_faces) {
    const std::size_t n = poset.size();
    if (n == 0) return AbstractComplex::empty_complex();

    std::vector<std::vector<std::uint32_t>> covers(n);
    std::vector<bool> minimal(n, true);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (!poset.less(a, b)) continue;
            minimal[b] = false;
            bool direct = true;
            for (std::size_t c = 0; c < n && direct; ++c) direct = !(poset.less(a, c) && poset.less(c, b));
            if (direct) covers[a].push_back(static_cast<std::uint32_t>(b));
        }
    }

    std::vector<Face> chains;
    Face path;
    auto extend = [&](auto&& self, std::uint32_t x) -> void {
        path.push_back(x);
        if (covers[x].empty()) {
            if (chains.size() >= max_faces) {
                throw ResourceError("order complex: more than " + std::to_string(max_faces) + " maximal chains");
            }
            chains.push_back(path);
        }
        for (auto y : covers[x]) self(self, y);
        path.pop_back();
    };
    for (std::size_t a = 0; a < n; ++a) {
        if (minimal[a]) extend(extend, static_cast<std::uint32_t>(a));
    }
    return AbstractComplex(n, std::move(chains));
}

}  // namespace facetbetti
