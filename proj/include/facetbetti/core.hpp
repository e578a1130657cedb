#ifndef FACETBETTI_CORE_HPP
#define FACETBETTI_CORE_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "facetbetti/errors.hpp"

namespace facetbetti {

/**
 * A subset of a vertex universe, stored as a 64-bit mask. Bit k stands for
 * the k-th name of the universe. Universes are therefore capped at 64
 * vertices.
 */
class VertexSet {
  public:
    static constexpr int kMaxVertices = 64;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    /// The first `count` vertices {0, ..., count-1}.
    static constexpr VertexSet first(int count) {
        return VertexSet(count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool proper_subset_of(VertexSet other) const {
        return subset_of(other) && bits_ != other.bits_;
    }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
    /// Index of the smallest element; undefined on the empty set.
    constexpr int lowest() const { return std::countr_zero(bits_); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    /// Set difference.
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;
    /// Numeric order on the mask; use canonical_less for the presentation order.
    constexpr auto operator<=>(const VertexSet&) const = default;

    std::vector<int> elements() const;

    /// Invoke f(v) for every element v in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
    }

  private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted element lists ({a} < {a,b} < {b}).
bool canonical_less(VertexSet a, VertexSet b);

/// Renumber the elements of `s` that lie in `frame` so that the k-th smallest
/// element of `frame` becomes k.
VertexSet compress(VertexSet s, VertexSet frame);

struct VertexSetHash {
    std::size_t operator()(VertexSet s) const noexcept {
        return std::hash<std::uint64_t>{}(s.bits() * 0x9E3779B97F4A7C15ULL);
    }
};

/// Ordered list of distinct variable names; position k is bit k.
class VertexUniverse {
  public:
    explicit VertexUniverse(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_.at(static_cast<std::size_t>(v)); }
    /// -1 when absent.
    int index_of(std::string_view name) const;
    VertexSet all() const { return VertexSet::first(size()); }

    VertexSet parse_set(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(VertexSet s) const;
    /// Concatenated names ("abde"), or "1" for the empty set.
    std::string to_string(VertexSet s) const;

    bool operator==(const VertexUniverse& o) const { return names_ == o.names_; }

    static bool valid_name(std::string_view name);

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

using UniversePtr = std::shared_ptr<const VertexUniverse>;

UniversePtr make_universe(std::vector<std::string> names);
/// Names "a", "b", ... (then "x26", "x27", ...).
UniversePtr make_letter_universe(int n);

bool same_universe(const UniversePtr& a, const UniversePtr& b);

/// A square-free monomial: the product of the variables in its support.
class Monomial {
  public:
    Monomial(UniversePtr universe, VertexSet support);

    const UniversePtr& universe() const { return universe_; }
    VertexSet support() const { return support_; }
    int degree() const { return support_.size(); }
    bool is_unit() const { return support_.empty(); }
    bool divides(const Monomial& other) const;
    std::string to_string() const { return universe_->to_string(support_); }

    bool operator==(const Monomial& o) const {
        return support_ == o.support_ && same_universe(universe_, o.universe_);
    }

  private:
    UniversePtr universe_;
    VertexSet support_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// Keep only inclusion-maximal sets; result in canonical order, no duplicates.
std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets);
/// Keep only inclusion-minimal sets; result in canonical order, no duplicates.
std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets);
void sort_canonical(std::vector<VertexSet>& sets);

/**
 * A simplicial complex given by its facets. The ground set is the universe
 * the complex lives in (a subset of the name table, usually V(Δ) or a
 * restriction); it may contain vertices that lie in no facet.
 */
class SimplicialComplex {
  public:
    SimplicialComplex(UniversePtr universe, VertexSet ground, std::vector<VertexSet> facets);
    /// Ground set = the whole name table.
    SimplicialComplex(UniversePtr universe, std::vector<VertexSet> facets);

    static SimplicialComplex from_names(const std::vector<std::vector<std::string>>& facets);

    const UniversePtr& universe() const { return universe_; }
    VertexSet ground() const { return ground_; }
    /// Facets in canonical order.
    const std::vector<VertexSet>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }
    bool empty() const { return facets_.empty(); }
    bool has_facet(VertexSet f) const;
    /// V(Δ): union of the facets.
    VertexSet vertices() const;
    /// True when V(Δ) equals the ground set.
    bool spans_ground() const { return vertices() == ground_; }
    bool is_face(VertexSet s) const;

    /// Adds a face, keeping the facet list an antichain.
    SimplicialComplex with_face(VertexSet face) const;
    SimplicialComplex with_ground(VertexSet ground) const;

    std::string to_string() const;

    bool operator==(const SimplicialComplex& o) const {
        return ground_ == o.ground_ && facets_ == o.facets_ && same_universe(universe_, o.universe_);
    }

  private:
    UniversePtr universe_;
    VertexSet ground_;
    std::vector<VertexSet> facets_;
};

/// A square-free monomial ideal, stored by its minimal generators.
class MonomialIdeal {
  public:
    MonomialIdeal(UniversePtr universe, VertexSet ground, std::vector<VertexSet> generators);

    const UniversePtr& universe() const { return universe_; }
    /// Variables of the polynomial ring.
    VertexSet ground() const { return ground_; }
    const std::vector<VertexSet>& generators() const { return generators_; }
    bool is_proper() const;
    bool contains(VertexSet support) const;
    bool contains(const Monomial& m) const;
    /// lcm of all generators.
    VertexSet generator_lcm() const;
    std::string to_string() const;

    bool operator==(const MonomialIdeal& o) const {
        return ground_ == o.ground_ && generators_ == o.generators_ &&
               same_universe(universe_, o.universe_);
    }

  private:
    UniversePtr universe_;
    VertexSet ground_;
    std::vector<VertexSet> generators_;
};

bool ideal_contains(const MonomialIdeal& ideal, const Monomial& m);

SimplicialComplex facet_complex(const MonomialIdeal& ideal);
MonomialIdeal facet_ideal(const SimplicialComplex& complex);

}  // namespace facetbetti

#endif
