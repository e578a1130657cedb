#ifndef FACETBETTI_HOMOLOGY_HPP
#define FACETBETTI_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "facetbetti/errors.hpp"

namespace facetbetti {

/// Coefficient field: the rationals or a prime field GF(p).
class Field {
  public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);
    /// Accepts "Q", "q", "GF2", "GF(3)", "gf5", "2", ...
    static Field parse(const std::string& text);

    bool is_rational() const { return p_ == 0; }
    /// 0 for ℚ.
    std::uint32_t characteristic() const { return p_; }
    std::string to_string() const;

    bool operator==(const Field&) const = default;

  private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

/// Default cap on the number of faces enumerated for one homology computation.
inline constexpr std::size_t kDefaultMaxFaces = std::size_t{1} << 22;

using Face = std::vector<std::uint32_t>;

/**
 * A finite simplicial complex over vertices 0..vertex_count-1, given by a
 * generating set of faces (closure under subsets is implicit).
 *
 * The void complex has no faces at all; the empty complex has only the
 * empty face.
 */
class AbstractComplex {
  public:
    AbstractComplex(std::size_t vertex_count, std::vector<Face> facets);

    static AbstractComplex void_complex() { return AbstractComplex(0, {}); }
    static AbstractComplex empty_complex() { return AbstractComplex(0, {Face{}}); }

    std::size_t vertex_count() const { return vertex_count_; }
    /// Sorted, deduplicated, inclusion-maximal.
    const std::vector<Face>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    bool is_empty() const { return facets_.size() == 1 && facets_.front().empty(); }
    /// -1 for the empty complex, -2 for the void complex.
    int dimension() const;

    /// New apex vertex joined to every facet.
    AbstractComplex cone() const;

    /// All faces grouped by dimension + 1 (index 0 holds the empty face).
    /// Throws ResourceError past `max_faces`.
    std::vector<std::vector<Face>> faces_by_dimension(std::size_t max_faces = kDefaultMaxFaces) const;

  private:
    std::size_t vertex_count_;
    std::vector<Face> facets_;
};

/// dim H̃_d(K; field) for every degree d with a nonzero value.
struct HomologyProfile {
    Field field = Field::prime(2);
    std::map<int, std::int64_t> dims;

    std::int64_t dim(int degree) const {
        auto it = dims.find(degree);
        return it == dims.end() ? 0 : it->second;
    }
    bool acyclic() const { return dims.empty(); }
};

HomologyProfile reduced_homology(const AbstractComplex& complex, const Field& field,
                                 std::size_t max_faces = kDefaultMaxFaces);

/// Rank of an integer matrix (rows of (column, value) pairs) over `field`.
std::size_t matrix_rank(const std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>& rows,
                        const Field& field);

/// A finite poset given by its strict order relation.
class FinitePoset {
  public:
    explicit FinitePoset(std::size_t size) : size_(size), less_(size * size, false) {}

    std::size_t size() const { return size_; }
    bool less(std::size_t a, std::size_t b) const { return less_[a * size_ + b]; }
    void set_less(std::size_t a, std::size_t b) { less_[a * size_ + b] = true; }

  private:
    std::size_t size_;
    std::vector<bool> less_;
};

/// The complex of chains of P, generated by its maximal chains. The empty
/// poset yields the empty complex.
AbstractComplex order_complex(const FinitePoset& poset, std::size_t max_faces = kDefaultMaxFaces);

}  // namespace facetbetti

#endif
