#ifndef FLAGCODE_GEOMETRY_HPP
#define FLAGCODE_GEOMETRY_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "flagcode/linalg.hpp"

namespace flagcode {

/// Exhaustive enumerations refuse ambient spaces with more vectors than this.
inline constexpr std::uint64_t kDeskVectorBound = std::uint64_t{1} << 16;

/**
 * @brief A subspace of F_q^n held by its RREF basis.
 *
 * The basis has no zero rows, so dim() == basis().rows() and equality of
 * subspaces is entry-wise equality of bases.
 */
class Subspace {
public:
    /// Row space of m, canonicalized.
    static Subspace from_matrix(const Matrix& m);
    static Subspace zero(FieldPtr field, std::size_t n);
    static Subspace whole(FieldPtr field, std::size_t n);

    const FieldPtr& field() const noexcept { return basis_.field(); }
    std::size_t ambient() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains_vector(std::span<const Elem> v) const;

    /// other is a subspace of *this.
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& rhs) const noexcept { return basis_ == rhs.basis_; }

    /// Total order: by dimension, then lexicographically on basis entries.
    bool operator<(const Subspace& rhs) const noexcept;

private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots);

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const noexcept;
};

std::size_t sum_dim(const Subspace& u, const Subspace& v);
std::size_t intersection_dim(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);

/// d_S(U, V) = dim(U + V) - dim(U ∩ V).
std::size_t subspace_distance(const Subspace& u, const Subspace& v);

/// v is a subspace of u. Throws AmbientMismatch across ambient spaces.
inline bool contains(const Subspace& u, const Subspace& v) { return u.contains(v); }

/// Gaussian binomial [n choose j]_q.
std::uint64_t gaussian_binomial(std::uint64_t q, unsigned n, unsigned j);

/// All j-dimensional subspaces of F_q^n in lexicographic order of their RREF
/// bases. Throws TooLarge if q^n exceeds kDeskVectorBound.
std::vector<Subspace> enumerate_grassmannian(const FieldPtr& field, std::size_t n, std::size_t j);

/// Every subspace of u (all dimensions, zero and u included), by dimension.
std::vector<Subspace> enumerate_subspaces_within(const Subspace& u);

/// All vectors of F_q^n in base-q counting order (first coordinate fastest).
std::vector<std::vector<Elem>> enumerate_vectors(const FieldPtr& field, std::size_t n);

}  // namespace flagcode

#endif  // FLAGCODE_GEOMETRY_HPP
