#ifndef FLAGCODE_SPREADS_HPP
#define FLAGCODE_SPREADS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "flagcode/flags.hpp"

namespace flagcode {

/**
 * @brief A set of k-dimensional subspaces of F_q^n with their generators.
 *
 * Generators are kept exactly as constructed (not canonicalized): the flag
 * constructions read their rows in order. members[i] == rowsp(generators[i]).
 * A Spread value is not validated on construction; use verify_spread.
 */
class Spread {
public:
    Spread(FieldPtr field, std::size_t n, std::size_t k, std::vector<Matrix> generators);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return members_.size(); }
    const std::vector<Subspace>& members() const noexcept { return members_; }
    const std::vector<Matrix>& generators() const noexcept { return generators_; }
    bool is_planar() const noexcept { return n_ == 2 * k_; }

    /// Copy with member i replaced (used to build deliberately broken spreads).
    Spread with_generator(std::size_t i, Matrix generator) const;

private:
    FieldPtr field_;
    std::size_t n_;
    std::size_t k_;
    std::vector<Matrix> generators_;
    std::vector<Subspace> members_;
};

/**
 * @brief Desarguesian k-spread of F_q^n for k | n.
 *
 * With s = n/k and M the companion matrix of the default primitive
 * polynomial of degree k over F_q, the generators are the block rows
 * [B_1 | ... | B_s] whose first nonzero block is I_k and whose later blocks
 * run through M, M^2, ..., M^(q^k - 1) = I_k, then 0 (first later block
 * slowest). For n = 2k this is [I|M^i] for i = 1..q^k - 1, then [I|0],
 * then [0|I].
 *
 * Throws NotDivisor if k does not divide n (or k >= n), TooLarge past
 * kMaxFieldOrder.
 */
Spread build_spread(const FieldPtr& field, std::size_t k, std::size_t n);

struct SpreadViolation {
    enum class Kind { WrongDimension, NontrivialIntersection, DeficientSum, UncoveredVector, MultiplyCoveredVector };
    Kind kind;
    std::size_t first;   ///< member index (or vector index for coverage)
    std::size_t second;  ///< member index, unused for dimension/coverage
    std::string describe() const;
};

struct SpreadReport {
    std::uint64_t expected_size = 0;
    std::size_t actual_size = 0;
    bool coverage_checked = false;  ///< exhaustive vector coverage ran (desk scale)
    std::vector<SpreadViolation> violations;
    bool ok() const noexcept { return actual_size == expected_size && violations.empty(); }
};

/// Cardinality, pairwise trivial intersections, pairwise full sums for
/// planar spreads, and (when q^n <= kDeskVectorBound) that every nonzero
/// vector lies in exactly one member.
SpreadReport verify_spread(const Spread& spread);

/// How many members contain each vector of F_q^n, in enumerate_vectors order.
std::vector<std::size_t> cover_counts(const Spread& spread);

/// floor((q^n - 1) / (q^k - 1)), the partial spread size bound.
std::uint64_t partial_spread_bound(std::uint64_t q, std::size_t k, std::size_t n);

/// Interprets a type-(k) flag code as a set of k-subspaces.
Spread spread_from_code(const FlagCode& code);

}  // namespace flagcode

#endif  // FLAGCODE_SPREADS_HPP
