#ifndef FLAGCODE_FLAGS_HPP
#define FLAGCODE_FLAGS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flagcode/geometry.hpp"
#include "flagcode/random.hpp"

namespace flagcode {

/// Dimension vector (t_1, ..., t_r) with 0 < t_1 < ... < t_r < n.
class FlagType {
public:
    FlagType(std::size_t n, std::vector<std::size_t> dims);

    /// (1, 2, ..., n - 1).
    static FlagType full(std::size_t n);

    /// Parses "1,2,3".
    static FlagType parse(std::size_t n, const std::string& text);

    std::size_t ambient() const noexcept { return n_; }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    std::size_t length() const noexcept { return dims_.size(); }
    std::size_t dim(std::size_t i) const noexcept { return dims_[i]; }
    bool is_full() const noexcept { return dims_.size() + 1 == n_; }

    std::string to_string() const;

    bool operator==(const FlagType&) const = default;

private:
    std::size_t n_;
    std::vector<std::size_t> dims_;
};

/// Strictly nested subspaces F_1 ⊊ ... ⊊ F_r with dim F_i = t_i.
/// Coordinates are stored 0-based: subspaces()[i - 1] is F_i.
class Flag {
public:
    Flag(FlagType type, std::vector<Subspace> subspaces);

    /// F_i = rowsp of the first t_i rows of the generator.
    static Flag from_generator(const FlagType& type, const Matrix& generator);

    const FlagType& type() const noexcept { return type_; }
    const std::vector<Subspace>& subspaces() const noexcept { return subspaces_; }
    const Subspace& operator[](std::size_t i) const noexcept { return subspaces_[i]; }
    const FieldPtr& field() const noexcept { return subspaces_.front().field(); }

    bool operator==(const Flag& rhs) const noexcept { return subspaces_ == rhs.subspaces_; }
    bool operator<(const Flag& rhs) const noexcept;

private:
    FlagType type_;
    std::vector<Subspace> subspaces_;
};

/// What a receiver holds after an erasure channel: X_i ⊆ X_{i+1},
/// dim X_i <= t_i, zero subspaces allowed. type() is the sent code's type.
class StutteringFlag {
public:
    StutteringFlag(FlagType type, std::vector<Subspace> subspaces);

    const FlagType& type() const noexcept { return type_; }
    const std::vector<Subspace>& subspaces() const noexcept { return subspaces_; }
    const Subspace& operator[](std::size_t i) const noexcept { return subspaces_[i]; }

    bool operator==(const StutteringFlag& rhs) const noexcept { return subspaces_ == rhs.subspaces_; }

private:
    FlagType type_;
    std::vector<Subspace> subspaces_;
};

/// Sum of coordinate-wise subspace distances. Throws TypeMismatch.
std::size_t flag_distance(const Flag& a, const Flag& b);

/// Extended subspace distance between a flag and a received stuttering flag;
/// requires equal ambient n and length r.
std::size_t flag_distance(const Flag& a, const StutteringFlag& x);

/// min{2t, 2(n - t)}.
std::size_t max_subspace_distance(std::size_t n, std::size_t t) noexcept;

/// 2 * (sum_{t_i <= n/2} t_i + sum_{t_i > n/2} (n - t_i)); n^2/2 or
/// (n^2 - 1)/2 for full flags.
std::size_t max_flag_distance_bound(const FlagType& type) noexcept;

/// Basis whose row prefixes of lengths t_1, ..., t_r span F_1, ..., F_r.
Matrix adapted_generator(const Flag& flag);

/// Flag with uniformly random generator (a random invertible n x n matrix).
Flag random_flag(const FieldPtr& field, const FlagType& type, SplitMix64& rng);

/// Every full flag of F_q^n, ordered lexicographically along the chain.
/// Throws TooLarge past kDeskVectorBound vectors.
std::vector<Flag> enumerate_full_flags(const FieldPtr& field, std::size_t n);

enum class Provenance { Adhoc, FullFromSpread, Punctured, DivisorType };

const char* to_string(Provenance p) noexcept;
std::optional<Provenance> provenance_from_string(const std::string& s) noexcept;

/**
 * @brief A flag code: at least two distinct flags of one type.
 *
 * Each flag carries a generator matrix with t_r rows whose prefixes span
 * its subspaces. Constructions store the matrices they were built from
 * (the W_i for the full flag construction); codes assembled from bare
 * flags get an adapted basis. Flags keep insertion order.
 */
class FlagCode {
public:
    FlagCode(FlagType type, std::vector<Flag> flags, Provenance provenance = Provenance::Adhoc,
             std::string provenance_detail = {});

    /// Flags derived from the generators, which are kept verbatim.
    static FlagCode from_generators(FlagType type, std::vector<Matrix> generators,
                                    Provenance provenance = Provenance::Adhoc,
                                    std::string provenance_detail = {});

    const FieldPtr& field() const noexcept { return flags_.front().field(); }
    std::size_t ambient() const noexcept { return type_.ambient(); }
    const FlagType& type() const noexcept { return type_; }
    std::size_t size() const noexcept { return flags_.size(); }
    const std::vector<Flag>& flags() const noexcept { return flags_; }
    const Flag& flag(std::size_t i) const;
    const std::vector<Matrix>& generators() const noexcept { return generators_; }
    const Matrix& generator(std::size_t i) const;
    Provenance provenance() const noexcept { return provenance_; }
    const std::string& provenance_detail() const noexcept { return provenance_detail_; }

    std::optional<std::size_t> find(const Flag& f) const;

    /// Same type and identical flags in the same order.
    bool operator==(const FlagCode& rhs) const noexcept { return type_ == rhs.type_ && flags_ == rhs.flags_; }

private:
    FlagCode(FlagType type, std::vector<Flag> flags, std::vector<Matrix> generators, Provenance provenance,
             std::string provenance_detail);

    FlagType type_;
    std::vector<Flag> flags_;
    std::vector<Matrix> generators_;
    Provenance provenance_;
    std::string provenance_detail_;
};

/// The i-projected code {F_i : F in C}, 1 <= i <= r, duplicates collapsed,
/// first-occurrence order.
std::vector<Subspace> projected_code(const FlagCode& code, std::size_t i);

/// Minimum pairwise subspace distance of a constant dimension code; 0 for a
/// single codeword.
std::size_t subspace_code_distance(const std::vector<Subspace>& code);

/// Every projected code has |C| elements. Throws CodeTooSmall for |C| < 2.
bool is_disjoint(const FlagCode& code);

/// Exhaustive all-pairs minimum flag distance.
std::size_t min_flag_distance(const FlagCode& code);

struct OptimumReport {
    std::size_t size = 0;
    std::size_t min_distance = 0;
    std::size_t bound = 0;
    bool optimum = false;  ///< min_distance == bound
    bool disjoint = false;
    std::vector<std::size_t> projected_sizes;
    std::vector<std::size_t> projected_distances;
    std::vector<std::size_t> projected_max;  ///< min{2t_i, 2(n - t_i)}
    /// disjoint and every projected code at its maximum distance
    bool characterization = false;
    bool verdicts_agree() const noexcept { return optimum == characterization; }
};

/// Direct verdict from the exhaustive minimum distance plus the
/// disjoint/max-projected-distance characterization for cross-checking.
OptimumReport is_optimum_distance(const FlagCode& code);

}  // namespace flagcode

#endif  // FLAGCODE_FLAGS_HPP
