#ifndef FLAGCODE_CODES_HPP
#define FLAGCODE_CODES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "flagcode/flags.hpp"
#include "flagcode/spreads.hpp"

namespace flagcode {

/// W_i = [S_i; S_{i+1}] for i < |S|, W_|S| = [S_|S|; S_1]: 2k x 2k, full rank.
struct WMatrixFamily {
    std::vector<Matrix> matrices;
};

/// Throws NotPlanar unless n = 2k, RankDeficient if some W_i is singular.
WMatrixFamily build_w_family(const Spread& spread);

/**
 * Full flag code {F_{W_i}}: the i-th flag is (rowsp W_i^(1), ..., rowsp W_i^(2k-1)).
 * Size |S| = q^k + 1, distance 2k^2, and its k-projected code is the spread.
 */
FlagCode full_flag_code_from_spread(const Spread& spread);

/// full_flag_code_from_spread(build_spread(field, k, 2k)).
FlagCode construct_full_flag_code(const FieldPtr& field, std::size_t k);

struct ProjectionCheck {
    std::size_t j = 0;
    std::size_t expected_intersection = 0;  ///< 0 for j <= k, 2(j - k) above
    std::size_t min_intersection = 0;
    std::size_t max_intersection = 0;
    std::size_t size = 0;
    bool ok = false;
};

struct ConstructionReport {
    std::size_t k = 0;
    std::size_t code_size = 0;
    std::vector<ProjectionCheck> projections;  ///< j = 1, ..., 2k - 1
    bool ok() const noexcept;
};

/// Checks that C_j is a partial spread for j <= k and equidistant
/// 2(j - k)-intersecting above, every C_j having |C| members. Requires a
/// full-type code on an even-dimensional space (TypeMismatch otherwise).
ConstructionReport verify_projected_structure(const FlagCode& code);

/// Keeps the coordinates whose dimensions appear in type; flags that
/// coincide afterwards collapse into one. Throws TypeNotSubset.
FlagCode puncture(const FlagCode& code, const FlagType& type);

/// Flags (S_i^(t_1), ..., S_i^(t_{r-1}), S_i) over the t_r-spread of F_q^n.
/// Throws NotDivisor unless t_r divides n.
FlagCode divisor_type_code(const FieldPtr& field, const FlagType& type);

struct AdmissibilityVerdict {
    bool admissible = false;
    std::size_t s = 0;                   ///< n / k
    bool special_case = false;           ///< n = 3, k = 1
    std::uint64_t spread_size = 0;       ///< (q^n - 1)/(q^k - 1)
    std::uint64_t next_bound = 0;        ///< partial_spread_bound(q, k + 1, n), when s > 2
    std::string reason;
};

/// Whether an optimum distance full flag code on F_q^n can have a k-spread
/// as k-projected code: only for s = n/k = 2, or the n = 3, k = 1 case.
/// Otherwise the (k+1)-projected code would be a partial spread larger than
/// its bound, and the verdict records both numbers.
AdmissibilityVerdict check_spread_projection_dimension(std::uint64_t q, std::size_t n, std::size_t k);

struct MaximalityReport {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    bool symmetric = false;
    bool loop_free = false;
    std::size_t distance = 0;  ///< edge distance, n^2 / 2
    std::size_t clique_number = 0;
    std::vector<std::vector<std::size_t>> witnesses;  ///< maximum cliques (vertex indices), sampled
    std::vector<SpreadReport> witness_spread_reports;  ///< k-projected code of each witness
    bool all_witnesses_spreads() const noexcept;
};

/// Exact maximum clique in the graph on all full flags of F_q^n (n even)
/// joined at flag distance n^2/2, plus up to max_witnesses maximum cliques
/// whose k-projected codes are checked as spreads. Throws NotPlanar for odd
/// n and TooLarge past kMaxOracleFlags flags.
MaximalityReport maximality_oracle(const FieldPtr& field, std::size_t n, std::size_t max_witnesses = 64);

inline constexpr std::size_t kMaxOracleFlags = 5000;

/// Undirected graph on vertices 0..n-1 given by an adjacency matrix.
class Graph {
public:
    explicit Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}
    std::size_t size() const noexcept { return n_; }
    bool adjacent(std::size_t a, std::size_t b) const noexcept { return adj_[a * n_ + b] != 0; }
    void set(std::size_t a, std::size_t b, bool v) noexcept { adj_[a * n_ + b] = v; }
    std::size_t degree(std::size_t v) const noexcept;

private:
    std::size_t n_;
    std::vector<unsigned char> adj_;
};

/// Branch and bound with greedy-coloring bounds over a degree ordering.
std::size_t max_clique_size(const Graph& g);

/// Up to limit cliques of exactly the given size, each listed once (sorted vertex lists).
std::vector<std::vector<std::size_t>> cliques_of_size(const Graph& g, std::size_t size, std::size_t limit);

}  // namespace flagcode

#endif  // FLAGCODE_CODES_HPP
