#ifndef FLAGCODE_TESTS_FIXTURES_HPP
#define FLAGCODE_TESTS_FIXTURES_HPP

#include <algorithm>
#include <vector>

#include "flagcode/flags.hpp"
#include "flagcode/random.hpp"

namespace fixtures {

using namespace flagcode;

inline Matrix unit_rows(const FieldPtr& f, std::size_t n, std::initializer_list<std::vector<std::size_t>> rows) {
    Matrix m(f, rows.size(), n);
    std::size_t r = 0;
    for (const auto& support : rows) {
        for (std::size_t c : support) m(r, c) = 1;
        ++r;
    }
    return m;
}

/// Type (1,3) code on F_q^5 whose projected codes have maximum distance
/// while F^1 and F^3 share their line:
///   F^1 = (<e1>, <e1,e2,e3>), F^2 = (<e4>, <e1,e4,e5>), F^3 = (<e1>, <e1,e2+e4,e3+e5>).
inline FlagCode shared_line_code(const FieldPtr& f) {
    FlagType t(5, {1, 3});
    return FlagCode::from_generators(t, {unit_rows(f, 5, {{0}, {1}, {2}}),
                                         unit_rows(f, 5, {{3}, {0}, {4}}),
                                         unit_rows(f, 5, {{0}, {1, 3}, {2, 4}})});
}

/// Random code of distinct flags; size in [lo, hi].
inline FlagCode random_code(const FieldPtr& f, const FlagType& type, std::size_t lo, std::size_t hi, SplitMix64& rng) {
    const std::size_t target = lo + rng.uniform(hi - lo + 1);
    std::vector<Flag> flags;
    for (int attempts = 0; flags.size() < target && attempts < 1000; ++attempts) {
        Flag fl = random_flag(f, type, rng);
        if (std::find(flags.begin(), flags.end(), fl) == flags.end()) flags.push_back(std::move(fl));
    }
    return FlagCode(type, std::move(flags));
}

/// Random type on F_q^n: a nonempty subset of {1, ..., n-1}.
inline FlagType random_type(std::size_t n, SplitMix64& rng) {
    std::vector<std::size_t> dims;
    while (dims.empty())
        for (std::size_t t = 1; t < n; ++t)
            if (rng.bernoulli(0.5)) dims.push_back(t);
    return FlagType(n, dims);
}

/// Every stuttering flag X with X_i inside F_i, X_i inside X_{i+1} and
/// sum(t_i - dim X_i) <= max_error, built from the last coordinate down.
inline std::vector<StutteringFlag> stuttering_subflags(const Flag& sent, std::size_t max_error) {
    const FlagType& t = sent.type();
    const std::size_t r = t.length();
    std::vector<std::vector<Subspace>> within(r);
    for (std::size_t i = 0; i < r; ++i) within[i] = enumerate_subspaces_within(sent[i]);

    std::vector<StutteringFlag> out;
    std::vector<Subspace> x(r, Subspace::zero(sent.field(), t.ambient()));
    auto rec = [&](auto&& self, std::size_t i, std::size_t budget) -> void {
        for (const Subspace& s : within[i]) {
            const std::size_t e = t.dim(i) - s.dim();
            if (e > budget) continue;
            if (i + 1 < r && !x[i + 1].contains(s)) continue;
            x[i] = s;
            if (i == 0)
                out.emplace_back(t, x);
            else
                self(self, i - 1, budget - e);
        }
    };
    rec(rec, r - 1, max_error);
    return out;
}

}  // namespace fixtures

#endif  // FLAGCODE_TESTS_FIXTURES_HPP
