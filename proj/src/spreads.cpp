#include "flagcode/spreads.hpp"

#include "flagcode/companion.hpp"

namespace flagcode {

namespace {

std::uint64_t checked_pow(std::uint64_t q, std::size_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        r *= q;
        if (r > cap) throw Error(ErrorCode::TooLarge, "q^" + std::to_string(e) + " exceeds the supported range");
    }
    return r;
}

}  // namespace

Spread::Spread(FieldPtr field, std::size_t n, std::size_t k, std::vector<Matrix> generators)
    : field_(std::move(field)), n_(n), k_(k), generators_(std::move(generators)) {
    members_.reserve(generators_.size());
    for (const Matrix& g : generators_) {
        if (g.cols() != n_) throw Error(ErrorCode::DimensionMismatch, "spread generator width differs from n");
        members_.push_back(Subspace::from_matrix(g));
    }
}

Spread Spread::with_generator(std::size_t i, Matrix generator) const {
    if (i >= generators_.size()) throw Error(ErrorCode::IndexOutOfRange, "spread member " + std::to_string(i));
    auto gens = generators_;
    gens[i] = std::move(generator);
    return Spread(field_, n_, k_, std::move(gens));
}

Spread build_spread(const FieldPtr& field, std::size_t k, std::size_t n) {
    if (k == 0 || k >= n || n % k != 0)
        throw Error(ErrorCode::NotDivisor, std::to_string(k) + " is not a proper divisor of " + std::to_string(n));
    checked_pow(field->q(), n, kMaxFieldOrder);
    const std::uint64_t qk = checked_pow(field->q(), k, kMaxFieldOrder);
    const std::size_t s = n / k;

    const Matrix m = companion_matrix(field, poly::default_primitive(*field, static_cast<unsigned>(k)));
    // block choices in member order: M^1, ..., M^(q^k - 1) = I, then 0
    std::vector<Matrix> blocks;
    blocks.reserve(qk);
    Matrix cur = m;
    for (std::uint64_t e = 1; e < qk; ++e) {
        blocks.push_back(cur);
        cur = multiply(cur, m);
    }
    blocks.emplace_back(field, k, k);
    const Matrix id = Matrix::identity(field, k);
    const Matrix zero(field, k, k);

    std::vector<Matrix> gens;
    for (std::size_t lead = 0; lead < s; ++lead) {
        const std::size_t tail = s - 1 - lead;
        std::vector<std::size_t> choice(tail, 0);
        while (true) {
            Matrix g = lead == 0 ? id : zero;
            for (std::size_t b = 1; b < s; ++b) {
                if (b < lead)
                    g = hconcat(g, zero);
                else if (b == lead)
                    g = hconcat(g, id);
                else
                    g = hconcat(g, blocks[choice[b - lead - 1]]);
            }
            gens.push_back(std::move(g));

            // odometer, last block fastest
            std::size_t pos = tail;
            while (pos > 0 && ++choice[pos - 1] == blocks.size()) choice[--pos] = 0;
            if (pos == 0) break;
        }
    }
    return Spread(field, n, k, std::move(gens));
}

std::string SpreadViolation::describe() const {
    switch (kind) {
        case Kind::WrongDimension: return "member " + std::to_string(first) + " has the wrong dimension";
        case Kind::NontrivialIntersection:
            return "members " + std::to_string(first) + " and " + std::to_string(second) + " intersect nontrivially";
        case Kind::DeficientSum:
            return "members " + std::to_string(first) + " and " + std::to_string(second) +
                   " do not span the whole space";
        case Kind::UncoveredVector: return "vector " + std::to_string(first) + " lies in no member";
        case Kind::MultiplyCoveredVector: return "vector " + std::to_string(first) + " lies in several members";
    }
    return "unknown violation";
}

std::vector<std::size_t> cover_counts(const Spread& spread) {
    const auto vectors = enumerate_vectors(spread.field(), spread.n());
    std::vector<std::size_t> counts(vectors.size(), 0);
    for (std::size_t v = 0; v < vectors.size(); ++v)
        for (const Subspace& s : spread.members())
            if (s.contains_vector(vectors[v])) ++counts[v];
    return counts;
}

SpreadReport verify_spread(const Spread& spread) {
    SpreadReport r;
    r.expected_size = partial_spread_bound(spread.field()->q(), spread.k(), spread.n());
    r.actual_size = spread.size();
    using Kind = SpreadViolation::Kind;

    const auto& mem = spread.members();
    for (std::size_t i = 0; i < mem.size(); ++i)
        if (mem[i].dim() != spread.k()) r.violations.push_back({Kind::WrongDimension, i, 0});
    for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i + 1; j < mem.size(); ++j) {
            const std::size_t sd = sum_dim(mem[i], mem[j]);
            if (mem[i].dim() + mem[j].dim() != sd) r.violations.push_back({Kind::NontrivialIntersection, i, j});
            if (spread.is_planar() && sd != spread.n()) r.violations.push_back({Kind::DeficientSum, i, j});
        }

    std::uint64_t vectors = 1;
    for (std::size_t i = 0; i < spread.n() && vectors <= kDeskVectorBound; ++i) vectors *= spread.field()->q();
    if (vectors <= kDeskVectorBound) {
        r.coverage_checked = true;
        const auto counts = cover_counts(spread);
        for (std::size_t v = 1; v < counts.size(); ++v) {
            if (counts[v] == 0) r.violations.push_back({Kind::UncoveredVector, v, 0});
            if (counts[v] > 1) r.violations.push_back({Kind::MultiplyCoveredVector, v, 0});
        }
    }
    return r;
}

std::uint64_t partial_spread_bound(std::uint64_t q, std::size_t k, std::size_t n) {
    if (q < 2 || k == 0 || k > n) throw Error(ErrorCode::InvalidArgument, "need q >= 2 and 1 <= k <= n");
    const std::uint64_t cap = UINT64_MAX / q;
    const std::uint64_t qn = checked_pow(q, n, cap);
    const std::uint64_t qk = checked_pow(q, k, cap);
    return (qn - 1) / (qk - 1);
}

Spread spread_from_code(const FlagCode& code) {
    if (code.type().length() != 1)
        throw Error(ErrorCode::TypeMismatch, "a spread file holds a type-(k) code");
    return Spread(code.field(), code.ambient(), code.type().dim(0), code.generators());
}

}  // namespace flagcode
