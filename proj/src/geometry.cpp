#include "flagcode/geometry.hpp"

#include <algorithm>

namespace flagcode {

namespace {

void require_compatible(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient())
        throw Error(ErrorCode::AmbientMismatch, "subspaces live in different ambient spaces");
    if (!u.field()->same_as(*v.field())) throw Error(ErrorCode::FieldMismatch, "subspaces over different fields");
}

std::uint64_t vector_count(std::uint64_t q, std::size_t n) {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < n; ++i) {
        c *= q;
        if (c > kDeskVectorBound) return kDeskVectorBound + 1;
    }
    return c;
}

}  // namespace

Subspace::Subspace(Matrix basis, std::vector<std::size_t> pivots)
    : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::from_matrix(const Matrix& m) {
    auto r = rref(m);
    if (r.rank == m.rows()) return Subspace(std::move(r.reduced), std::move(r.pivots));
    auto e = r.reduced.entries();
    Matrix basis(m.field(), r.rank, m.cols(), std::vector<Elem>(e.begin(), e.begin() + r.rank * m.cols()));
    return Subspace(std::move(basis), std::move(r.pivots));
}

Subspace Subspace::zero(FieldPtr field, std::size_t n) { return Subspace(Matrix(std::move(field), 0, n), {}); }

Subspace Subspace::whole(FieldPtr field, std::size_t n) {
    std::vector<std::size_t> piv(n);
    for (std::size_t i = 0; i < n; ++i) piv[i] = i;
    return Subspace(Matrix::identity(std::move(field), n), std::move(piv));
}

bool Subspace::contains_vector(std::span<const Elem> v) const {
    if (v.size() != ambient()) throw Error(ErrorCode::AmbientMismatch, "vector length differs from ambient");
    return in_row_space(basis_, pivots_, v);
}

bool Subspace::contains(const Subspace& other) const {
    require_compatible(*this, other);
    if (other.dim() > dim()) return false;
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!in_row_space(basis_, pivots_, other.basis_.row(i))) return false;
    return true;
}

bool Subspace::operator<(const Subspace& rhs) const noexcept {
    if (dim() != rhs.dim()) return dim() < rhs.dim();
    if (ambient() != rhs.ambient()) return ambient() < rhs.ambient();
    auto a = basis_.entries();
    auto b = rhs.basis_.entries();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t SubspaceHash::operator()(const Subspace& s) const noexcept {
    std::size_t h = s.ambient() * 0x9e3779b97f4a7c15ULL;
    for (Elem e : s.basis().entries()) h = (h ^ e) * 0x100000001b3ULL;
    return h;
}

std::size_t sum_dim(const Subspace& u, const Subspace& v) {
    require_compatible(u, v);
    return rank_of_stack(u.basis(), v.basis());
}

std::size_t intersection_dim(const Subspace& u, const Subspace& v) { return u.dim() + v.dim() - sum_dim(u, v); }

Subspace sum(const Subspace& u, const Subspace& v) {
    require_compatible(u, v);
    return Subspace::from_matrix(stack(u.basis(), v.basis()));
}

std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
    return 2 * sum_dim(u, v) - u.dim() - v.dim();
}

std::uint64_t gaussian_binomial(std::uint64_t q, unsigned n, unsigned j) {
    if (j > n) return 0;
    std::uint64_t num = 1, den = 1;
    for (unsigned i = 0; i < j; ++i) {
        std::uint64_t a = 1, b = 1;
        for (unsigned t = 0; t < n - i; ++t) a *= q;
        for (unsigned t = 0; t < i + 1; ++t) b *= q;
        num *= a - 1;
        den *= b - 1;
    }
    return num / den;
}

std::vector<Subspace> enumerate_grassmannian(const FieldPtr& field, std::size_t n, std::size_t j) {
    if (n == 0 || j > n) throw Error(ErrorCode::InvalidArgument, "need 0 <= j <= n, n >= 1");
    const std::uint64_t q = field->q();
    if (vector_count(q, n) > kDeskVectorBound) throw Error(ErrorCode::TooLarge, "ambient space too large to enumerate");

    std::vector<Subspace> out;
    if (j == 0) {
        out.push_back(Subspace::zero(field, n));
        return out;
    }
    // walk all pivot sets; every non-pivot entry right of a pivot is free
    std::vector<std::size_t> piv(j);
    for (std::size_t i = 0; i < j; ++i) piv[i] = i;
    while (true) {
        std::vector<std::pair<std::size_t, std::size_t>> free_slots;
        for (std::size_t r = 0; r < j; ++r)
            for (std::size_t c = piv[r] + 1; c < n; ++c)
                if (!std::binary_search(piv.begin(), piv.end(), c)) free_slots.emplace_back(r, c);

        std::vector<Elem> digits(free_slots.size(), 0);
        while (true) {
            Matrix m(field, j, n);
            for (std::size_t r = 0; r < j; ++r) m(r, piv[r]) = 1;
            for (std::size_t s = 0; s < free_slots.size(); ++s) m(free_slots[s].first, free_slots[s].second) = digits[s];
            out.push_back(Subspace::from_matrix(m));

            std::size_t s = 0;
            while (s < digits.size() && ++digits[s] == q) digits[s++] = 0;
            if (s == digits.size()) break;
        }

        // next combination
        std::size_t i = j;
        while (i > 0 && piv[i - 1] == n - j + (i - 1)) --i;
        if (i == 0) break;
        ++piv[i - 1];
        for (std::size_t t = i; t < j; ++t) piv[t] = piv[t - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> enumerate_subspaces_within(const Subspace& u) {
    std::vector<Subspace> out;
    const std::size_t d = u.dim();
    out.push_back(Subspace::zero(u.field(), u.ambient()));
    for (std::size_t j = 1; j <= d; ++j) {
        for (const Subspace& coords : enumerate_grassmannian(u.field(), d, j))
            out.push_back(Subspace::from_matrix(multiply(coords.basis(), u.basis())));
    }
    return out;
}

std::vector<std::vector<Elem>> enumerate_vectors(const FieldPtr& field, std::size_t n) {
    const std::uint64_t q = field->q();
    const std::uint64_t count = vector_count(q, n);
    if (count > kDeskVectorBound) throw Error(ErrorCode::TooLarge, "ambient space too large to enumerate");
    std::vector<std::vector<Elem>> out;
    out.reserve(count);
    std::vector<Elem> v(n, 0);
    for (std::uint64_t i = 0; i < count; ++i) {
        out.push_back(v);
        std::size_t s = 0;
        while (s < n && ++v[s] == q) v[s++] = 0;
    }
    return out;
}

}  // namespace flagcode
