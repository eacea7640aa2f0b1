#include "flagcode/linalg.hpp"

#include <algorithm>
#include <string>

namespace flagcode {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
    if (!a.field()->same_as(*b.field()))
        throw Error(ErrorCode::DimensionMismatch, "matrices over different fields");
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
    if (cols_ == 0) throw Error(ErrorCode::InvalidArgument, "matrix needs at least one column");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
    if (cols_ == 0) throw Error(ErrorCode::InvalidArgument, "matrix needs at least one column");
    if (data_.size() != rows_ * cols_)
        throw Error(ErrorCode::DimensionMismatch, "entry count does not match shape");
    for (Elem e : data_)
        if (!field_->contains(e)) throw Error(ErrorCode::InvalidArgument, "entry out of field range");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, std::initializer_list<std::initializer_list<Elem>> rows) {
    if (rows.size() == 0) throw Error(ErrorCode::InvalidArgument, "from_rows needs at least one row");
    const std::size_t cols = rows.begin()->size();
    std::vector<Elem> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

bool Matrix::operator==(const Matrix& rhs) const noexcept {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_ && field_->same_as(*rhs.field_);
}

RrefResult rref(const Matrix& m) {
    const Field& f = *m.field();
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < r.rows() && r(piv, col) == 0) ++piv;
        if (piv == r.rows()) continue;
        if (piv != lead) std::swap_ranges(r.row(piv).begin(), r.row(piv).end(), r.row(lead).begin());

        const Elem scale = f.inv(r(lead, col));
        for (Elem& e : r.row(lead)) e = f.mul(e, scale);

        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead) continue;
            const Elem c = r(i, col);
            if (c == 0) continue;
            auto dst = r.row(i);
            auto src = r.row(lead);
            for (std::size_t j = col; j < r.cols(); ++j) dst[j] = f.sub(dst[j], f.mul(c, src[j]));
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix row_prefix(const Matrix& m, std::size_t j) {
    if (j < 1 || j > m.rows())
        throw Error(ErrorCode::IndexOutOfRange,
                    "row prefix " + std::to_string(j) + " of a " + std::to_string(m.rows()) + "-row matrix");
    auto e = m.entries();
    return Matrix(m.field(), j, m.cols(), std::vector<Elem>(e.begin(), e.begin() + j * m.cols()));
}

Matrix stack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "stack: column counts differ");
    require_same_field(a, b);
    std::vector<Elem> data(a.entries().begin(), a.entries().end());
    data.insert(data.end(), b.entries().begin(), b.entries().end());
    return Matrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(data));
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "hconcat: row counts differ");
    require_same_field(a, b);
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::copy(a.row(i).begin(), a.row(i).end(), out.row(i).begin());
        std::copy(b.row(i).begin(), b.row(i).end(), out.row(i).begin() + a.cols());
    }
    return out;
}

std::size_t rank_of_stack(const Matrix& a, const Matrix& b) { return rank(stack(a, b)); }

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "multiply: inner dimensions differ");
    require_same_field(a, b);
    const Field& f = *a.field();
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem c = a(i, k);
            if (c == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(c, b(k, j)));
        }
    return out;
}

Matrix power(const Matrix& m, std::uint64_t e) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "power of a non-square matrix");
    Matrix result = Matrix::identity(m.field(), m.rows());
    Matrix base = m;
    while (e > 0) {
        if (e & 1) result = multiply(result, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return result;
}

std::uint64_t multiplicative_order(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "order of a non-square matrix");
    if (rank(m) != m.rows()) throw Error(ErrorCode::RankDeficient, "singular matrix has no order");
    const Matrix id = Matrix::identity(m.field(), m.rows());
    Matrix cur = m;
    std::uint64_t e = 1;
    // element orders in GL(n, q) never exceed q^n - 1 < kMaxFieldOrder at desk scale
    while (!(cur == id)) {
        cur = multiply(cur, m);
        if (++e > kMaxFieldOrder * 2) throw Error(ErrorCode::TooLarge, "matrix order search exceeded bound");
    }
    return e;
}

bool in_row_space(const Matrix& basis, std::span<const std::size_t> pivots, std::span<const Elem> v) {
    const Field& f = *basis.field();
    std::vector<Elem> r(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Elem c = r[pivots[i]];
        if (c == 0) continue;
        auto row = basis.row(i);
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = f.sub(r[j], f.mul(c, row[j]));
    }
    return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
}

}  // namespace flagcode
