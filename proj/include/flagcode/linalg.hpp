#ifndef FLAGCODE_LINALG_HPP
#define FLAGCODE_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "flagcode/gf.hpp"

namespace flagcode {

/// Dense row-major matrix over a finite field. A matrix with zero rows is
/// legal and is the basis of the zero subspace.
class Matrix {
public:
    /// Zero matrix. Requires cols >= 1.
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Matrix identity(FieldPtr field, std::size_t n);
    static Matrix from_rows(FieldPtr field, std::initializer_list<std::initializer_list<Elem>> rows);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::span<const Elem> entries() const noexcept { return data_; }

    Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

    bool is_zero() const noexcept;

    bool operator==(const Matrix& rhs) const noexcept;

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

struct RrefResult {
    Matrix reduced;  ///< same shape as the input, zero rows last
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// First j rows, 1 <= j <= rows. Throws IndexOutOfRange otherwise.
Matrix row_prefix(const Matrix& m, std::size_t j);

/// a above b. Throws DimensionMismatch for differing column counts or fields.
Matrix stack(const Matrix& a, const Matrix& b);

/// [a | b]. Throws DimensionMismatch for differing row counts or fields.
Matrix hconcat(const Matrix& a, const Matrix& b);

/// Dimension of rowsp(a) + rowsp(b).
std::size_t rank_of_stack(const Matrix& a, const Matrix& b);

Matrix multiply(const Matrix& a, const Matrix& b);

Matrix power(const Matrix& m, std::uint64_t e);

/// Smallest e >= 1 with m^e = I. Throws RankDeficient for singular m.
std::uint64_t multiplicative_order(const Matrix& m);

/// Membership test against an RREF basis without zero rows: v is in the row
/// space iff v - sum_i v[pivot_i] * row_i vanishes.
bool in_row_space(const Matrix& rref_basis, std::span<const std::size_t> pivots, std::span<const Elem> v);

}  // namespace flagcode

#endif  // FLAGCODE_LINALG_HPP
