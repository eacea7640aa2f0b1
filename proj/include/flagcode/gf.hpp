#ifndef FLAGCODE_GF_HPP
#define FLAGCODE_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "flagcode/error.hpp"

namespace flagcode {

/// A field element in polynomial-basis encoding: base-p digit i is the
/// coefficient of x^i. Always interpreted relative to a Field.
using Elem = std::uint32_t;

/// Polynomial over some field, coefficients ascending (index i = coefficient of x^i).
using Poly = std::vector<Elem>;

/// Largest field order handled by the table-driven arithmetic.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

/**
 * @brief GF(p^m) with a primitive modulus.
 *
 * Multiplication goes through log/antilog tables indexed by powers of the
 * class of x, which generates the multiplicative group because the modulus
 * is primitive. For m = 1 the modulus is x - g with g a primitive root, so
 * the "x" of the tables is g and arithmetic reduces to plain mod-p.
 *
 * Instances are immutable and shared through FieldPtr.
 */
class Field {
public:
    /// Builds GF(p^m). Without a modulus the smallest primitive monic
    /// polynomial of degree m is used, polynomials being ordered by the
    /// integer sum(c_i * p^i).
    static std::shared_ptr<const Field> create(std::uint32_t p, std::uint32_t m,
                                               std::optional<Poly> modulus = std::nullopt);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }
    const Poly& modulus() const noexcept { return modulus_; }

    /// The class of x, a generator of the multiplicative group.
    Elem primitive_element() const noexcept { return exp_[1 % (q_ - 1)]; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    bool contains(std::uint64_t value) const noexcept { return value < q_; }

    Elem add(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    /// Throws DivisionByZero for a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    /// Image of an integer under Z -> F_p -> F_q.
    Elem from_integer(std::int64_t v) const noexcept;

    /// Multiplicative order of a nonzero element.
    std::uint64_t order(Elem a) const;

    /// Same p, m and modulus.
    bool same_as(const Field& other) const noexcept {
        return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
    }

private:
    Field(std::uint32_t p, std::uint32_t m, Poly modulus);

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    Poly modulus_;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Value type pairing an element with its field; mixing fields throws FieldMismatch.
class FieldElement {
public:
    FieldElement(FieldPtr field, std::uint64_t value);

    const FieldPtr& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement inverse() const;

    bool operator==(const FieldElement& rhs) const noexcept {
        return value_ == rhs.value_ && field_->same_as(*rhs.field_);
    }

private:
    const Field& checked(const FieldElement& rhs) const;

    FieldPtr field_;
    Elem value_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

namespace poly {

/// Degree of f after trimming; -1 for the zero polynomial.
int degree(std::span<const Elem> f) noexcept;

void trim(Poly& f);

Poly mul(const Field& field, std::span<const Elem> a, std::span<const Elem> b);

/// Remainder of a modulo a monic-or-not nonzero divisor.
Poly mod(const Field& field, std::span<const Elem> a, std::span<const Elem> divisor);

Poly mulmod(const Field& field, std::span<const Elem> a, std::span<const Elem> b,
            std::span<const Elem> modulus);

/// x^e mod f.
Poly x_pow_mod(const Field& field, std::uint64_t e, std::span<const Elem> modulus);

/// Irreducibility by trial division with every monic polynomial of degree
/// at most deg(f)/2.
bool is_irreducible(const Field& field, std::span<const Elem> f);

/// Irreducible and x has multiplicative order q^deg(f) - 1 modulo f.
/// Requires q^deg(f) <= kMaxFieldOrder.
bool is_primitive(const Field& field, std::span<const Elem> f);

/// Smallest primitive monic polynomial of the given degree over the field,
/// ordered by the integer sum(c_i * q^i) over the low coefficients.
Poly default_primitive(const Field& field, unsigned degree);

}  // namespace poly

}  // namespace flagcode

#endif  // FLAGCODE_GF_HPP
