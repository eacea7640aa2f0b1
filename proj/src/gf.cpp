#include "flagcode/gf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace flagcode {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NonPrimeP: return "NonPrimeP";
        case ErrorCode::ModulusNotPrimitive: return "ModulusNotPrimitive";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NotPrimitive: return "NotPrimitive";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::AmbientMismatch: return "AmbientMismatch";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::TypeMismatch: return "TypeMismatch";
        case ErrorCode::CodeTooSmall: return "CodeTooSmall";
        case ErrorCode::NotDivisor: return "NotDivisor";
        case ErrorCode::NotPlanar: return "NotPlanar";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::TypeNotSubset: return "TypeNotSubset";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::NotDisjoint: return "NotDisjoint";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DuplicateFlag: return "DuplicateFlag";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

std::uint64_t checked_power(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= base;
        if (r > kMaxFieldOrder) return kMaxFieldOrder + 1;
    }
    return r;
}

void validate_modulus_shape(std::uint32_t p, std::uint32_t m, const Poly& f) {
    if (f.size() != m + 1)
        throw Error(ErrorCode::InvalidArgument,
                    "modulus must have " + std::to_string(m + 1) + " coefficients");
    if (f.back() != 1) throw Error(ErrorCode::InvalidArgument, "modulus must be monic");
    for (Elem c : f)
        if (c >= p) throw Error(ErrorCode::InvalidArgument, "modulus coefficient out of range");
}

std::uint64_t mod_order(std::uint64_t g, std::uint64_t p) {
    if (g % p == 0) return 0;
    std::uint64_t x = g % p, k = 1;
    while (x != 1) {
        x = x * g % p;
        ++k;
    }
    return k;
}

}  // namespace

std::shared_ptr<const Field> Field::create(std::uint32_t p, std::uint32_t m, std::optional<Poly> modulus) {
    if (!is_prime(p)) throw Error(ErrorCode::NonPrimeP, std::to_string(p) + " is not prime");
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be positive");
    if (checked_power(p, m) > kMaxFieldOrder)
        throw Error(ErrorCode::TooLarge, "field order exceeds 2^20");

    if (m == 1) {
        if (modulus) {
            validate_modulus_shape(p, 1, *modulus);
            const std::uint64_t g = (p - (*modulus)[0]) % p;
            if (mod_order(g, p) != p - 1)
                throw Error(ErrorCode::ModulusNotPrimitive, "root of modulus is not a primitive root");
            return std::shared_ptr<const Field>(new Field(p, 1, *modulus));
        }
        for (Elem c0 = 0; c0 < p; ++c0) {
            if (mod_order((p - c0) % p, p) == p - 1)
                return std::shared_ptr<const Field>(new Field(p, 1, Poly{c0, 1}));
        }
        throw Error(ErrorCode::ModulusNotPrimitive, "no primitive root found");  // unreachable for prime p
    }

    auto prime = create(p, 1);
    if (modulus) {
        validate_modulus_shape(p, m, *modulus);
        if (!poly::is_primitive(*prime, *modulus))
            throw Error(ErrorCode::ModulusNotPrimitive, "modulus is not a primitive polynomial");
        return std::shared_ptr<const Field>(new Field(p, m, *modulus));
    }
    return std::shared_ptr<const Field>(new Field(p, m, poly::default_primitive(*prime, m)));
}

Field::Field(std::uint32_t p, std::uint32_t m, Poly modulus)
    : p_(p), m_(m), q_(static_cast<std::uint32_t>(checked_power(p, m))), modulus_(std::move(modulus)) {
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);

    // digits of the current power of x, least significant first
    std::vector<std::uint32_t> digits(m_, 0);
    if (m_ == 1) {
        const std::uint64_t g = (p_ - modulus_[0]) % p_;
        std::uint64_t cur = 1;
        for (std::uint32_t i = 0; i + 1 < q_; ++i) {
            exp_[i] = static_cast<Elem>(cur);
            log_[cur] = i;
            cur = cur * g % p_;
        }
        return;
    }
    digits[0] = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        Elem v = 0;
        for (std::uint32_t d = m_; d-- > 0;) v = v * p_ + digits[d];
        exp_[i] = v;
        log_[v] = i;
        // multiply by x and reduce x^m = -sum c_j x^j
        const std::uint32_t top = digits[m_ - 1];
        for (std::uint32_t d = m_ - 1; d > 0; --d) digits[d] = digits[d - 1];
        digits[0] = 0;
        if (top != 0) {
            for (std::uint32_t d = 0; d < m_; ++d)
                digits[d] = (digits[d] + (p_ - top) * modulus_[d]) % p_;
        }
    }
}

Elem Field::add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) return (a + b) % p_;
    Elem r = 0, scale = 1;
    while (a != 0 || b != 0) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::neg(Elem a) const noexcept {
    if (p_ == 2) return a;
    if (m_ == 1) return (p_ - a) % p_;
    Elem r = 0, scale = 1;
    while (a != 0) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : (q_ - 1) - l];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[l];
}

Elem Field::from_integer(std::int64_t v) const noexcept {
    const std::int64_t p = p_;
    return static_cast<Elem>(((v % p) + p) % p);
}

std::uint64_t Field::order(Elem a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "zero has no multiplicative order");
    const std::uint64_t n = q_ - 1;
    return n / std::gcd<std::uint64_t>(log_[a], n);
}

FieldElement::FieldElement(FieldPtr field, std::uint64_t value) : field_(std::move(field)) {
    if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
    if (!field_->contains(value)) throw Error(ErrorCode::InvalidArgument, "element out of range");
    value_ = static_cast<Elem>(value);
}

const Field& FieldElement::checked(const FieldElement& rhs) const {
    if (!field_->same_as(*rhs.field_)) throw Error(ErrorCode::FieldMismatch, "elements of different fields");
    return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    return {field_, checked(rhs).add(value_, rhs.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    return {field_, checked(rhs).sub(value_, rhs.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    return {field_, checked(rhs).mul(value_, rhs.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    return {field_, checked(rhs).div(value_, rhs.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }

namespace poly {

int degree(std::span<const Elem> f) noexcept {
    for (std::size_t i = f.size(); i-- > 0;)
        if (f[i] != 0) return static_cast<int>(i);
    return -1;
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly mul(const Field& field, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = field.add(r[i + j], field.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

Poly mod(const Field& field, std::span<const Elem> a, std::span<const Elem> divisor) {
    const int dd = degree(divisor);
    if (dd < 0) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    Poly r(a.begin(), a.end());
    trim(r);
    const Elem lead_inv = field.inv(divisor[dd]);
    while (degree(r) >= dd) {
        const int dr = degree(r);
        const Elem c = field.mul(r[dr], lead_inv);
        const int shift = dr - dd;
        for (int i = 0; i <= dd; ++i)
            r[shift + i] = field.sub(r[shift + i], field.mul(c, divisor[i]));
        trim(r);
    }
    return r;
}

Poly mulmod(const Field& field, std::span<const Elem> a, std::span<const Elem> b,
            std::span<const Elem> modulus) {
    return mod(field, mul(field, a, b), modulus);
}

Poly x_pow_mod(const Field& field, std::uint64_t e, std::span<const Elem> modulus) {
    Poly result = mod(field, Poly{1}, modulus);
    Poly base = mod(field, Poly{0, 1}, modulus);
    while (e > 0) {
        if (e & 1) result = mulmod(field, result, base, modulus);
        base = mulmod(field, base, base, modulus);
        e >>= 1;
    }
    return result;
}

bool is_irreducible(const Field& field, std::span<const Elem> f) {
    const int d = degree(f);
    if (d < 1) return false;
    const std::uint64_t q = field.q();
    for (int e = 1; 2 * e <= d; ++e) {
        std::uint64_t count = 1;
        for (int i = 0; i < e; ++i) count *= q;
        Poly g(static_cast<std::size_t>(e) + 1, 0);
        g[e] = 1;
        for (std::uint64_t v = 0; v < count; ++v) {
            std::uint64_t t = v;
            for (int i = 0; i < e; ++i) {
                g[i] = static_cast<Elem>(t % q);
                t /= q;
            }
            if (degree(mod(field, f, g)) < 0) return false;
        }
    }
    return true;
}

bool is_primitive(const Field& field, std::span<const Elem> f) {
    const int d = degree(f);
    if (d < 1 || f[0] == 0) return false;
    if (checked_power(field.q(), static_cast<unsigned>(d)) > kMaxFieldOrder)
        throw Error(ErrorCode::TooLarge, "extension order exceeds 2^20");
    if (!is_irreducible(field, f)) return false;
    const std::uint64_t n = checked_power(field.q(), static_cast<unsigned>(d)) - 1;
    const Poly one{1};
    if (x_pow_mod(field, n, f) != one) return false;
    for (std::uint64_t r : prime_factors(n))
        if (x_pow_mod(field, n / r, f) == one) return false;
    return true;
}

Poly default_primitive(const Field& field, unsigned degree) {
    if (degree == 0) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
    const std::uint64_t count = checked_power(field.q(), degree);
    if (count > kMaxFieldOrder) throw Error(ErrorCode::TooLarge, "extension order exceeds 2^20");
    Poly f(degree + 1, 0);
    f[degree] = 1;
    for (std::uint64_t v = 0; v < count; ++v) {
        std::uint64_t t = v;
        for (unsigned i = 0; i < degree; ++i) {
            f[i] = static_cast<Elem>(t % field.q());
            t /= field.q();
        }
        if (is_primitive(field, f)) return f;
    }
    throw Error(ErrorCode::NotPrimitive, "no primitive polynomial found");
}

}  // namespace poly

}  // namespace flagcode
