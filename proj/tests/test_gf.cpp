#include <gtest/gtest.h>

#include "flagcode/companion.hpp"
#include "flagcode/gf.hpp"
#include "flagcode/linalg.hpp"
#include "oracle.hpp"

using namespace flagcode;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields = {
    {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {11, 1}, {13, 1}};

std::uint64_t brute_order(const Field& f, Elem a) {
    Elem x = a;
    for (std::uint64_t e = 1; e < f.q(); ++e, x = f.mul(x, a))
        if (x == 1) return e;
    return 0;
}

}  // namespace

TEST(Field, PrimeFieldDefaultModulusIsDegreeOne) {
    auto f = Field::create(2, 1);
    EXPECT_EQ(f->q(), 2u);
    ASSERT_EQ(f->modulus().size(), 2u);
    EXPECT_EQ(f->modulus()[1], 1u);
    EXPECT_EQ(f->mul(1, 1), 1u);
    EXPECT_EQ(f->add(1, 1), 0u);
}

TEST(Field, Gf4DefaultModulus) {
    auto f = Field::create(2, 2);
    EXPECT_EQ(f->q(), 4u);
    EXPECT_EQ(f->modulus(), (Poly{1, 1, 1}));
}

TEST(Field, Gf8DefaultModulusIsSmallestPrimitive) {
    // candidates in increasing order: x^3+1 (reducible), x^3+x+1 (primitive)
    EXPECT_EQ(Field::create(2, 3)->modulus(), (Poly{1, 1, 0, 1}));
}

TEST(Field, RejectsReducibleModulus) {
    try {
        Field::create(2, 2, Poly{1, 0, 1});
        FAIL() << "x^2+1 accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ModulusNotPrimitive);
    }
}

TEST(Field, RejectsIrreducibleButNotPrimitive) {
    // x^4+x^3+x^2+x+1 is irreducible over F_2 but x has order 5
    try {
        Field::create(2, 4, Poly{1, 1, 1, 1, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ModulusNotPrimitive);
    }
}

TEST(Field, RejectsNonPrimeCharacteristic) {
    for (std::uint32_t p : {0u, 1u, 4u, 9u}) {
        try {
            Field::create(p, 1);
            FAIL() << p;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::NonPrimeP);
        }
    }
}

TEST(Field, Gf4Products) {
    auto f = Field::create(2, 2);
    EXPECT_EQ(f->mul(2, 2), 3u);
    EXPECT_EQ(f->mul(2, 3), 1u);
}

TEST(Field, InverseOfZeroThrows) {
    auto f = Field::create(3, 2);
    try {
        f->inv(0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
    }
}

TEST(Field, CharacteristicTwoSelfSumVanishes) {
    for (std::uint32_t m = 1; m <= 4; ++m) {
        auto f = Field::create(2, m);
        for (Elem a = 0; a < f->q(); ++a) EXPECT_EQ(f->add(a, a), 0u);
    }
}

TEST(FieldProperty, AxiomsExhaustive) {
    for (auto [p, m] : kSmallFields) {
        auto f = Field::create(p, m);
        if (f->q() > 16) continue;
        const Elem q = f->q();
        for (Elem a = 0; a < q; ++a) {
            EXPECT_EQ(f->add(a, 0), a);
            EXPECT_EQ(f->mul(a, 1), a);
            EXPECT_EQ(f->add(a, f->neg(a)), 0u);
            if (a) EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
            for (Elem b = 0; b < q; ++b) {
                EXPECT_EQ(f->add(a, b), f->add(b, a));
                EXPECT_EQ(f->mul(a, b), f->mul(b, a));
                for (Elem c = 0; c < q; ++c) {
                    ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
                    ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
                    ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
    }
}

TEST(FieldProperty, TablesMatchSchoolbookArithmetic) {
    for (auto [p, m] : kSmallFields) {
        auto f = Field::create(p, m);
        oracle::OField o(*f);
        for (Elem a = 0; a < f->q(); ++a)
            for (Elem b = 0; b < f->q(); ++b) {
                ASSERT_EQ(f->mul(a, b), o.mul(a, b)) << p << "^" << m << ": " << a << "*" << b;
                ASSERT_EQ(f->add(a, b), o.add(a, b));
            }
    }
}

TEST(FieldProperty, ClassOfXIsPrimitive) {
    for (auto [p, m] : kSmallFields) {
        auto f = Field::create(p, m);
        const Elem x = m > 1 ? static_cast<Elem>(p) : f->primitive_element();
        if (m > 1) EXPECT_EQ(f->primitive_element(), x);
        EXPECT_EQ(brute_order(*f, x), f->q() - 1u) << p << "^" << m;
        EXPECT_EQ(f->order(x), f->q() - 1u);
    }
}

TEST(FieldElement, OperatorsAndFieldMixing) {
    auto f = Field::create(2, 2);
    FieldElement a(f, 2), b(f, 3);
    EXPECT_EQ((a * b).value(), 1u);
    EXPECT_EQ((a + b).value(), 1u);
    EXPECT_EQ((a / a).value(), 1u);
    EXPECT_EQ((a * a.inverse()).value(), 1u);
    auto g = Field::create(3, 1);
    FieldElement c(g, 1);
    try {
        (void)(a + c);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
    }
}

TEST(Poly, IrreducibilityAgreesWithRootlessCubics) {
    // a cubic over a prime field is irreducible iff it has no root
    auto f = Field::create(3, 1);
    for (Elem c0 = 0; c0 < 3; ++c0)
        for (Elem c1 = 0; c1 < 3; ++c1)
            for (Elem c2 = 0; c2 < 3; ++c2) {
                Poly g{c0, c1, c2, 1};
                bool root = false;
                for (Elem x = 0; x < 3; ++x) root |= (c0 + c1 * x + c2 * x * x + x * x * x) % 3 == 0;
                EXPECT_EQ(poly::is_irreducible(*f, g), !root);
            }
}

TEST(Companion, Gf2Quadratic) {
    auto f = Field::create(2, 1);
    Matrix M = companion_matrix(f, Poly{1, 1, 1});
    EXPECT_EQ(M, Matrix::from_rows(f, {{0, 1}, {1, 1}}));
    const auto I = Matrix::identity(f, 2);
    EXPECT_FALSE(M == I);
    EXPECT_FALSE(power(M, 2) == I);
    EXPECT_EQ(power(M, 3), I);
}

TEST(Companion, Gf2CubicOrderSeven) {
    auto f = Field::create(2, 1);
    Matrix M = companion_matrix(f, Poly{1, 1, 0, 1});
    const auto I = Matrix::identity(f, 3);
    for (unsigned d = 1; d < 7; ++d) EXPECT_FALSE(power(M, d) == I) << d;
    EXPECT_EQ(power(M, 7), I);
    EXPECT_EQ(multiplicative_order(M), 7u);
}

TEST(Companion, DegreeOneOverF3) {
    auto f = Field::create(3, 1);
    Matrix M = companion_matrix(f, Poly{1, 1});
    EXPECT_EQ(M, Matrix::from_rows(f, {{2}}));
    EXPECT_EQ(multiplicative_order(M), 2u);
}

TEST(Companion, RejectsNonPrimitive) {
    auto f = Field::create(2, 1);
    for (const Poly& g : {Poly{1, 0, 1}, Poly{1, 1, 1, 1, 1}, Poly{1}, Poly{0, 1, 1}}) {
        try {
            companion_matrix(f, g);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::NotPrimitive);
        }
    }
}

TEST(CompanionProperty, OrderIsQToTheKMinusOne) {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        auto f = Field::create(p, m);
        for (unsigned k = 1; k <= 3; ++k) {
            const auto qk = oracle::ipow(f->q(), k);
            if (qk > 1000) continue;
            Poly g = poly::default_primitive(*f, k);
            EXPECT_EQ(multiplicative_order(companion_matrix(f, g)), qk - 1) << p << "^" << m << " k=" << k;
        }
    }
}
