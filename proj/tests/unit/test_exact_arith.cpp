#include "quaddyn/errors.hpp"
#include "quaddyn/numtheory.hpp"
#include "quaddyn/quadfield.hpp"
#include "quaddyn/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace quaddyn;

namespace {

Rational random_rational(std::mt19937_64& rng, long num, long den) {
    std::uniform_int_distribution<long> a(-num, num), b(1, den);
    Rational r(a(rng), b(rng));
    r.canonicalize();
    return r == 0 ? Rational(1) : r;
}

QuadElem random_elem(std::mt19937_64& rng, const Integer& d) {
    std::uniform_int_distribution<long> a(-9, 9), b(1, 9);
    Rational x(a(rng), b(rng)), y(a(rng), b(rng));
    x.canonicalize();
    y.canonicalize();
    return QuadElem(d, x, y);
}

}  // namespace

TEST(Rational, ParseAndHeight) {
    EXPECT_EQ(parse_rational(" -6/8 "), Rational(-3, 4));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(height(Rational(-3, 4)), 4);
    EXPECT_EQ(height(Rational(-17, 8)), 17);
    EXPECT_THROW(parse_rational("1/0"), DomainError);
    EXPECT_THROW(parse_rational("abc"), DomainError);
}

TEST(Rational, IntegerSquareRoots) {
    EXPECT_EQ(isqrt(Integer(464)), 21);
    EXPECT_EQ(isqrt_ceil(Integer(464)), 22);
    EXPECT_EQ(isqrt_ceil(Integer(441)), 21);
    EXPECT_TRUE(is_square(Integer(0)));
    EXPECT_FALSE(is_square(Integer(-4)));
    EXPECT_EQ(*rational_sqrt(Rational(9, 4)), Rational(3, 2));
    EXPECT_FALSE(rational_sqrt(Rational(2)).has_value());
}

TEST(Sqf, Examples) {
    EXPECT_EQ(sqf(Rational(4)), 1);
    EXPECT_EQ(sqf(Rational(12)), 3);
    EXPECT_EQ(sqf(Rational(-8, 9)), -2);
    EXPECT_THROW(sqf(Rational(0)), DomainError);
}

TEST(Sqf, InvariantUnderSquares) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        Rational r = random_rational(rng, 500, 500);
        Rational s = random_rational(rng, 50, 50);
        EXPECT_EQ(sqf(r * s * s), sqf(r)) << r << " " << s;
        EXPECT_TRUE(is_squarefree(abs(sqf(r))));
    }
}

TEST(NumberTheory, FactorAndValuation) {
    auto f = factor(Integer(-360));
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0].first, 2);
    EXPECT_EQ(f[0].second, 3u);
    EXPECT_EQ(valuation(Rational(9, 8), Integer(2)), -3);
    EXPECT_EQ(valuation(Integer(75), Integer(5)), 2);
    EXPECT_THROW(valuation(Integer(0), Integer(5)), DomainError);
    // product of two primes above the trial bound
    Integer big = Integer(1000003) * Integer(1000033);
    auto g = factor(big, 1000);
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[0].first, 1000003);
    EXPECT_EQ(g[1].first, 1000033);
}

TEST(NumberTheory, SquaresModP) {
    EXPECT_FALSE(is_square_mod_p(Integer(6), Integer(7)));
    EXPECT_TRUE(is_square_mod_p(Integer(2), Integer(7)));
    EXPECT_TRUE(is_square_mod_p(Integer(0), Integer(11)));
    EXPECT_FALSE(is_square_mod_p(Integer(-15), Integer(7)));
}

TEST(QuadField, SqrtInFieldExamples) {
    EXPECT_EQ(*sqrt_in_field(QuadElem(Integer(5), 4, 0)), QuadElem(Integer(5), 2, 0));
    auto r = sqrt_in_field(QuadElem(Integer(2), 3, 2));
    ASSERT_TRUE(r);
    EXPECT_EQ(*r * *r, QuadElem(Integer(2), 3, 2));
    EXPECT_EQ(abs(r->a()), 1);
    EXPECT_EQ(abs(r->b()), 1);
    auto s = sqrt_in_field(QuadElem(Integer(2), 2, 0));
    ASSERT_TRUE(s);
    EXPECT_EQ(s->a(), 0);
    EXPECT_EQ(abs(s->b()), 1);
    EXPECT_FALSE(sqrt_in_field(QuadElem(Integer(2), 3, 0)));
}

TEST(QuadField, SqrtRoundTripAndExhaustiveAbsence) {
    std::mt19937_64 rng(5);
    const Integer ds[] = {-15, -1, 2, 5};
    // candidate roots u + v sqrt d with small height
    std::vector<Rational> small;
    for (long p = -6; p <= 6; ++p)
        for (long q = 1; q <= 6; ++q) small.emplace_back(p, q);
    for (auto& r : small) r.canonicalize();
    for (const Integer& d : ds) {
        for (int i = 0; i < 60; ++i) {
            QuadElem y = random_elem(rng, d);
            QuadElem x = i % 2 ? y * y : y;
            auto r = sqrt_in_field(x);
            if (r) {
                EXPECT_EQ(*r * *r, x);
            } else {
                for (const auto& u : small)
                    for (const auto& v : small) {
                        QuadElem z(d, u, v);
                        ASSERT_NE(z * z, x);
                    }
            }
        }
    }
}

TEST(QuadField, ConjugationAndNorm) {
    std::mt19937_64 rng(9);
    for (const Integer& d : {Integer(-7), Integer(3), Integer(10)}) {
        for (int i = 0; i < 100; ++i) {
            QuadElem x = random_elem(rng, d), y = random_elem(rng, d);
            EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
            EXPECT_EQ((x + y).conj(), x.conj() + y.conj());
            QuadElem n = x * x.conj();
            EXPECT_TRUE(n.is_rational());
            EXPECT_EQ(n.a(), x.norm());
            if (!x.is_zero()) {
                EXPECT_EQ(x * x.inverse(), QuadElem(1));
            }
        }
    }
    EXPECT_THROW(QuadElem(Integer(2), 1, 1) + QuadElem(Integer(3), 1, 1), DomainError);
}

TEST(QuadField, PIntegralityExamples) {
    EXPECT_FALSE(is_p_integral(QuadElem(Rational(1, 7)), Integer(7)));
    EXPECT_TRUE(is_p_integral(QuadElem(Integer(2), 0, 1), Integer(3)));
    EXPECT_TRUE(is_p_integral(QuadElem(Integer(5), Rational(1, 2), Rational(1, 2)), Integer(2)));
    EXPECT_THROW(is_p_integral(QuadElem(1), Integer(4)), DomainError);
    // 2 ramifies in Q(sqrt 3) and (1 + sqrt 3)/2 has norm -1/2
    EXPECT_FALSE(is_p_integral(QuadElem(Integer(3), Rational(1, 2), Rational(1, 2)), Integer(2)));
}

TEST(QuadField, PIntegralityMatchesValuationOnRationals) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        Rational r = random_rational(rng, 200, 200);
        for (long p : {2L, 3L, 5L, 7L})
            EXPECT_EQ(is_p_integral(QuadElem(r), Integer(p)), valuation(r, Integer(p)) >= 0) << r << " " << p;
    }
}
