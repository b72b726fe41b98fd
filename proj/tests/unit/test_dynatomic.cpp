#include "quaddyn/dynatomic.hpp"
#include "quaddyn/errors.hpp"
#include "quaddyn/orbit.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace quaddyn;

namespace {

BiPoly poly(std::initializer_list<std::initializer_list<long>> by_z) {
    std::vector<BiPoly::CPoly> rows;
    for (auto row : by_z) {
        BiPoly::CPoly r;
        for (long v : row) r.emplace_back(v);
        rows.push_back(r);
    }
    return BiPoly(rows);
}

BiPoly power_compose(const BiPoly& p, long m) {
    BiPoly out = p;
    for (long i = 0; i < m; ++i) out = out.compose_z(BiPoly::quadratic_map());
    return out;
}

}  // namespace

TEST(Dynatomic, Mobius) {
    EXPECT_EQ(mobius(1), 1);
    EXPECT_EQ(mobius(4), 0);
    EXPECT_EQ(mobius(6), 1);
    EXPECT_EQ(mobius(30), -1);
    EXPECT_THROW(mobius(0), DomainError);
}

TEST(Dynatomic, Iterates) {
    EXPECT_EQ(iterate_poly(0), BiPoly::z());
    EXPECT_EQ(iterate_poly(1), BiPoly::quadratic_map());
    BiPoly f = BiPoly::quadratic_map();
    EXPECT_EQ(iterate_poly(2), f * f + BiPoly::c());
}

TEST(Dynatomic, DegreesAndCycleBounds) {
    const long D[] = {2, 2, 6, 12, 30, 54};
    for (long n = 1; n <= 6; ++n) EXPECT_EQ(degree_D(n), D[n - 1]);
    EXPECT_EQ(cycle_bound_R(1), 2);
    EXPECT_EQ(cycle_bound_R(3), 2);
    EXPECT_EQ(cycle_bound_R(6), 9);
    EXPECT_EQ(cycle_bound_R(18), 14532);
    for (long n = 1; n <= 30; ++n) {
        EXPECT_LE(degree_D(n), pow(Integer(2), static_cast<unsigned long>(n)));
        EXPECT_EQ(degree_D(n) % n, 0);
    }
}

TEST(Dynatomic, SmallExamples) {
    // z^2 - z + c
    EXPECT_EQ(dynatomic(1), poly({{0, 1}, {-1}, {1}}));
    // z^2 + z + c + 1
    EXPECT_EQ(dynatomic(2), poly({{1, 1}, {1}, {1}}));
    EXPECT_EQ(dynatomic(3).specialize(Rational(0)), RatPoly(std::vector<Rational>(7, Rational(1))));
}

TEST(Dynatomic, ProductFormula) {
    for (long n = 1; n <= 8; ++n) {
        BiPoly prod = BiPoly::constant(1);
        for (long d : divisors(n)) prod = prod * dynatomic(d);
        EXPECT_EQ(prod, iterate_poly(n) - BiPoly::z()) << n;
    }
}

TEST(Dynatomic, DegreeMatchesD) {
    for (long n = 1; n <= 8; ++n) {
        EXPECT_EQ(dynatomic(n).degree_z(), degree_D(n)) << n;
        EXPECT_TRUE(dynatomic(n).is_monic_in_z());
    }
    // monic in z, so the degree survives reduction; the bivariate objects for 9, 10 are slow
    for (long n = 9; n <= 10; ++n) EXPECT_EQ(dynatomic_mod_p(n, 5, 10007).degree(), degree_D(n)) << n;
}

TEST(Dynatomic, ModPAgreesWithReduction) {
    for (long n = 1; n <= 7; ++n)
        for (std::uint64_t c : {0u, 3u, 10u})
            EXPECT_EQ(dynatomic_mod_p(n, c, 13), FpPoly::from_rationals(13, dynatomic(n).specialize(Rational(c)).coeffs()))
                << n << " " << c;
}

TEST(GenDynatomic, Examples) {
    EXPECT_EQ(gen_dynatomic(0, 2), dynatomic(2));
    EXPECT_EQ(gen_dynatomic(1, 1), poly({{0, 1}, {1}, {1}}));
    EXPECT_EQ(gen_dynatomic(1, 2), poly({{1, 1}, {-1}, {1}}));
    EXPECT_NE(gen_dynatomic(2, 1).eval(QuadElem(0), QuadElem(-1)), QuadElem(0));
    EXPECT_EQ(gen_dynatomic(1, 1).eval(QuadElem(0), QuadElem(-1)), QuadElem(0));
}

TEST(GenDynatomic, DegreeAndTelescoping) {
    for (long n = 1; n <= 4; ++n)
        for (long m = 1; m + n <= 5; ++m) {
            BiPoly g = gen_dynatomic(m, n);
            EXPECT_EQ(g.degree_z(), degree_D(n) * pow(Integer(2), static_cast<unsigned long>(m - 1)));
            BiPoly prod = dynatomic(n);
            for (long j = 1; j <= m; ++j) prod = prod * gen_dynatomic(j, n);
            EXPECT_EQ(prod, power_compose(dynatomic(n), m)) << m << "," << n;
        }
}

TEST(Dynatomic, VanishesOnPeriodicPoints) {
    // rational points of exact period n <= 4 for small c
    std::mt19937_64 rng(17);
    int hits = 0;
    for (int trial = 0; trial < 4000 && hits < 100; ++trial) {
        std::uniform_int_distribution<long> num(-40, 40), den(1, 4);
        Rational c(num(rng), den(rng) * den(rng));
        c.canonicalize();
        PortraitResult r = portrait_of(QuadElem(c), 1, 4);
        for (const auto& pt : r.points) {
            if (pt.preperiod != 0) continue;
            EXPECT_EQ(dynatomic(pt.period).eval(QuadElem(c), pt.value), QuadElem(0));
            ++hits;
        }
    }
    EXPECT_GE(hits, 100);
}
