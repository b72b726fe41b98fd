#include "quaddyn/errors.hpp"
#include "quaddyn/jacobian.hpp"
#include "quaddyn/numtheory.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace quaddyn;

namespace {

// Every reduced Mumford pair on the odd model; one per class of J(F_p).
std::vector<MumfordDivisor> all_divisors(const OddJacobian& J) {
    const std::uint64_t p = J.p();
    const FpPoly& f = J.f();
    std::vector<MumfordDivisor> out{J.zero()};
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t v = 0; v < p; ++v) {
            MumfordDivisor d{FpPoly(p, {(p - a) % p, 1}), FpPoly(p, {v})};
            if ((d.v * d.v - f) % d.u == FpPoly(p, {})) out.push_back(d);
        }
    for (std::uint64_t u0 = 0; u0 < p; ++u0)
        for (std::uint64_t u1 = 0; u1 < p; ++u1) {
            FpPoly u(p, {u0, u1, 1});
            for (std::uint64_t v0 = 0; v0 < p; ++v0)
                for (std::uint64_t v1 = 0; v1 < p; ++v1) {
                    FpPoly v(p, {v0, v1});
                    if ((v * v - f) % u == FpPoly(p, {})) out.push_back({u, v});
                }
        }
    return out;
}

RatPoly rp(const FpPoly& f) {
    std::vector<Rational> c;
    for (auto x : f.coeffs()) c.emplace_back(static_cast<long>(x));
    return RatPoly(c);
}

std::uint64_t naive_affine(const std::vector<long>& f, std::uint64_t p) {
    std::uint64_t n = 0;
    for (std::uint64_t x = 0; x < p; ++x)
        for (std::uint64_t y = 0; y < p; ++y) {
            long v = 0;
            for (auto it = f.rbegin(); it != f.rend(); ++it) v = (v * static_cast<long>(x) + *it) % static_cast<long>(p);
            long lhs = static_cast<long>((y * y) % p);
            n += ((lhs - v) % static_cast<long>(p) + static_cast<long>(p)) % static_cast<long>(p) == 0;
        }
    return n;
}

}  // namespace

TEST(Jacobian, EightThreeOrderTwentyOne) {
    ReducedDivisor r = eight_three_d0_mod7();
    const OddJacobian& J = r.jac;
    EXPECT_TRUE(J.is_valid(r.d));
    Integer N = jacobian_group_order(eight_three_sextic(), 7);
    EXPECT_EQ(N, 84);
    EXPECT_EQ(J.order(r.d, N), 21);
    EXPECT_EQ(N % 21, 0);
    EXPECT_EQ(J.order(J.zero(), N), 1);
    for (long n = 1; n <= 3; ++n) EXPECT_EQ(J.mul(r.d, Integer(1 + 21 * n)), r.d);
    EXPECT_FALSE(is_square_mod_p(Integer(-15), Integer(7)));
    // x(P0) is quadratic over F_7
    EXPECT_TRUE(roots_mod_p(r.u_even).empty());
    EXPECT_EQ(r.u_even.degree(), 2);
}

TEST(Jacobian, OddModel) {
    const RatPoly& f = eight_three_sextic();
    FpPoly f7 = FpPoly::from_rationals(7, f.coeffs());
    EXPECT_EQ(f7.eval(4), 0u);
    FpPoly g = odd_model(f, 7, 4);
    EXPECT_EQ(g.degree(), 5);
    EXPECT_EQ(g, eight_three_d0_mod7().jac.f());
    // isomorphic curves, same Jacobian
    EXPECT_EQ(jacobian_group_order(rp(g), 7), 84);
}

TEST(Jacobian, BruteForceClassCount) {
    OddJacobian J(eight_three_d0_mod7().jac.f());
    auto all = all_divisors(J);
    EXPECT_EQ(all.size(), 84u);
    for (const auto& d : all) {
        EXPECT_TRUE(J.is_valid(d));
        EXPECT_EQ(84 % J.order(d, 84), 0);
    }
}

TEST(Jacobian, GroupLaws) {
    OddJacobian J(eight_three_d0_mod7().jac.f());
    auto all = all_divisors(J);
    std::mt19937_64 rng(99);
    auto pick = [&] { return all[rng() % all.size()]; };
    for (int i = 0; i < 300; ++i) {
        auto a = pick(), b = pick(), c = pick();
        EXPECT_EQ(J.add(J.add(a, b), c), J.add(a, J.add(b, c)));
        EXPECT_EQ(J.add(a, b), J.add(b, a));
        EXPECT_EQ(J.add(a, J.neg(a)), J.zero());
        EXPECT_EQ(J.add(a, J.zero()), a);
        EXPECT_TRUE(J.is_valid(J.add(a, b)));
        EXPECT_EQ(J.mul(a, 84), J.zero());
    }
    EXPECT_THROW(J.order(all[1], Integer(5)), InternalError);
}

TEST(Jacobian, GenusOneHarness) {
    std::vector<long> f{1, 0, 0, 1};  // x^3 + 1
    RatPoly F({Rational(1), Rational(0), Rational(0), Rational(1)});
    for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
        EXPECT_TRUE(good_reduction(F, p));
        EXPECT_EQ(jacobian_group_order(F, p), naive_affine(f, p) + 1) << p;
        EXPECT_EQ(count_points_fp(FpPoly::from_rationals(p, F.coeffs())), naive_affine(f, p) + 1);
    }
    // discriminant -27
    EXPECT_FALSE(good_reduction(F, 3));
    EXPECT_THROW(jacobian_group_order(F, 3), DomainError);
}

TEST(Jacobian, PointCountsOverQuadraticExtension) {
    // #E(F_p^2) = (p + 1)^2 - a^2 with a = p + 1 - #E(F_p)
    RatPoly F({Rational(3), Rational(1), Rational(0), Rational(1)});
    for (std::uint64_t p : {5u, 7u, 11u, 13u, 17u}) {
        if (!good_reduction(F, p)) continue;
        FpPoly fp = FpPoly::from_rationals(p, F.coeffs());
        long n1 = static_cast<long>(count_points_fp(fp));
        long a = static_cast<long>(p) + 1 - n1;
        long q = static_cast<long>(p * p);
        EXPECT_EQ(static_cast<long>(count_points_fp2(fp)), q + 1 - (a * a - 2 * static_cast<long>(p))) << p;
    }
}
