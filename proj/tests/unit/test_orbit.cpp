#include "quaddyn/catalog.hpp"
#include "quaddyn/dynatomic.hpp"
#include "quaddyn/errors.hpp"
#include "quaddyn/orbit.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace quaddyn;

namespace {

std::string label_of(const Rational& c, const Integer& d = 1) {
    auto l = classify(portrait_of(QuadElem(c).in_field(d), d).portrait);
    return l ? *l : "?";
}

const OrbitPoint* find_point(const PortraitResult& r, const QuadElem& z) {
    for (const auto& p : r.points)
        if (p.value == z) return &p;
    return nullptr;
}

void expect_closed(const PortraitResult& r) {
    std::set<std::pair<Rational, Rational>> vals;
    for (const auto& p : r.points) vals.emplace(p.value.a(), p.value.b());
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        QuadElem img = r.points[i].value * r.points[i].value + r.c;
        ASSERT_EQ(img, r.points[static_cast<std::size_t>(r.portrait.succ[i])].value);
        // both square roots of w - c that lie in K are vertices
        if (auto s = sqrt_in_field((r.points[i].value - r.c).in_field(r.field.d))) {
            EXPECT_TRUE(vals.count({s->a(), s->b()}));
            EXPECT_TRUE(vals.count({-s->a(), -s->b()}));
        }
    }
}

}  // namespace

TEST(Orbit, OrbitDataExamples) {
    EXPECT_EQ(orbit_data(QuadElem(-1), QuadElem(0)), std::make_optional(std::make_pair(0, 2)));
    EXPECT_EQ(orbit_data(QuadElem(0), QuadElem(-1)), std::make_optional(std::make_pair(1, 1)));
    EXPECT_FALSE(orbit_data(QuadElem(-2), QuadElem(Rational(1, 2))).has_value());
    EXPECT_TRUE(escapes_archimedean(QuadElem(0), QuadElem(3)));
    EXPECT_TRUE(fails_integrality(QuadElem(0), QuadElem(Rational(1, 2))));
}

TEST(Orbit, PortraitExamples) {
    auto zero = portrait_of(QuadElem(0));
    EXPECT_EQ(zero.portrait.size(), 3);
    EXPECT_EQ(label_of(0), "3(1,1)");
    ASSERT_TRUE(find_point(zero, QuadElem(-1)));
    EXPECT_EQ(find_point(zero, QuadElem(-1))->preperiod, 1);

    auto m1 = portrait_of(QuadElem(-1));
    EXPECT_EQ(label_of(-1), "3(2)");
    ASSERT_TRUE(find_point(m1, QuadElem(1)));
    EXPECT_EQ(find_point(m1, QuadElem(0))->period, 2);

    auto r = portrait_of(QuadElem(Rational(-3, 4)));
    EXPECT_EQ(label_of(Rational(-3, 4)), "4(1,1)");
    std::set<Rational> vals;
    for (const auto& p : r.points) vals.insert(p.value.a());
    EXPECT_EQ(vals, (std::set<Rational>{Rational(-3, 2), Rational(-1, 2), Rational(1, 2), Rational(3, 2)}));
}

TEST(Orbit, DegenerateFixedPointKeepsPeriodOne) {
    EXPECT_EQ(dynatomic(2).eval(QuadElem(Rational(-3, 4)), QuadElem(Rational(-1, 2))), QuadElem(0));
    auto r = portrait_of(QuadElem(Rational(-3, 4)));
    const OrbitPoint* p = find_point(r, QuadElem(Rational(-1, 2)));
    ASSERT_TRUE(p);
    EXPECT_EQ(p->preperiod, 0);
    EXPECT_EQ(p->period, 1);
}

TEST(Orbit, KnownRationalLabels) {
    EXPECT_EQ(label_of(Rational(1, 4)), "2(1)");
    EXPECT_EQ(label_of(-2), "5(1,1)a");
    EXPECT_EQ(label_of(Rational(-29, 16)), "8(3)");
    EXPECT_EQ(label_of(2), "∅");
}

TEST(Orbit, QuadraticFieldPortrait) {
    // 3-cycle of c = -29/16 stays rational over Q(sqrt 2)
    auto r = portrait_of(QuadElem(Rational(-29, 16)), 2);
    int period3 = 0;
    for (const auto& p : r.points)
        if (p.preperiod == 0 && p.period == 3) {
            ++period3;
            EXPECT_TRUE(p.value.is_rational());
        }
    EXPECT_EQ(period3, 3);
    expect_closed(r);
}

TEST(Orbit, ClosureAndStructureOnRandomParameters) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    const Integer ds[] = {1, -1, 2, -3, 5};
    for (int i = 0; i < 120; ++i) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        Integer d = ds[static_cast<std::size_t>(i) % 5];
        auto r = portrait_of(QuadElem(c).in_field(d), d);
        expect_closed(r);
        EXPECT_TRUE(is_quadratic(r.portrait));
        bool zero_preperiodic = false;
        for (const auto& p : r.points) zero_preperiodic |= p.value.is_zero();
        if (c == Rational(1, 4) || zero_preperiodic) continue;
        for (int deg : in_degrees(r.portrait)) EXPECT_TRUE(deg == 0 || deg == 2) << c << " d=" << d;
    }
}

TEST(Orbit, MatchesBruteForceOracle) {
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
    for (int i = 0; i < 40; ++i) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        Portrait fast = portrait_of(QuadElem(c)).portrait;
        Portrait slow = brute_force_portrait(c, 60);
        EXPECT_EQ(canonical_form(fast), canonical_form(slow)) << c;
    }
}

TEST(Orbit, SixThreeRationality) {
    Rational c63(-301, 144);
    ASSERT_EQ(label_of(c63), "6(3)");
    EXPECT_TRUE(verify_6_3_rationality({{QuadElem(c63), Integer(1)}, {QuadElem(c63).in_field(5), Integer(5)}}));
    EXPECT_THROW(verify_6_3_rationality({{QuadElem(0), Integer(1)}}), DomainError);

    // fabricated sample: the period-3 points replaced by conjugate-unstable values
    PortraitResult fake = portrait_of(QuadElem(c63).in_field(5), 5);
    for (auto& p : fake.points)
        if (p.preperiod == 0 && p.period == 3) p.value = p.value + QuadElem(Integer(5), 0, 1);
    EXPECT_FALSE(verify_6_3_rationality(std::vector<PortraitResult>{fake}));
}

TEST(Orbit, RationalPortraitsStayInTheTwelve) {
    std::set<std::string> twelve(rational_twelve_labels().begin(), rational_twelve_labels().end());
    for (long b = 1; b <= 12; ++b)
        for (long a = -30; a <= 30; ++a) {
            Rational c(a, b);
            c.canonicalize();
            if (c.get_den() != b) continue;
            EXPECT_TRUE(twelve.count(label_of(c))) << c;
        }
}
