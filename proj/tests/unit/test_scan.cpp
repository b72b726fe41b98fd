#include "quaddyn/catalog.hpp"
#include "quaddyn/errors.hpp"
#include "quaddyn/json_io.hpp"
#include "quaddyn/scan.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace quaddyn;

TEST(Scan, HeightOne) {
    ScanReport r = scan_rational(1);
    EXPECT_EQ(r.scanned, 3);
    EXPECT_EQ(r.tally.at("3(1,1)"), 1);
    EXPECT_EQ(r.tally.at("3(2)"), 1);
    EXPECT_EQ(r.tally.at("∅"), 1);
    EXPECT_TRUE(r.unclassified.empty());
    EXPECT_THROW(scan_rational(0), DomainError);
}

TEST(Scan, SerialAndParallelAgree) {
    ScanReport a = scan_rational(14, kDefaultNmax, 1);
    ScanReport b = scan_rational(14, kDefaultNmax, 3);
    EXPECT_EQ(a.tally, b.tally);
    EXPECT_EQ(a.scanned, b.scanned);
    ScanReport c = scan_curve("8(2)a", 8, kDefaultNmax, 0, 1);
    ScanReport d = scan_curve("8(2)a", 8, kDefaultNmax, 0, 4);
    EXPECT_EQ(c.tally, d.tally);
    ASSERT_EQ(c.records.size(), d.records.size());
    for (std::size_t i = 0; i < c.records.size(); ++i) EXPECT_EQ(c.records[i].c, d.records[i].c);
}

TEST(Scan, RationalLabelsStayInTheTwelve) {
    ScanReport r = scan_rational(20);
    std::set<std::string> twelve(rational_twelve_labels().begin(), rational_twelve_labels().end());
    for (const auto& [label, n] : r.tally) EXPECT_TRUE(twelve.count(label)) << label;
}

TEST(Scan, EightFourGivesRationalC) {
    ScanReport r = scan_curve("8(4)", 30);
    ASSERT_FALSE(r.records.empty());
    for (const auto& rec : r.records) {
        EXPECT_TRUE(rec.c_rational) << rec.c.to_string();
        EXPECT_TRUE(rec.contains_target) << rec.c.to_string();
    }
}

TEST(Scan, EightOneOneBHasIrrationalC) {
    ScanReport r = scan_curve("8(1,1)b", 30, kDefaultNmax, kDefaultLineHeight);
    bool found = false;
    for (const auto& rec : r.records) found |= !rec.c_rational && rec.contains_target;
    EXPECT_TRUE(found);
}

TEST(Scan, EightThreeIncludesTheMinusFifteenPoint) {
    ScanReport r = scan_curve("8(3)", 30, kDefaultNmax, kDefaultLineHeight);
    bool quadratic = false, minus15 = false;
    for (const auto& rec : r.records) {
        quadratic |= !rec.c_rational && rec.contains_target;
        minus15 |= rec.d == -15 && rec.c.a() == Rational(-7, 48) && abs(rec.c.b()) == Rational(1, 6) && rec.contains_target;
    }
    EXPECT_TRUE(quadratic);
    EXPECT_TRUE(minus15);
}

TEST(Scan, RecordedLabelsReverify) {
    ScanReport r = scan_curve("10(3,2)", 12);
    ASSERT_FALSE(r.records.empty());
    for (std::size_t i = 1; i < r.records.size(); ++i)
        EXPECT_FALSE(height_less(r.records[i].c, r.records[i - 1].c));
    for (const auto& rec : r.records) {
        auto pr = portrait_of(rec.c, rec.d, r.n_max);
        auto l = classify(pr.portrait);
        if (rec.classified) EXPECT_EQ(l, std::optional<std::string>(rec.label));
        else EXPECT_EQ(rec.label, canonical_form(pr.portrait));
    }
}

TEST(Scan, UnknownLabel) {
    EXPECT_THROW(scan_curve("9(9)", 5), DomainError);
    EXPECT_THROW(curve_parameters("8(3)", 0, 0), DomainError);
}

TEST(Json, RoundTrips) {
    QuadElem x(Integer(-15), Rational(-7, 48), Rational(1, 6));
    EXPECT_EQ(quad_from_json(nlohmann::json::parse(to_json(x).dump())), x);
    for (const auto& e : default_catalog().entries()) {
        auto j = nlohmann::json::parse(to_json(e).dump());
        CatalogEntry back = catalog_entry_from_json(j);
        EXPECT_EQ(back.label, e.label);
        EXPECT_EQ(back.portrait.succ, e.portrait.succ);
        EXPECT_EQ(back.gamma, e.gamma);
        EXPECT_EQ(back.realization.has_value(), e.realization.has_value());
        if (back.realization) {
            EXPECT_EQ(back.realization->c, e.realization->c);
        }
    }
}

TEST(Json, ReportsCarryNmax) {
    ScanReport r = scan_rational(2);
    Json j = to_json(r);
    EXPECT_EQ(j.at("n_max"), kDefaultNmax);
    EXPECT_EQ(j.at("height"), 2);
    Json d = to_json(density_pi_f(named_sextic("10(3,2)"), 1000));
    EXPECT_EQ(d.at("kind"), "natural density proxy");
}
