#include "quaddyn/catalog.hpp"
#include "quaddyn/dynatomic.hpp"
#include "quaddyn/errors.hpp"
#include "quaddyn/portrait.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace quaddyn;

namespace {

// vertices 0..3: 0 -> 1, 1 <-> 2, 3 -> 2
Portrait figure_one() { return Portrait({1, 2, 1, 2}); }

Portrait random_portrait(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> v(0, n - 1);
    std::vector<int> s(static_cast<std::size_t>(n));
    for (auto& x : s) x = v(rng);
    return Portrait(s);
}

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

const Portrait& cat(const std::string& label) {
    const CatalogEntry* e = default_catalog().find(label);
    if (!e) throw DomainError("missing catalog label " + label);
    return e->portrait;
}

}  // namespace

TEST(Portrait, CycleStructure) {
    EXPECT_TRUE(cycle_structure(Portrait()).empty());
    EXPECT_EQ(cycle_structure(figure_one()), (CycleStructure{2}));
    EXPECT_EQ(cycle_structure(cat("10(3,1,1)")), (CycleStructure{3, 1, 1}));
    EXPECT_EQ(format_cycle_structure({}), "()");
    EXPECT_EQ(shape_of(figure_one()), "4(2)");
}

TEST(Portrait, QuadraticPredicates) {
    EXPECT_FALSE(is_quadratic(Portrait({0, 1, 2})));
    EXPECT_TRUE(is_quadratic(figure_one()));
    EXPECT_FALSE(is_quadratic(Portrait({0, 0, 0, 0})));
    EXPECT_TRUE(is_generic_quadratic(figure_one()));
    EXPECT_FALSE(is_generic_quadratic(Portrait({1, 0})));
    EXPECT_FALSE(is_generic_quadratic(Portrait({0, 0, 0})));
}

TEST(Portrait, Isomorphism) {
    EXPECT_TRUE(is_isomorphic(figure_one(), relabel(figure_one(), {3, 1, 0, 2})));
    EXPECT_FALSE(is_isomorphic(figure_one(), Portrait()));
    EXPECT_FALSE(is_isomorphic(cat("8(1,1)a"), cat("8(1,1)b")));
}

TEST(Portrait, CanonicalFormInvariantUnderRelabeling) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> size(1, 14);
    for (int i = 0; i < 1000; ++i) {
        Portrait p = random_portrait(rng, size(rng));
        Portrait q = relabel(p, random_perm(rng, p.size()));
        ASSERT_EQ(canonical_form(p), canonical_form(q));
        ASSERT_EQ(cycle_structure(p), cycle_structure(q));
    }
}

TEST(Portrait, CanonicalFormSeparatesSmallGraphs) {
    // every functional graph on 4 vertices; canonical form must agree with brute-force isomorphism
    std::vector<Portrait> all;
    for (int code = 0; code < 256; ++code)
        all.push_back(Portrait({code & 3, (code >> 2) & 3, (code >> 4) & 3, (code >> 6) & 3}));
    auto brute = [](const Portrait& a, const Portrait& b) {
        std::vector<int> perm{0, 1, 2, 3};
        do {
            bool ok = true;
            for (int v = 0; v < 4 && ok; ++v) ok = perm[static_cast<std::size_t>(a.succ[static_cast<std::size_t>(v)])] ==
                                                   b.succ[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    for (std::size_t i = 0; i < all.size(); i += 7)
        for (std::size_t j = 0; j < all.size(); j += 5)
            ASSERT_EQ(canonical_form(all[i]) == canonical_form(all[j]), brute(all[i], all[j])) << i << " " << j;
}

TEST(Portrait, Containment) {
    EXPECT_TRUE(contains_subportrait(figure_one(), Portrait()));
    EXPECT_TRUE(contains_subportrait(cat("12(2,1,1)a"), figure_one()));
    EXPECT_FALSE(contains_subportrait(figure_one(), cat("4(1,1)")));
    EXPECT_TRUE(contains_subportrait(cat("8(2,1,1)"), cat("4(1,1)")));
}

TEST(Portrait, GenericClosure) {
    EXPECT_TRUE(is_isomorphic(generic_closure(Portrait({1, 0})), figure_one()));
    EXPECT_EQ(classify(generic_closure(Portrait({0}))), std::optional<std::string>("4(1,1)"));
    EXPECT_EQ(generic_closure(Portrait()).size(), 0);
    EXPECT_THROW(generic_closure(Portrait({0, 0, 0})), DomainError);
}

TEST(Portrait, GenericClosureIdempotent) {
    std::mt19937_64 rng(77);
    int tried = 0;
    for (int i = 0; i < 20000 && tried < 300; ++i) {
        Portrait p = random_portrait(rng, 1 + static_cast<int>(rng() % 8));
        if (!is_quadratic(p)) continue;
        ++tried;
        Portrait g = generic_closure(p);
        EXPECT_TRUE(is_generic_quadratic(g));
        EXPECT_TRUE(contains_subportrait(g, p));
        EXPECT_EQ(canonical_form(generic_closure(g)), canonical_form(g));
    }
    EXPECT_GE(tried, 300);
}

TEST(Portrait, Enumeration) {
    auto two = enumerate_generic(4, {{2}});
    ASSERT_EQ(two.size(), 1u);
    EXPECT_TRUE(is_isomorphic(two[0], figure_one()));
    EXPECT_TRUE(enumerate_generic(3, {{1, 1}}).empty());
    auto none = enumerate_generic(0, {});
    ASSERT_EQ(none.size(), 1u);
    EXPECT_EQ(none[0].size(), 0);
    EXPECT_THROW(enumerate_generic(15, {}), ResourceError);
}

TEST(Portrait, EnumerationIsCompleteOnSixVertices) {
    // brute force over every functional graph on n <= 6 vertices
    std::set<std::string> brute;
    for (int n = 0; n <= 6; ++n) {
        std::vector<int> s(static_cast<std::size_t>(n), 0);
        while (true) {
            Portrait p(s);
            if (is_generic_quadratic(p)) brute.insert(canonical_form(p));
            int k = 0;
            while (k < n && ++s[static_cast<std::size_t>(k)] == n) s[static_cast<std::size_t>(k++)] = 0;
            if (k == n) break;
        }
    }
    std::set<std::string> listed;
    for (const auto& p : enumerate_generic(6, {})) EXPECT_TRUE(listed.insert(canonical_form(p)).second);
    EXPECT_EQ(listed, brute);
}

TEST(Portrait, ParseCycleStructures) {
    auto v = parse_cycle_structures("(),(2),(1,1),(3,1,1)");
    ASSERT_EQ(v.size(), 4u);
    EXPECT_TRUE(v[0].empty());
    EXPECT_EQ(v[3], (CycleStructure{3, 1, 1}));
    EXPECT_THROW(parse_cycle_structures("(2"), DomainError);
}

TEST(Catalog, Classify) {
    EXPECT_EQ(classify(figure_one()), std::optional<std::string>("4(2)"));
    EXPECT_EQ(classify(Portrait()), std::optional<std::string>("∅"));
    EXPECT_FALSE(classify(Portrait({1, 2, 3, 4, 0})).has_value());
}

TEST(Catalog, EntriesMatchLabels) {
    const Catalog& c = default_catalog();
    EXPECT_TRUE(c.validate().empty());
    for (const auto& e : c.entries()) {
        EXPECT_TRUE(is_quadratic(e.portrait)) << e.label;
        if (e.label.rfind('G', 0) == 0) continue;
        LabelParts parts = parse_label(e.label);
        EXPECT_EQ(e.portrait.size(), parts.vertices) << e.label;
        EXPECT_EQ(cycle_structure(e.portrait), parts.cycles) << e.label;
        EXPECT_EQ(classify(e.portrait), std::optional<std::string>(e.label));
    }
    EXPECT_EQ(rational_twelve_labels().size(), 12u);
    EXPECT_EQ(gamma0_labels().size(), 7u);
    for (const auto& l : quadratic_catalog_labels()) EXPECT_NE(c.find(l), nullptr) << l;
}

TEST(Catalog, RealizationsRecompute) {
    EXPECT_TRUE(default_catalog().check_realizations().empty());
}

TEST(Catalog, TenFourStructure) {
    const Portrait& p = cat("10(4)");
    EXPECT_EQ(cycle_structure(p), (CycleStructure{4}));
    EXPECT_TRUE(is_generic_quadratic(p));
}

TEST(Catalog, CorruptedInputIsRejected) {
    EXPECT_ANY_THROW(Catalog::from_json_text("{not json"));
    // a 4-vertex portrait labeled as a 6-vertex one
    Catalog bad = Catalog::from_json_text(
        R"j([{"n":4,"succ":[1,2,1,2],"label":"6(2)","gamma":"gamma0"}])j");
    EXPECT_FALSE(bad.validate().empty());
}

TEST(Catalog, MinimalUndominatedPortraitsAreReproduced) {
    // generic portraits up to 14 vertices that no Gamma member contains, minimal under containment
    std::vector<const Portrait*> gamma;
    std::set<std::string> named;
    for (const auto& e : default_catalog().entries()) {
        if (e.gamma != GammaClass::Other) gamma.push_back(&e.portrait);
        if (e.label.rfind('G', 0) == 0 || e.label == "10(4)") named.insert(canonical_form(e.portrait));
    }
    auto all = enumerate_generic(kEnumerateHardLimit, allowed_cycle_structures());
    std::vector<bool> dom(all.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        dom[i] = std::any_of(gamma.begin(), gamma.end(), [&](const Portrait* g) { return contains_subportrait(*g, all[i]); });
    std::set<std::string> minimal;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (dom[i]) continue;
        bool is_min = true;
        for (std::size_t j = 0; j < all.size() && is_min; ++j)
            if (!dom[j] && all[j].size() < all[i].size() && contains_subportrait(all[i], all[j])) is_min = false;
        if (!is_min) continue;
        // minimal ones that are realized elsewhere in the catalog keep their own labels
        auto l = classify(all[i]);
        if (!l || l->starts_with("G") || *l == "10(4)") minimal.insert(canonical_form(all[i]));
    }
    EXPECT_EQ(named.size(), 11u);
    EXPECT_EQ(minimal, named);
}
