// Regenerates data/catalog.json from realization seeds and the generic
// enumeration. Usage: quaddyn-build-catalog OUT.json
#include "quaddyn/catalog.hpp"
#include "quaddyn/json_io.hpp"
#include "quaddyn/orbit.hpp"
#include "quaddyn/portrait.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>

using namespace quaddyn;

namespace {

struct Seed {
    const char* label;
    long cd;  // field of c
    const char* ca;
    const char* cb;
    long d;  // field of the portrait
    const char* note;
};

const char* kModel = "letter fixed by the genus-1 model of this label";
const char* kOrder = "letter by convention: rational c first, then height of c, then |d|";

// One realization per label, found by scanning small rational c over the
// quadratic fields cut out by low-period dynatomic factors and by lifting
// points on the genus 1 and 2 models.
const std::vector<Seed>& seeds() {
    static const std::vector<Seed> s{
        {"∅", 1, "1", "0", 1, ""},
        {"2(1)", 1, "1/4", "0", 1, ""},
        {"3(1,1)", 1, "0", "0", 1, ""},
        {"3(2)", 1, "-1", "0", 1, ""},
        {"4(1)", 1, "1/4", "0", -3, ""},
        {"4(1,1)", 1, "1", "0", -3, ""},
        {"4(2)", 1, "1", "0", -7, ""},
        {"5(1,1)a", 1, "-2", "0", 1, "the class realized over Q"},
        {"5(1,1)b", 1, "0", "0", -1, ""},
        {"5(2)a", 1, "-1", "0", 2, kOrder},
        {"5(2)b", -1, "0", "1", -1, kOrder},
        {"6(1,1)", 1, "-3/4", "0", -3, ""},
        {"6(2)", 1, "-3", "0", 2, ""},
        {"6(2,1)", 1, "1/4", "0", -1, ""},
        {"6(3)", 1, "-1849/576", "0", 1, ""},
        {"7(1,1)a", 1, "-2", "0", 2, kOrder},
        {"7(1,1)b", 1, "-2", "0", 3, kOrder},
        {"7(2,1,1)a", 1, "0", "0", -3, kOrder},
        {"7(2,1,1)b", 1, "-1", "0", 5, kOrder},
        {"8(1,1)a", 1, "-10/9", "0", -5, kModel},
        {"8(1,1)b", 2, "-7/8", "1/2", 2, kModel},
        {"8(2)a", 1, "-5/12", "0", -3, kModel},
        {"8(2)b", 2, "-9/8", "-1/4", 2, kModel},
        {"8(2,1,1)", 1, "-3", "0", 13, ""},
        {"8(3)", 1, "-29/16", "0", 1, ""},
        {"8(4)", 1, "-155/72", "0", 10, ""},
        {"9(2,1,1)", 1, "-2", "0", 5, ""},
        {"10(1,1)a", 1, "3/16", "0", -7, "b is the class with a point of preperiod 4"},
        {"10(1,1)b", 17, "-17/16", "1/4", 17, "has a point of preperiod 4 over a fixed point"},
        {"10(2)", -7, "-9/16", "1/4", -7, ""},
        {"10(2,1,1)a", -1, "-1/4", "-3/8", -1, kModel},
        {"10(2,1,1)b", 3, "-3/2", "-3/8", 3, kModel},
        {"10(3)a", 1, "-29/16", "0", 41, kOrder},
        {"10(3)b", 1, "-29/16", "0", 57, kOrder},
        {"10(3,1,1)", 1, "-301/144", "0", 337, ""},
        {"10(3,2)", 1, "-301/144", "0", 193, ""},
        {"12(2)", 1, "-15/8", "0", 2, ""},
        {"12(2,1,1)a", 1, "-5/16", "0", -7, kOrder},
        {"12(2,1,1)b", 1, "-13/16", "0", 17, kOrder},
        {"12(3)", 1, "-301/144", "0", 73, ""},
        {"12(4)", 1, "-95/48", "0", 105, ""},
        {"12(4,2)", 1, "-31/48", "0", -15, ""},
        {"12(6)", 1, "-71/48", "0", 33, ""},
        {"14(2,1,1)", 1, "-21/16", "0", 17, ""},
        {"14(3,1,1)", 1, "-29/16", "0", 33, ""},
        {"14(3,2)", 1, "-29/16", "0", 17, ""},
    };
    return s;
}

GammaClass gamma_of(const std::string& label) {
    auto has = [&](const std::vector<std::string>& v) { return std::find(v.begin(), v.end(), label) != v.end(); };
    if (has(gamma0_labels())) return GammaClass::Gamma0;
    if (has(gamma_rat_labels())) return GammaClass::GammaRat;
    if (has(gamma_quad_labels())) return GammaClass::GammaQuad;
    return GammaClass::Other;
}

std::string key_of(const Portrait& p) { return std::to_string(p.size()) + ":" + canonical_form(p); }

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: quaddyn-build-catalog OUT.json\n";
        return 2;
    }
    std::vector<CatalogEntry> entries;
    std::map<std::string, std::string> label_of_key;
    for (const auto& s : seeds()) {
        QuadElem c(Integer(s.cd), parse_rational(s.ca), parse_rational(s.cb));
        PortraitResult pr = portrait_of(c, s.d);
        auto parts = parse_label(s.label);
        if (pr.portrait.size() != parts.vertices || cycle_structure(pr.portrait) != parts.cycles) {
            std::cerr << s.label << ": seed gives " << shape_of(pr.portrait) << "\n";
            return 1;
        }
        CatalogEntry e;
        e.label = s.label;
        e.portrait = pr.portrait;
        e.portrait.label = e.label;
        e.gamma = gamma_of(e.label);
        e.realization = Realization{c, s.d};
        e.verified = true;
        e.note = s.note;
        if (!label_of_key.emplace(key_of(e.portrait), e.label).second) {
            std::cerr << s.label << ": duplicates " << label_of_key[key_of(e.portrait)] << "\n";
            return 1;
        }
        entries.push_back(std::move(e));
    }

    // Minimal generic portraits (allowed cycle structures) not contained in
    // any member of the three families.
    std::vector<const Portrait*> gamma;
    for (const auto& e : entries)
        if (e.gamma != GammaClass::Other) gamma.push_back(&e.portrait);
    auto all = enumerate_generic(kEnumerateHardLimit, allowed_cycle_structures());
    auto dominated = [&](const Portrait& p) {
        return std::any_of(gamma.begin(), gamma.end(), [&](const Portrait* g) { return contains_subportrait(*g, p); });
    };
    std::vector<bool> dom(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) dom[i] = dominated(all[i]);
    std::vector<Portrait> minimal;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (dom[i]) continue;
        bool is_min = true;
        for (std::size_t j = 0; j < all.size() && is_min; ++j)
            if (j != i && !dom[j] && all[j].size() < all[i].size() && contains_subportrait(all[i], all[j])) is_min = false;
        if (is_min) minimal.push_back(all[i]);
    }
    int g = 0;
    for (auto& p : minimal) {
        if (label_of_key.count(key_of(p))) continue;  // already realized
        CatalogEntry e;
        if (cycle_structure(p) == CycleStructure{4}) {
            e.label = "10(4)";
            e.note = "subportrait of 12(4); no realization known";
        } else {
            e.label = "G" + std::to_string(++g);
            e.note = "index by convention: vertex count, then canonical form";
        }
        e.portrait = p;
        e.portrait.label = e.label;
        entries.push_back(std::move(e));
    }

    Catalog cat(entries);
    auto problems = cat.validate();
    auto bad = cat.check_realizations();
    problems.insert(problems.end(), bad.begin(), bad.end());
    for (const auto& p : problems) std::cerr << "problem: " << p << "\n";
    if (!problems.empty()) return 1;

    Json out = Json::array();
    for (const auto& e : entries) out.push_back(to_json(e));
    std::ofstream f(argv[1]);
    f << out.dump(1) << "\n";
    std::cerr << entries.size() << " entries written\n";
    return 0;
}
