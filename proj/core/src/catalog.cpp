#include "quaddyn/catalog.hpp"

#include "quaddyn/errors.hpp"
#include "quaddyn/json_io.hpp"
#include "quaddyn/orbit.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#ifndef QUADDYN_CATALOG_SOURCE
#define QUADDYN_CATALOG_SOURCE "data/catalog.json"
#endif
#ifndef QUADDYN_CATALOG_INSTALLED
#define QUADDYN_CATALOG_INSTALLED "/usr/local/share/quaddyn/catalog.json"
#endif

namespace quaddyn {

std::string to_string(GammaClass g) {
    switch (g) {
        case GammaClass::Gamma0: return "gamma0";
        case GammaClass::GammaRat: return "gamma_rat";
        case GammaClass::GammaQuad: return "gamma_quad";
        case GammaClass::Other: return "other";
    }
    return "other";
}

GammaClass parse_gamma(const std::string& s) {
    if (s == "gamma0" || s == "Γ0" || s == "Γ₀") return GammaClass::Gamma0;
    if (s == "gamma_rat" || s == "Γ_rat") return GammaClass::GammaRat;
    if (s == "gamma_quad" || s == "Γ_quad") return GammaClass::GammaQuad;
    if (s == "other") return GammaClass::Other;
    throw DomainError("unknown gamma class \"" + s + "\"");
}

Catalog::Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        by_label_.emplace(entries_[i].label, i);
        by_canonical_.emplace(std::to_string(entries_[i].portrait.size()) + ":" + canonical_form(entries_[i].portrait), i);
    }
}

Catalog Catalog::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("catalog: malformed JSON: ") + e.what());
    }
    if (!j.is_array()) throw DomainError("catalog: top level must be an array");
    std::vector<CatalogEntry> entries;
    for (const auto& rec : j) entries.push_back(catalog_entry_from_json(rec));
    return Catalog(std::move(entries));
}

Catalog Catalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("catalog: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string default_catalog_path() {
    if (const char* env = std::getenv("QUADDYN_CATALOG"); env && *env) return env;
    if (std::filesystem::exists(QUADDYN_CATALOG_SOURCE)) return QUADDYN_CATALOG_SOURCE;
    return QUADDYN_CATALOG_INSTALLED;
}

Catalog Catalog::load_default() { return load(default_catalog_path()); }

const Catalog& default_catalog() {
    static std::once_flag once;
    static std::unique_ptr<Catalog> cat;
    std::call_once(once, [] { cat = std::make_unique<Catalog>(Catalog::load_default()); });
    return *cat;
}

std::optional<std::string> classify(const Portrait& p) { return default_catalog().classify(p); }

const CatalogEntry* Catalog::find(const std::string& label) const {
    std::string key = label == "0" ? "∅" : label;
    auto it = by_label_.find(key);
    return it == by_label_.end() ? nullptr : &entries_[it->second];
}

std::optional<std::string> Catalog::classify(const Portrait& p) const {
    auto it = by_canonical_.find(std::to_string(p.size()) + ":" + canonical_form(p));
    if (it == by_canonical_.end()) return std::nullopt;
    return entries_[it->second].label;
}

const std::vector<std::string>& gamma0_labels() {
    static const std::vector<std::string> v{"∅", "4(1,1)", "4(2)", "6(1,1)", "6(2)", "6(3)", "8(2,1,1)"};
    return v;
}
const std::vector<std::string>& gamma_rat_labels() {
    static const std::vector<std::string> v{"8(1,1)a", "8(2)a", "8(4)", "10(3,1,1)", "10(3,2)"};
    return v;
}
const std::vector<std::string>& gamma_quad_labels() {
    static const std::vector<std::string> v{"8(1,1)b", "8(2)b", "8(3)", "10(2,1,1)a", "10(2,1,1)b"};
    return v;
}
const std::vector<std::string>& rational_twelve_labels() {
    static const std::vector<std::string> v{"∅",    "2(1)", "3(1,1)", "3(2)", "4(1,1)",   "4(2)",
                                            "5(1,1)a", "6(1,1)", "6(2)", "6(3)", "8(2,1,1)", "8(3)"};
    return v;
}
const std::vector<std::string>& quadratic_catalog_labels() {
    static const std::vector<std::string> v{
        "∅",        "2(1)",     "3(1,1)",     "3(2)",       "4(1)",     "4(1,1)",   "4(2)",       "5(1,1)a",
        "5(1,1)b",  "5(2)a",    "5(2)b",      "6(1,1)",     "6(2)",     "6(2,1)",   "6(3)",       "7(1,1)a",
        "7(1,1)b",  "7(2,1,1)a", "7(2,1,1)b", "8(1,1)a",    "8(1,1)b",  "8(2)a",    "8(2)b",      "8(2,1,1)",
        "8(3)",     "8(4)",     "9(2,1,1)",   "10(1,1)a",   "10(1,1)b", "10(2)",    "10(2,1,1)a", "10(2,1,1)b",
        "10(3)a",   "10(3)b",   "10(3,1,1)",  "10(3,2)",    "12(2)",    "12(2,1,1)a", "12(2,1,1)b", "12(3)",
        "12(4)",    "12(4,2)",  "12(6)",      "14(2,1,1)",  "14(3,1,1)", "14(3,2)"};
    return v;
}
const std::vector<std::string>& excluded_labels() {
    static const std::vector<std::string> v{"10(1,1)a", "10(1,1)b", "10(2)", "10(3)a", "10(3)b", "10(4)",
                                            "12(2,1,1)a", "12(2,1,1)b", "G1", "G2", "G3", "G4", "G5",
                                            "G6", "G7", "G8", "G9", "G10"};
    return v;
}
const std::vector<CycleStructure>& allowed_cycle_structures() {
    static const std::vector<CycleStructure> v{{}, {1, 1}, {2}, {3}, {4}, {2, 1, 1}, {3, 1, 1}, {3, 2}};
    return v;
}

LabelParts parse_label(const std::string& label) {
    LabelParts out;
    if (label == "∅" || label == "0") return out;
    auto open = label.find('(');
    auto close = label.find(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw DomainError("label \"" + label + "\" has no cycle structure");
    try {
        out.vertices = std::stoi(label.substr(0, open));
    } catch (const std::exception&) {
        throw DomainError("label \"" + label + "\" has no vertex count");
    }
    auto cs = parse_cycle_structures(label.substr(open, close - open + 1));
    out.cycles = cs.empty() ? CycleStructure{} : cs.front();
    out.suffix = label.substr(close + 1);
    return out;
}

std::vector<std::string> Catalog::validate() const {
    std::vector<std::string> problems;
    std::set<std::string> labels, canon;
    for (const auto& e : entries_) {
        if (!labels.insert(e.label).second) problems.push_back("duplicate label " + e.label);
        std::string key = std::to_string(e.portrait.size()) + ":" + canonical_form(e.portrait);
        if (!canon.insert(key).second) problems.push_back("label " + e.label + " repeats an earlier portrait");
        if (!is_quadratic(e.portrait)) problems.push_back("label " + e.label + " is not a quadratic portrait");
        if (e.label.front() != 'G') {
            try {
                auto parts = parse_label(e.label);
                if (parts.vertices != e.portrait.size())
                    problems.push_back("label " + e.label + " has " + std::to_string(e.portrait.size()) + " vertices");
                if (parts.cycles != cycle_structure(e.portrait))
                    problems.push_back("label " + e.label + " has cycle structure " +
                                       format_cycle_structure(cycle_structure(e.portrait)));
            } catch (const DomainError& ex) {
                problems.push_back(ex.what());
            }
        } else if (!is_generic_quadratic(e.portrait)) {
            problems.push_back("label " + e.label + " is not generic");
        }
        if (e.realization && !e.verified)
            problems.push_back("label " + e.label + " carries a realization but is flagged unverified");
    }
    auto require = [&](const std::vector<std::string>& want, const char* what) {
        for (const auto& l : want)
            if (!labels.count(l)) problems.push_back(std::string("missing ") + what + " label " + l);
    };
    require(quadratic_catalog_labels(), "catalog");
    require(excluded_labels(), "excluded-list");
    auto tag = [&](const std::vector<std::string>& want, GammaClass g) {
        for (const auto& l : want)
            if (const auto* e = find(l); e && e->gamma != g)
                problems.push_back("label " + l + " should be tagged " + to_string(g));
    };
    tag(gamma0_labels(), GammaClass::Gamma0);
    tag(gamma_rat_labels(), GammaClass::GammaRat);
    tag(gamma_quad_labels(), GammaClass::GammaQuad);
    for (const auto& e : entries_) {
        bool in_sets = false;
        for (const auto* set : {&gamma0_labels(), &gamma_rat_labels(), &gamma_quad_labels()})
            if (std::find(set->begin(), set->end(), e.label) != set->end()) in_sets = true;
        if (!in_sets && e.gamma != GammaClass::Other) problems.push_back("label " + e.label + " wrongly tagged " + to_string(e.gamma));
    }
    return problems;
}

std::vector<std::string> Catalog::check_realizations(int n_max) const {
    std::vector<std::string> problems;
    for (const auto& e : entries_) {
        if (!e.realization) continue;
        try {
            auto res = portrait_of(e.realization->c, e.realization->d, n_max);
            if (!is_isomorphic(res.portrait, e.portrait))
                problems.push_back("label " + e.label + ": c = " + e.realization->c.to_string() + " over Q(sqrt " +
                                   e.realization->d.get_str() + ") gives " + shape_of(res.portrait));
        } catch (const std::exception& ex) {
            problems.push_back("label " + e.label + ": " + ex.what());
        }
    }
    return problems;
}

}  // namespace quaddyn
