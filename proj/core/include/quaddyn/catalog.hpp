#pragma once

#include "quaddyn/portrait.hpp"
#include "quaddyn/quadfield.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace quaddyn {

enum class GammaClass { Gamma0, GammaRat, GammaQuad, Other };

std::string to_string(GammaClass g);
GammaClass parse_gamma(const std::string& s);

// A parameter c in Q(sqrt d) with G(f_c, Q(sqrt d)) isomorphic to the entry.
struct Realization {
    QuadElem c;
    Integer d{1};
};

struct CatalogEntry {
    std::string label;
    Portrait portrait;
    GammaClass gamma = GammaClass::Other;
    std::optional<Realization> realization;
    bool verified = false;  // false: "unverified-by-realization"
    std::string note;
};

class Catalog {
public:
    Catalog() = default;
    explicit Catalog(std::vector<CatalogEntry> entries);
    static Catalog load(const std::string& path);
    static Catalog from_json_text(const std::string& text);
    // $QUADDYN_CATALOG, else the installed copy, else the source tree copy.
    static Catalog load_default();

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const CatalogEntry* find(const std::string& label) const;
    std::optional<std::string> classify(const Portrait& p) const;

    // Structural invariants; empty result means the catalog is consistent.
    std::vector<std::string> validate() const;
    // For entries carrying a realization: recompute the portrait of that c
    // and compare. Returns one diagnostic per failure.
    std::vector<std::string> check_realizations(int n_max = 6) const;

private:
    std::vector<CatalogEntry> entries_;
    std::map<std::string, std::size_t> by_canonical_;
    std::map<std::string, std::size_t> by_label_;
};

std::string default_catalog_path();
// Process-wide default catalog (loaded once).
const Catalog& default_catalog();
std::optional<std::string> classify(const Portrait& p);

// Label families.
const std::vector<std::string>& gamma0_labels();
const std::vector<std::string>& gamma_rat_labels();
const std::vector<std::string>& gamma_quad_labels();
const std::vector<std::string>& rational_twelve_labels();
const std::vector<std::string>& quadratic_catalog_labels();  // the 46 generic-or-not labels
const std::vector<std::string>& excluded_labels();            // minimal non-realizable list
const std::vector<CycleStructure>& allowed_cycle_structures();

// "8(2,1,1)a" -> (8, {2,1,1}, "a"); "∅" and "0" are the empty portrait.
struct LabelParts {
    int vertices = 0;
    CycleStructure cycles;
    std::string suffix;
};
LabelParts parse_label(const std::string& label);

}  // namespace quaddyn
