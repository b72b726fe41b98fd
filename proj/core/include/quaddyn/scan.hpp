#pragma once

#include "quaddyn/orbit.hpp"
#include "quaddyn/quadfield.hpp"

#include <map>
#include <string>
#include <vector>

namespace quaddyn {

// One parameter produced by a curve scan.
struct CurveScanRecord {
    std::string source;  // "lift", "line" or "mumford"
    QuadElem c;
    Integer d{1};         // field of the portrait
    std::string label;    // catalog label, or the canonical form when unclassified
    bool classified = false;
    bool c_rational = false;
    // c rational and G(f_c, Q(sqrt d)) has more vertices than G(f_c, Q)
    bool strictly_larger = false;
    // portrait contains the catalog portrait of the scanned label
    bool contains_target = false;
};

struct ScanReport {
    std::string source;  // "rational" or a model label
    long height = 0;
    int n_max = kDefaultNmax;
    long scanned = 0;
    long skipped = 0;  // degenerate points and poles of the c-map
    std::map<std::string, long> tally;
    std::vector<std::string> unclassified;  // canonical forms, sorted, unique
    std::vector<CurveScanRecord> records;   // curve scans only, sorted by (height of c, d)
    double elapsed_seconds = 0;
};

// Every c = a/b with |a| <= H, 1 <= b <= H, gcd(a, b) = 1.
ScanReport scan_rational(long H, int n_max = kDefaultNmax, unsigned jobs = 1);

inline constexpr long kDefaultLineHeight = 9;

// Parameters c produced on a model, without portraits: lifts of every x0 of
// height <= H, then (line_height > 0) secants of slope up to that height
// through small rational points on cubic models, or lines y = v1 x + v0
// with v1, v0 up to that height on sextic models. One c per conjugate pair;
// `skipped` counts degenerate points and poles.
struct CurveParameter {
    std::string source;  // "lift", "line" or "mumford"
    QuadElem c;
    Integer d{1};
};
std::vector<CurveParameter> curve_parameters(const std::string& label, long H, long line_height, long* skipped = nullptr,
                                             long* scanned = nullptr);

// Portraits for every curve_parameters entry. DomainError for a label
// without a c-map.
ScanReport scan_curve(const std::string& label, long H, int n_max = kDefaultNmax, long line_height = 0,
                      unsigned jobs = 1);

}  // namespace quaddyn
