#pragma once

#include <functional>
#include <string>
#include <vector>

namespace quaddyn {

struct CheckRow {
    std::string id;     // "catalog", "C1" .. "C10"
    std::string group;  // catalog, dynatomic, orbit, rational, curves, modp, enumeration, inequalities
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct CheckOptions {
    // ids or groups to run; empty runs everything
    std::vector<std::string> only;
    unsigned jobs = 1;
    // called after each row, for streaming output
    std::function<void(const CheckRow&)> on_row;
};

struct CheckInfo {
    std::string id, group, title;
};
const std::vector<CheckInfo>& check_list();

// Runs the selected checks in list order. A check that throws is reported
// as a failing row carrying the exception text.
std::vector<CheckRow> run_checks(const CheckOptions& opts = {});

// Finer-grained finite-field matrix; each row's group is the criterion id
// (C5 .. C8) it feeds.
std::vector<CheckRow> modp_matrix(unsigned jobs = 1);

}  // namespace quaddyn
