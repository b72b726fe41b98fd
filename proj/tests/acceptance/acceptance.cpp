// One line per acceptance criterion. Exit status is 0 only when the failing
// criteria are exactly those passed via --expect-fail, so a known gap stays
// visible as FAIL without hiding a regression anywhere else.
#include "quaddyn/checks.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <set>
#include <thread>

using namespace quaddyn;

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<std::string> expect_fail, only;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--expect-fail", expect_fail, "criterion ids known to fail");
    app.add_option("--only", only, "criterion ids or groups");
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    CheckOptions opts;
    opts.only = only;
    opts.jobs = jobs;
    opts.on_row = [](const CheckRow& r) {
        std::printf("%-4s %-8s %-52s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
    };
    auto rows = run_checks(opts);
    if (rows.empty()) {
        std::cerr << "no criteria selected\n";
        return 2;
    }

    std::set<std::string> failed, expected(expect_fail.begin(), expect_fail.end());
    for (const auto& r : rows)
        if (!r.pass) failed.insert(r.id);
    std::size_t passed = rows.size() - failed.size();
    std::printf("%zu/%zu criteria pass\n", passed, rows.size());

    int rc = 0;
    for (const auto& id : failed)
        if (!expected.count(id)) {
            std::printf("unexpected failure: %s\n", id.c_str());
            rc = 1;
        }
    for (const auto& id : expected) {
        bool ran = std::any_of(rows.begin(), rows.end(), [&](const CheckRow& r) { return r.id == id; });
        if (ran && !failed.count(id)) {
            std::printf("expected failure now passes, update --expect-fail: %s\n", id.c_str());
            rc = 1;
        } else if (ran) {
            std::printf("known failure: %s\n", id.c_str());
        }
    }
    return rc;
}
