// Command-line front end. Exit codes: 0 pass, 1 check failure, 2 usage error.
#include "quaddyn/catalog.hpp"
#include "quaddyn/checks.hpp"
#include "quaddyn/curves.hpp"
#include "quaddyn/dynatomic.hpp"
#include "quaddyn/errors.hpp"
#include "quaddyn/json_io.hpp"
#include "quaddyn/modp.hpp"
#include "quaddyn/orbit.hpp"
#include "quaddyn/portrait.hpp"
#include "quaddyn/scan.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <thread>

using namespace quaddyn;

namespace {

constexpr int kFail = 1;
constexpr int kUsage = 2;

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_rows(const std::vector<CheckRow>& rows) {
    std::size_t w = 5;
    for (const auto& r : rows) w = std::max(w, r.title.size());
    for (const auto& r : rows)
        std::cout << std::left << std::setw(8) << r.id << (r.pass ? "PASS  " : "FAIL  ") << std::setw(static_cast<int>(w) + 2)
                  << r.title << r.detail << "\n";
}

void print_tally(const ScanReport& r) {
    std::cout << "source " << r.source << "  height " << r.height << "  n_max " << r.n_max << "  scanned " << r.scanned
              << "  skipped " << r.skipped << "  " << std::fixed << std::setprecision(2) << r.elapsed_seconds << "s\n";
    for (const auto& [k, v] : r.tally) std::cout << "  " << std::left << std::setw(44) << k << v << "\n";
    if (!r.unclassified.empty()) std::cout << r.unclassified.size() << " unclassified portrait(s)\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaddyn: preperiodic portraits of z^2 + c over quadratic fields"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");
    int code = 0;

    // dynatomic
    auto* dyn = app.add_subcommand("dynatomic", "print Phi_n or the generalized Phi_{m,n}");
    long dyn_n = 2, dyn_m = 0;
    dyn->add_option("--n", dyn_n, "period")->check(CLI::Range(1, 12));
    dyn->add_option("--m", dyn_m, "preperiod")->check(CLI::Range(0, 4));
    dyn->callback([&] {
        BiPoly p = dyn_m == 0 ? dynatomic(dyn_n) : gen_dynatomic(dyn_m, dyn_n);
        if (json) {
            Json j;
            j["m"] = dyn_m;
            j["n"] = dyn_n;
            j["degree_z"] = p.degree_z();
            j["degree_c"] = p.degree_c();
            j["polynomial"] = p.to_string();
            print_json(j);
        } else {
            std::cout << p.to_string() << "\n";
        }
    });

    // portrait
    auto* por = app.add_subcommand("portrait", "preperiodic portrait of z^2 + c over Q(sqrt d)");
    std::string c_text = "0", cb_text = "0";
    long por_d = 1;
    int nmax = kDefaultNmax;
    por->add_option("--c", c_text, "rational part of c")->required();
    por->add_option("--cb", cb_text, "coefficient of sqrt d in c");
    por->add_option("--d", por_d, "squarefree d of the field");
    por->add_option("--nmax", nmax, "largest cycle length searched")->check(CLI::Range(1, 12));
    por->callback([&] {
        QuadElem c(Integer(por_d), parse_rational(c_text), parse_rational(cb_text));
        PortraitResult r = portrait_of(c, por_d, nmax);
        auto label = classify(r.portrait);
        if (json) {
            Json j = to_json(r);
            j["label"] = label ? Json(*label) : Json(nullptr);
            j["shape"] = shape_of(r.portrait);
            j["canonical"] = canonical_form(r.portrait);
            print_json(j);
            return;
        }
        std::cout << "c = " << r.c.to_string() << " over Q(sqrt " << por_d << "), n_max " << nmax << "\n";
        std::cout << "label " << (label ? *label : "unclassified (" + shape_of(r.portrait) + ")") << "\n";
        for (std::size_t i = 0; i < r.points.size(); ++i)
            std::cout << "  " << std::setw(3) << i << " -> " << std::setw(3) << r.portrait.succ[i] << "  (m,n)=("
                      << r.points[i].preperiod << "," << r.points[i].period << ")  " << r.points[i].value.to_string() << "\n";
    });

    // enumerate
    auto* en = app.add_subcommand("enumerate", "generic quadratic portraits up to a vertex count");
    int en_max = 8;
    std::string en_allowed;
    en->add_option("--limit", en_max, "maximum vertex count")->check(CLI::Range(0, kEnumerateHardLimit));
    en->add_option("--allowed", en_allowed, "cycle structures such as \"(2),(1,1)\"; default: any");
    en->callback([&] {
        std::vector<CycleStructure> allowed = en_allowed.empty() ? std::vector<CycleStructure>{} : parse_cycle_structures(en_allowed);
        auto ps = enumerate_generic(en_max, allowed);
        Json arr = Json::array();
        for (const auto& p : ps) {
            auto label = classify(p);
            if (json) {
                Json j = to_json(p);
                j["shape"] = shape_of(p);
                j["canonical"] = canonical_form(p);
                j["label"] = label ? Json(*label) : Json(nullptr);
                arr.push_back(j);
            } else {
                std::cout << std::left << std::setw(12) << shape_of(p) << std::setw(12) << (label ? *label : "-")
                          << canonical_form(p) << "\n";
            }
        }
        if (json) print_json(arr);
        else std::cout << ps.size() << " portraits\n";
    });

    // lift
    auto* lf = app.add_subcommand("lift", "lift a rational x to a quadratic point on a curve model");
    std::string lf_label, lf_x;
    lf->add_option("--label", lf_label, "model label")->required();
    lf->add_option("--x", lf_x, "rational x0")->required();
    lf->callback([&] {
        QuadraticPointRecord r = lift_x(lf_label, parse_rational(lf_x));
        if (json) {
            print_json(to_json(r));
            return;
        }
        std::cout << "x = " << r.x.to_string() << "  y = " << r.y.to_string() << "  field d = " << r.d << "\n";
        std::cout << "c = " << (r.c ? r.c->to_string() : std::string("pole")) << (r.degenerate ? "  (degenerate)" : "") << "\n";
    });

    // verify-identities
    auto* vi = app.add_subcommand("verify-identities", "symbolic curve identities and model realizations");
    std::vector<std::string> vi_only;
    vi->add_option("--only", vi_only, "identity names");
    vi->callback([&] {
        std::vector<CheckRow> rows;
        for (const auto& name : identity_names()) {
            if (!vi_only.empty() && std::find(vi_only.begin(), vi_only.end(), name) == vi_only.end()) continue;
            CheckRow r;
            r.id = "id";
            r.group = "identities";
            r.title = name;
            r.pass = verify_identity(name);
            rows.push_back(r);
        }
        if (json) {
            Json arr = Json::array();
            for (const auto& r : rows) arr.push_back(to_json(r));
            print_json(arr);
        } else {
            print_rows(rows);
        }
        for (const auto& r : rows)
            if (!r.pass) code = kFail;
    });

    // density
    auto* de = app.add_subcommand("density", "share of primes p <= limit with no root of f mod p");
    std::string de_poly = "10(3,1,1)";
    std::uint64_t de_limit = 1000000;
    unsigned jobs = default_jobs();
    de->add_option("--poly", de_poly, "named sextic (10(3,1,1), 10(3,2), 8(4)) or coefficients c0,c1,...");
    de->add_option("--limit", de_limit, "prime bound")->check(CLI::Range(std::uint64_t{100}, std::uint64_t{4000000000}));
    de->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    de->callback([&] {
        DensityReport r = density_pi_f(parse_int_poly(de_poly), de_limit, jobs);
        if (json) {
            print_json(to_json(r));
            return;
        }
        std::cout << r.in_pi << " of " << r.primes << " primes up to " << r.limit << ": " << std::setprecision(6)
                  << r.density.get_d() << " (natural density proxy)\n";
    });

    // verify-modp
    auto* vm = app.add_subcommand("verify-modp", "every finite-field check, one row each");
    vm->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    vm->callback([&] {
        auto rows = modp_matrix(jobs);
        if (json) {
            Json arr = Json::array();
            for (const auto& r : rows) arr.push_back(to_json(r));
            print_json(arr);
        } else {
            print_rows(rows);
        }
        for (const auto& r : rows)
            if (!r.pass) code = kFail;
    });

    // scan-rational
    auto* sr = app.add_subcommand("scan-rational", "classify G(f_c, Q) for every c up to a height");
    long height = 30;
    sr->add_option("--height", height, "height bound H")->check(CLI::PositiveNumber);
    sr->add_option("--nmax", nmax, "largest cycle length searched")->check(CLI::Range(1, 12));
    sr->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sr->callback([&] {
        ScanReport r = scan_rational(height, nmax, jobs);
        if (json) print_json(to_json(r));
        else print_tally(r);
    });

    // scan-curve
    auto* sc = app.add_subcommand("scan-curve", "portraits for parameters produced on a curve model");
    std::string sc_label;
    long lines = 0;
    sc->add_option("--label", sc_label, "model label")->required();
    sc->add_option("--height", height, "height bound for lifted x");
    sc->add_option("--limit", lines, "height bound for secant or Mumford lines (0: none)");
    sc->add_option("--nmax", nmax, "largest cycle length searched")->check(CLI::Range(1, 12));
    sc->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sc->callback([&] {
        ScanReport r = scan_curve(sc_label, height, nmax, lines, jobs);
        if (json) {
            print_json(to_json(r));
            return;
        }
        print_tally(r);
        long irr = 0, strict = 0, contain = 0;
        for (const auto& x : r.records) {
            irr += !x.c_rational;
            strict += x.strictly_larger;
            contain += x.contains_target;
        }
        std::cout << r.records.size() << " parameters: " << irr << " irrational c, " << strict
                  << " with new points over the quadratic field, " << contain << " containing " << sc_label << "\n";
    });

    // verify-all
    auto* va = app.add_subcommand("verify-all", "run the acceptance checks");
    std::vector<std::string> va_only;
    va->add_option("--only", va_only, "check ids or groups (catalog, dynatomic, orbit, rational, curves, modp, enumeration, inequalities)");
    va->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    va->callback([&] {
        CheckOptions opts;
        opts.only = va_only;
        opts.jobs = jobs;
        if (!json) opts.on_row = [](const CheckRow& r) { print_rows({r}); std::cout.flush(); };
        auto rows = run_checks(opts);
        if (rows.empty()) throw DomainError("--only matched no checks");
        if (json) {
            Json arr = Json::array();
            for (const auto& r : rows) arr.push_back(to_json(r));
            print_json(arr);
        }
        for (const auto& r : rows)
            if (!r.pass) code = kFail;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return code;
}
