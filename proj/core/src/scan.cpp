#include "quaddyn/scan.hpp"

#include "quaddyn/catalog.hpp"
#include "quaddyn/curves.hpp"
#include "quaddyn/errors.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

namespace quaddyn {

namespace {

// Runs body(i) for i in [0, n) on `jobs` threads, striding so the split is
// independent of timing.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(jobs);
    for (unsigned k = 0; k < jobs; ++k)
        pool.emplace_back([&, k] {
            try {
                for (std::size_t i = k; i < n; i += jobs) body(i);
            } catch (...) {
                errs[k] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

struct Classified {
    std::string label;
    bool ok = false;
};

Classified classify_result(const PortraitResult& pr) {
    if (auto l = default_catalog().classify(pr.portrait)) return {*l, true};
    return {canonical_form(pr.portrait), false};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

ScanReport scan_rational(long H, int n_max, unsigned jobs) {
    if (H < 1) throw DomainError("height bound must be positive");
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Rational> cs;
    for (long b = 1; b <= H; ++b)
        for (long a = -H; a <= H; ++a)
            if (std::gcd(a, b) == 1) cs.emplace_back(a, b);
    std::vector<Classified> out(cs.size());
    parallel_for(cs.size(), jobs, [&](std::size_t i) { out[i] = classify_result(portrait_of(QuadElem(cs[i]), 1, n_max)); });

    ScanReport r;
    r.source = "rational";
    r.height = H;
    r.n_max = n_max;
    r.scanned = static_cast<long>(cs.size());
    std::set<std::string> unc;
    for (const auto& c : out) {
        ++r.tally[c.label];
        if (!c.ok) unc.insert(c.label);
    }
    r.unclassified.assign(unc.begin(), unc.end());
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

std::vector<CurveParameter> curve_parameters(const std::string& label, long H, long line_height, long* skipped,
                                             long* scanned) {
    if (H < 1) throw DomainError("height bound must be positive");
    const CurveModel& m = model(label);
    if (!m.c_map) throw DomainError("model has no c-map: " + label);
    long n_skipped = 0, n_scanned = 0;
    // conjugate pairs give conjugate c and isomorphic portraits
    std::vector<CurveParameter> out;
    std::set<std::tuple<Rational, Rational, Integer>> seen;
    auto take = [&](const QuadraticPointRecord& q, const char* source) {
        ++n_scanned;
        if (q.degenerate || !q.c) {
            ++n_skipped;
            return;
        }
        if (!seen.emplace(q.c->a(), abs(q.c->b()), q.d).second) return;
        out.push_back({source, *q.c, q.d});
    };
    for (const Rational& x0 : rationals_up_to_height(H)) take(lift_x(label, x0), "lift");
    if (line_height > 0) {
        long deg = m.form == ModelForm::Plane ? 0 : m.rhs().degree();
        auto slopes = rationals_up_to_height(line_height);
        if (deg == 3) {
            for (const auto& [x0, y0] : small_rational_points(label, 3))
                for (const Rational& t : slopes)
                    for (const auto& q : line_points(label, x0, y0, t)) take(q, "line");
        } else if (deg >= 5 && m.form == ModelForm::Hyperelliptic) {
            for (const Rational& v1 : slopes)
                for (const Rational& v0 : slopes)
                    for (const auto& q : mumford_line_points(label, v1, v0)) take(q, "mumford");
        }
    }
    if (skipped) *skipped = n_skipped;
    if (scanned) *scanned = n_scanned;
    return out;
}

ScanReport scan_curve(const std::string& label, long H, int n_max, long line_height, unsigned jobs) {
    auto t0 = std::chrono::steady_clock::now();
    ScanReport r;
    r.source = label;
    r.height = H;
    r.n_max = n_max;
    auto params = curve_parameters(label, H, line_height, &r.skipped, &r.scanned);
    const CatalogEntry* target = default_catalog().find(portrait_label_of_model(label));

    std::vector<CurveScanRecord> cand;
    for (auto& p : params) {
        CurveScanRecord rec;
        rec.source = p.source;
        rec.c = p.c;
        rec.d = p.d;
        rec.c_rational = p.c.is_rational();
        cand.push_back(std::move(rec));
    }

    parallel_for(cand.size(), jobs, [&](std::size_t i) {
        auto& rec = cand[i];
        PortraitResult pr = portrait_of(rec.c, rec.d, n_max);
        Classified cl = classify_result(pr);
        rec.label = cl.label;
        rec.classified = cl.ok;
        if (target) rec.contains_target = contains_subportrait(pr.portrait, target->portrait);
        if (rec.c_rational && rec.d != 1)
            rec.strictly_larger = portrait_of(rec.c, 1, n_max).portrait.size() < pr.portrait.size();
    });

    std::set<std::string> unc;
    for (const auto& rec : cand) {
        ++r.tally[rec.label];
        if (!rec.classified) unc.insert(rec.label);
    }
    r.unclassified.assign(unc.begin(), unc.end());
    std::stable_sort(cand.begin(), cand.end(), [](const CurveScanRecord& a, const CurveScanRecord& b) {
        if (height_less(a.c, b.c) != height_less(b.c, a.c)) return height_less(a.c, b.c);
        return a.d < b.d;
    });
    r.records = std::move(cand);
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

}  // namespace quaddyn
