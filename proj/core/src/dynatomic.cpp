#include "quaddyn/dynatomic.hpp"

#include "quaddyn/errors.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace quaddyn {

int mobius(long n) {
    if (n < 1) throw DomainError("mobius: n must be positive");
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

std::vector<long> divisors(long n) {
    if (n < 1) throw DomainError("divisors: n must be positive");
    std::vector<long> out;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

namespace {

std::mutex g_mutex;
// node-based maps keep references stable across insertions
std::map<long, std::unique_ptr<BiPoly>> g_iterates;
std::map<long, std::unique_ptr<BiPoly>> g_dynatomic;

const BiPoly& iterate_locked(long k) {
    auto it = g_iterates.find(k);
    if (it != g_iterates.end()) return *it->second;
    BiPoly v;
    if (k == 0)
        v = BiPoly::z();
    else {
        const BiPoly& prev = iterate_locked(k - 1);
        v = prev * prev + BiPoly::c();
    }
    return *g_iterates.emplace(k, std::make_unique<BiPoly>(std::move(v))).first->second;
}

}  // namespace

const BiPoly& iterate_poly(long k) {
    if (k < 0) throw DomainError("iterate_poly: k must be nonnegative");
    std::lock_guard<std::mutex> lock(g_mutex);
    return iterate_locked(k);
}

Integer degree_D(long n) {
    if (n < 1) throw DomainError("degree_D: n must be positive");
    Integer total = 0;
    for (long d : divisors(n)) total += mobius(n / d) * pow(Integer(2), static_cast<unsigned long>(d));
    return total;
}

Integer cycle_bound_R(long n) {
    Integer D = degree_D(n);
    if (!mpz_divisible_ui_p(D.get_mpz_t(), static_cast<unsigned long>(n))) throw InternalError("D(n) not divisible by n");
    return D / n;
}

const BiPoly& dynatomic(long n) {
    if (n < 1) throw DomainError("dynatomic: n must be positive");
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_dynatomic.find(n);
    if (it != g_dynatomic.end()) return *it->second;
    BiPoly num = BiPoly::constant(1), den = BiPoly::constant(1);
    for (long d : divisors(n)) {
        int mu = mobius(n / d);
        if (mu == 0) continue;
        BiPoly factor = iterate_locked(d) - BiPoly::z();
        if (mu > 0)
            num = num * factor;
        else
            den = den * factor;
    }
    BiPoly phi = num.exact_div(den);
    return *g_dynatomic.emplace(n, std::make_unique<BiPoly>(std::move(phi))).first->second;
}

BiPoly gen_dynatomic(long m, long n) {
    if (m < 0) throw DomainError("gen_dynatomic: m must be nonnegative");
    const BiPoly& phi = dynatomic(n);
    if (m == 0) return phi;
    BiPoly top = phi.compose_z(iterate_poly(m));
    BiPoly bottom = phi.compose_z(iterate_poly(m - 1));
    return top.exact_div(bottom);
}

FpPoly dynatomic_mod_p(long n, std::uint64_t c, std::uint64_t p) {
    if (n < 1) throw DomainError("dynatomic_mod_p: n must be positive");
    FpPoly z = FpPoly::x(p), cc = FpPoly::constant(p, c % p);
    std::vector<FpPoly> iter{z};
    for (long k = 1; k <= n; ++k) iter.push_back(iter.back() * iter.back() + cc);
    FpPoly num = FpPoly::constant(p, 1), den = FpPoly::constant(p, 1);
    for (long d : divisors(n)) {
        int mu = mobius(n / d);
        if (mu > 0) num = num * (iter[static_cast<std::size_t>(d)] - z);
        if (mu < 0) den = den * (iter[static_cast<std::size_t>(d)] - z);
    }
    FpPoly q, r;
    num.divmod(den, q, r);
    if (!r.is_zero()) throw InternalError("dynatomic_mod_p: inexact division");
    return q;
}

}  // namespace quaddyn
