#include "quaddyn/roots.hpp"

#include "quaddyn/errors.hpp"
#include "quaddyn/finite_field.hpp"
#include "quaddyn/numtheory.hpp"

#include <algorithm>
#include <map>

namespace quaddyn {

namespace {

Integer mod_sym(const Integer& x, const Integer& m) {
    Integer r = x % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

Integer mod_pos(const Integer& x, const Integer& m) {
    Integer r = x % m;
    if (r < 0) r += m;
    return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer out;
    if (!mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t())) throw InternalError("hensel: derivative not a unit");
    return out;
}

// Fujiwara bound on |root| for a monic integer polynomial.
Integer root_bound(const IntPoly& f) {
    long n = f.degree();
    Integer best = 0;
    for (long k = 1; k <= n; ++k) {
        Integer a = abs(f.coeffs()[static_cast<std::size_t>(n - k)]);
        if (k == n) a = a / 2 + 1;
        if (a == 0) continue;
        Integer r;
        mpz_root(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
        r += 1;
        if (r > best) best = r;
    }
    return 2 * best + 1;
}

// (a + b t) arithmetic modulo M with t^2 = r
struct W {
    Integer a, b;
};

W w_mul(const W& x, const W& y, const Integer& r, const Integer& M) {
    return {mod_pos(x.a * y.a + r * x.b * y.b, M), mod_pos(x.a * y.b + x.b * y.a, M)};
}

W w_inv(const W& x, const Integer& r, const Integer& M) {
    Integer n = mod_pos(x.a * x.a - r * x.b * x.b, M);
    Integer ni = inverse_mod(n, M);
    return {mod_pos(x.a * ni, M), mod_pos(-x.b * ni, M)};
}

void w_eval(const IntPoly& f, const W& x, const Integer& r, const Integer& M, W& val, W& dval) {
    val = {0, 0};
    dval = {0, 0};
    const auto& c = f.coeffs();
    for (auto i = c.size(); i-- > 0;) {
        dval = w_mul(dval, x, r, M);
        dval.a = mod_pos(dval.a + val.a, M);
        dval.b = mod_pos(dval.b + val.b, M);
        val = w_mul(val, x, r, M);
        val.a = mod_pos(val.a + c[i], M);
    }
}

bool divides_quadratic(const IntPoly& f, const Integer& t, const Integer& N) {
    IntPoly q({N, -t, Integer(1)});
    IntPoly quo, rem;
    f.divmod(q, quo, rem);
    return rem.is_zero();
}

}  // namespace

Integer monic_scale(const RatPoly& q) {
    long n = q.degree();
    Integer lcm_den = 1;
    for (const auto& c : q.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    if (lcm_den == 1) return 1;
    Integer s = 1;
    for (const auto& [ell, e_unused] : factor(lcm_den)) {
        (void)e_unused;
        long need = 0;
        for (long i = 0; i < n; ++i) {
            const Rational& c = q.coeffs()[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            long v = -valuation(c, ell);
            if (v <= 0) continue;
            long k = n - i;
            need = std::max(need, (v + k - 1) / k);
        }
        s *= pow(ell, static_cast<unsigned long>(need));
    }
    return s;
}

LowDegreeRoots low_degree_roots(const RatPoly& q_in, bool want_quadratic) {
    if (q_in.is_zero()) throw DomainError("low_degree_roots: zero polynomial");
    LowDegreeRoots out;
    RatPoly q = q_in.monic();
    if (q.degree() < 1) return out;
    Integer s = monic_scale(q);
    out.scale = s;
    long n = q.degree();
    std::vector<Integer> zc(static_cast<std::size_t>(n + 1));
    for (long i = 0; i <= n; ++i) {
        Rational v = q.coeffs()[static_cast<std::size_t>(i)] * Rational(pow(s, static_cast<unsigned long>(n - i)));
        if (v.get_den() != 1) throw InternalError("low_degree_roots: rescaling not integral");
        zc[static_cast<std::size_t>(i)] = v.get_num();
    }
    IntPoly f(std::move(zc));

    // find a prime modulo which f is squarefree; drop repeated factors if none
    auto find_prime = [](const IntPoly& g) -> std::uint64_t {
        std::uint64_t tries = 0;
        for (std::uint64_t p = 3; tries < 400; p += 2) {
            if (!is_prime(p)) continue;
            ++tries;
            if (is_squarefree(FpPoly::from_integers(p, g.coeffs()))) return p;
        }
        return 0;
    };
    std::uint64_t p = find_prime(f);
    if (p == 0) {
        RatPoly fr(std::vector<Rational>(f.coeffs().begin(), f.coeffs().end()));
        RatPoly g = gcd(fr, fr.derivative());
        f = to_integer(fr.exact_div(g).monic());
        p = find_prime(f);
        if (p == 0) throw InternalError("low_degree_roots: no squarefree reduction found");
    }
    out.prime = p;
    if (f.degree() < 1) return out;

    Integer R = root_bound(f);
    Integer need = 4 * R * R + 4 * R + 4;
    Integer P(static_cast<unsigned long>(p)), M = P;
    unsigned long k = 1;
    while (M <= need) {
        M *= P;
        ++k;
    }
    unsigned iters = 0;
    for (unsigned long prec = 1; prec < k; prec *= 2) ++iters;

    FpPoly fp = FpPoly::from_integers(p, f.coeffs());
    IntPoly df = f.derivative();

    // rational p-adic roots
    std::vector<Integer> lifted;
    for (std::uint64_t r0 : roots_mod_p(fp)) {
        Integer r(static_cast<unsigned long>(r0));
        for (unsigned i = 0; i < iters; ++i) {
            Integer v = mod_pos(f.eval(r), M), dv = mod_pos(df.eval(r), M);
            r = mod_pos(r - v * inverse_mod(dv, M), M);
        }
        lifted.push_back(r);
        Integer cand = mod_sym(r, M);
        if (abs(cand) <= R && f.eval(cand) == 0) out.linear.push_back(cand);
    }
    std::sort(out.linear.begin(), out.linear.end());
    if (!want_quadratic) return out;

    std::set<std::pair<Integer, Integer>> found;
    auto consider = [&](const Integer& t_raw, const Integer& N_raw) {
        Integer t = mod_sym(t_raw, M), N = mod_sym(N_raw, M);
        if (abs(t) > 2 * R || abs(N) > R * R) return;
        Integer disc = t * t - 4 * N;
        if (is_square(disc)) return;
        if (found.count({t, N})) return;
        if (divides_quadratic(f, t, N)) found.insert({t, N});
    };
    // both conjugates reduce into F_p
    for (std::size_t i = 0; i < lifted.size(); ++i)
        for (std::size_t j = i + 1; j < lifted.size(); ++j) consider(lifted[i] + lifted[j], lifted[i] * lifted[j]);
    // conjugates reduce to a Frobenius pair in F_{p^2}
    auto quads = quadratic_factors_mod_p(fp);
    if (!quads.empty()) {
        Fp2 F(p);
        Integer r(static_cast<unsigned long>(F.nonresidue()));
        for (const auto& qf : quads) {
            auto root = F.root_of(qf);
            W x{Integer(static_cast<unsigned long>(root.a)), Integer(static_cast<unsigned long>(root.b))};
            for (unsigned i = 0; i < iters; ++i) {
                W v, dv;
                w_eval(f, x, r, M, v, dv);
                W step = w_mul(v, w_inv(dv, r, M), r, M);
                x = {mod_pos(x.a - step.a, M), mod_pos(x.b - step.b, M)};
            }
            consider(2 * x.a, x.a * x.a - r * x.b * x.b);
        }
    }
    out.quadratic.assign(found.begin(), found.end());
    return out;
}

std::vector<QuadElem> roots_in_field(const QuadPoly& p, const Integer& d) {
    if (p.is_zero()) throw DomainError("roots_in_field: zero polynomial");
    std::vector<QuadElem> out;
    if (p.degree() < 1) return out;
    bool rational_coeffs = std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const QuadElem& c) { return c.is_rational(); });
    for (const auto& c : p.coeffs())
        if (!c.is_rational() && c.d() != d) throw DomainError("roots_in_field: coefficients outside Q(sqrt " + d.get_str() + ")");
    RatPoly q = rational_coeffs ? to_rational(p) : to_rational(p * conjugate(p));
    LowDegreeRoots lr = low_degree_roots(q, d != 1);
    Rational s(lr.scale);
    auto push = [&](const QuadElem& x) {
        if (std::find(out.begin(), out.end(), x) != out.end()) return;
        if (p.eval(x).is_zero()) out.push_back(x);
    };
    for (const auto& r : lr.linear) push(QuadElem(d, Rational(r) / s, 0));
    for (const auto& [t, N] : lr.quadratic) {
        Integer disc = t * t - 4 * N;
        if (sqf(Rational(disc)) != d) continue;
        auto m = rational_sqrt(Rational(disc) / Rational(d));
        if (!m) throw InternalError("roots_in_field: discriminant class mismatch");
        for (int sign : {1, -1}) push(QuadElem(d, Rational(t) / (2 * s), Rational(sign) * *m / (2 * s)));
    }
    std::sort(out.begin(), out.end(), height_less);
    return out;
}

std::set<Integer> quadratic_root_fields(const RatPoly& q) {
    std::set<Integer> out;
    for (const auto& [t, N] : low_degree_roots(q, true).quadratic) out.insert(sqf(Rational(t * t - 4 * N)));
    return out;
}

}  // namespace quaddyn
