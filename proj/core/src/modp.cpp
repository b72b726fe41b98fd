#include "quaddyn/modp.hpp"

#include "quaddyn/errors.hpp"
#include "quaddyn/finite_field.hpp"
#include "quaddyn/numtheory.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

namespace quaddyn {

namespace {

IntPoly ints(std::vector<long> lo_to_hi) {
    std::vector<Integer> c;
    for (long v : lo_to_hi) c.emplace_back(v);
    return IntPoly(std::move(c));
}

const std::map<std::string, IntPoly>& sextics() {
    static const std::map<std::string, IntPoly> m{
        {"10(3,1,1)", ints({1, 4, 10, 10, 5, 2, 1})},
        {"10(3,2)", ints({1, 4, 6, 2, 1, 2, 1})},
        // -x(x^2+1)(x^2-2x-1)
        {"8(4)", ints({0, 1, 2, 0, 2, -1})},
    };
    return m;
}

Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

FpPoly reduce(const IntPoly& f, std::uint64_t p) { return FpPoly::from_integers(p, f.coeffs()); }

}  // namespace

const IntPoly& named_sextic(const std::string& name) {
    auto it = sextics().find(name);
    if (it == sextics().end()) throw DomainError("unknown polynomial name: " + name);
    return it->second;
}

std::vector<std::string> named_sextic_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : sextics()) out.push_back(k);
    return out;
}

IntPoly parse_int_poly(const std::string& text) {
    if (sextics().count(text)) return named_sextic(text);
    std::vector<Integer> c;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto b = tok.find_first_not_of(" \t");
        auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw DomainError("empty coefficient in: " + text);
        Integer v;
        if (v.set_str(tok.substr(b, e - b + 1), 10) != 0) throw DomainError("bad coefficient: " + tok);
        c.push_back(v);
    }
    if (c.empty()) throw DomainError("empty polynomial");
    return IntPoly(std::move(c));
}

bool has_root_mod_p(const IntPoly& f, std::uint64_t p) {
    if (!is_prime(p)) throw DomainError("modulus is not prime");
    FpPoly g = reduce(f, p);
    if (g.is_zero()) throw DomainError("polynomial vanishes mod p");
    if (g.degree() == 0) return false;
    FpPoly xp = frobenius_power(g, 1);
    FpPoly h = gcd(xp - FpPoly::x(p) % g, g);
    return h.degree() > 0;
}

bool has_root_mod_p_naive(const IntPoly& f, std::uint64_t p) {
    FpPoly g = reduce(f, p);
    if (g.is_zero()) throw DomainError("polynomial vanishes mod p");
    for (std::uint64_t x = 0; x < p; ++x)
        if (g.eval(x) == 0) return true;
    return false;
}

DensityReport density_pi_f(const IntPoly& f, std::uint64_t X, unsigned jobs) {
    if (X < 100) throw DomainError("density limit must be at least 100");
    if (X > 0xFFFFFFFFull) throw DomainError("density limit too large");
    const auto primes = primes_up_to(static_cast<std::uint32_t>(X));
    jobs = std::max(1u, jobs);
    std::vector<std::uint64_t> tally(jobs, 0);
    auto work = [&](unsigned k) {
        std::uint64_t n = 0;
        for (std::size_t i = k; i < primes.size(); i += jobs) {
            FpPoly g = reduce(f, primes[i]);
            // a prime dividing every coefficient has every residue as a root
            if (g.is_zero()) continue;
            if (!has_root_mod_p(f, primes[i])) ++n;
        }
        tally[k] = n;
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(work, k);
        for (auto& t : pool) t.join();
    }
    DensityReport r;
    r.limit = X;
    r.primes = primes.size();
    for (auto n : tally) r.in_pi += n;
    r.density = Rational(Integer(static_cast<unsigned long>(r.in_pi)), Integer(static_cast<unsigned long>(r.primes)));
    r.density.canonicalize();
    return r;
}

Integer homog_eval_g(const IntPoly& f, const Integer& n, const Integer& d) {
    long deg = f.degree();
    if (deg < 0 || deg % 2 != 0) throw DomainError("homogenization needs even degree");
    Integer acc = 0;
    for (long i = 0; i <= deg; ++i)
        acc += f[static_cast<std::size_t>(i)] * pow(n, static_cast<unsigned long>(i)) *
               pow(d, static_cast<unsigned long>(deg - i));
    return acc;
}

bool congruence_mod8_exhaustive(const IntPoly& f) {
    for (long n = 0; n < 8; ++n)
        for (long d = 0; d < 8; ++d) {
            if (n % 2 == 0 && d % 2 == 0) continue;
            if (mod_floor(homog_eval_g(f, n, d), 8) != 1) return false;
        }
    return true;
}

bool congruence_mod9_exhaustive(const IntPoly& f) {
    for (long n = 0; n < 9; ++n)
        for (long d = 0; d < 9; ++d)
            if (mod_floor(homog_eval_g(f, n, d), 9) == 0 && (n % 3 != 0 || d % 3 != 0)) return false;
    return true;
}

Integer value_content(const IntPoly& f) {
    Integer g = 0;
    for (long x = 0; x <= std::max(0L, f.degree()); ++x) g = gcd(g, f.eval(Integer(x)));
    return abs(g);
}

int epsilon_p(const IntPoly& f, const Integer& p) {
    Integer D = value_content(f);
    if (D == 0) throw DomainError("polynomial vanishes identically on the integers");
    return static_cast<int>(valuation(D, p) % 2);
}

bool sigma_check(const IntPoly& f, const SigmaWitness& w) {
    if (w.y0 == 0 || w.v < 0) return false;
    if (epsilon_p(f, w.p) != w.epsilon) return false;
    long e = w.v + w.epsilon;
    Integer mod = pow(w.p, static_cast<unsigned long>(2 * e + 1));
    if (mod_floor(w.h * w.y0 * w.y0 - f.eval(w.x0), mod) != 0) return false;
    return valuation(w.y0, w.p) == e;
}

const std::vector<SigmaWitness>& eight_four_witnesses() {
    auto w = [](long p, long h, long x0, long y0, int eps) {
        return SigmaWitness{Integer(p), Integer(h), Integer(x0), Integer(y0), 1, eps};
    };
    static const std::vector<SigmaWitness> ws{
        w(2, 1, 16, 4, 1),
        w(3, 1, 9, 3, 0), w(3, 2, 18, 3, 0),
        w(5, 1, 25, 5, 0), w(5, 2, 18, 5, 0), w(5, 3, 75, 5, 0), w(5, 4, 7, 5, 0),
    };
    return ws;
}

std::uint64_t count_nontrivial_points(const IntPoly& f, std::uint64_t p, std::int64_t r) {
    if (p == 2 || !is_prime(p)) throw DomainError("need an odd prime");
    FpElement rr(p, r);
    if (rr.v == 0) throw DomainError("r must be nonzero mod p");
    FpPoly g = reduce(f, p);
    FpElement rinv = rr.inverse();
    std::uint64_t n = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        FpElement t = FpElement(p, static_cast<std::int64_t>(g.eval(x))) * rinv;
        if (t.v != 0 && t.is_square()) n += 2;
    }
    return n;
}

Integer hasse_weil_floor(const Integer& p, bool strict) {
    if (p < 2) throw DomainError("p must be at least 2");
    if (strict && !is_prime(p)) throw DomainError("p must be prime");
    // floor(p + 1 - sqrt(16p)) = p + 1 - ceil(sqrt(16p))
    return p + 1 - isqrt_ceil(16 * p);
}

bool hasse_weil_certificate(const Integer& from) {
    // q(p) = p^2 - 28p + 36 is increasing past its vertex 14; p >= 6 keeps
    // p - 6 >= 0 so (p-6)^2 >= 16p gives p - 6 >= 4 sqrt p.
    if (from < 14) return false;
    return from * from - 28 * from + 36 >= 0;
}

}  // namespace quaddyn
