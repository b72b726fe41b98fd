#include "quaddyn/numtheory.hpp"

#include "quaddyn/errors.hpp"

#include <algorithm>
#include <map>

namespace quaddyn {

bool is_prime(const Integer& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

bool is_prime(std::uint64_t n) {
    Integer z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    return is_prime(z);
}

namespace {

Integer pollard_brent(const Integer& n, unsigned long seed) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    Integer y = seed % n, c = (seed * 7 + 1) % n, m = 64, g = 1, r = 1, q = 1, x, ys;
    auto step = [&](Integer& v) { v = (v * v + c) % n; };
    while (g == 1) {
        x = y;
        for (Integer i = 0; i < r; ++i) step(y);
        Integer k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (Integer i = 0; i < m && i < r - k; ++i) {
                step(y);
                q = (q * abs(x - y)) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            step(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g;
}

void split(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    if (is_square(n)) {
        Integer s = isqrt(n);
        split(s, out);
        split(s, out);
        return;
    }
    for (unsigned long seed = 2;; ++seed) {
        Integer d = pollard_brent(n, seed);
        if (d != 1 && d != n) {
            split(d, out);
            split(n / d, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n, unsigned long trial_bound) {
    if (n == 0) throw DomainError("factor: zero has no factorisation");
    Integer m = abs(n);
    std::map<Integer, unsigned> found;
    for (unsigned long p = 2; p <= trial_bound && Integer(p) * p <= m; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++found[Integer(p)];
        }
    }
    if (m != 1) {
        if (Integer(trial_bound) * trial_bound >= m)
            ++found[m];  // no factor below sqrt(m)
        else
            split(m, found);
    }
    return {found.begin(), found.end()};
}

Integer squarefree_part(const Integer& n, unsigned long trial_bound) {
    if (n == 0) throw DomainError("squarefree part of zero");
    Integer out = sgn(n);
    for (const auto& [p, e] : factor(n, trial_bound))
        if (e % 2) out *= p;
    return out;
}

Integer sqf(const Rational& r, unsigned long trial_bound) {
    if (r == 0) throw DomainError("sqf: zero has no squarefree class");
    return squarefree_part(r.get_num() * r.get_den(), trial_bound);
}

bool is_squarefree(const Integer& n) {
    if (n == 0) return false;
    for (const auto& pe : factor(n))
        if (pe.second > 1) return false;
    return true;
}

long valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw DomainError("valuation of zero");
    if (p < 2) throw DomainError("valuation: bad prime");
    Integer m = n;
    long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

long valuation(const Rational& r, const Integer& p) {
    return valuation(r.get_num(), p) - valuation(Integer(r.get_den()), p);
}

bool is_square_mod_p(const Integer& a, const Integer& p) {
    if (!is_prime(p)) throw DomainError("is_square_mod_p: modulus " + p.get_str() + " is not prime");
    Integer r = a % p;
    if (r < 0) r += p;
    if (r == 0 || p == 2) return true;
    Integer e = (p - 1) / 2, out;
    mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return out == 1;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t mod) {
    if (a % mod == 0) throw DomainError("invmod: zero is not invertible");
    return powmod(a, mod - 2, mod);
}

}  // namespace quaddyn
