#pragma once

#include "quaddyn/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace quaddyn {

// Named integer sextics used by the splitting and discriminant checks, keyed
// by the portrait whose modular curve they define: "10(3,1,1)", "10(3,2)",
// "8(4)". DomainError for other names.
const IntPoly& named_sextic(const std::string& name);
std::vector<std::string> named_sextic_names();
// A name above, or a comma-separated coefficient list, constant term first.
IntPoly parse_int_poly(const std::string& text);

// Does f have a root in F_p? deg gcd(x^p - x, f) > 0. DomainError if f = 0 mod p.
bool has_root_mod_p(const IntPoly& f, std::uint64_t p);
// Same answer by evaluating at every residue.
bool has_root_mod_p_naive(const IntPoly& f, std::uint64_t p);

struct DensityReport {
    std::uint64_t limit = 0;
    std::uint64_t primes = 0;     // primes <= limit
    std::uint64_t in_pi = 0;      // of which f has no root mod p
    Rational density;             // in_pi / primes, natural density proxy
};
// Natural density of {p <= X : f has no root mod p}. X >= 100.
DensityReport density_pi_f(const IntPoly& f, std::uint64_t X, unsigned jobs = 1);

// d^(2k) f(n/d) for f of even degree 2k.
Integer homog_eval_g(const IntPoly& f, const Integer& n, const Integer& d);
// g(n,d) = 1 mod 8 whenever n, d are not both even.
bool congruence_mod8_exhaustive(const IntPoly& f);
// 9 | g(n,d) forces 3 | n and 3 | d.
bool congruence_mod9_exhaustive(const IntPoly& f);

// Largest integer dividing every integer value of f: gcd of f(0..deg f),
// exact since those values span the binomial basis.
Integer value_content(const IntPoly& f);
// Parity of ord_p(value_content(f)).
int epsilon_p(const IntPoly& f, const Integer& p);

struct SigmaWitness {
    Integer p, h, x0, y0;
    long v = 0;
    int epsilon = 0;
};
// h y0^2 = f(x0) mod p^(2(v+eps)+1) and ord_p(y0) = v + eps, with eps
// recomputed from f and required to match the witness.
bool sigma_check(const IntPoly& f, const SigmaWitness& w);
// The seven witnesses for the "8(4)" sextic at p = 2, 3, 5.
const std::vector<SigmaWitness>& eight_four_witnesses();

// #{(x,y) in F_p^2 : r y^2 = f(x), y != 0}; p odd prime, r != 0 mod p.
std::uint64_t count_nontrivial_points(const IntPoly& f, std::uint64_t p, std::int64_t r);

// floor(p + 1 - 4 sqrt p) by integer square roots. With strict set, p must
// be prime (DomainError otherwise).
Integer hasse_weil_floor(const Integer& p, bool strict = true);
// p + 1 - 4 sqrt p >= 7 for all p >= from, via (p-6)^2 >= 16p, i.e.
// p^2 - 28p + 36 >= 0, whose larger root lies below 27.
bool hasse_weil_certificate(const Integer& from = 27);

}  // namespace quaddyn
