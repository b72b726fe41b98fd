#pragma once

#include "quaddyn/bipoly.hpp"
#include "quaddyn/finite_field.hpp"

namespace quaddyn {

int mobius(long n);
std::vector<long> divisors(long n);

// f^k(z) for f = z^2 + c, with f^0 = z. Memoised.
const BiPoly& iterate_poly(long k);

// deg_z of the n-th dynatomic polynomial, and the number of n-cycles it cuts out.
Integer degree_D(long n);
Integer cycle_bound_R(long n);

// Product over d | n of (f^d - z)^mu(n/d). Memoised, thread safe.
const BiPoly& dynatomic(long n);
// Phi_n(f^m) / Phi_n(f^(m-1)) for m >= 1; m == 0 gives Phi_n.
BiPoly gen_dynatomic(long m, long n);

// Phi_n(c, z) over F_p computed from univariate iterates; avoids the
// bivariate object for large n.
FpPoly dynatomic_mod_p(long n, std::uint64_t c, std::uint64_t p);

}  // namespace quaddyn
