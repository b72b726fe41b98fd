#pragma once

#include "quaddyn/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace quaddyn {

inline constexpr unsigned long kDefaultTrialBound = 100000;

bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

// Prime factorisation of |n| (n != 0), ascending primes. Trial division up to
// trial_bound, then Pollard-Brent on whatever is left.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n,
                                                 unsigned long trial_bound = kDefaultTrialBound);

// Signed squarefree part of a nonzero integer.
Integer squarefree_part(const Integer& n, unsigned long trial_bound = kDefaultTrialBound);
// Signed squarefree part of num * den; 4 -> 1, 12 -> 3, -8/9 -> -2.
Integer sqf(const Rational& r, unsigned long trial_bound = kDefaultTrialBound);
bool is_squarefree(const Integer& n);

// p-adic valuation; throws on zero argument.
long valuation(const Integer& n, const Integer& p);
long valuation(const Rational& r, const Integer& p);

// Euler's criterion; 0 counts as a square.
bool is_square_mod_p(const Integer& a, const Integer& p);

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t invmod(std::uint64_t a, std::uint64_t mod);  // mod prime, a != 0

}  // namespace quaddyn
