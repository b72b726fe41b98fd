#pragma once

#include "quaddyn/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace quaddyn {

// Element of F_p, p an odd or even prime below 2^32.
struct FpElement {
    std::uint64_t p = 2;
    std::uint64_t v = 0;

    FpElement() = default;
    FpElement(std::uint64_t p_, std::int64_t value);
    static FpElement from(std::uint64_t p, const Integer& n);
    static FpElement from(std::uint64_t p, const Rational& r);  // den must be a unit

    FpElement operator+(const FpElement& o) const;
    FpElement operator-(const FpElement& o) const;
    FpElement operator*(const FpElement& o) const;
    FpElement operator/(const FpElement& o) const;
    FpElement operator-() const;
    FpElement inverse() const;
    FpElement pow(std::uint64_t e) const;
    bool is_square() const;
    bool operator==(const FpElement& o) const { return p == o.p && v == o.v; }
};

// Dense polynomial over F_p, ascending coefficients, no trailing zeros.
class FpPoly {
public:
    FpPoly() = default;
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
    static FpPoly from_integers(std::uint64_t p, const std::vector<Integer>& coeffs);
    static FpPoly from_rationals(std::uint64_t p, const std::vector<Rational>& coeffs);
    static FpPoly x(std::uint64_t p);
    static FpPoly constant(std::uint64_t p, std::uint64_t c);

    std::uint64_t modulus() const { return p_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
    std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t eval(std::uint64_t x) const;

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly scale(std::uint64_t s) const;
    FpPoly monic() const;
    FpPoly derivative() const;
    // quotient and remainder; divisor nonzero
    void divmod(const FpPoly& d, FpPoly& q, FpPoly& r) const;
    FpPoly operator/(const FpPoly& d) const;
    FpPoly operator%(const FpPoly& d) const;
    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

private:
    void trim();
    std::uint64_t p_ = 2;
    std::vector<std::uint64_t> c_;
};

FpPoly gcd(FpPoly a, FpPoly b);  // monic (or zero)
// Extended gcd: s*a + t*b = g, g monic.
FpPoly xgcd(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t);
FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& mod);
// x^(p^k) mod f
FpPoly frobenius_power(const FpPoly& f, unsigned k);
bool is_squarefree(const FpPoly& f);

// Roots in F_p of f (f nonzero), each listed once.
std::vector<std::uint64_t> roots_mod_p(const FpPoly& f);
// Monic irreducible quadratic factors of a squarefree f.
std::vector<FpPoly> quadratic_factors_mod_p(const FpPoly& f);

// F_{p^2} = F_p[t]/(t^2 - r) for a fixed nonresidue r (p odd).
class Fp2 {
public:
    struct Elem {
        std::uint64_t a = 0, b = 0;  // a + b t
        bool operator==(const Elem&) const = default;
    };
    explicit Fp2(std::uint64_t p);
    std::uint64_t p() const { return p_; }
    std::uint64_t nonresidue() const { return r_; }
    Elem make(std::uint64_t a, std::uint64_t b = 0) const { return {a % p_, b % p_}; }
    Elem add(Elem x, Elem y) const;
    Elem sub(Elem x, Elem y) const;
    Elem mul(Elem x, Elem y) const;
    Elem neg(Elem x) const;
    Elem inv(Elem x) const;
    Elem pow(Elem x, std::uint64_t e) const;
    Elem frob(Elem x) const { return {x.a, x.b == 0 ? 0 : p_ - x.b}; }
    bool is_zero(Elem x) const { return x.a == 0 && x.b == 0; }
    // quadratic character on F_{p^2}: 0, 1 or -1
    int chi(Elem x) const;
    // square root of x in F_{p^2}; x must be a square
    Elem sqrt(Elem x) const;
    Elem eval(const FpPoly& f, Elem x) const;
    // a root of the irreducible monic quadratic q
    Elem root_of(const FpPoly& q) const;

private:
    std::uint64_t p_, r_;
};

}  // namespace quaddyn
