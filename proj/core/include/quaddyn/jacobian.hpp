#pragma once

#include "quaddyn/finite_field.hpp"
#include "quaddyn/poly.hpp"

#include <cstdint>

namespace quaddyn {

// #C(F_p) and #C(F_{p^2}) for the smooth model of y^2 = f(x), deg f in
// {3,4,5,6}, counting the points at infinity.
std::uint64_t count_points_fp(const FpPoly& f);
std::uint64_t count_points_fp2(const FpPoly& f);

// Does y^2 = f(x) have good reduction at p (p odd, degree kept, f squarefree)?
bool good_reduction(const RatPoly& f, std::uint64_t p);

// #J(F_p) = L(1) from the point counts; genus 1 or 2 from deg f.
// DomainError at a prime of bad reduction.
Integer jacobian_group_order(const RatPoly& f, std::uint64_t p);

// Mumford pair on y^2 = f(x) over F_p, deg f = 5: u monic, deg v < deg u <= 2,
// u | v^2 - f. The identity is (1, 0).
struct MumfordDivisor {
    FpPoly u, v;
    bool operator==(const MumfordDivisor& o) const { return u == o.u && v == o.v; }
};

class OddJacobian {
public:
    explicit OddJacobian(FpPoly f);  // deg f = 5, squarefree

    const FpPoly& f() const { return f_; }
    std::uint64_t p() const { return f_.modulus(); }
    MumfordDivisor zero() const;
    bool is_valid(const MumfordDivisor& d) const;
    MumfordDivisor add(const MumfordDivisor& a, const MumfordDivisor& b) const;
    MumfordDivisor neg(const MumfordDivisor& a) const;
    MumfordDivisor mul(const MumfordDivisor& a, const Integer& n) const;
    // Least m > 0 with m a = 0, searching the divisors of group_order.
    Integer order(const MumfordDivisor& a, const Integer& group_order) const;

private:
    MumfordDivisor reduce(FpPoly u, FpPoly v) const;
    FpPoly f_;
};

// The 8(3) sextic y^2 = x^6 - 2x^4 + 2x^3 + 5x^2 + 2x + 1 over Q.
const RatPoly& eight_three_sextic();

// X^6 f(a + 1/X) mod p for a root a of f mod p: the odd-degree model reached
// by sending the Weierstrass point x = a to infinity (y -> y X^3).
FpPoly odd_model(const RatPoly& f, std::uint64_t p, std::uint64_t a);

// Reduction mod 7 of the class {P0, conj P0} on the 8(3) curve, where x(P0)
// is a root of x^2 + x/2 + 1 and P0 lies on y = 9x/4 - 1/2, carried to the
// odd model through the root x = 4.
struct ReducedDivisor {
    OddJacobian jac;
    MumfordDivisor d;
    FpPoly u_even;  // x(P0) minimal polynomial mod 7, even model
    FpPoly v_even;
};
ReducedDivisor eight_three_d0_mod7();

}  // namespace quaddyn
