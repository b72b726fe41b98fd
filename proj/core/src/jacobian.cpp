#include "quaddyn/jacobian.hpp"

#include "quaddyn/errors.hpp"
#include "quaddyn/numtheory.hpp"

#include <utility>

namespace quaddyn {

namespace {

int chi(std::uint64_t p, std::uint64_t v) {
    if (v % p == 0) return 0;
    return FpElement(p, static_cast<std::int64_t>(v)).is_square() ? 1 : -1;
}

std::uint64_t points_at_infinity(const FpPoly& f, bool over_fp2) {
    long deg = f.degree();
    if (deg < 3 || deg > 6) throw DomainError("point counts need 3 <= deg f <= 6");
    if (deg % 2 == 1) return 1;
    if (over_fp2) return 2;  // every element of F_p is a square in F_{p^2}
    return static_cast<std::uint64_t>(1 + chi(f.modulus(), f.lead()));
}

FpPoly reduce_rat(const RatPoly& f, std::uint64_t p) { return FpPoly::from_rationals(p, f.coeffs()); }

}  // namespace

std::uint64_t count_points_fp(const FpPoly& f) {
    std::uint64_t p = f.modulus();
    if (p == 2) throw DomainError("point counts need odd p");
    std::int64_t n = 0;
    for (std::uint64_t x = 0; x < p; ++x) n += 1 + chi(p, f.eval(x));
    return static_cast<std::uint64_t>(n) + points_at_infinity(f, false);
}

std::uint64_t count_points_fp2(const FpPoly& f) {
    std::uint64_t p = f.modulus();
    if (p == 2) throw DomainError("point counts need odd p");
    Fp2 K(p);
    std::int64_t n = 0;
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) n += 1 + K.chi(K.eval(f, K.make(a, b)));
    return static_cast<std::uint64_t>(n) + points_at_infinity(f, true);
}

bool good_reduction(const RatPoly& f, std::uint64_t p) {
    if (p == 2 || !is_prime(p)) return false;
    for (const auto& c : f.coeffs())
        if (c.get_den() % p == 0) return false;
    FpPoly g = reduce_rat(f, p);
    return g.degree() == f.degree() && is_squarefree(g);
}

Integer jacobian_group_order(const RatPoly& f, std::uint64_t p) {
    if (!good_reduction(f, p)) throw DomainError("bad reduction at p = " + std::to_string(p));
    FpPoly g = reduce_rat(f, p);
    Integer P(static_cast<unsigned long>(p));
    Integer N1(static_cast<unsigned long>(count_points_fp(g)));
    long genus = (f.degree() - 1) / 2;
    if (genus == 1) return N1;
    if (genus != 2) throw DomainError("genus 1 or 2 only");
    Integer N2(static_cast<unsigned long>(count_points_fp2(g)));
    // L(T) = 1 + c1 T + c2 T^2 + p c1 T^3 + p^2 T^4
    Integer c1 = N1 - P - 1;
    Integer s2 = P * P + 1 - N2;  // sum of squared Frobenius eigenvalues
    Integer twice_c2 = c1 * c1 - s2;
    if (twice_c2 % 2 != 0) throw InternalError("inconsistent point counts");
    Integer c2 = twice_c2 / 2;
    return 1 + c1 + c2 + P * c1 + P * P;
}

OddJacobian::OddJacobian(FpPoly f) : f_(std::move(f)) {
    if (f_.degree() != 5) throw DomainError("odd model must have degree 5");
    if (!is_squarefree(f_)) throw DomainError("odd model is singular");
}

MumfordDivisor OddJacobian::zero() const { return {FpPoly::constant(p(), 1), FpPoly(p(), {})}; }

bool OddJacobian::is_valid(const MumfordDivisor& d) const {
    if (d.u.is_zero() || d.u.lead() != 1 || d.u.degree() > 2) return false;
    if (d.v.degree() >= d.u.degree()) return false;
    return ((d.v * d.v - f_) % d.u).is_zero();
}

MumfordDivisor OddJacobian::reduce(FpPoly u, FpPoly v) const {
    while (u.degree() > 2) {
        FpPoly nu = (f_ - v * v) / u;
        FpPoly nv = (FpPoly(p(), {}) - v) % nu;
        u = std::move(nu);
        v = std::move(nv);
    }
    u = u.monic();
    return {u, v % u};
}

MumfordDivisor OddJacobian::add(const MumfordDivisor& a, const MumfordDivisor& b) const {
    // Cantor composition
    FpPoly e1, e2, c1, c2;
    FpPoly d1 = xgcd(a.u, b.u, e1, e2);
    FpPoly d = xgcd(d1, a.v + b.v, c1, c2);
    FpPoly s1 = c1 * e1, s2 = c1 * e2;
    FpPoly u = (a.u * b.u) / (d * d);
    FpPoly v = ((s1 * a.u * b.v + s2 * b.u * a.v + c2 * (a.v * b.v + f_)) / d) % u;
    return reduce(u, v);
}

MumfordDivisor OddJacobian::neg(const MumfordDivisor& a) const { return {a.u, (FpPoly(p(), {}) - a.v) % a.u}; }

MumfordDivisor OddJacobian::mul(const MumfordDivisor& a, const Integer& n) const {
    MumfordDivisor base = n < 0 ? neg(a) : a;
    Integer k = abs(n);
    MumfordDivisor acc = zero();
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = add(acc, base);
        base = add(base, base);
        k >>= 1;
    }
    return acc;
}

Integer OddJacobian::order(const MumfordDivisor& a, const Integer& group_order) const {
    if (!(mul(a, group_order) == zero())) throw InternalError("element order does not divide the group order");
    Integer m = group_order;
    for (const auto& [q, e] : factor(group_order)) {
        (void)e;
        while (m % q == 0 && mul(a, m / q) == zero()) m /= q;
    }
    return m;
}

const RatPoly& eight_three_sextic() {
    static const RatPoly f(std::vector<Rational>{1, 2, 5, 2, -2, 0, 1});
    return f;
}

FpPoly odd_model(const RatPoly& f, std::uint64_t p, std::uint64_t a) {
    if (f.degree() != 6) throw DomainError("odd model expects a sextic");
    FpPoly g = reduce_rat(f, p);
    if (g.eval(a % p) != 0) throw DomainError("base point is not a root mod p");
    // sum f_i (aX + 1)^i X^(6-i)
    FpPoly lin(p, {1, a % p});
    FpPoly X = FpPoly::x(p);
    FpPoly acc(p, {});
    for (long i = 0; i <= 6; ++i) {
        FpPoly term = FpPoly::constant(p, g[static_cast<std::size_t>(i)]);
        for (long j = 0; j < i; ++j) term = term * lin;
        for (long j = 0; j < 6 - i; ++j) term = term * X;
        acc = acc + term;
    }
    if (acc.degree() != 5) throw InternalError("odd model transformation failed");
    return acc;
}

ReducedDivisor eight_three_d0_mod7() {
    const std::uint64_t p = 7, a = 4;
    const RatPoly& f = eight_three_sextic();
    FpPoly fe = reduce_rat(f, p);
    FpPoly u_even = FpPoly::from_rationals(p, {Rational(1), Rational(1, 2), Rational(1)});
    FpPoly v_even = FpPoly::from_rationals(p, {Rational(-1, 2), Rational(9, 4)});
    if (!roots_mod_p(u_even).empty()) throw InternalError("x(P0) should be quadratic over F_7");
    if (!((v_even * v_even - fe) % u_even).is_zero()) throw InternalError("P0 is off the curve mod 7");

    Fp2 K(p);
    Fp2::Elem x1 = K.root_of(u_even), x2 = K.frob(x1);
    Fp2::Elem y1 = K.eval(v_even, x1), y2 = K.eval(v_even, x2);
    Fp2::Elem X1 = K.inv(K.sub(x1, K.make(a))), X2 = K.inv(K.sub(x2, K.make(a)));
    Fp2::Elem Y1 = K.mul(y1, K.pow(X1, 3)), Y2 = K.mul(y2, K.pow(X2, 3));
    Fp2::Elem sum = K.add(X1, X2), prod = K.mul(X1, X2);
    Fp2::Elem slope = K.mul(K.sub(Y2, Y1), K.inv(K.sub(X2, X1)));
    Fp2::Elem icpt = K.sub(Y1, K.mul(slope, X1));
    if (sum.b || prod.b || slope.b || icpt.b) throw InternalError("transformed divisor is not F_7-rational");

    OddJacobian jac(odd_model(f, p, a));
    MumfordDivisor d{FpPoly(p, {prod.a, (p - sum.a) % p, 1}), FpPoly(p, {icpt.a, slope.a})};
    if (!jac.is_valid(d)) throw InternalError("transformed divisor fails u | v^2 - f");
    return {jac, d, u_even, v_even};
}

}  // namespace quaddyn
