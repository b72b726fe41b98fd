#include "quaddyn/finite_field.hpp"

#include "quaddyn/errors.hpp"
#include "quaddyn/numtheory.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace quaddyn {

namespace {

std::uint64_t reduce(std::uint64_t p, const Integer& n) {
    Integer r = n % Integer(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

}  // namespace

FpElement::FpElement(std::uint64_t p_, std::int64_t value) : p(p_) {
    std::int64_t m = value % static_cast<std::int64_t>(p_);
    v = static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p_) : m);
}

FpElement FpElement::from(std::uint64_t p, const Integer& n) {
    FpElement e;
    e.p = p;
    e.v = reduce(p, n);
    return e;
}

FpElement FpElement::from(std::uint64_t p, const Rational& r) {
    return from(p, r.get_num()) / from(p, Integer(r.get_den()));
}

FpElement FpElement::operator+(const FpElement& o) const {
    FpElement e = *this;
    e.v = (v + o.v) % p;
    return e;
}
FpElement FpElement::operator-(const FpElement& o) const {
    FpElement e = *this;
    e.v = (v + p - o.v) % p;
    return e;
}
FpElement FpElement::operator*(const FpElement& o) const {
    FpElement e = *this;
    e.v = mulmod(v, o.v, p);
    return e;
}
FpElement FpElement::operator/(const FpElement& o) const { return *this * o.inverse(); }
FpElement FpElement::operator-() const {
    FpElement e = *this;
    e.v = (p - v) % p;
    return e;
}
FpElement FpElement::inverse() const {
    FpElement e = *this;
    e.v = invmod(v, p);
    return e;
}
FpElement FpElement::pow(std::uint64_t e) const {
    FpElement out = *this;
    out.v = powmod(v, e, p);
    return out;
}
bool FpElement::is_square() const { return v == 0 || p == 2 || powmod(v, (p - 1) / 2, p) == 1; }

// ---------------------------------------------------------------- FpPoly

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= p_;
    trim();
}

FpPoly FpPoly::from_integers(std::uint64_t p, const std::vector<Integer>& coeffs) {
    std::vector<std::uint64_t> c;
    c.reserve(coeffs.size());
    for (const auto& x : coeffs) c.push_back(reduce(p, x));
    return FpPoly(p, std::move(c));
}

FpPoly FpPoly::from_rationals(std::uint64_t p, const std::vector<Rational>& coeffs) {
    std::vector<std::uint64_t> c;
    c.reserve(coeffs.size());
    for (const auto& x : coeffs) c.push_back(FpElement::from(p, x).v);
    return FpPoly(p, std::move(c));
}

FpPoly FpPoly::x(std::uint64_t p) { return FpPoly(p, {0, 1}); }
FpPoly FpPoly::constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t FpPoly::eval(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mulmod(acc, x, p_) + *it) % p_;
    return acc;
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    std::vector<std::uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ((*this)[i] + o[i]) % p_;
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    std::vector<std::uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ((*this)[i] + p_ - o[i]) % p_;
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (c_.empty() || o.c_.empty()) return FpPoly(p_, {});
    std::vector<unsigned __int128> acc(c_.size() + o.c_.size() - 1, 0);
    // accumulate in 128 bits; p < 2^32 so each product < 2^64 and sums stay small
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(c_[i]) * o.c_[j];
    }
    std::vector<std::uint64_t> c(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<std::uint64_t>(acc[i] % p_);
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::scale(std::uint64_t s) const {
    std::vector<std::uint64_t> c(c_);
    for (auto& x : c) x = mulmod(x, s, p_);
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::monic() const {
    if (c_.empty()) return *this;
    return scale(invmod(c_.back(), p_));
}

FpPoly FpPoly::derivative() const {
    std::vector<std::uint64_t> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(mulmod(c_[i], i % p_, p_));
    return FpPoly(p_, std::move(c));
}

void FpPoly::divmod(const FpPoly& d, FpPoly& q, FpPoly& r) const {
    if (d.is_zero()) throw DomainError("FpPoly division by zero");
    std::vector<std::uint64_t> rem(c_);
    long dd = d.degree();
    long n = degree();
    std::vector<std::uint64_t> quo(n >= dd ? static_cast<std::size_t>(n - dd + 1) : 0, 0);
    std::uint64_t inv = invmod(d.lead(), p_);
    for (long i = n; i >= dd; --i) {
        std::uint64_t coef = mulmod(rem[static_cast<std::size_t>(i)], inv, p_);
        if (!coef) continue;
        quo[static_cast<std::size_t>(i - dd)] = coef;
        for (long j = 0; j <= dd; ++j) {
            auto& slot = rem[static_cast<std::size_t>(i - dd + j)];
            slot = (slot + p_ - mulmod(coef, d.c_[static_cast<std::size_t>(j)], p_)) % p_;
        }
    }
    q = FpPoly(p_, std::move(quo));
    r = FpPoly(p_, std::move(rem));
}

FpPoly FpPoly::operator/(const FpPoly& d) const {
    FpPoly q, r;
    divmod(d, q, r);
    return q;
}

FpPoly FpPoly::operator%(const FpPoly& d) const {
    FpPoly q, r;
    divmod(d, q, r);
    return r;
}

FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly xgcd(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) {
    std::uint64_t p = a.modulus();
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = FpPoly::constant(p, 1), s1 = FpPoly(p, {});
    FpPoly t0 = FpPoly(p, {}), t1 = FpPoly::constant(p, 1);
    while (!r1.is_zero()) {
        FpPoly q, r;
        r0.divmod(r1, q, r);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpPoly ns = s0 - q * s1, nt = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(ns);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (r0.is_zero()) {
        s = s0;
        t = t0;
        return r0;
    }
    std::uint64_t inv = invmod(r0.lead(), p);
    s = s0.scale(inv);
    t = t0.scale(inv);
    return r0.scale(inv);
}

FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& mod) {
    FpPoly result = FpPoly::constant(base.modulus(), 1) % mod;
    FpPoly b = base % mod;
    while (e) {
        if (e & 1) result = (result * b) % mod;
        e >>= 1;
        if (e) b = (b * b) % mod;
    }
    return result;
}

FpPoly frobenius_power(const FpPoly& f, unsigned k) {
    std::uint64_t p = f.modulus();
    FpPoly x = FpPoly::x(p) % f;
    for (unsigned i = 0; i < k; ++i) x = powmod(x, p, f);
    return x;
}

bool is_squarefree(const FpPoly& f) {
    if (f.degree() <= 0) return true;
    FpPoly d = f.derivative();
    if (d.is_zero()) return false;
    return gcd(f, d).degree() == 0;
}

namespace {

// Equal-degree splitting of a squarefree product of irreducibles of degree k.
void edf(const FpPoly& f, unsigned k, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    long n = f.degree();
    if (n <= 0) return;
    if (n == static_cast<long>(k)) {
        out.push_back(f.monic());
        return;
    }
    std::uint64_t p = f.modulus();
    if (p == 2) throw DomainError("equal-degree splitting needs an odd prime");
    std::uint64_t qk = 1;
    for (unsigned i = 0; i < k; ++i) qk *= p;
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (;;) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(n));
        for (auto& x : c) x = dist(rng);
        FpPoly a(p, c);
        if (a.degree() < 1) continue;
        FpPoly g = gcd(f, a);
        if (g.degree() > 0 && g.degree() < n) {
            edf(g, k, rng, out);
            edf(f / g, k, rng, out);
            return;
        }
        FpPoly h = powmod(a, (qk - 1) / 2, f) - FpPoly::constant(p, 1);
        g = gcd(f, h);
        if (g.degree() > 0 && g.degree() < n) {
            edf(g, k, rng, out);
            edf(f / g, k, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::uint64_t> roots_mod_p(const FpPoly& f) {
    if (f.is_zero()) throw DomainError("roots_mod_p: zero polynomial");
    std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> out;
    if (p < 64) {
        for (std::uint64_t x = 0; x < p; ++x)
            if (f.eval(x) == 0) out.push_back(x);
        return out;
    }
    FpPoly x = FpPoly::x(p);
    FpPoly g = gcd(f, powmod(x, p, f) - x);
    if (g.degree() <= 0) return out;
    std::vector<FpPoly> lin;
    if (g.eval(0) == 0) {
        out.push_back(0);
        g = g / x;
    }
    std::mt19937_64 rng(0x5eed + p);
    edf(g, 1, rng, lin);
    for (const auto& l : lin) out.push_back((p - l[0]) % p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FpPoly> quadratic_factors_mod_p(const FpPoly& f) {
    std::uint64_t p = f.modulus();
    FpPoly x = FpPoly::x(p);
    FpPoly fm = f.monic();
    FpPoly xp = powmod(x, p, fm);
    FpPoly g1 = gcd(fm, xp - x);
    FpPoly rest = fm / g1;
    std::vector<FpPoly> out;
    if (rest.degree() < 2) return out;
    FpPoly xpp = powmod(xp % rest, p, rest);  // x^(p^2) mod rest
    FpPoly g2 = gcd(rest, xpp - x % rest);
    if (g2.degree() < 2) return out;
    std::mt19937_64 rng(0xfac7 + p);
    edf(g2, 2, rng, out);
    return out;
}

// ---------------------------------------------------------------- Fp2

Fp2::Fp2(std::uint64_t p) : p_(p), r_(0) {
    if (p < 3 || !is_prime(p)) throw DomainError("Fp2 needs an odd prime");
    for (std::uint64_t r = 2; r < p; ++r)
        if (powmod(r, (p - 1) / 2, p) == p - 1) {
            r_ = r;
            break;
        }
}

Fp2::Elem Fp2::add(Elem x, Elem y) const { return {(x.a + y.a) % p_, (x.b + y.b) % p_}; }
Fp2::Elem Fp2::sub(Elem x, Elem y) const { return {(x.a + p_ - y.a) % p_, (x.b + p_ - y.b) % p_}; }
Fp2::Elem Fp2::neg(Elem x) const { return {(p_ - x.a) % p_, (p_ - x.b) % p_}; }
Fp2::Elem Fp2::mul(Elem x, Elem y) const {
    std::uint64_t a = (mulmod(x.a, y.a, p_) + mulmod(mulmod(x.b, y.b, p_), r_, p_)) % p_;
    std::uint64_t b = (mulmod(x.a, y.b, p_) + mulmod(x.b, y.a, p_)) % p_;
    return {a, b};
}
Fp2::Elem Fp2::inv(Elem x) const {
    std::uint64_t n = (mulmod(x.a, x.a, p_) + p_ - mulmod(mulmod(x.b, x.b, p_), r_, p_)) % p_;
    std::uint64_t ni = invmod(n, p_);
    return {mulmod(x.a, ni, p_), mulmod((p_ - x.b) % p_, ni, p_)};
}
Fp2::Elem Fp2::pow(Elem x, std::uint64_t e) const {
    Elem out{1, 0};
    while (e) {
        if (e & 1) out = mul(out, x);
        x = mul(x, x);
        e >>= 1;
    }
    return out;
}
int Fp2::chi(Elem x) const {
    if (is_zero(x)) return 0;
    Elem t = pow(x, (p_ * p_ - 1) / 2);
    return t == Elem{1, 0} ? 1 : -1;
}
Fp2::Elem Fp2::sqrt(Elem x) const {
    if (is_zero(x)) return x;
    // Tonelli-Shanks in the cyclic group of order p^2 - 1
    std::uint64_t q = p_ * p_ - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Elem z{0, 1};
    for (std::uint64_t a = 0;; ++a) {
        Elem cand{a % p_, 1 + a / p_};
        if (chi(cand) == -1) {
            z = cand;
            break;
        }
    }
    Elem c = pow(z, q), t = pow(x, q), r = pow(x, (q + 1) / 2);
    unsigned m = s;
    const Elem one{1, 0};
    while (!(t == one)) {
        unsigned i = 0;
        Elem tt = t;
        while (!(tt == one)) {
            tt = mul(tt, tt);
            ++i;
            if (i == m) throw DomainError("Fp2::sqrt of a nonsquare");
        }
        Elem b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return r;
}
Fp2::Elem Fp2::eval(const FpPoly& f, Elem x) const {
    Elem acc{0, 0};
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = add(mul(acc, x), Elem{*it % p_, 0});
    return acc;
}
Fp2::Elem Fp2::root_of(const FpPoly& q) const {
    if (q.degree() != 2) throw DomainError("root_of expects a quadratic");
    FpPoly m = q.monic();
    // x = (-b + sqrt(b^2 - 4c)) / 2
    std::uint64_t b = m[1], c = m[0];
    std::uint64_t disc = (mulmod(b, b, p_) + p_ - mulmod(4 % p_, c, p_)) % p_;
    Elem s = sqrt(Elem{disc, 0});
    Elem num = add(Elem{(p_ - b) % p_, 0}, s);
    return mul(num, Elem{invmod(2, p_), 0});
}

}  // namespace quaddyn
