#pragma once

#include "quaddyn/errors.hpp"
#include "quaddyn/quadfield.hpp"
#include "quaddyn/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace quaddyn {

// Dense univariate polynomial, ascending coefficients, no trailing zeros.
// T is Integer, Rational or QuadElem.
template <class T>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<T> c) : c_(std::move(c)) { trim(); }
    static UniPoly constant(const T& v) { return UniPoly(std::vector<T>{v}); }
    static UniPoly x() { return UniPoly(std::vector<T>{T(0), T(1)}); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& lead() const { return c_.back(); }

    T eval(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }
    template <class U>
    U eval_as(const U& x) const {
        U acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<T> c(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (*this)[i] + o[i];
        return UniPoly(std::move(c));
    }
    UniPoly operator-(const UniPoly& o) const {
        std::vector<T> c(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (*this)[i] - o[i];
        return UniPoly(std::move(c));
    }
    UniPoly operator-() const {
        std::vector<T> c(c_);
        for (auto& v : c) v = -v;
        return UniPoly(std::move(c));
    }
    UniPoly operator*(const UniPoly& o) const {
        if (c_.empty() || o.c_.empty()) return {};
        std::vector<T> c(c_.size() + o.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == T(0)) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
        }
        return UniPoly(std::move(c));
    }
    UniPoly scale(const T& s) const {
        std::vector<T> c(c_);
        for (auto& v : c) v *= s;
        return UniPoly(std::move(c));
    }
    UniPoly derivative() const {
        std::vector<T> c;
        for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * T(static_cast<long>(i)));
        return UniPoly(std::move(c));
    }
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // Long division. For Integer coefficients the divisor must be monic.
    void divmod(const UniPoly& d, UniPoly& q, UniPoly& r) const {
        if (d.is_zero()) throw DomainError("polynomial division by zero");
        std::vector<T> rem(c_);
        long dd = d.degree(), n = degree();
        std::vector<T> quo(n >= dd ? static_cast<std::size_t>(n - dd + 1) : 0, T(0));
        const T& lc = d.lead();
        bool unit = lc == T(1);
        for (long i = n; i >= dd; --i) {
            auto idx = static_cast<std::size_t>(i);
            if (rem[idx] == T(0)) continue;
            T coef = unit ? rem[idx] : divide(rem[idx], lc);
            for (long j = 0; j <= dd; ++j)
                rem[static_cast<std::size_t>(i - dd + j)] -= coef * d.c_[static_cast<std::size_t>(j)];
            quo[static_cast<std::size_t>(i - dd)] = std::move(coef);
        }
        q = UniPoly(std::move(quo));
        r = UniPoly(std::move(rem));
    }
    // Division that must be exact; throws InternalError otherwise.
    UniPoly exact_div(const UniPoly& d) const {
        UniPoly q, r;
        divmod(d, q, r);
        if (!r.is_zero()) throw InternalError("inexact polynomial division");
        return q;
    }
    UniPoly operator%(const UniPoly& d) const {
        UniPoly q, r;
        divmod(d, q, r);
        return r;
    }
    UniPoly monic() const {
        if (c_.empty() || lead() == T(1)) return *this;
        T inv = divide(T(1), lead());
        return scale(inv);
    }

private:
    static T divide(const T& a, const T& b) {
        if constexpr (std::is_same_v<T, Integer>) {
            if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw InternalError("inexact integer division");
            return a / b;
        } else {
            return a / b;
        }
    }
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

template <class T>
UniPoly<T> gcd(UniPoly<T> a, UniPoly<T> b) {
    while (!b.is_zero()) {
        UniPoly<T> r = a % b;
        a = std::move(b);
        b = std::move(r).monic();
    }
    return a.monic();
}

using IntPoly = UniPoly<Integer>;
using RatPoly = UniPoly<Rational>;
using QuadPoly = UniPoly<QuadElem>;

// Coefficient-wise Galois conjugate sqrt d -> -sqrt d.
QuadPoly conjugate(const QuadPoly& p);
RatPoly to_rational(const QuadPoly& p);  // throws if some b != 0
QuadPoly to_quad(const RatPoly& p);
IntPoly to_integer(const RatPoly& p);  // throws if not integral

// Human-readable, descending powers in variable `var`.
std::string format_poly(const RatPoly& p, const std::string& var = "z");

}  // namespace quaddyn
