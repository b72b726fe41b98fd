#pragma once

#include "quaddyn/numtheory.hpp"
#include "quaddyn/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quaddyn {

// Q(sqrt d) with d squarefree; d == 1 stands for Q itself.
struct QuadField {
    Integer d{1};

    QuadField() = default;
    explicit QuadField(const Integer& d_);
    bool is_rational_field() const { return d == 1; }
    friend bool operator==(const QuadField&, const QuadField&) = default;
};

// a + b*sqrt(d). Elements with b == 0 are compatible with every field, so a
// rational constant may be combined with an element of any Q(sqrt d).
class QuadElem {
public:
    QuadElem() = default;
    QuadElem(const Rational& a);  // NOLINT: implicit on purpose
    QuadElem(long a) : QuadElem(Rational(a)) {}
    QuadElem(const Integer& d, const Rational& a, const Rational& b);
    QuadElem(const QuadField& k, const Rational& a, const Rational& b) : QuadElem(k.d, a, b) {}

    const Integer& d() const { return d_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    QuadField field() const { return QuadField(d_); }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadElem conj() const { return QuadElem(d_, a_, -b_); }
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
    Rational trace() const { return 2 * a_; }
    QuadElem inverse() const;
    // Re-tag the element as living in Q(sqrt d); fails if b != 0 and d differs.
    QuadElem in_field(const Integer& d) const;

    QuadElem& operator+=(const QuadElem& o);
    QuadElem& operator-=(const QuadElem& o);
    QuadElem& operator*=(const QuadElem& o);
    QuadElem& operator/=(const QuadElem& o);
    friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
    friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
    friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
    friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
    QuadElem operator-() const { return QuadElem(d_, -a_, -b_); }
    friend bool operator==(const QuadElem& x, const QuadElem& y);
    friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

    std::string to_string() const;

private:
    Integer d_{1};
    Rational a_{0};
    Rational b_{0};
};

QuadElem pow(const QuadElem& x, unsigned long e);

// max(H(a), H(b)).
Integer height(const QuadElem& x);
// Total order by (height, a, b); used to number portrait vertices.
bool height_less(const QuadElem& x, const QuadElem& y);

// Square root inside the field of x, if one exists.
std::optional<QuadElem> sqrt_in_field(const QuadElem& x);

// Valuations (normalised so v(p) = 1) of the roots of the minimal polynomial
// of x over Q, read off its Newton polygon at p. One entry per root.
std::vector<Rational> root_valuations(const QuadElem& x, const Integer& p);
// True when some prime above p gives x a nonnegative valuation.
bool is_p_integral(const QuadElem& x, const Integer& p);

// Monic minimal polynomial over Q, ascending coefficients.
std::vector<Rational> minimal_polynomial(const QuadElem& x);

}  // namespace quaddyn
