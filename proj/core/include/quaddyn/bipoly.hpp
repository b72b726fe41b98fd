#pragma once

#include "quaddyn/poly.hpp"
#include "quaddyn/rational.hpp"

#include <string>
#include <vector>

namespace quaddyn {

// Element of Z[c, z]: dense in z, each z-coefficient a dense polynomial in c.
class BiPoly {
public:
    using CPoly = std::vector<Integer>;  // ascending in c, trimmed

    BiPoly() = default;
    explicit BiPoly(std::vector<CPoly> by_z);
    static BiPoly z();
    static BiPoly c();
    static BiPoly constant(const Integer& v);
    // z^2 + c
    static BiPoly quadratic_map();

    long degree_z() const { return static_cast<long>(z_.size()) - 1; }
    long degree_c() const;
    bool is_zero() const { return z_.empty(); }
    const std::vector<CPoly>& by_z() const { return z_; }
    Integer coeff(long c_deg, long z_deg) const;
    bool is_monic_in_z() const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    bool operator==(const BiPoly& o) const { return z_ == o.z_; }

    // Exact division by a polynomial monic in z; InternalError on remainder.
    BiPoly exact_div(const BiPoly& d) const;
    // P(c, g(c, z))
    BiPoly compose_z(const BiPoly& g) const;

    QuadPoly specialize(const QuadElem& c) const;
    RatPoly specialize(const Rational& c) const;
    QuadElem eval(const QuadElem& c, const QuadElem& z) const;

    // Monomials ordered by z-degree descending, then c-degree descending.
    std::string to_string() const;
    // (c_deg, z_deg, coefficient) in the same canonical order.
    struct Term {
        long c_deg;
        long z_deg;
        Integer coeff;
    };
    std::vector<Term> terms() const;

private:
    void trim();
    std::vector<CPoly> z_;
};

}  // namespace quaddyn
