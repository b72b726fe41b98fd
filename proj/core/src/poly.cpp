#include "quaddyn/poly.hpp"

#include <sstream>

namespace quaddyn {

QuadPoly conjugate(const QuadPoly& p) {
    std::vector<QuadElem> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(v.conj());
    return QuadPoly(std::move(c));
}

RatPoly to_rational(const QuadPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) {
        if (!v.is_rational()) throw InternalError("to_rational: coefficient " + v.to_string() + " is irrational");
        c.push_back(v.a());
    }
    return RatPoly(std::move(c));
}

QuadPoly to_quad(const RatPoly& p) {
    std::vector<QuadElem> c(p.coeffs().begin(), p.coeffs().end());
    return QuadPoly(std::move(c));
}

IntPoly to_integer(const RatPoly& p) {
    std::vector<Integer> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) {
        if (v.get_den() != 1) throw InternalError("to_integer: coefficient " + v.get_str() + " is not integral");
        c.push_back(v.get_num());
    }
    return IntPoly(std::move(c));
}

std::string format_poly(const RatPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || a != 1) {
            os << a.get_str();
            if (i > 0) os << "*";
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

}  // namespace quaddyn
