#include "quaddyn/quadfield.hpp"

#include "quaddyn/errors.hpp"

#include <algorithm>
#include <limits>

namespace quaddyn {

QuadField::QuadField(const Integer& d_) : d(d_) {
    if (d == 0) throw DomainError("quadratic field: d must be nonzero");
    if (!is_squarefree(d)) throw DomainError("quadratic field: d = " + d.get_str() + " is not squarefree");
}

QuadElem::QuadElem(const Rational& a) : a_(a) {}

QuadElem::QuadElem(const Integer& d, const Rational& a, const Rational& b) : d_(d), a_(a), b_(b) {
    if (d_ == 0) throw DomainError("quadratic field: d must be nonzero");
    if (d_ == 1 && b_ != 0) {
        // sqrt(1) = 1; fold into the rational part
        a_ += b_;
        b_ = 0;
    }
}

namespace {

Integer common_field(const QuadElem& x, const QuadElem& y) {
    if (x.d() == y.d()) return x.d();
    if (x.is_rational()) return y.d();
    if (y.is_rational()) return x.d();
    throw DomainError("field mismatch: Q(sqrt " + x.d().get_str() + ") vs Q(sqrt " + y.d().get_str() + ")");
}

}  // namespace

QuadElem QuadElem::in_field(const Integer& d) const {
    if (d == d_) return *this;
    if (!is_rational()) throw DomainError("element is not in Q(sqrt " + d.get_str() + ")");
    return QuadElem(d, a_, 0);
}

QuadElem QuadElem::inverse() const {
    Rational n = norm();
    if (n == 0) throw DomainError("division by zero in quadratic field");
    return QuadElem(d_, a_ / n, -b_ / n);
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
    d_ = common_field(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
    d_ = common_field(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
    Integer d = common_field(*this, o);
    if (o.b_ == 0) {
        a_ *= o.a_;
        b_ *= o.a_;
    } else if (b_ == 0) {
        b_ = a_ * o.b_;
        a_ *= o.a_;
    } else {
        Rational na = a_ * o.a_ + Rational(d) * b_ * o.b_;
        Rational nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
    }
    d_ = d;
    return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
    if (o.b_ == 0) {
        if (o.a_ == 0) throw DomainError("division by zero in quadratic field");
        d_ = common_field(*this, o);
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    return *this *= o.inverse();
}

bool operator==(const QuadElem& x, const QuadElem& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    return x.b_ == 0 || x.d_ == y.d_;
}

std::string QuadElem::to_string() const {
    if (b_ == 0) return a_.get_str();
    std::string root = "sqrt(" + d_.get_str() + ")";
    std::string bpart;
    Rational bb = abs(b_);
    if (bb == 1)
        bpart = root;
    else
        bpart = bb.get_str() + "*" + root;
    if (a_ == 0) return (b_ < 0 ? "-" : "") + bpart;
    return a_.get_str() + (b_ < 0 ? " - " : " + ") + bpart;
}

QuadElem pow(const QuadElem& x, unsigned long e) {
    QuadElem result = QuadElem(Rational(1)).in_field(x.d());
    QuadElem base = x;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Integer height(const QuadElem& x) {
    Integer ha = height(x.a()), hb = height(x.b());
    return ha > hb ? ha : hb;
}

bool height_less(const QuadElem& x, const QuadElem& y) {
    Integer hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    if (x.a() != y.a()) return x.a() < y.a();
    return x.b() < y.b();
}

std::optional<QuadElem> sqrt_in_field(const QuadElem& x) {
    const Integer& d = x.d();
    if (x.b() == 0) {
        if (auto r = rational_sqrt(x.a())) return QuadElem(d, *r, 0);
        if (d != 1) {
            if (auto r = rational_sqrt(x.a() / Rational(d))) return QuadElem(d, 0, *r);
        }
        return std::nullopt;
    }
    // (u + v sqrt d)^2 = a + b sqrt d  =>  u^2 = (a + s)/2 with s^2 = a^2 - d b^2
    auto s = rational_sqrt(x.norm());
    if (!s) return std::nullopt;
    for (const Rational& sign : {Rational(1), Rational(-1)}) {
        Rational u2 = (x.a() + sign * *s) / 2;
        if (u2 == 0) continue;
        if (auto u = rational_sqrt(u2)) {
            QuadElem y(d, *u, x.b() / (2 * *u));
            if (y * y == x) return y;
        }
    }
    return std::nullopt;
}

std::vector<Rational> minimal_polynomial(const QuadElem& x) {
    if (x.is_rational()) return {-x.a(), 1};
    return {x.norm(), -x.trace(), 1};
}

std::vector<Rational> root_valuations(const QuadElem& x, const Integer& p) {
    if (!is_prime(p)) throw DomainError("is_p_integral: " + p.get_str() + " is not prime");
    auto poly = minimal_polynomial(x);
    // lower convex hull of the points (i, v(coeff_i)), skipping zero coefficients
    std::vector<std::pair<long, Rational>> pts;
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (poly[i] != 0) pts.emplace_back(static_cast<long>(i), Rational(valuation(poly[i], p)));
    std::vector<Rational> out;
    long deg = static_cast<long>(poly.size()) - 1;
    if (poly[0] == 0) {
        // zero root: infinite valuation, represent by a large number
        out.push_back(Rational(std::numeric_limits<long>::max()));
        pts.erase(pts.begin());
    }
    std::size_t i = 0;
    while (i + 1 < pts.size()) {
        // pick the next hull vertex: minimal slope from pts[i]
        std::size_t best = i + 1;
        Rational best_slope = (pts[best].second - pts[i].second) / Rational(pts[best].first - pts[i].first);
        for (std::size_t j = i + 2; j < pts.size(); ++j) {
            Rational sl = (pts[j].second - pts[i].second) / Rational(pts[j].first - pts[i].first);
            if (sl <= best_slope) {
                best_slope = sl;
                best = j;
            }
        }
        for (long k = pts[i].first; k < pts[best].first; ++k) out.push_back(-best_slope);
        i = best;
    }
    if (static_cast<long>(out.size()) != deg) throw InternalError("newton polygon: root count mismatch");
    return out;
}

bool is_p_integral(const QuadElem& x, const Integer& p) {
    for (const Rational& v : root_valuations(x, p))
        if (v >= 0) return true;
    return false;
}

}  // namespace quaddyn
