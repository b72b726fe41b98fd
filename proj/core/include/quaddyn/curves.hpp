#pragma once

#include "quaddyn/poly.hpp"
#include "quaddyn/quadfield.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quaddyn {

enum class ModelForm {
    Hyperelliptic,    // y^2 = F(x)
    LongWeierstrass,  // y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
    Plane,            // anything else; stored for reference only
};

// c = num0/den0 + (num1/den1) * y
struct CMap {
    RatPoly num0, den0;
    RatPoly num1, den1;
};

struct CurveModel {
    std::string label;
    ModelForm form = ModelForm::Hyperelliptic;
    RatPoly F;                     // hyperelliptic right-hand side
    std::array<Rational, 5> a{};  // a1, a2, a3, a4, a6 for the long form
    std::optional<CMap> c_map;
    int genus = 0;
    std::string equation;
    std::string c_text;

    // Square-completed right-hand side: F itself, or 4G + (a1 x + a3)^2 for
    // the long form, so that w = 2y + a1 x + a3 satisfies w^2 = rhs(x).
    RatPoly rhs() const;
    // a1 x + a3 (zero for hyperelliptic models).
    RatPoly linear_term() const;
    bool on_curve(const QuadElem& x, const QuadElem& y) const;
};

// Ten rows plus the two alternative quartic forms.
const std::vector<std::string>& appendix_labels();
// Models with a c-map usable for point generation; the long forms stand in
// for 10(2,1,1)a/b.
const std::vector<std::string>& realization_labels();
// Portrait label a model realizes ("10(2,1,1)a-quartic" -> "10(2,1,1)a").
std::string portrait_label_of_model(const std::string& model_label);
const CurveModel& model(const std::string& label);
std::vector<std::string> model_labels();

struct QuadraticPointRecord {
    std::string label;
    QuadElem x;
    Integer d{1};
    QuadElem y;
    std::optional<QuadElem> c;  // empty at a pole of the c-map
    bool degenerate = false;
};

// c-map at a point; nullopt at a pole.
std::optional<QuadElem> eval_c(const CurveModel& m, const QuadElem& x, const QuadElem& y);

QuadraticPointRecord lift_x(const std::string& label, const Rational& x0);

// Third intersection data for the secant y = y0 + t(x - x0) on
// y^2 = a x^3 + b x^2 + c x + d: the monic quadratic cut out by the other two
// intersection points.
RatPoly quad_point_minpoly(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                           const Rational& x0, const Rational& y0, const Rational& t);

// For 8(1,1)b: x(P_t) has minimal polynomial `minpoly` and c = alpha*x + beta.
struct LineCFormula {
    RatPoly minpoly;
    Rational alpha;
    Rational beta;
};
Rational c_of_t(const std::string& label, const std::pair<Rational, Rational>& base, const Rational& t);
LineCFormula c_of_t_line(const std::string& label, const std::pair<Rational, Rational>& base, const Rational& t);

// Points on the model cut out by a line through (x0, y0) with slope t, for
// models whose square-completed right-hand side is cubic. Both intersection
// points are returned (Galois conjugates when irrational).
std::vector<QuadraticPointRecord> line_points(const std::string& label, const Rational& x0, const Rational& y0,
                                              const Rational& t);
// Quadratic points of a genus-2 model lying on y = v1 x + v0.
std::vector<QuadraticPointRecord> mumford_line_points(const std::string& label, const Rational& v1,
                                                      const Rational& v0);
// Affine rational points with x of height <= bound (both signs of y).
std::vector<std::pair<Rational, Rational>> small_rational_points(const std::string& label, long bound);

// All rationals of height <= H, ordered by (height, value).
std::vector<Rational> rationals_up_to_height(long H);

long cs_rhs(long d1, long g1, long d2, long g2);

// Certificate that the genus lower bound exceeds R(n) + 1, n >= 17.
bool morton_lower_bound_check(long n);
// The rational lower bound used by the certificate.
Rational morton_lower_bound(long n);

const std::vector<std::string>& identity_names();
bool verify_identity(const std::string& name);

// Degree-7 quotient polynomial g(t) with u^2 = g(t) attached to a base point
// (x0, w0) of w^2 = 2(x^3 + x^2 - x + 1).
RatPoly genus3_quotient(const Rational& x0, const Rational& w0);

}  // namespace quaddyn
