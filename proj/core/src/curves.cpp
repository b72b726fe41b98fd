#include "quaddyn/curves.hpp"

#include "quaddyn/catalog.hpp"
#include "quaddyn/dynatomic.hpp"
#include "quaddyn/errors.hpp"
#include "quaddyn/numtheory.hpp"
#include "quaddyn/orbit.hpp"
#include "quaddyn/roots.hpp"

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <map>
#include <mutex>
#include <set>

namespace quaddyn {

namespace {

// Coefficients given highest degree first.
RatPoly desc(std::initializer_list<long> hi_to_lo) {
    std::vector<Rational> c;
    for (long v : hi_to_lo) c.emplace_back(v);
    std::reverse(c.begin(), c.end());
    return RatPoly(std::move(c));
}

RatPoly cst(const Rational& v) { return RatPoly::constant(v); }

const RatPoly X = RatPoly::x();

CMap x_only(RatPoly num, RatPoly den) { return CMap{std::move(num), std::move(den), RatPoly{}, cst(1)}; }

CurveModel hyper(std::string label, RatPoly F, int genus, std::string eq, std::optional<CMap> cm, std::string ctext) {
    CurveModel m;
    m.label = std::move(label);
    m.form = ModelForm::Hyperelliptic;
    m.F = std::move(F);
    m.genus = genus;
    m.equation = std::move(eq);
    m.c_map = std::move(cm);
    m.c_text = std::move(ctext);
    return m;
}

CurveModel long_form(std::string label, std::array<Rational, 5> a, std::string eq, CMap cm, std::string ctext) {
    CurveModel m;
    m.label = std::move(label);
    m.form = ModelForm::LongWeierstrass;
    m.a = a;
    m.genus = 1;
    m.equation = std::move(eq);
    m.c_map = std::move(cm);
    m.c_text = std::move(ctext);
    return m;
}

const RatPoly& cubic_11() {  // x^3 + x^2 - x + 1
    static const RatPoly h = desc({1, 1, -1, 1});
    return h;
}

std::map<std::string, CurveModel> build_models() {
    std::map<std::string, CurveModel> out;
    auto add = [&](CurveModel m) { out.emplace(m.label, std::move(m)); };

    RatPoly xm1 = desc({1, -1}), xp1 = desc({1, 1});
    RatPoly sq_pm = xp1 * xp1 * xm1 * xm1;

    add(hyper("8(1,1)a", desc({1, -1, 1, 0}), 1, "y^2 = x^3 - x^2 + x",
              x_only(-(desc({1, 0, 1}) * desc({1, 0, 1})), cst(4) * X * xm1 * xm1),
              "-(x^2 + 1)^2 / (4x(x - 1)^2)"));
    add(hyper("8(1,1)b", cst(2) * cubic_11(), 1, "y^2 = 2(x^3 + x^2 - x + 1)",
              x_only(cst(-2) * desc({1, 0, 1}), sq_pm), "-2(x^2 + 1) / ((x + 1)^2 (x - 1)^2)"));
    add(hyper("8(2)a", desc({1, 0, -2, 1}), 1, "y^2 = x^3 - 2x + 1",
              x_only(-(desc({1, -2, 2}) * desc({1, 2, -2})), cst(4) * X * X * xm1),
              "-(x^2 - 2x + 2)(x^2 + 2x - 2) / (4x^2 (x - 1))"));
    add(hyper("8(2)b", cst(2) * cubic_11(), 1, "y^2 = 2(x^3 + x^2 - x + 1)",
              x_only(-desc({1, 2, 2, -2, 1}), sq_pm), "-(x^4 + 2x^3 + 2x^2 - 2x + 1) / ((x + 1)^2 (x - 1)^2)"));

    CMap quartic_c = x_only(-(desc({3, 0, 1}) * desc({1, 0, 3})), cst(4) * sq_pm);
    const std::string quartic_ct = "-(3x^2 + 1)(x^2 + 3) / (4(x + 1)^2 (x - 1)^2)";
    add(hyper("10(2,1,1)a-quartic", desc({5, -8, 6, 8, 5}), 1, "y^2 = 5x^4 - 8x^3 + 6x^2 + 8x + 5", quartic_c,
              quartic_ct));
    add(hyper("10(2,1,1)b-quartic", desc({5, 0, -1}) * desc({1, 0, 3}), 1, "y^2 = (5x^2 - 1)(x^2 + 3)", quartic_c,
              quartic_ct));
    add(long_form("10(2,1,1)a", {1, -1, 1, -1, 0}, "y^2 + xy + y = x^3 - x^2 - x",
                  CMap{-desc({1, -1, 0, 3, -1}), cst(4) * X * X * xm1, desc({1, -2}), cst(4) * X * xm1},
                  "(x - 2)/(4x(x - 1)) y - (x^4 - x^3 + 3x - 1)/(4x^2 (x - 1))"));
    add(long_form("10(2,1,1)b", {1, 1, 1, 0, 0}, "y^2 + xy + y = x^3 + x^2",
                  CMap{-desc({1, 4, 6, 3, 1}), cst(4) * X * X * xp1, -desc({1, 2}), cst(4) * X * xp1},
                  "-(x + 2)/(4x(x + 1)) y - (x^4 + 4x^3 + 6x^2 + 3x + 1)/(4x^2 (x + 1))"));

    CMap c3 = x_only(-desc({1, 2, 4, 8, 9, 4, 1}), cst(4) * X * X * xp1 * xp1);
    const std::string c3t = "-(x^6 + 2x^5 + 4x^4 + 8x^3 + 9x^2 + 4x + 1) / (4x^2 (x + 1)^2)";
    add(hyper("8(3)", desc({1, 0, -2, 2, 5, 2, 1}), 2, "y^2 = x^6 - 2x^4 + 2x^3 + 5x^2 + 2x + 1", c3, c3t));
    add(hyper("8(4)", -(X * desc({1, 0, 1}) * desc({1, -2, -1})), 2, "y^2 = -x(x^2 + 1)(x^2 - 2x - 1)",
              x_only(desc({1, -4, -1}) * desc({1, 1, 2, -1, 1}), cst(4) * X * sq_pm),
              "(x^2 - 4x - 1)(x^4 + x^3 + 2x^2 - x + 1) / (4x(x + 1)^2 (x - 1)^2)"));
    add(hyper("10(3,1,1)", desc({1, 2, 5, 10, 10, 4, 1}), 2, "y^2 = x^6 + 2x^5 + 5x^4 + 10x^3 + 10x^2 + 4x + 1", c3,
              c3t));
    add(hyper("10(3,2)", desc({1, 2, 1, 2, 6, 4, 1}), 2, "y^2 = x^6 + 2x^5 + x^4 + 2x^3 + 6x^2 + 4x + 1", c3, c3t));

    // auxiliary curves
    add(hyper("X1ell(11)", cst(2) * cubic_11(), 1, "w^2 = 2(x^3 + x^2 - x + 1)", std::nullopt, ""));
    {
        CurveModel c;
        c.label = "C-10(1,1)b";
        c.form = ModelForm::Plane;
        c.genus = 5;
        c.equation = "(z^2 - 2(x^2 + 1))^2 = 2(x^2 - 1)^2 (x^3 + x^2 - x + 1)";
        add(std::move(c));
    }
    RatPoly x2p1 = desc({1, 0, 1}), x2m1 = desc({1, 0, -1});
    add(hyper("genus3-rational-x", cst(4) * x2p1 * x2p1 - cst(2) * x2m1 * x2m1 * cubic_11(), 3,
              "y^2 = 4(x^2 + 1)^2 - 2(x^2 - 1)^2 (x^3 + x^2 - x + 1)", std::nullopt, ""));
    for (int x0 : {1, -1})
        for (int w0 : {2, -2}) {
            std::string tag = "genus3-t(" + std::to_string(x0) + "," + std::to_string(w0) + ")";
            add(hyper(tag, genus3_quotient(x0, w0), 3, "u^2 = g(t), base point (" + std::to_string(x0) + ", " +
                                                           std::to_string(w0) + ")",
                      std::nullopt, ""));
        }
    return out;
}

const std::map<std::string, CurveModel>& models() {
    static const std::map<std::string, CurveModel> m = build_models();
    return m;
}

QuadElem eval_q(const RatPoly& p, const QuadElem& x) { return p.eval_as<QuadElem>(x); }

Integer sqf_or_one(const Rational& v) { return v == 0 ? Integer(1) : sqf(v); }

// sqrt(v) in Q(sqrt d), d = sqf(v)
QuadElem root_in_class(const Rational& v) {
    if (v == 0) return QuadElem(Rational(0));
    Integer d = sqf(v);
    auto r = rational_sqrt(v / Rational(d));
    if (!r) throw InternalError("square class computation failed");
    return d == 1 ? QuadElem(*r) : QuadElem(d, 0, *r);
}

QuadraticPointRecord make_record(const CurveModel& m, const QuadElem& x, const QuadElem& y, const Integer& d,
                                 bool on_branch_point) {
    QuadraticPointRecord r;
    r.label = m.label;
    r.x = x;
    r.y = y;
    r.d = d;
    r.c = eval_c(m, x, y);
    r.degenerate = !r.c || on_branch_point;
    return r;
}

// Quadratic points (both conjugates) with x a root of the monic quadratic q.
std::vector<std::pair<QuadElem, Integer>> roots_of_quadratic(const RatPoly& q) {
    Rational s1 = q[1], s0 = q[0];
    Rational disc = s1 * s1 - 4 * s0;
    if (disc == 0) return {{QuadElem(Rational(-s1 / 2)), Integer(1)}};
    QuadElem r = root_in_class(disc);
    Integer d = r.is_rational() ? Integer(1) : r.d();
    QuadElem half(Rational(1, 2));
    QuadElem base(Rational(-s1 / 2));
    return {{base + half * r, d}, {base - half * r, d}};
}

// Elements A + B s of Q[x][s]/(s^2 - S).
struct QExt {
    RatPoly A, B;
};
QExt ext_mul(const QExt& u, const QExt& v, const RatPoly& S) {
    return {u.A * v.A + u.B * v.B * S, u.A * v.B + u.B * v.A};
}

struct RatFunc {
    RatPoly num, den;
};
RatFunc rf(const RatPoly& n, const RatPoly& d = cst(1)) { return {n, d}; }
RatFunc operator+(const RatFunc& a, const RatFunc& b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
RatFunc operator*(const RatFunc& a, const RatFunc& b) { return {a.num * b.num, a.den * b.den}; }
bool same(const RatFunc& a, const RatFunc& b) { return a.num * b.den == b.num * a.den; }

bool check_preperiod4_substitution() {
    const RatPoly& h = cubic_11();
    RatPoly D = desc({1, 0, -1});
    RatPoly twoP = cst(2) * desc({1, 0, 1});  // 2(x^2 + 1)
    RatPoly S = cst(2) * h;                   // s = q D, s^2 = 2h
    // z = p D and p^2 = q - c, so z^2 = s D + 2(x^2 + 1)
    QExt z2{twoP, D};
    QExt lhs{z2.A - twoP, z2.B};
    QExt sq = ext_mul(lhs, lhs, S);
    QExt rhs{cst(2) * D * D * h, RatPoly{}};
    if (!(sq.A == rhs.A && sq.B == rhs.B)) return false;

    // the orbit of q: q -> 2x/D -> 2/D -> -2/D (fixed)
    RatFunc c = rf(-twoP, D * D);
    RatFunc q2 = rf(S, D * D);
    RatFunc fq = q2 + c;
    RatFunc f2 = rf(cst(2) * X, D) * rf(cst(2) * X, D) + c;
    RatFunc f3 = rf(cst(2), D) * rf(cst(2), D) + c;
    RatFunc f4 = rf(cst(-2), D) * rf(cst(-2), D) + c;
    return same(fq, rf(cst(2) * X, D)) && same(f2, rf(cst(2), D)) && same(f3, rf(cst(-2), D)) &&
           same(f4, rf(cst(-2), D)) && !same(rf(cst(2), D), rf(cst(-2), D));
}

// Polynomials in z with coefficients in Q[x], index = power of z.
using ZPoly = std::vector<RatPoly>;
ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}
// remainder modulo a polynomial monic in z
ZPoly zrem(ZPoly a, const ZPoly& m) {
    std::size_t dm = m.size() - 1;
    for (std::size_t i = a.size(); i-- > dm;) {
        RatPoly co = a[i];
        if (co.is_zero()) continue;
        for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] -= co * m[j];
    }
    a.resize(std::min(a.size(), dm));
    return a;
}

bool check_genus5_to_X1ell11() {
    const RatPoly& h = cubic_11();
    RatPoly D = desc({1, 0, -1});
    RatPoly twoP = cst(2) * desc({1, 0, 1});
    // C: z^4 - 4(x^2+1) z^2 + 4(x^2+1)^2 - 2 D^2 h = 0
    ZPoly C{twoP * twoP - cst(2) * D * D * h, RatPoly{}, cst(-2) * twoP, RatPoly{}, cst(1)};
    // w D = z^2 - 2(x^2 + 1); need (w D)^2 = 2 h D^2 on C
    ZPoly wD{-twoP, RatPoly{}, cst(1)};
    ZPoly diff = zmul(wD, wD);
    diff[0] -= cst(2) * h * D * D;
    for (const auto& co : zrem(diff, C))
        if (!co.is_zero()) return false;
    return true;
}

// Taking the norm of z^2 = 2(x^2+1) + (x^2-1) w for rational x.
bool check_genus3_rational_x() {
    RatPoly D = desc({1, 0, -1});
    RatPoly twoP = cst(2) * desc({1, 0, 1});
    RatPoly norm = twoP * twoP - D * D * cst(2) * cubic_11();
    return norm == model("genus3-rational-x").F && gcd(norm, norm.derivative()).degree() == 0 && norm.degree() == 7;
}

bool check_genus3_quotients() {
    for (int x0 : {1, -1})
        for (int w0 : {2, -2}) {
            RatPoly g = genus3_quotient(x0, w0);
            if (g.degree() != 7) return false;
            for (const auto& co : g.coeffs())
                if (co.get_den() != 1) return false;
            if (gcd(g, g.derivative()).degree() != 0) return false;
        }
    return true;
}

bool check_realization(const std::string& label) {
    const CurveModel& m = model(label);
    if (!m.c_map) throw DomainError("model has no c-map: " + label);
    const CatalogEntry* e = default_catalog().find(portrait_label_of_model(label));
    if (!e) throw DomainError("no catalog entry for " + label);
    int found = 0;
    for (const Rational& x0 : rationals_up_to_height(30)) {
        QuadraticPointRecord r = lift_x(label, x0);
        if (r.degenerate || r.d == 1) continue;
        // small x can hit a point where marked points collide (c = 1/4,
        // c = -2, ...) without being flagged; those simply do not count
        PortraitResult pr = portrait_of(*r.c, r.d);
        if (contains_subportrait(pr.portrait, e->portrait) && ++found == 3) return true;
    }
    return false;
}

}  // namespace

RatPoly CurveModel::rhs() const {
    if (form == ModelForm::Hyperelliptic) return F;
    if (form == ModelForm::Plane) throw DomainError("no Weierstrass right-hand side for " + label);
    RatPoly G(std::vector<Rational>{a[4], a[3], a[1], Rational(1)});
    RatPoly L = linear_term();
    return cst(4) * G + L * L;
}

RatPoly CurveModel::linear_term() const {
    if (form != ModelForm::LongWeierstrass) return {};
    return RatPoly(std::vector<Rational>{a[2], a[0]});
}

bool CurveModel::on_curve(const QuadElem& x, const QuadElem& y) const {
    if (form == ModelForm::Hyperelliptic) return y * y == eval_q(F, x);
    if (form == ModelForm::Plane) throw DomainError("point check unsupported for " + label);
    RatPoly G(std::vector<Rational>{a[4], a[3], a[1], Rational(1)});
    return y * y + eval_q(linear_term(), x) * y == eval_q(G, x);
}

const std::vector<std::string>& appendix_labels() {
    static const std::vector<std::string> v{"8(1,1)a", "8(1,1)b",   "8(2)a",     "8(2)b",
                                            "10(2,1,1)a-quartic",   "10(2,1,1)a", "10(2,1,1)b-quartic",
                                            "10(2,1,1)b", "8(3)", "8(4)",      "10(3,1,1)", "10(3,2)"};
    return v;
}

const std::vector<std::string>& realization_labels() {
    static const std::vector<std::string> v{"8(1,1)a", "8(1,1)b", "8(2)a", "8(2)b",     "10(2,1,1)a",
                                            "10(2,1,1)b", "8(3)",  "8(4)",  "10(3,1,1)", "10(3,2)"};
    return v;
}

std::string portrait_label_of_model(const std::string& model_label) {
    auto pos = model_label.find("-quartic");
    return pos == std::string::npos ? model_label : model_label.substr(0, pos);
}

const CurveModel& model(const std::string& label) {
    auto it = models().find(label);
    if (it == models().end()) throw DomainError("unknown curve model: " + label);
    return it->second;
}

std::vector<std::string> model_labels() {
    std::vector<std::string> out;
    for (const auto& [k, v] : models()) out.push_back(k);
    return out;
}

std::optional<QuadElem> eval_c(const CurveModel& m, const QuadElem& x, const QuadElem& y) {
    if (!m.c_map) throw DomainError("model has no c-map: " + m.label);
    const CMap& cm = *m.c_map;
    QuadElem d0 = eval_q(cm.den0, x);
    if (d0.is_zero()) return std::nullopt;
    QuadElem val = eval_q(cm.num0, x) / d0;
    if (!cm.num1.is_zero()) {
        QuadElem d1 = eval_q(cm.den1, x);
        if (d1.is_zero()) return std::nullopt;
        val += eval_q(cm.num1, x) / d1 * y;
    }
    return val;
}

QuadraticPointRecord lift_x(const std::string& label, const Rational& x0) {
    const CurveModel& m = model(label);
    if (m.form == ModelForm::Plane) throw DomainError("cannot lift on a plane model: " + label);
    Rational v = m.rhs().eval(x0);
    QuadElem w = root_in_class(v);
    QuadElem y = w;
    if (m.form == ModelForm::LongWeierstrass) y = (w - QuadElem(m.linear_term().eval(x0))) * QuadElem(Rational(1, 2));
    QuadraticPointRecord r;
    r.label = label;
    r.x = QuadElem(x0);
    r.y = y;
    r.d = sqf_or_one(v);
    if (m.c_map) r.c = eval_c(m, r.x, y);
    r.degenerate = !r.c || v == 0;
    return r;
}

RatPoly quad_point_minpoly(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                           const Rational& x0, const Rational& y0, const Rational& t) {
    if (a == 0) throw DomainError("leading coefficient must be nonzero");
    if (y0 * y0 != ((a * x0 + b) * x0 + c) * x0 + d) throw DomainError("base point is not on the curve");
    Rational s1 = (a * x0 - t * t + b) / a;
    Rational s0 = (a * x0 * x0 + t * t * x0 + b * x0 - 2 * y0 * t + c) / a;
    return RatPoly(std::vector<Rational>{s0, s1, Rational(1)});
}

Rational c_of_t(const std::string& label, const std::pair<Rational, Rational>& base, const Rational& t) {
    if (label != "8(1,1)a") throw DomainError("no rational c(t) formula for " + label);
    const auto& [x0, y0] = base;
    auto guard = [](const Rational& den) {
        if (den == 0) throw DomainError("t is a pole of the c(t) formula");
        return den;
    };
    Rational t2 = t * t;
    if (x0 == 0 && y0 == 0) return -(t2 + 1) * (t2 + 1) / guard(4 * (t - 1) * (t + 1));
    if (x0 == 1 && y0 == 1) return -t2 * (t2 - 2 * t + 2) / guard(4 * (t - 1) * (t - 1));
    if (x0 == 1 && y0 == -1) return -t2 * (t2 + 2 * t + 2) / guard(4 * (t + 1) * (t + 1));
    throw DomainError("unsupported base point");
}

LineCFormula c_of_t_line(const std::string& label, const std::pair<Rational, Rational>& base, const Rational& t) {
    if (label != "8(1,1)b" || base.first != 1 || base.second != 2)
        throw DomainError("line formula only for 8(1,1)b through (1, 2)");
    if (t == 2 || t == 0) throw DomainError("t is a pole of the c(t) formula");
    LineCFormula f;
    Rational t2 = t * t;
    f.minpoly = RatPoly(std::vector<Rational>{(t2 - 4 * t + 2) / 2, -(t2 - 4) / 2, Rational(1)});
    f.alpha = (t + 2) / (8 * (t - 2));
    Rational t5 = t2 * t2 * t;
    f.beta = -(t5 - 10 * t2 * t + 8 * t2 + 8 * t + 32) / (16 * (t - 2) * (t - 2) * t);
    return f;
}

std::vector<QuadraticPointRecord> line_points(const std::string& label, const Rational& x0, const Rational& y0,
                                              const Rational& t) {
    const CurveModel& m = model(label);
    RatPoly R = m.rhs();
    if (R.degree() != 3) throw DomainError("line construction needs a cubic model: " + label);
    // in w = 2y + a1 x + a3 coordinates the model is w^2 = R(x)
    RatPoly L = m.linear_term();
    bool lng = m.form == ModelForm::LongWeierstrass;
    Rational w0 = lng ? 2 * y0 + L.eval(x0) : y0;
    Rational tw = lng ? 2 * t + L[1] : t;
    RatPoly q = quad_point_minpoly(R[3], R[2], R[1], R[0], x0, w0, tw);
    std::vector<QuadraticPointRecord> out;
    for (const auto& [x, d] : roots_of_quadratic(q)) {
        QuadElem w = QuadElem(w0) + QuadElem(tw) * (x - QuadElem(x0));
        QuadElem y = lng ? (w - eval_q(L, x)) * QuadElem(Rational(1, 2)) : w;
        if (!m.on_curve(x, y)) throw InternalError("secant point off the curve");
        out.push_back(make_record(m, x, y, d, w.is_zero()));
    }
    return out;
}

std::vector<QuadraticPointRecord> mumford_line_points(const std::string& label, const Rational& v1,
                                                      const Rational& v0) {
    const CurveModel& m = model(label);
    if (m.form != ModelForm::Hyperelliptic) throw DomainError("hyperelliptic model required: " + label);
    RatPoly v(std::vector<Rational>{v0, v1});
    RatPoly H = m.F - v * v;
    std::vector<QuadraticPointRecord> out;
    if (H.is_zero()) return out;
    LowDegreeRoots lr = low_degree_roots(H, true);
    for (const auto& [t, N] : lr.quadratic) {
        Rational s(lr.scale);
        RatPoly q(std::vector<Rational>{Rational(N) / (s * s), Rational(-t) / s, Rational(1)});
        for (const auto& [x, d] : roots_of_quadratic(q)) {
            QuadElem y = eval_q(v, x);
            if (!m.on_curve(x, y)) throw InternalError("Mumford line point off the curve");
            out.push_back(make_record(m, x, y, d, y.is_zero()));
        }
    }
    return out;
}

std::vector<std::pair<Rational, Rational>> small_rational_points(const std::string& label, long bound) {
    const CurveModel& m = model(label);
    RatPoly R = m.rhs(), L = m.linear_term();
    std::vector<std::pair<Rational, Rational>> out;
    for (const Rational& x : rationals_up_to_height(bound)) {
        auto w = rational_sqrt(R.eval(x));
        if (!w) continue;
        std::set<Rational> ws{*w, -*w};
        for (const Rational& wv : ws) {
            Rational y = m.form == ModelForm::LongWeierstrass ? (wv - L.eval(x)) / 2 : wv;
            out.emplace_back(x, y);
        }
    }
    return out;
}

std::vector<Rational> rationals_up_to_height(long H) {
    std::vector<Rational> out;
    for (long b = 1; b <= H; ++b)
        for (long a = -H; a <= H; ++a) {
            if (std::gcd(a, b) != 1 && !(a == 0 && b == 1)) continue;
            out.emplace_back(a, b);
        }
    for (auto& r : out) r.canonicalize();
    std::sort(out.begin(), out.end(), [](const Rational& x, const Rational& y) {
        Integer hx = height(x), hy = height(y);
        return hx != hy ? hx < hy : x < y;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

long cs_rhs(long d1, long g1, long d2, long g2) {
    if (d1 < 1 || d2 < 1 || g1 < 0 || g2 < 0) throw DomainError("cs_rhs: degrees >= 1 and genera >= 0 required");
    return d1 * g1 + d2 * g2 + (d1 - 1) * (d2 - 1);
}

Rational morton_lower_bound(long n) {
    if (n < 17) throw DomainError("the closed-form genus bound is only used for n >= 17");
    // rational upper bound for 2^(n/2)
    Rational up(pow(Integer(2), static_cast<unsigned long>((n + 1) / 2)));
    Rational two_n(pow(Integer(2), static_cast<unsigned long>(n)));
    return Rational(3, 2) + (Rational(1, 4) - Rational(1, n)) * two_n - Rational(n + 1) * up / 2;
}

bool morton_lower_bound_check(long n) {
    Rational lb = morton_lower_bound(n);
    return lb > Rational(cycle_bound_R(n) + 1);
}

RatPoly genus3_quotient(const Rational& x0, const Rational& w0) {
    // x^2 + s1 x + s0 with coefficients in Q[t]
    RatPoly t = RatPoly::x();
    RatPoly t2 = t * t;
    RatPoly s1 = (cst(2 * x0 + 2) - t2) * cst(Rational(1, 2));
    RatPoly s0 = (cst(2 * x0 * x0 + 2 * x0 - 2) + t2 * cst(x0) - t * cst(2 * w0)) * cst(Rational(1, 2));
    // 2(x^2+1) + (x^2-1)(w0 + t(x - x0)) = r3 x^3 + r2 x^2 + r1 x + r0
    RatPoly r3 = t;
    RatPoly r2 = cst(2 + w0) - t * cst(x0);
    RatPoly r1 = -t;
    RatPoly r0 = cst(2 - w0) + t * cst(x0);
    RatPoly alpha = r0 - r2 * s0 + r3 * s1 * s0;
    RatPoly beta = r1 - r2 * s1 + r3 * (s1 * s1 - s0);
    RatPoly norm = alpha * alpha - alpha * beta * s1 + beta * beta * s0;
    return cst(4) * norm;
}

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> v = [] {
        std::vector<std::string> names{"preperiod4-substitution", "genus5-to-X1ell11", "genus3-rational-x",
                                       "genus3-quotients"};
        for (const auto& l : realization_labels()) names.push_back("realization-" + l);
        return names;
    }();
    return v;
}

bool verify_identity(const std::string& name) {
    if (name == "preperiod4-substitution") return check_preperiod4_substitution();
    if (name == "genus5-to-X1ell11") return check_genus5_to_X1ell11();
    if (name == "genus3-rational-x") return check_genus3_rational_x();
    if (name == "genus3-quotients") return check_genus3_quotients();
    const std::string pre = "realization-";
    if (name.rfind(pre, 0) == 0) {
        std::string label = name.substr(pre.size());
        if (std::find(appendix_labels().begin(), appendix_labels().end(), label) == appendix_labels().end())
            throw DomainError("unknown identity: " + name);
        return check_realization(label);
    }
    throw DomainError("unknown identity: " + name);
}

}  // namespace quaddyn
