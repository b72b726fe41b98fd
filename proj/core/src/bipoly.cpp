#include "quaddyn/bipoly.hpp"

#include "quaddyn/errors.hpp"

#include <sstream>

namespace quaddyn {

namespace {

using CPoly = BiPoly::CPoly;

void trim_c(CPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void add_into(CPoly& acc, const CPoly& p, long sign = 1) {
    if (acc.size() < p.size()) acc.resize(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (sign > 0)
            acc[i] += p[i];
        else
            acc[i] -= p[i];
    }
}

// acc += a * b
void addmul_into(CPoly& acc, const CPoly& a, const CPoly& b) {
    if (a.empty() || b.empty()) return;
    if (acc.size() < a.size() + b.size() - 1) acc.resize(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
}

void submul_into(CPoly& acc, const CPoly& a, const CPoly& b) {
    if (a.empty() || b.empty()) return;
    if (acc.size() < a.size() + b.size() - 1) acc.resize(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
}

}  // namespace

BiPoly::BiPoly(std::vector<CPoly> by_z) : z_(std::move(by_z)) { trim(); }

void BiPoly::trim() {
    for (auto& p : z_) trim_c(p);
    while (!z_.empty() && z_.back().empty()) z_.pop_back();
}

BiPoly BiPoly::z() { return BiPoly({CPoly{}, CPoly{1}}); }
BiPoly BiPoly::c() { return BiPoly({CPoly{0, 1}}); }
BiPoly BiPoly::constant(const Integer& v) { return BiPoly({CPoly{v}}); }
BiPoly BiPoly::quadratic_map() { return BiPoly({CPoly{0, 1}, CPoly{}, CPoly{1}}); }

long BiPoly::degree_c() const {
    long d = -1;
    for (const auto& p : z_) d = std::max(d, static_cast<long>(p.size()) - 1);
    return d;
}

Integer BiPoly::coeff(long c_deg, long z_deg) const {
    if (z_deg < 0 || z_deg > degree_z()) return 0;
    const auto& p = z_[static_cast<std::size_t>(z_deg)];
    if (c_deg < 0 || c_deg >= static_cast<long>(p.size())) return 0;
    return p[static_cast<std::size_t>(c_deg)];
}

bool BiPoly::is_monic_in_z() const { return !z_.empty() && z_.back() == CPoly{1}; }

BiPoly BiPoly::operator+(const BiPoly& o) const {
    std::vector<CPoly> out(std::max(z_.size(), o.z_.size()));
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (j < z_.size()) add_into(out[j], z_[j]);
        if (j < o.z_.size()) add_into(out[j], o.z_[j]);
    }
    return BiPoly(std::move(out));
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    std::vector<CPoly> out(std::max(z_.size(), o.z_.size()));
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (j < z_.size()) add_into(out[j], z_[j]);
        if (j < o.z_.size()) add_into(out[j], o.z_[j], -1);
    }
    return BiPoly(std::move(out));
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<CPoly> out(z_.size() + o.z_.size() - 1);
    for (std::size_t i = 0; i < z_.size(); ++i)
        for (std::size_t j = 0; j < o.z_.size(); ++j) addmul_into(out[i + j], z_[i], o.z_[j]);
    return BiPoly(std::move(out));
}

BiPoly BiPoly::exact_div(const BiPoly& d) const {
    if (!d.is_monic_in_z()) throw DomainError("BiPoly::exact_div: divisor must be monic in z");
    std::vector<CPoly> rem(z_);
    long dd = d.degree_z(), n = degree_z();
    if (n < dd) {
        if (is_zero()) return {};
        throw InternalError("BiPoly::exact_div: nonzero remainder");
    }
    std::vector<CPoly> quo(static_cast<std::size_t>(n - dd + 1));
    for (long i = n; i >= dd; --i) {
        CPoly coef = rem[static_cast<std::size_t>(i)];
        trim_c(coef);
        if (coef.empty()) continue;
        for (long j = 0; j <= dd; ++j)
            submul_into(rem[static_cast<std::size_t>(i - dd + j)], coef, d.z_[static_cast<std::size_t>(j)]);
        quo[static_cast<std::size_t>(i - dd)] = std::move(coef);
    }
    for (auto& r : rem) {
        trim_c(r);
        if (!r.empty()) throw InternalError("BiPoly::exact_div: nonzero remainder");
    }
    return BiPoly(std::move(quo));
}

BiPoly BiPoly::compose_z(const BiPoly& g) const {
    BiPoly acc;
    for (long j = degree_z(); j >= 0; --j) acc = acc * g + BiPoly({z_[static_cast<std::size_t>(j)]});
    return acc;
}

QuadPoly BiPoly::specialize(const QuadElem& c) const {
    std::vector<QuadElem> out;
    out.reserve(z_.size());
    for (const auto& p : z_) {
        QuadElem acc(0);
        for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * c + QuadElem(Rational(*it));
        out.push_back(acc);
    }
    return QuadPoly(std::move(out));
}

RatPoly BiPoly::specialize(const Rational& c) const {
    std::vector<Rational> out;
    out.reserve(z_.size());
    for (const auto& p : z_) {
        Rational acc(0);
        for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * c + Rational(*it);
        out.push_back(acc);
    }
    return RatPoly(std::move(out));
}

QuadElem BiPoly::eval(const QuadElem& c, const QuadElem& z) const { return specialize(c).eval(z); }

std::vector<BiPoly::Term> BiPoly::terms() const {
    std::vector<Term> out;
    for (long j = degree_z(); j >= 0; --j) {
        const auto& p = z_[static_cast<std::size_t>(j)];
        for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
            if (p[static_cast<std::size_t>(i)] != 0) out.push_back({i, j, p[static_cast<std::size_t>(i)]});
    }
    return out;
}

std::string BiPoly::to_string() const {
    auto ts = terms();
    if (ts.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : ts) {
        Integer a = abs(t.coeff);
        os << (first ? (t.coeff < 0 ? "-" : "") : (t.coeff < 0 ? " - " : " + "));
        first = false;
        std::string mono;
        auto var = [](const char* v, long e) {
            if (e == 0) return std::string();
            return e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e);
        };
        std::string cz = var("c", t.c_deg);
        std::string zz = var("z", t.z_deg);
        if (!cz.empty() && !zz.empty())
            mono = cz + "*" + zz;
        else
            mono = cz + zz;
        if (mono.empty())
            os << a.get_str();
        else if (a == 1)
            os << mono;
        else
            os << a.get_str() << "*" << mono;
    }
    return os.str();
}

}  // namespace quaddyn
