#include "quaddyn/rational.hpp"

#include "quaddyn/errors.hpp"

#include <cctype>

namespace quaddyn {

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw DomainError("empty rational literal");
    if (s.front() == '+') s.erase(0, 1);
    auto slash = s.find('/');
    auto digits_ok = [](std::string_view part, bool allow_sign) {
        if (allow_sign && !part.empty() && part.front() == '-') part.remove_prefix(1);
        if (part.empty()) return false;
        for (char ch : part)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    std::string_view sv = s;
    std::string_view num = sv.substr(0, slash);
    std::string_view den = slash == std::string::npos ? std::string_view("1") : sv.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw DomainError("malformed rational literal: " + std::string(text));
    Integer n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw DomainError("zero denominator: " + std::string(text));
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& n) { return n.get_str(); }

Integer height(const Rational& r) {
    Integer a = abs(r.get_num());
    return a > r.get_den() ? a : Integer(r.get_den());
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw DomainError("isqrt of negative number");
    Integer s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    return s;
}

Integer isqrt_ceil(const Integer& n) {
    Integer s = isqrt(n);
    return s * s == n ? s : s + 1;
}

bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (!is_square(r.get_num()) || !is_square(r.get_den())) return std::nullopt;
    return Rational(isqrt(r.get_num()), isqrt(r.get_den()));
}

Rational pow(const Rational& r, long e) {
    if (e < 0) {
        if (r == 0) throw DomainError("zero to a negative power");
        return pow(Rational(1) / r, -e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Integer pow(const Integer& n, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), n.get_mpz_t(), e);
    return out;
}

}  // namespace quaddyn
