#include "quaddyn/orbit.hpp"

#include "quaddyn/catalog.hpp"
#include "quaddyn/dynatomic.hpp"
#include "quaddyn/errors.hpp"
#include "quaddyn/roots.hpp"

#include <cmath>
#include <map>

namespace quaddyn {

namespace {

struct HeightLess {
    bool operator()(const QuadElem& x, const QuadElem& y) const { return height_less(x, y); }
};

// Smallest s > 0 with s^2 c in Z[sqrt d].
Integer integrality_scale(const QuadElem& c) {
    Integer den = 1;
    mpz_lcm(den.get_mpz_t(), c.a().get_den_mpz_t(), c.b().get_den_mpz_t());
    if (den == 1) return 1;
    Integer s = 1;
    for (const auto& [p, e] : factor(den)) s *= pow(p, (e + 1) / 2);
    return s;
}

bool is_algebraic_integer(const QuadElem& x) {
    if (x.is_rational()) return x.a().get_den() == 1;
    Rational t = x.trace(), n = x.norm();
    return t.get_den() == 1 && n.get_den() == 1;
}

// |sigma(x)| for both archimedean embeddings (equal when d < 0)
std::pair<long double, long double> abs_embeddings(const QuadElem& x) {
    long double a = x.a().get_d(), b = x.b().get_d();
    if (x.is_rational()) return {std::fabs(a), std::fabs(a)};
    long double d = x.d().get_d();
    if (d > 0) {
        long double r = std::sqrt(d);
        return {std::fabs(a + b * r), std::fabs(a - b * r)};
    }
    long double m = std::sqrt(a * a - d * b * b);
    return {m, m};
}

}  // namespace

bool escapes_archimedean(const QuadElem& c, const QuadElem& z) {
    auto [c1, c2] = abs_embeddings(c);
    auto [z1, z2] = abs_embeddings(z);
    auto bound = [](long double ac) { return (1.0L + std::sqrt(1.0L + 4.0L * ac)) / 2.0L + 1.0L; };
    if (z1 > bound(c1)) return true;
    // the two embeddings are paired consistently: sigma(z) with sigma(c)
    return z2 > bound(c2);
}

bool fails_integrality(const QuadElem& c, const QuadElem& z) {
    // preperiodic z is a root of f^(m+n)(z) - f^m(z), monic and weighted
    // homogeneous in (z, c); so s z is integral whenever s^2 c is.
    Integer s = integrality_scale(c);
    return !is_algebraic_integer(z * QuadElem(Rational(s)));
}

std::optional<std::pair<int, int>> orbit_data(const QuadElem& c, const QuadElem& z0, int budget) {
    if (budget < 1) throw DomainError("orbit_data: budget must be positive");
    Integer s = integrality_scale(c);
    QuadElem sq{Rational(s)};
    std::vector<QuadElem> seen;
    QuadElem z = z0;
    for (int step = 0; step <= budget; ++step) {
        if (!is_algebraic_integer(z * sq) || escapes_archimedean(c, z)) return std::nullopt;
        for (std::size_t j = 0; j < seen.size(); ++j)
            if (seen[j] == z) return std::make_pair(static_cast<int>(j), step - static_cast<int>(j));
        seen.push_back(z);
        z = z * z + c;
    }
    return std::nullopt;
}

PortraitResult portrait_of(const QuadElem& c_in, const Integer& d, int n_max, int depth_max) {
    if (n_max < 1) throw DomainError("portrait_of: n_max must be at least 1");
    QuadField K(d);
    if (!c_in.is_rational() && c_in.d() != d)
        throw DomainError("portrait_of: c = " + c_in.to_string() + " is not in Q(sqrt " + d.get_str() + ")");
    QuadElem c = c_in.in_field(d);

    std::map<QuadElem, int, HeightLess> index;
    std::vector<QuadElem> frontier;
    auto add = [&](const QuadElem& z) {
        QuadElem t = z.in_field(d);
        if (index.emplace(t, 0).second) {
            frontier.push_back(t);
            return true;
        }
        return false;
    };
    for (long n = 1; n <= n_max; ++n)
        for (const auto& r : roots_in_field(dynatomic(n).specialize(c), d)) add(r);
    // images of periodic roots are periodic; include them for safety
    for (std::size_t i = 0; i < frontier.size(); ++i) add(frontier[i] * frontier[i] + c);

    int depth = 0;
    while (!frontier.empty()) {
        if (++depth > depth_max) throw ResourceError("unbounded-growth-suspected");
        std::vector<QuadElem> current;
        current.swap(frontier);
        for (const auto& w : current) {
            auto y = sqrt_in_field((w - c).in_field(d));
            if (!y) continue;
            add(*y);
            add(-*y);
        }
    }

    PortraitResult res;
    res.c = c;
    res.field = K;
    res.n_max = n_max;
    res.depth_max = depth_max;
    int idx = 0;
    for (auto& kv : index) kv.second = idx++;
    std::vector<int> succ(index.size());
    for (const auto& [z, i] : index) {
        auto it = index.find((z * z + c).in_field(d));
        if (it == index.end()) throw InternalError("portrait_of: vertex set not forward closed at " + z.to_string());
        succ[static_cast<std::size_t>(i)] = it->second;
        res.points.push_back({z, 0, 1});
    }
    res.portrait = Portrait(succ);
    // preperiod / period from the graph
    for (std::size_t v = 0; v < succ.size(); ++v) {
        std::map<int, int> first_seen;
        int cur = static_cast<int>(v), step = 0;
        while (!first_seen.count(cur)) {
            first_seen[cur] = step++;
            cur = succ[static_cast<std::size_t>(cur)];
        }
        res.points[v].preperiod = first_seen[cur];
        res.points[v].period = step - first_seen[cur];
    }
    return res;
}

Portrait brute_force_portrait(const Rational& c, long max_den) {
    if (max_den < 1) throw DomainError("brute_force_portrait: max_den must be positive");
    Rational bound = 2 + abs(c);
    QuadElem cq(c);
    std::map<Rational, int> index;
    for (long q = 1; q <= max_den; ++q) {
        Integer top = bound.get_num() * q / bound.get_den();
        for (Integer p = -top; p <= top; ++p) {
            if (gcd(p, Integer(q)) != 1) continue;
            Rational z(p, Integer(q));
            if (orbit_data(cq, QuadElem(z))) index.emplace(z, 0);
        }
    }
    int i = 0;
    for (auto& kv : index) kv.second = i++;
    std::vector<int> succ(index.size());
    for (const auto& [z, k] : index) {
        auto it = index.find(z * z + c);
        if (it == index.end()) throw InternalError("oracle set not forward closed");
        succ[static_cast<std::size_t>(k)] = it->second;
    }
    return Portrait(succ);
}

bool verify_6_3_rationality(const std::vector<PortraitResult>& samples) {
    bool all = true;
    for (const auto& s : samples) {
        auto label = classify(s.portrait);
        if (!label || *label != "6(3)")
            throw DomainError("verify_6_3_rationality: sample c = " + s.c.to_string() + " is " +
                              (label ? *label : std::string("unclassified")) + ", not 6(3)");
        for (const auto& pt : s.points)
            if (pt.preperiod == 0 && pt.period == 3 && !pt.value.is_rational()) all = false;
    }
    return all;
}

bool verify_6_3_rationality(const std::vector<std::pair<QuadElem, Integer>>& samples) {
    std::vector<PortraitResult> res;
    for (const auto& [c, d] : samples) res.push_back(portrait_of(c, d));
    return verify_6_3_rationality(res);
}

}  // namespace quaddyn
