#pragma once

#include "quaddyn/poly.hpp"

#include <set>
#include <utility>
#include <vector>

namespace quaddyn {

// All roots of degree <= 2 over Q of a nonzero rational polynomial, found by
// p-adic lifting. With Z = s*z the polynomial becomes monic integral; the
// fields below are in terms of Z.
struct LowDegreeRoots {
    Integer scale = 1;
    std::vector<Integer> linear;                         // Z = r
    std::vector<std::pair<Integer, Integer>> quadratic;  // Z^2 - t Z + N, irreducible over Q
    std::uint64_t prime = 0;                             // auxiliary prime used
};

LowDegreeRoots low_degree_roots(const RatPoly& q, bool want_quadratic = true);

// Roots of p lying in Q(sqrt d) (d == 1: rational roots). Each root once.
std::vector<QuadElem> roots_in_field(const QuadPoly& p, const Integer& d);

// Squarefree classes d != 1 of the quadratic irrational roots of q.
std::set<Integer> quadratic_root_fields(const RatPoly& q);

// Monic integral rescaling: smallest s > 0 with s^(n-i) q_i integral.
Integer monic_scale(const RatPoly& monic_q);

}  // namespace quaddyn
