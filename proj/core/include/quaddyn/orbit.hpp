#pragma once

#include "quaddyn/portrait.hpp"
#include "quaddyn/quadfield.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace quaddyn {

struct OrbitPoint {
    QuadElem value;
    int preperiod = 0;
    int period = 1;
};

struct PortraitResult {
    Portrait portrait;
    std::vector<OrbitPoint> points;  // index i is vertex i
    QuadElem c;
    QuadField field;
    int n_max = 6;
    int depth_max = 64;
};

inline constexpr int kDefaultNmax = 6;
inline constexpr int kDefaultDepthMax = 64;
inline constexpr int kDefaultOrbitBudget = 512;

// Preperiodic points of z^2 + c in K = Q(sqrt d), restricted to cycles of
// length <= n_max. c must lie in K.
PortraitResult portrait_of(const QuadElem& c, const Integer& d = 1, int n_max = kDefaultNmax,
                           int depth_max = kDefaultDepthMax);

// (preperiod, exact period) of z under z^2 + c, or nullopt if the orbit is
// shown to be infinite or the budget runs out.
std::optional<std::pair<int, int>> orbit_data(const QuadElem& c, const QuadElem& z, int budget = kDefaultOrbitBudget);

// Cheap certificates that z is not preperiodic for z^2 + c.
bool escapes_archimedean(const QuadElem& c, const QuadElem& z);
bool fails_integrality(const QuadElem& c, const QuadElem& z);

// Independent oracle over Q: every p/q with 1 <= q <= max_den and
// |p/q| <= 2 + |c| (outside that disc orbits escape) is tested with
// orbit_data; the survivors and their images form the portrait.
Portrait brute_force_portrait(const Rational& c, long max_den);

// Every sample must classify as 6(3); true iff all period-3 points are
// rational in every sample. DomainError on a sample that is not 6(3).
bool verify_6_3_rationality(const std::vector<PortraitResult>& samples);
bool verify_6_3_rationality(const std::vector<std::pair<QuadElem, Integer>>& samples);

}  // namespace quaddyn
