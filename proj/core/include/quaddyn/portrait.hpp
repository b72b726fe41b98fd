#pragma once

#include <optional>
#include <string>
#include <vector>

namespace quaddyn {

// Finite functional graph on vertices 0..n-1.
struct Portrait {
    std::vector<int> succ;
    std::optional<std::string> label;

    Portrait() = default;
    explicit Portrait(std::vector<int> s, std::optional<std::string> l = std::nullopt);
    int size() const { return static_cast<int>(succ.size()); }
};

// Cycle lengths, nonincreasing; empty for the empty portrait.
using CycleStructure = std::vector<int>;

CycleStructure cycle_structure(const Portrait& p);
std::vector<int> in_degrees(const Portrait& p);
// Vertex lists of each cycle, each starting at its smallest vertex.
std::vector<std::vector<int>> cycles(const Portrait& p);

bool is_quadratic(const Portrait& p);
bool is_generic_quadratic(const Portrait& p);

// Isomorphism invariant: AHU codes of the trees hanging off each cycle vertex,
// each cycle rotated to its least code sequence, cycles sorted.
std::string canonical_form(const Portrait& p);
bool is_isomorphic(const Portrait& a, const Portrait& b);
// Is there an injective successor-preserving map small -> big?
bool contains_subportrait(const Portrait& big, const Portrait& small);

// Smallest generic quadratic portrait containing p.
Portrait generic_closure(const Portrait& p);

inline constexpr int kEnumerateHardLimit = 14;
// Generic quadratic portraits with at most max_vertices vertices whose cycle
// structure is in `allowed` (empty list: no restriction). One representative
// per isomorphism class, ordered by size then canonical form.
std::vector<Portrait> enumerate_generic(int max_vertices, const std::vector<CycleStructure>& allowed = {},
                                        int hard_limit = kEnumerateHardLimit);

std::string format_cycle_structure(const CycleStructure& cs);
// "(2),(1,1)" -> {{2},{1,1}}; "()" is the empty structure.
std::vector<CycleStructure> parse_cycle_structures(const std::string& text);
// "N(c1,c2,...)" without the a/b suffix.
std::string shape_of(const Portrait& p);

// Relabel vertices: new index of old vertex v is perm[v].
Portrait relabel(const Portrait& p, const std::vector<int>& perm);

}  // namespace quaddyn
