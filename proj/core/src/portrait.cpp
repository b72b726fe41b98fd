#include "quaddyn/portrait.hpp"

#include "quaddyn/dynatomic.hpp"
#include "quaddyn/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace quaddyn {

Portrait::Portrait(std::vector<int> s, std::optional<std::string> l) : succ(std::move(s)), label(std::move(l)) {
    for (int v : succ)
        if (v < 0 || v >= static_cast<int>(succ.size())) throw DomainError("portrait: successor out of range");
}

std::vector<std::vector<int>> cycles(const Portrait& p) {
    int n = p.size();
    std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 on stack, 2 done
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (state[static_cast<std::size_t>(s)]) continue;
        std::vector<int> path;
        int v = s;
        while (state[static_cast<std::size_t>(v)] == 0) {
            state[static_cast<std::size_t>(v)] = 1;
            path.push_back(v);
            v = p.succ[static_cast<std::size_t>(v)];
        }
        if (state[static_cast<std::size_t>(v)] == 1) {
            auto it = std::find(path.begin(), path.end(), v);
            std::vector<int> cyc(it, path.end());
            std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
            out.push_back(std::move(cyc));
        }
        for (int u : path) state[static_cast<std::size_t>(u)] = 2;
    }
    std::sort(out.begin(), out.end());
    return out;
}

CycleStructure cycle_structure(const Portrait& p) {
    CycleStructure cs;
    for (const auto& c : cycles(p)) cs.push_back(static_cast<int>(c.size()));
    std::sort(cs.rbegin(), cs.rend());
    return cs;
}

std::vector<int> in_degrees(const Portrait& p) {
    std::vector<int> deg(p.succ.size(), 0);
    for (int v : p.succ) ++deg[static_cast<std::size_t>(v)];
    return deg;
}

bool is_quadratic(const Portrait& p) {
    for (int d : in_degrees(p))
        if (d > 2) return false;
    std::map<int, long> count;
    for (int len : cycle_structure(p)) ++count[len];
    for (const auto& [len, k] : count)
        if (Integer(k) > cycle_bound_R(len)) return false;
    return true;
}

bool is_generic_quadratic(const Portrait& p) {
    for (int d : in_degrees(p))
        if (d != 0 && d != 2) return false;
    auto cs = cycle_structure(p);
    long fixed = std::count(cs.begin(), cs.end(), 1);
    return (fixed == 0 || fixed == 2) && is_quadratic(p);
}

namespace {

std::vector<std::vector<int>> tree_children(const Portrait& p, std::vector<bool>& on_cycle) {
    on_cycle.assign(p.succ.size(), false);
    for (const auto& c : cycles(p))
        for (int v : c) on_cycle[static_cast<std::size_t>(v)] = true;
    std::vector<std::vector<int>> ch(p.succ.size());
    for (int u = 0; u < p.size(); ++u)
        if (!on_cycle[static_cast<std::size_t>(u)]) ch[static_cast<std::size_t>(p.succ[static_cast<std::size_t>(u)])].push_back(u);
    return ch;
}

std::string tree_code(int v, const std::vector<std::vector<int>>& ch) {
    std::vector<std::string> parts;
    for (int u : ch[static_cast<std::size_t>(v)]) parts.push_back(tree_code(u, ch));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (auto& x : parts) s += x;
    return s + ")";
}

int subtree_size(int v, const std::vector<std::vector<int>>& ch, std::vector<int>& memo) {
    auto& m = memo[static_cast<std::size_t>(v)];
    if (m) return m;
    int s = 1;
    for (int u : ch[static_cast<std::size_t>(v)]) s += subtree_size(u, ch, memo);
    return m = s;
}

}  // namespace

std::string canonical_form(const Portrait& p) {
    std::vector<bool> on_cycle;
    auto ch = tree_children(p, on_cycle);
    std::vector<std::string> cyc_codes;
    for (const auto& c : cycles(p)) {
        std::vector<std::string> seq;
        for (int v : c) seq.push_back(tree_code(v, ch));
        std::vector<std::string> best = seq;
        for (std::size_t r = 1; r < seq.size(); ++r) {
            std::vector<std::string> rot(seq.begin() + static_cast<long>(r), seq.end());
            rot.insert(rot.end(), seq.begin(), seq.begin() + static_cast<long>(r));
            if (rot < best) best = std::move(rot);
        }
        std::string code = "[";
        for (std::size_t i = 0; i < best.size(); ++i) code += (i ? "," : "") + best[i];
        cyc_codes.push_back(code + "]");
    }
    std::sort(cyc_codes.begin(), cyc_codes.end());
    std::string out;
    for (auto& c : cyc_codes) out += c;
    return out;
}

bool is_isomorphic(const Portrait& a, const Portrait& b) {
    return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

bool contains_subportrait(const Portrait& big, const Portrait& small) {
    if (small.size() > big.size()) return false;
    if (small.size() == 0) return true;
    std::vector<bool> big_cyc, small_cyc;
    auto big_ch = tree_children(big, big_cyc);
    auto small_ch = tree_children(small, small_cyc);
    std::vector<int> big_sz(big.succ.size(), 0), small_sz(small.succ.size(), 0);
    for (int v = 0; v < big.size(); ++v) subtree_size(v, big_ch, big_sz);
    for (int v = 0; v < small.size(); ++v) subtree_size(v, small_ch, small_sz);

    auto bc = cycles(big), sc = cycles(small);
    // order: cycles (as units), then tree vertices breadth first from the cycles
    std::vector<int> tree_order;
    for (const auto& c : sc)
        for (int v : c) {
            std::vector<int> frontier = small_ch[static_cast<std::size_t>(v)];
            while (!frontier.empty()) {
                std::vector<int> next;
                for (int u : frontier) {
                    tree_order.push_back(u);
                    for (int w : small_ch[static_cast<std::size_t>(u)]) next.push_back(w);
                }
                frontier = std::move(next);
            }
        }

    std::vector<int> phi(small.succ.size(), -1);
    std::vector<bool> used(big.succ.size(), false);

    std::function<bool(std::size_t)> place_tree = [&](std::size_t k) -> bool {
        if (k == tree_order.size()) return true;
        int u = tree_order[k];
        int target = phi[static_cast<std::size_t>(small.succ[static_cast<std::size_t>(u)])];
        for (int cand : big_ch[static_cast<std::size_t>(target)]) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            if (big_sz[static_cast<std::size_t>(cand)] < small_sz[static_cast<std::size_t>(u)]) continue;
            used[static_cast<std::size_t>(cand)] = true;
            phi[static_cast<std::size_t>(u)] = cand;
            if (place_tree(k + 1)) return true;
            used[static_cast<std::size_t>(cand)] = false;
            phi[static_cast<std::size_t>(u)] = -1;
        }
        return false;
    };

    std::vector<bool> cycle_used(bc.size(), false);
    std::function<bool(std::size_t)> place_cycle = [&](std::size_t k) -> bool {
        if (k == sc.size()) return place_tree(0);
        const auto& c = sc[k];
        for (std::size_t j = 0; j < bc.size(); ++j) {
            if (cycle_used[j] || bc[j].size() != c.size()) continue;
            cycle_used[j] = true;
            for (std::size_t rot = 0; rot < c.size(); ++rot) {
                // c[0] -> bc[j][rot], following successors on both sides
                bool ok = true;
                for (std::size_t i = 0; i < c.size(); ++i) {
                    int bv = bc[j][(rot + i) % c.size()];
                    int sv = c[i];
                    if (big_sz[static_cast<std::size_t>(bv)] < small_sz[static_cast<std::size_t>(sv)]) ok = false;
                }
                if (!ok) continue;
                for (std::size_t i = 0; i < c.size(); ++i) {
                    phi[static_cast<std::size_t>(c[i])] = bc[j][(rot + i) % c.size()];
                    used[static_cast<std::size_t>(bc[j][(rot + i) % c.size()])] = true;
                }
                if (place_cycle(k + 1)) return true;
                for (std::size_t i = 0; i < c.size(); ++i) {
                    phi[static_cast<std::size_t>(c[i])] = -1;
                    used[static_cast<std::size_t>(bc[j][(rot + i) % c.size()])] = false;
                }
            }
            cycle_used[j] = false;
        }
        return false;
    };
    // cycles() lists vertices in successor order starting at the minimum, so
    // index i+1 is the successor of index i in both portraits.
    return place_cycle(0);
}

Portrait generic_closure(const Portrait& p) {
    if (!is_quadratic(p)) throw DomainError("generic_closure: portrait is not quadratic");
    std::vector<int> succ = p.succ;
    for (;;) {
        bool changed = false;
        Portrait cur(succ);
        auto cs = cycle_structure(cur);
        if (std::count(cs.begin(), cs.end(), 1) == 1) {
            succ.push_back(static_cast<int>(succ.size()));
            changed = true;
        }
        auto deg = in_degrees(Portrait(succ));
        std::size_t n = succ.size();
        for (std::size_t w = 0; w < n; ++w)
            if (deg[w] == 1) {
                succ.push_back(static_cast<int>(w));
                changed = true;
            }
        if (!changed) break;
    }
    return Portrait(succ);
}

namespace {

// Unordered full binary trees, by size, as AHU codes.
std::vector<std::vector<std::string>> full_binary_trees(int max_size) {
    std::vector<std::vector<std::string>> t(static_cast<std::size_t>(std::max(max_size, 1) + 1));
    t[1] = {"()"};
    for (int m = 3; m <= max_size; m += 2) {
        std::set<std::string> codes;
        for (int a = 1; a <= m - 2; a += 2) {
            int b = m - 1 - a;
            for (const auto& x : t[static_cast<std::size_t>(a)])
                for (const auto& y : t[static_cast<std::size_t>(b)]) codes.insert("(" + std::min(x, y) + std::max(x, y) + ")");
        }
        t[static_cast<std::size_t>(m)].assign(codes.begin(), codes.end());
    }
    return t;
}

// Append the tree with code `code`, rooted at a new vertex mapping to `parent`.
std::size_t build_tree(const std::string& code, std::size_t pos, int parent, std::vector<int>& succ) {
    // code[pos] == '('
    int me = static_cast<int>(succ.size());
    succ.push_back(parent);
    ++pos;
    while (code[pos] == '(') pos = build_tree(code, pos, me, succ);
    return pos + 1;
}

void cycle_structures_rec(int remaining, int max_len, CycleStructure& cur, std::vector<CycleStructure>& out) {
    out.push_back(cur);
    for (int len = std::min(remaining, max_len); len >= 1; --len) {
        long have = std::count(cur.begin(), cur.end(), len);
        if (Integer(have + 1) > cycle_bound_R(len)) continue;
        cur.push_back(len);
        cycle_structures_rec(remaining - len, len, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Portrait> enumerate_generic(int max_vertices, const std::vector<CycleStructure>& allowed, int hard_limit) {
    if (max_vertices < 0) throw DomainError("enumerate_generic: negative vertex bound");
    if (max_vertices > hard_limit)
        throw ResourceError("enumerate_generic: " + std::to_string(max_vertices) + " vertices exceeds limit " +
                            std::to_string(hard_limit));
    std::vector<CycleStructure> structures;
    CycleStructure cur;
    cycle_structures_rec(max_vertices / 2, max_vertices / 2, cur, structures);
    auto trees = full_binary_trees(max_vertices);

    std::map<std::pair<int, std::string>, Portrait> found;
    for (const auto& cs : structures) {
        long fixed = std::count(cs.begin(), cs.end(), 1);
        if (fixed == 1) continue;
        if (!allowed.empty() && std::find(allowed.begin(), allowed.end(), cs) == allowed.end()) continue;
        int L = 0;
        for (int len : cs) L += len;
        int budget = max_vertices - L;  // vertices available for trees
        if (budget < L) continue;
        // choose a tree for each cycle vertex in turn
        std::vector<std::string> choice(static_cast<std::size_t>(L));
        std::function<void(int, int)> rec = [&](int idx, int left) {
            if (idx == L) {
                std::vector<int> succ;
                int base = 0;
                for (int len : cs) {
                    for (int i = 0; i < len; ++i) succ.push_back(base + (i + 1) % len);
                    base += len;
                }
                for (int v = 0; v < L; ++v) build_tree(choice[static_cast<std::size_t>(v)], 0, v, succ);
                Portrait p(succ);
                std::string key = canonical_form(p);
                found.emplace(std::make_pair(p.size(), key), p);
                return;
            }
            int slots_after = L - idx - 1;
            for (int sz = 1; sz <= left - slots_after; sz += 2)
                for (const auto& code : trees[static_cast<std::size_t>(sz)]) {
                    choice[static_cast<std::size_t>(idx)] = code;
                    rec(idx + 1, left - sz);
                }
        };
        rec(0, budget);
    }
    std::vector<Portrait> out;
    for (auto& kv : found) out.push_back(std::move(kv.second));
    return out;
}

std::string format_cycle_structure(const CycleStructure& cs) {
    std::string s = "(";
    for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? "," : "") + std::to_string(cs[i]);
    return s + ")";
}

std::vector<CycleStructure> parse_cycle_structures(const std::string& text) {
    std::vector<CycleStructure> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
    };
    skip();
    while (i < text.size()) {
        if (text[i] != '(') throw DomainError("cycle structure: expected '(' in \"" + text + "\"");
        auto close = text.find(')', i);
        if (close == std::string::npos) throw DomainError("cycle structure: missing ')' in \"" + text + "\"");
        CycleStructure cs;
        std::stringstream ss(text.substr(i + 1, close - i - 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
            if (item.empty()) continue;
            int v = 0;
            try {
                v = std::stoi(item);
            } catch (const std::exception&) {
                throw DomainError("cycle structure: bad length \"" + item + "\"");
            }
            if (v < 1) throw DomainError("cycle structure: lengths must be positive");
            cs.push_back(v);
        }
        std::sort(cs.rbegin(), cs.rend());
        out.push_back(cs);
        i = close + 1;
        skip();
    }
    return out;
}

std::string shape_of(const Portrait& p) { return std::to_string(p.size()) + format_cycle_structure(cycle_structure(p)); }

Portrait relabel(const Portrait& p, const std::vector<int>& perm) {
    std::vector<int> succ(p.succ.size());
    for (std::size_t v = 0; v < p.succ.size(); ++v)
        succ[static_cast<std::size_t>(perm[v])] = perm[static_cast<std::size_t>(p.succ[v])];
    return Portrait(succ, p.label);
}

}  // namespace quaddyn
