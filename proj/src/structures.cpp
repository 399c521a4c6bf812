#include "canvaslab/structures.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace cvl::structure {

namespace {

std::vector<char> neighbor_of_s(const canvas::Canvas& t) {
    std::vector<char> ns(t.g.order(), 0);
    for (int v = 0; v < t.g.order(); ++v) {
        if (t.s.has_vertex(v)) continue;
        for (int u : t.g.rotation(v))
            if (t.s.has_vertex(u)) {
                ns[v] = 1;
                break;
            }
    }
    return ns;
}

/// Lex-least simple path v_0..v_{len-1} outside S with adjacency between
/// consecutive vertices and ok(i, v) true at every position.
std::optional<std::vector<int>> find_path_outside(
    const canvas::Canvas& t, int len, const std::function<bool(int, int)>& ok) {
    const int n = t.g.order();
    std::vector<int> path;
    std::vector<char> used(n, 0);
    std::function<bool()> rec = [&]() -> bool {
        if ((int)path.size() == len) return true;
        int i = (int)path.size();
        if (i == 0) {
            for (int v = 0; v < n; ++v) {
                if (t.s.has_vertex(v) || !ok(0, v)) continue;
                path.push_back(v);
                used[v] = 1;
                if (rec()) return true;
                used[v] = 0;
                path.pop_back();
            }
            return false;
        }
        int prev = path.back();
        auto nb = t.g.rotation(prev);
        std::sort(nb.begin(), nb.end());
        for (int v : nb) {
            if (used[v] || t.s.has_vertex(v) || !ok(i, v)) continue;
            path.push_back(v);
            used[v] = 1;
            if (rec()) return true;
            used[v] = 0;
            path.pop_back();
        }
        return false;
    };
    if (rec()) return path;
    return std::nullopt;
}

/// Lex-least simple path anywhere in g matching a per-position predicate.
std::optional<std::vector<int>> find_path_anywhere(
    const embed::PlaneGraph& g, int len, const std::function<bool(int, int)>& ok) {
    const int n = g.order();
    std::vector<int> path;
    std::vector<char> used(n, 0);
    std::function<bool()> rec = [&]() -> bool {
        if ((int)path.size() == len) return true;
        int i = (int)path.size();
        if (i == 0) {
            for (int v = 0; v < n; ++v) {
                if (!ok(0, v)) continue;
                path.push_back(v);
                used[v] = 1;
                if (rec()) return true;
                used[v] = 0;
                path.pop_back();
            }
            return false;
        }
        auto nb = g.rotation(path.back());
        std::sort(nb.begin(), nb.end());
        for (int v : nb) {
            if (used[v] || !ok(i, v)) continue;
            path.push_back(v);
            used[v] = 1;
            if (rec()) return true;
            used[v] = 0;
            path.pop_back();
        }
        return false;
    };
    if (rec()) return path;
    return std::nullopt;
}

int inter_component_distance(const canvas::Canvas& t) {
    // distance in G between the (at most two) components of S
    std::vector<int> comp(t.g.order(), -1);
    int nc = 0;
    for (int r : t.s.vertices()) {
        if (comp[r] != -1) continue;
        // flood within S (edges of S only)
        std::deque<int> q{r};
        comp[r] = nc;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : t.g.rotation(v))
                if (t.s.has_edge(u, v) && comp[u] == -1) {
                    comp[u] = nc;
                    q.push_back(u);
                }
        }
        ++nc;
    }
    if (nc != 2) return embed::kInfinity;
    std::vector<int> a, b;
    for (int v : t.s.vertices()) (comp[v] == 0 ? a : b).push_back(v);
    return embed::distance(t.g, a, b);
}

} // namespace

std::optional<Finding> find_chord(const canvas::Canvas& t) {
    for (const auto& [u, v] : t.g.edges())
        if (!t.s.has_edge(u, v) && t.s.has_vertex(u) && t.s.has_vertex(v))
            return Finding{"chord", 0, {u, v}, 0, 0};
    return std::nullopt;
}

std::optional<Finding> find_two_neighbor_vertex(const canvas::Canvas& t) {
    for (int v = 0; v < t.g.order(); ++v) {
        if (t.s.has_vertex(v)) continue;
        std::vector<int> ns;
        for (int u : t.g.rotation(v))
            if (t.s.has_vertex(u)) ns.push_back(u);
        if (ns.size() >= 2) {
            std::sort(ns.begin(), ns.end());
            Finding f{"two_neighbor_vertex", 0, {v}, 0, 0};
            f.vertices.insert(f.vertices.end(), ns.begin(), ns.end());
            return f;
        }
    }
    return std::nullopt;
}

std::optional<Finding> find_neighboring_path(const canvas::Canvas& t, int k) {
    if (k < 1) throw std::invalid_argument("neighboring path needs k >= 1");
    auto ns = neighbor_of_s(t);
    auto p = find_path_outside(t, k + 1, [&](int, int v) { return ns[v] != 0; });
    if (!p) return std::nullopt;
    return Finding{"neighboring_path", k, *p, 0, 0};
}

std::optional<Finding> find_semi_neighboring_path(const canvas::Canvas& t, int k) {
    if (k != 3 && k != 5) throw std::invalid_argument("semi-neighboring path needs k in {3,5}");
    auto ns = neighbor_of_s(t);
    // 1-based required positions: k=3 -> {1,2,4}; k=5 -> {1,2,5,6}
    std::vector<char> req(k + 1, 0);
    if (k == 3) req = {1, 1, 0, 1};
    else req = {1, 1, 0, 0, 1, 1};
    auto p = find_path_outside(t, k + 1, [&](int i, int v) { return !req[i] || ns[v]; });
    if (!p) return std::nullopt;
    return Finding{k == 3 ? "semi_neighboring_3_path" : "semi_neighboring_5_path", k, *p, 0, 0};
}

std::optional<Finding> find_neighboring_claw(const canvas::Canvas& t) {
    auto ns = neighbor_of_s(t);
    for (int v = 0; v < t.g.order(); ++v) {
        if (t.s.has_vertex(v) || !ns[v]) continue;
        std::vector<int> cand;
        for (int u : t.g.rotation(v))
            if (!t.s.has_vertex(u) && ns[u]) cand.push_back(u);
        if (cand.size() < 3) continue;
        std::sort(cand.begin(), cand.end());
        return Finding{"neighboring_claw", 0, {v, cand[0], cand[1], cand[2]}, 0, 0};
    }
    return std::nullopt;
}

bool check_finding(const canvas::Canvas& t, const Finding& f) {
    const auto& w = f.vertices;
    auto ns = neighbor_of_s(t);
    auto is_path_outside = [&](std::size_t from, std::size_t cnt) {
        for (std::size_t i = from; i < from + cnt; ++i) {
            if (t.s.has_vertex(w[i])) return false;
            for (std::size_t j = from; j < i; ++j)
                if (w[i] == w[j]) return false;
            if (i > from && !t.g.adjacent(w[i - 1], w[i])) return false;
        }
        return true;
    };
    if (f.kind == "chord")
        return w.size() == 2 && t.g.adjacent(w[0], w[1]) && !t.s.has_edge(w[0], w[1]) &&
               t.s.has_vertex(w[0]) && t.s.has_vertex(w[1]);
    if (f.kind == "two_neighbor_vertex") {
        if (w.size() < 3 || t.s.has_vertex(w[0])) return false;
        for (std::size_t i = 1; i < w.size(); ++i)
            if (!t.s.has_vertex(w[i]) || !t.g.adjacent(w[0], w[i])) return false;
        return true;
    }
    if (f.kind == "neighboring_path") {
        if ((int)w.size() != f.k + 1 || !is_path_outside(0, w.size())) return false;
        return std::all_of(w.begin(), w.end(), [&](int v) { return ns[v]; });
    }
    if (f.kind == "semi_neighboring_3_path")
        return w.size() == 4 && is_path_outside(0, 4) && ns[w[0]] && ns[w[1]] && ns[w[3]];
    if (f.kind == "semi_neighboring_5_path")
        return w.size() == 6 && is_path_outside(0, 6) && ns[w[0]] && ns[w[1]] && ns[w[4]] &&
               ns[w[5]];
    if (f.kind == "neighboring_claw") {
        if (w.size() != 4 || t.s.has_vertex(w[0]) || !ns[w[0]]) return false;
        for (int i = 1; i < 4; ++i) {
            if (t.s.has_vertex(w[i]) || !ns[w[i]] || !t.g.adjacent(w[0], w[i])) return false;
            for (int j = 1; j < i; ++j)
                if (w[i] == w[j]) return false;
        }
        return true;
    }
    return false;
}

namespace {

void require_hypotheses(const canvas::Canvas& t, bool assume_critical, int max_cs,
                        int min_distance) {
    int cs = t.s.component_count();
    if (cs < 1 || cs > max_cs)
        throw std::invalid_argument("lemma hypotheses: boundary component count");
    if (cs == 2 && min_distance > 0 && inter_component_distance(t) < min_distance)
        throw std::invalid_argument("lemma hypotheses: boundary components too close");
    if (!assume_critical && !canvas::is_critical(t))
        throw std::invalid_argument("lemma hypotheses: canvas is not critical");
}

LemmaResult five_outcomes(const canvas::Canvas& t) {
    LemmaResult r;
    if (auto f = find_chord(t)) {
        r = {true, 1, f};
    } else if (auto f2 = find_two_neighbor_vertex(t)) {
        r = {true, 2, f2};
    } else if (auto f3 = find_neighboring_path(t, 2)) {
        r = {true, 3, f3};
    } else if (auto f4 = find_semi_neighboring_path(t, 3)) {
        r = {true, 4, f4};
    } else if (auto f5 = find_semi_neighboring_path(t, 5)) {
        r = {true, 5, f5};
    }
    return r;
}

} // namespace

LemmaResult verify_structure(const canvas::Canvas& t, bool assume_critical) {
    require_hypotheses(t, assume_critical, 1, 0);
    LemmaResult r;
    if (auto f = find_chord(t)) r = {true, 1, f};
    else if (auto f2 = find_two_neighbor_vertex(t)) r = {true, 2, f2};
    else if (auto f3 = find_neighboring_path(t, 1)) r = {true, 3, f3};
    return r;
}

LemmaResult verify_structure_b(const canvas::Canvas& t, bool assume_critical) {
    require_hypotheses(t, assume_critical, 1, 0);
    return five_outcomes(t);
}

LemmaResult verify_structure_c(const canvas::Canvas& t, bool assume_critical) {
    require_hypotheses(t, assume_critical, 2, 7);
    return five_outcomes(t);
}

std::vector<std::array<int, 3>> relaxable_paths(const canvas::Canvas& t) {
    std::vector<std::array<int, 3>> out;
    const int n = t.g.order();
    auto unique_anchor = [&](int v) {
        int cnt = 0;
        for (int u : t.g.rotation(v))
            if (t.s.has_vertex(u)) ++cnt;
        return cnt == 1;
    };
    for (int p2 = 0; p2 < n; ++p2) {
        if (t.s.has_vertex(p2) || !unique_anchor(p2)) continue;
        auto nb = t.g.rotation(p2);
        std::sort(nb.begin(), nb.end());
        for (int p1 : nb) {
            if (t.s.has_vertex(p1) || !unique_anchor(p1)) continue;
            for (int p3 : nb) {
                if (p3 == p1 || t.s.has_vertex(p3) || !unique_anchor(p3)) continue;
                if (p1 < p3) out.push_back({p1, p2, p3});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

LemmaResult verify_structure3(const canvas::Canvas& t, bool assume_critical) {
    require_hypotheses(t, assume_critical, 2, 9);
    LemmaResult r;
    if (auto f = find_chord(t)) return {true, 1, f};
    if (auto f = find_two_neighbor_vertex(t)) return {true, 2, f};
    if (auto f = find_neighboring_claw(t)) return {true, 3, f};
    // breadth-first over <= 2-relaxations, shallowest depth wins
    std::vector<canvas::Canvas> level{t};
    for (int depth = 0; depth <= 2; ++depth) {
        for (const auto& t2 : level) {
            if (auto f = find_semi_neighboring_path(t2, 3)) {
                f->relaxation_depth = depth;
                return {true, 4, f};
            }
            if (auto f = find_semi_neighboring_path(t2, 5)) {
                f->relaxation_depth = depth;
                return {true, 5, f};
            }
        }
        if (depth == 2) break;
        std::vector<canvas::Canvas> next;
        for (const auto& t2 : level)
            for (const auto& p : relaxable_paths(t2)) next.push_back(canvas::relax(t2, p));
        level = std::move(next);
    }
    return r;
}

std::vector<Finding> degree_claim_violations(const canvas::Canvas& t) {
    std::vector<Finding> out;
    auto ns = neighbor_of_s(t);
    const int n = t.g.order();

    // NotAllDeg3: deg(p1) + deg(p2) + deg(p3) >= 10 for neighboring 2-paths
    for (int p1 = 0; p1 < n; ++p1) {
        if (t.s.has_vertex(p1) || !ns[p1]) continue;
        for (int p2 : t.g.rotation(p1)) {
            if (t.s.has_vertex(p2) || !ns[p2]) continue;
            for (int p3 : t.g.rotation(p2)) {
                if (p3 <= p1 || t.s.has_vertex(p3) || !ns[p3]) continue;
                if (t.g.degree(p1) + t.g.degree(p2) + t.g.degree(p3) < 10)
                    out.push_back(Finding{"not_all_deg3", 2, {p1, p2, p3}, 0, 0});
            }
        }
    }

    // NotBothDeg3: a size-two component {p1, p2} of N(S)\S needs max deg >= 4
    std::vector<int> comp(n, -1);
    for (int r = 0; r < n; ++r) {
        if (t.s.has_vertex(r) || !ns[r] || comp[r] != -1) continue;
        std::vector<int> members{r};
        comp[r] = r;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (int u : t.g.rotation(members[i]))
                if (!t.s.has_vertex(u) && ns[u] && comp[u] == -1) {
                    comp[u] = r;
                    members.push_back(u);
                }
        if (members.size() == 2) {
            int a = std::min(members[0], members[1]), b = std::max(members[0], members[1]);
            if (t.g.degree(a) < 4 && t.g.degree(b) < 4)
                out.push_back(Finding{"not_both_deg3", 1, {a, b}, 0, 0});
        }
    }
    return out;
}

std::vector<Finding> cylinder_conditions(const embed::PlaneGraph& g, const std::vector<int>& c1,
                                         const std::vector<int>& c2,
                                         const color::ListAssignment& l) {
    const int n = g.order();
    if (!l.valid_for(n)) throw std::invalid_argument("cylinder: malformed lists");
    std::vector<char> on1(n, 0), on2(n, 0);
    for (int v : c1) on1[v] = 1;
    for (int v : c2) on2[v] = 1;
    for (int v = 0; v < n; ++v) {
        if (on1[v] && on2[v]) throw std::invalid_argument("cylinder: C1 and C2 share a vertex");
        int sz = l.size_of(v);
        if (sz < 2) throw std::invalid_argument("cylinder: list smaller than 2");
        if (!on1[v] && !on2[v] && sz < 3)
            throw std::invalid_argument("cylinder: interior list smaller than 3");
    }
    auto two = [&](int v) { return l.size_of(v) == 2; };

    std::vector<Finding> out;
    auto push = [&](int cond, const std::vector<int>& w) {
        Finding f{"cylinder_condition", 0, w, 0, cond};
        out.push_back(std::move(f));
    };

    if (auto p = find_path_anywhere(g, 3, [&](int, int v) { return two(v); })) push(3, *p);
    if (auto p = find_path_anywhere(g, 4, [&](int i, int v) { return i == 2 || two(v); }))
        push(4, *p);
    if (auto p = find_path_anywhere(
            g, 6, [&](int i, int v) { return i == 2 || i == 3 || two(v); }))
        push(5, *p);

    // (vi): w1w2 or w1xw2, w_i on C_i with |L(w_i)| = 2
    {
        std::optional<std::vector<int>> best;
        auto consider = [&](std::optional<std::vector<int>> p) {
            if (p && (!best || *p < *best)) best = p;
        };
        consider(find_path_anywhere(
            g, 2, [&](int i, int v) { return two(v) && (i == 0 ? on1[v] : on2[v]); }));
        consider(find_path_anywhere(
            g, 2, [&](int i, int v) { return two(v) && (i == 0 ? on2[v] : on1[v]); }));
        consider(find_path_anywhere(g, 3, [&](int i, int v) {
            if (i == 1) return true;
            return two(v) && (i == 0 ? on1[v] : on2[v]);
        }));
        consider(find_path_anywhere(g, 3, [&](int i, int v) {
            if (i == 1) return true;
            return two(v) && (i == 0 ? on2[v] : on1[v]);
        }));
        if (best) push(6, *best);
    }
    // (vii): w1w2...w5, w1,w2 on one cycle, w5 on the other, those three size 2
    {
        std::optional<std::vector<int>> best;
        for (int flip = 0; flip < 2; ++flip) {
            const auto& a = flip ? on2 : on1;
            const auto& b = flip ? on1 : on2;
            auto p = find_path_anywhere(g, 5, [&](int i, int v) {
                if (i == 0 || i == 1) return two(v) && a[v] != 0;
                if (i == 4) return two(v) && b[v] != 0;
                return true;
            });
            if (p && (!best || *p < *best)) best = p;
        }
        if (best) push(7, *best);
    }
    // (viii): w1..w7, w1,w2 on one cycle, w6,w7 on the other, those four size 2
    {
        std::optional<std::vector<int>> best;
        for (int flip = 0; flip < 2; ++flip) {
            const auto& a = flip ? on2 : on1;
            const auto& b = flip ? on1 : on2;
            auto p = find_path_anywhere(g, 7, [&](int i, int v) {
                if (i == 0 || i == 1) return two(v) && a[v] != 0;
                if (i == 5 || i == 6) return two(v) && b[v] != 0;
                return true;
            });
            if (p && (!best || *p < *best)) best = p;
        }
        if (best) push(8, *best);
    }
    return out;
}

} // namespace cvl::structure
