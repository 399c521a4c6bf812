#include "canvaslab/canvas.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace cvl::canvas {

std::string to_string(const Rat& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g",
                  static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()));
    return s + " (~" + buf + ")";
}

namespace {

/// Graph with exactly S's vertices and edges, plus the restricted lists.
std::pair<embed::PlaneGraph, color::ListAssignment> boundary_graph(const Canvas& t) {
    auto res = embed::restrict_to(t.g, t.s);
    color::ListAssignment l;
    l.palette = t.l.palette;
    l.lists.assign(res.graph.order(), 0);
    for (int v = 0; v < t.g.order(); ++v)
        if (res.old_to_new[v] >= 0) l.lists[res.old_to_new[v]] = t.l.lists[v];
    return {std::move(res.graph), std::move(l)};
}

/// Does phi extend to a full coloring of g (minus removed)? Clashing fixed
/// assignments count as "does not extend" rather than erroring, because
/// boundary colorings are proper on E(S) only and chords may clash.
bool extends(const embed::PlaneGraph& g, const color::ListAssignment& l,
             const color::PartialColoring& phi, std::optional<embed::Edge> removed) {
    for (const auto& [u, v] : g.edges()) {
        if (removed && embed::make_edge(u, v) == *removed) continue;
        if (phi[u] >= 0 && phi[u] == phi[v]) return false;
    }
    return color::solve(g, l, phi, removed).has_value();
}

} // namespace

std::string check_canvas(const Canvas& t) {
    auto rep = embed::validate_embedding(t.g);
    if (!rep.ok()) return "embedding invalid: " + rep.detail;
    int gi = embed::girth(t.g);
    if (gi != embed::kInfinity && gi < 5) return "girth " + std::to_string(gi) + " < 5";
    if (!embed::is_subgraph_of(t.s, t.g)) return "S is not a subgraph of G";
    if (!t.l.valid_for(t.g.order())) return "list assignment malformed";
    for (int v = 0; v < t.g.order(); ++v)
        if (!t.s.has_vertex(v) && t.l.size_of(v) < 3)
            return "vertex " + std::to_string(v) + " off S has a list smaller than 3";
    auto [sg, sl] = boundary_graph(t);
    if (sg.order() > 0 &&
        !color::solve(sg, sl, color::PartialColoring(sg.order(), -1)).has_value())
        return "S is not L-colorable";
    return "";
}

Canvas make_canvas(embed::PlaneGraph g, embed::Subgraph s, color::ListAssignment l) {
    Canvas t{std::move(g), std::move(s), std::move(l)};
    auto err = check_canvas(t);
    if (!err.empty()) throw std::invalid_argument("invalid canvas: " + err);
    return t;
}

ParamReport validate_params(const Params& p) {
    ParamReport r;
    // comparisons keep both sides as Rat: boost 1.74's rational/int mixed
    // operator== recurses under C++20 rewritten candidates
    r.positive = p.epsilon > Rat(0) && p.alpha > Rat(0);
    r.ineq1 = 9 * p.epsilon <= p.alpha;
    r.ineq2 = Rat(5, 2) * p.alpha + Rat(11, 2) * p.epsilon <= Rat(1);
    r.ineq3 = 11 * p.epsilon + 1 <= 3 * p.alpha;
    r.ineq4 = 2 * p.alpha + 10 * p.epsilon <= Rat(1);
    return r;
}

Metrics metrics(const embed::PlaneGraph& g, const embed::Subgraph& s, const Params& p) {
    Metrics m;
    m.v = g.order() - s.vertex_count();
    m.e = g.size() - s.edge_count();
    for (int v : s.vertices()) {
        int degS = 0;
        for (int u : g.rotation(v))
            if (s.has_edge(u, v)) ++degS;
        m.q += g.degree(v) - degS;
    }
    m.cS = s.component_count();
    m.cG = g.component_count();
    m.def = Rat(3 * m.e - 5 * m.v + 10 * (m.cS - m.cG));
    m.s = p.epsilon * Rat(m.v) + p.alpha * Rat(m.q);
    m.d = m.def - m.s;
    return m;
}

Canvas subcanvas(const Canvas& t, const embed::Subgraph& h) {
    if (!embed::is_subgraph_of(h, t.g) || !embed::contains(h, t.s))
        throw std::invalid_argument("subcanvas: need S <= H <= G");
    auto res = embed::restrict_to(t.g, h);
    std::vector<int> sv;
    std::vector<embed::Edge> se;
    for (int v : t.s.vertices()) sv.push_back(res.old_to_new[v]);
    for (const auto& [u, v] : t.s.edges())
        se.push_back(embed::make_edge(res.old_to_new[u], res.old_to_new[v]));
    color::ListAssignment l;
    l.palette = t.l.palette;
    l.lists.assign(res.graph.order(), 0);
    for (int v = 0; v < t.g.order(); ++v)
        if (res.old_to_new[v] >= 0) l.lists[res.old_to_new[v]] = t.l.lists[v];
    const int order = res.graph.order();
    return Canvas{std::move(res.graph), embed::Subgraph(order, std::move(sv), std::move(se)),
                  std::move(l)};
}

Canvas supercanvas(const Canvas& t, const embed::Subgraph& h) {
    if (!embed::is_subgraph_of(h, t.g) || !embed::contains(h, t.s))
        throw std::invalid_argument("supercanvas: need S <= H <= G");
    return Canvas{t.g, h, t.l};
}

long long q_boundary_excess(const Canvas& t, const embed::Subgraph& h) {
    if (!embed::is_subgraph_of(h, t.g) || !embed::contains(h, t.s))
        throw std::invalid_argument("q_boundary_excess: need S <= H <= G");
    long long q = 0;
    for (int v : h.vertices()) {
        if (t.s.has_vertex(v)) continue;
        int degH = 0;
        for (int u : t.g.rotation(v))
            if (h.has_edge(u, v)) ++degH;
        q += t.g.degree(v) - degH;
    }
    return q;
}

Rat d_T(const Canvas& t, const embed::Subgraph& h, const Params& p) {
    auto sub = subcanvas(t, h);
    return metrics(sub, p).d + p.alpha * Rat(q_boundary_excess(t, h));
}

std::vector<color::PartialColoring> boundary_colorings(const Canvas& t) {
    std::vector<color::PartialColoring> out;
    const auto& verts = t.s.vertices();
    color::PartialColoring phi(t.g.order(), -1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == verts.size()) {
            out.push_back(phi);
            return;
        }
        int v = verts[i];
        for (int c = 0; c < t.l.palette; ++c) {
            if (!(t.l.lists[v] >> c & 1)) continue;
            bool ok = true;
            for (int u : t.g.rotation(v))
                if (t.s.has_edge(u, v) && phi[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            phi[v] = c;
            rec(i + 1);
            phi[v] = -1;
        }
    };
    rec(0);
    return out;
}

bool is_critical(const Canvas& t, CriticalWitness* witness) {
    if (witness) *witness = {};
    // a vertex off S with degree < 3 < |L(v)| can always be colored greedily,
    // so G minus it (or minus an incident edge) never has a separating coloring
    for (int v = 0; v < t.g.order(); ++v)
        if (!t.s.has_vertex(v) && t.g.degree(v) < 3) return false;
    std::vector<embed::Edge> free_edges;
    for (const auto& e : t.g.edges())
        if (!t.s.has_edge(e.first, e.second)) free_edges.push_back(e);
    if (free_edges.empty() && t.g.order() == t.s.vertex_count()) return false; // G = S

    auto phis = boundary_colorings(t);
    std::vector<char> witnessed(free_edges.size(), 0);
    std::vector<color::PartialColoring> sep(free_edges.size());
    std::size_t remaining = free_edges.size();
    for (const auto& phi : phis) {
        if (remaining == 0) break;
        if (extends(t.g, t.l, phi, std::nullopt)) continue;
        for (std::size_t i = 0; i < free_edges.size() && remaining; ++i) {
            if (witnessed[i]) continue;
            if (extends(t.g, t.l, phi, free_edges[i])) {
                witnessed[i] = 1;
                sep[i] = phi;
                --remaining;
            }
        }
    }
    if (remaining != 0) return false;
    if (witness) {
        witness->edges = free_edges;
        witness->separating = std::move(sep);
    }
    return true;
}

Singularity classify_singular(const Canvas& t) {
    const long long v = t.g.order() - t.s.vertex_count();
    const long long e = t.g.size() - t.s.edge_count();
    if (v == 0 && e == 1) return Singularity::chord;
    if (v == 1 && e == 3) {
        int x = -1;
        for (int u = 0; u < t.g.order(); ++u)
            if (!t.s.has_vertex(u)) x = u;
        if (t.g.degree(x) == 3) {
            bool all_incident = true;
            for (const auto& [a, b] : t.g.edges())
                if (!t.s.has_edge(a, b) && a != x && b != x) all_incident = false;
            if (all_incident) return Singularity::tripod;
        }
    }
    return Singularity::nonsingular;
}

bool is_normal(const Canvas& t) {
    for (const auto& [u, v] : t.g.edges())
        if (!t.s.has_edge(u, v) && t.s.has_vertex(u) && t.s.has_vertex(v)) return false;
    for (int v = 0; v < t.g.order(); ++v) {
        if (t.s.has_vertex(v)) continue;
        int k = 0;
        for (int u : t.g.rotation(v))
            if (t.s.has_vertex(u)) ++k;
        if (k >= 3) return false;
    }
    return true;
}

Canvas relax(const Canvas& t, const std::array<int, 3>& path) {
    auto [p1, p2, p3] = path;
    if (p1 == p3 || !t.g.adjacent(p1, p2) || !t.g.adjacent(p2, p3))
        throw std::invalid_argument("relax: not a 2-path");
    std::array<int, 3> anchor{};
    for (int i = 0; i < 3; ++i) {
        int p = path[i];
        if (t.s.has_vertex(p)) throw std::invalid_argument("relax: path vertex on S");
        int u = -1;
        for (int w : t.g.rotation(p))
            if (t.s.has_vertex(w)) {
                if (u != -1) throw std::invalid_argument("relax: non-unique S-neighbor");
                u = w;
            }
        if (u == -1) throw std::invalid_argument("relax: path vertex not in N(S)");
        anchor[i] = u;
    }
    auto verts = t.s.vertices();
    verts.insert(verts.end(), path.begin(), path.end());
    auto edges = t.s.edges();
    edges.push_back(embed::make_edge(p1, p2));
    edges.push_back(embed::make_edge(p2, p3));
    for (int i = 0; i < 3; ++i) edges.push_back(embed::make_edge(path[i], anchor[i]));
    return Canvas{t.g, embed::Subgraph(t.g.order(), std::move(verts), std::move(edges)), t.l};
}

} // namespace cvl::canvas
