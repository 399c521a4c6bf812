#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "canvaslab/canvas.hpp"
#include "canvaslab/corpus.hpp"
#include "canvaslab/formats.hpp"

using namespace cvl;
using canvas::Canvas;
using canvas::Params;
using canvas::Rat;
using color::ListAssignment;
using color::PartialColoring;
using embed::Edge;
using embed::PlaneGraph;
using embed::Subgraph;

namespace {

formats::AdjList cycle_adj(int n) {
    formats::AdjList a(n);
    for (int v = 0; v < n; ++v) {
        a[v] = {(v + n - 1) % n, (v + 1) % n};
        std::sort(a[v].begin(), a[v].end());
    }
    return a;
}

std::vector<Edge> cycle_edges(int n) {
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.push_back(embed::make_edge(v, (v + 1) % n));
    std::sort(e.begin(), e.end());
    return e;
}

std::vector<int> iota_vec(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

// C8 plus the chord 0-4 (two pentagonal faces), boundary = the C8
Canvas chord_canvas() {
    auto adj = cycle_adj(8);
    adj[0].push_back(4);
    adj[4].push_back(0);
    std::sort(adj[0].begin(), adj[0].end());
    std::sort(adj[4].begin(), adj[4].end());
    auto g = *formats::embed_planar(adj);
    Subgraph s(8, iota_vec(8), cycle_edges(8));
    ListAssignment l;
    l.palette = 3;
    for (int v = 0; v < 8; ++v) l.lists.push_back(1u << (v % 2)); // 0,1 alternating
    return canvas::make_canvas(std::move(g), std::move(s), std::move(l));
}

// C9 plus a center adjacent to 0, 3, 6; boundary = the C9
Canvas tripod_canvas() {
    auto adj = cycle_adj(9);
    adj.push_back({0, 3, 6});
    for (int v : {0, 3, 6}) {
        adj[v].push_back(9);
        std::sort(adj[v].begin(), adj[v].end());
    }
    auto g = *formats::embed_planar(adj);
    Subgraph s(10, iota_vec(9), cycle_edges(9));
    ListAssignment l;
    l.palette = 3;
    // proper on C9 and pairwise distinct on the tripod feet 0, 3, 6, so the
    // unique boundary coloring separates every free edge
    for (int c : {0, 1, 2, 1, 0, 1, 2, 0, 1}) l.lists.push_back(1u << c);
    l.lists.push_back(0b111);
    return canvas::make_canvas(std::move(g), std::move(s), std::move(l));
}

// is phi completable on the subgraph of t.g with exactly H's edges?
bool extends_into(const Canvas& t, const Subgraph& h, const PartialColoring& phi) {
    std::vector<std::vector<int>> rot(t.g.order());
    for (int v = 0; v < t.g.order(); ++v)
        for (int u : t.g.rotation(v))
            if (h.has_edge(u, v)) rot[v].push_back(u);
    PlaneGraph gh(std::move(rot));
    for (const auto& [u, v] : gh.edges())
        if (phi[u] >= 0 && phi[u] == phi[v]) return false;
    return color::solve(gh, t.l, phi).has_value();
}

// textbook criticality: every proper subgraph H with S <= H < G admits some
// boundary coloring that extends to H but not to G
bool critical_oracle(const Canvas& t) {
    std::vector<int> free_verts;
    for (int v = 0; v < t.g.order(); ++v)
        if (!t.s.has_vertex(v)) free_verts.push_back(v);
    std::vector<Edge> free_edges;
    for (const auto& e : t.g.edges())
        if (!t.s.has_edge(e.first, e.second)) free_edges.push_back(e);
    if (free_verts.empty() && free_edges.empty()) return false; // G = S

    auto phis = canvas::boundary_colorings(t);
    auto separated = [&](const Subgraph& h) {
        for (const auto& phi : phis) {
            bool clash = false;
            for (const auto& [u, v] : t.g.edges())
                if (phi[u] >= 0 && phi[u] == phi[v]) clash = true;
            bool to_h = extends_into(t, h, phi);
            bool to_g = !clash && color::solve(t.g, t.l, phi).has_value();
            if (to_h && !to_g) return true;
        }
        return false;
    };

    const int nv = (int)free_verts.size(), ne = (int)free_edges.size();
    for (int vm = 0; vm < (1 << nv); ++vm)
        for (int em = 0; em < (1 << ne); ++em) {
            if (vm == (1 << nv) - 1 && em == (1 << ne) - 1) continue; // H = G
            Subgraph h = t.s;
            for (int i = 0; i < nv; ++i)
                if (vm >> i & 1) h = h.with_vertex(free_verts[i]);
            bool consistent = true;
            for (int i = 0; i < ne; ++i)
                if (em >> i & 1) {
                    const auto& e = free_edges[i];
                    if (!h.has_vertex(e.first) || !h.has_vertex(e.second)) {
                        consistent = false;
                        break;
                    }
                    h = h.with_edge(e);
                }
            if (!consistent) continue;
            if (!separated(h)) return false;
        }
    return true;
}

} // namespace

TEST_CASE("parameter inequalities, exactly") {
    canvas::Params def;
    auto r = canvas::validate_params(def);
    CHECK(r.positive);
    CHECK(r.ineq1);
    CHECK(r.ineq2); // tight: 2.5(3/8) + 5.5(1/88) = 1
    CHECK(r.ineq3); // tight: 11/88 + 1 = 9/8
    CHECK(r.ineq4);
    CHECK(r.ok());

    auto both_small = canvas::validate_params({Rat(1, 88), Rat(1, 88)});
    CHECK(both_small.positive);
    CHECK(!both_small.ineq1); // 9/88 > 1/88
    CHECK(both_small.ineq2);
    CHECK(!both_small.ineq3);
    CHECK(both_small.ineq4);
    CHECK(!both_small.ok());

    CHECK(!canvas::validate_params({Rat(0), Rat(3, 8)}).positive);
    CHECK(!canvas::validate_params({Rat(1, 88), Rat(-1, 8)}).positive);
}

TEST_CASE("metrics of G = S are all zero") {
    auto adj = cycle_adj(5);
    auto g = *formats::embed_planar(adj);
    Subgraph s(5, iota_vec(5), cycle_edges(5));
    ListAssignment l;
    l.palette = 3;
    l.lists = {0b001, 0b010, 0b001, 0b010, 0b100};
    auto t = canvas::make_canvas(std::move(g), std::move(s), std::move(l));
    auto m = canvas::metrics(t, Params{});
    CHECK(m.v == 0);
    CHECK(m.e == 0);
    CHECK(m.q == 0);
    CHECK(m.def == Rat(0));
    CHECK(m.d == Rat(0));
    CHECK(!canvas::is_critical(t));
    CHECK(canvas::is_normal(t));
    CHECK(canvas::classify_singular(t) == canvas::Singularity::nonsingular);
}

TEST_CASE("chord canvas: metrics, criticality, singularity") {
    auto t = chord_canvas();
    Params p;
    auto m = canvas::metrics(t, p);
    CHECK(m.v == 0);
    CHECK(m.e == 1);
    CHECK(m.q == 2);
    CHECK(m.def == Rat(3));
    CHECK(m.s == 2 * p.alpha);
    CHECK(m.d == Rat(9, 4)); // 3 - 2a = 3 - 3/4
    CHECK(m.d == Rat(3) - 2 * p.alpha);

    canvas::CriticalWitness w;
    CHECK(canvas::is_critical(t, &w));
    REQUIRE(w.edges.size() == 1);
    CHECK(w.edges[0] == Edge{0, 4});
    // the separating coloring clashes exactly on the chord
    REQUIRE(!w.separating.empty());
    CHECK(w.separating[0][0] == w.separating[0][4]);

    CHECK(canvas::classify_singular(t) == canvas::Singularity::chord);
    CHECK(!canvas::is_normal(t));
    CHECK(critical_oracle(t));
}

TEST_CASE("tripod canvas: metrics, criticality, singularity") {
    auto t = tripod_canvas();
    Params p;
    auto m = canvas::metrics(t, p);
    CHECK(m.v == 1);
    CHECK(m.e == 3);
    CHECK(m.q == 3);
    CHECK(m.def == Rat(4));
    CHECK(m.d == Rat(4) - p.epsilon - 3 * p.alpha);
    CHECK(m.d == Rat(4) - Rat(1, 88) - Rat(9, 8));

    CHECK(canvas::is_critical(t));
    CHECK(canvas::classify_singular(t) == canvas::Singularity::tripod);
    CHECK(!canvas::is_normal(t)); // center has 3 neighbors on S
    CHECK(critical_oracle(t));
}

TEST_CASE("sub/super split identities on the tripod") {
    auto t = tripod_canvas();
    Params p;
    auto h = t.s.with_vertex(9).with_edge({0, 9});
    auto sub = canvas::subcanvas(t, h);
    auto sup = canvas::supercanvas(t, h);
    auto mw = canvas::metrics(t, p), ms = canvas::metrics(sub, p), mu = canvas::metrics(sup, p);
    CHECK(mw.def == ms.def + mu.def);
    CHECK(canvas::q_boundary_excess(t, h) == 2); // center keeps 2 edges outside H
    CHECK(mw.q == mu.q + ms.q - canvas::q_boundary_excess(t, h));
    CHECK(mw.v == ms.v + mu.v);
    CHECK(mw.d >= ms.d + mu.d);
    CHECK(canvas::d_T(t, h, p) == ms.d + p.alpha * Rat(2));

    CHECK_THROWS_AS(canvas::subcanvas(t, Subgraph::empty(10)), std::invalid_argument);
    CHECK_THROWS_AS(canvas::supercanvas(t, Subgraph::empty(10)), std::invalid_argument);
}

TEST_CASE("make_canvas rejects invalid input") {
    // girth 4
    auto c4 = *formats::embed_planar(cycle_adj(4));
    ListAssignment l4;
    l4.palette = 3;
    l4.lists.assign(4, 0b111);
    CHECK_THROWS_AS(
        canvas::make_canvas(c4, Subgraph(4, iota_vec(4), cycle_edges(4)), l4),
        std::invalid_argument);

    auto c5 = *formats::embed_planar(cycle_adj(5));
    // S not a subgraph (edge 0-2 does not exist)
    CHECK_THROWS_AS(
        canvas::make_canvas(c5, Subgraph(5, {0, 1, 2}, {{0, 2}}),
                            ListAssignment{3, std::vector<std::uint32_t>(5, 0b111)}),
        std::invalid_argument);
    // list too small off S
    ListAssignment small;
    small.palette = 3;
    small.lists = {0b001, 0b011, 0b111, 0b111, 0b111};
    CHECK_THROWS_AS(canvas::make_canvas(c5, Subgraph(5, {0}, {}), small), std::invalid_argument);
    // S not L-colorable: adjacent equal singletons
    ListAssignment clash;
    clash.palette = 3;
    clash.lists = {0b001, 0b001, 0b111, 0b111, 0b111};
    CHECK_THROWS_AS(canvas::make_canvas(c5, Subgraph(5, {0, 1}, {{0, 1}}), clash),
                    std::invalid_argument);
}

TEST_CASE("boundary colorings of a full-list C5 boundary") {
    auto c5 = *formats::embed_planar(cycle_adj(5));
    ListAssignment l;
    l.palette = 3;
    l.lists.assign(5, 0b111);
    auto t = canvas::make_canvas(c5, Subgraph(5, iota_vec(5), cycle_edges(5)), l);
    CHECK(canvas::boundary_colorings(t).size() == 30); // P(C5, 3)
}

TEST_CASE("relaxation absorbs a neighboring 2-path") {
    // C10 boundary with interior path 10-11-12 hooked to 0, 3, 6
    auto adj = cycle_adj(10);
    adj.push_back({0, 11});
    adj.push_back({3, 10, 12});
    adj.push_back({6, 11});
    for (auto [s, p] : std::vector<std::pair<int, int>>{{0, 10}, {3, 11}, {6, 12}}) {
        adj[s].push_back(p);
        std::sort(adj[s].begin(), adj[s].end());
    }
    auto g = *formats::embed_planar(adj);
    REQUIRE(embed::girth(g) >= 5);
    Subgraph s(13, iota_vec(10), cycle_edges(10));
    ListAssignment l;
    l.palette = 3;
    for (int v = 0; v < 10; ++v) l.lists.push_back(1u << (v % 2));
    for (int i = 0; i < 3; ++i) l.lists.push_back(0b111);
    auto t = canvas::make_canvas(std::move(g), std::move(s), std::move(l));

    auto r = canvas::relax(t, {10, 11, 12});
    CHECK(r.s.vertex_count() == t.s.vertex_count() + 3);
    CHECK(r.s.edge_count() == t.s.edge_count() + 5);
    CHECK(r.s.has_edge(10, 11));
    CHECK(r.s.has_edge(11, 12));
    CHECK(r.s.has_edge(0, 10));
    CHECK(r.s.has_edge(3, 11));
    CHECK(r.s.has_edge(6, 12));
    CHECK(canvas::check_canvas(r).empty());
    Params p;
    auto mr = canvas::metrics(r, p), mt = canvas::metrics(t, p);
    CHECK(mr.v == mt.v - 3);
    CHECK(mr.e == mt.e - 5);
    CHECK(mr.def == mt.def); // 3*5 removed edges balance 5*3 removed vertices

    CHECK_THROWS_AS(canvas::relax(t, {0, 1, 2}), std::invalid_argument);   // on S
    CHECK_THROWS_AS(canvas::relax(t, {10, 11, 10}), std::invalid_argument); // not a path
}

TEST_CASE("is_critical agrees with the all-subgraphs definition on the corpus") {
    corpus::CorpusSpec spec;
    spec.max_vertices = 8; // chord canvases (C8 plus chord) first appear here
    long long seen = 0, crit = 0;
    corpus::generate(spec, [&](corpus::CanvasInstance& inst) {
        ++seen;
        bool fast = canvas::is_critical(inst.t);
        CHECK(fast == critical_oracle(inst.t));
        if (fast) ++crit;
        return true;
    });
    CHECK(seen > 0);
    CHECK(crit > 0); // the 7-vertex corpus has chord canvases
}
