#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "canvaslab/corpus.hpp"
#include "canvaslab/formats.hpp"
#include "canvaslab/iso.hpp"

using namespace cvl;
using formats::AdjList;

namespace {

// girth >= 5 <=> no triangle and no 4-cycle
bool girth_at_least_5(int n, const std::vector<std::vector<char>>& a) {
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int common = 0;
            for (int w = 0; w < n; ++w)
                if (a[u][w] && a[v][w]) ++common;
            if (a[u][v] && common > 0) return false; // triangle
            if (common >= 2) return false;           // 4-cycle
        }
    return true;
}

bool connected(int n, const std::vector<std::vector<char>>& a) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u)
            if (a[v][u] && !seen[u]) {
                seen[u] = 1;
                ++cnt;
                stack.push_back(u);
            }
    }
    return cnt == n;
}

// canonical form of the adjacency matrix: min bitstring over all relabelings
std::string canonical(int n, const std::vector<std::vector<char>>& a) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s;
        s.reserve(n * (n - 1) / 2);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) s += a[perm[u]][perm[v]] ? '1' : '0';
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// brute-force count of isomorphism classes of girth->=5 graphs on exactly n
// vertices (every such graph on <= 6 vertices is planar, since K5 and K3,3
// subdivisions contain short cycles or need more vertices)
std::pair<int, int> brute_counts(int n) {
    int pairs = n * (n - 1) / 2;
    std::set<std::string> all, conn;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
        std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (mask >> bit & 1) a[u][v] = a[v][u] = 1;
        if (!girth_at_least_5(n, a)) continue;
        auto key = canonical(n, a);
        all.insert(key);
        if (connected(n, a)) conn.insert(key);
    }
    return {(int)all.size(), (int)conn.size()};
}

} // namespace

TEST_CASE("generate_graphs matches brute-force isomorphism-class counts") {
    auto gen_all = corpus::generate_graphs(6, true);
    auto gen_conn = corpus::generate_graphs(6, false);
    for (int n = 1; n <= 6; ++n) {
        auto [all, conn] = brute_counts(n);
        int got_all = (int)std::count_if(gen_all.begin(), gen_all.end(),
                                         [&](const AdjList& g) { return (int)g.size() == n; });
        int got_conn = (int)std::count_if(gen_conn.begin(), gen_conn.end(),
                                          [&](const AdjList& g) { return (int)g.size() == n; });
        CAPTURE(n);
        CHECK(got_all == all);
        CHECK(got_conn == conn);
    }
}

TEST_CASE("generated graphs are pairwise non-isomorphic and girth >= 5") {
    auto gs = corpus::generate_graphs(8, true);
    for (const auto& adj : gs) {
        auto g = formats::embed_planar(adj);
        REQUIRE(g.has_value());
        int gi = embed::girth(*g);
        CHECK((gi >= 5 || gi == embed::kInfinity));
    }
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j) {
            if (gs[i].size() != gs[j].size()) continue;
            if (iso::invariant_key(gs[i]) != iso::invariant_key(gs[j])) continue;
            CHECK(!iso::are_isomorphic(gs[i], gs[j]));
        }
}

TEST_CASE("5-vertex corpus is exactly the C5 coloring orbits") {
    // orbits of proper 3-colorings of C5 under D5 x S3, by brute force
    std::set<std::vector<int>> canon;
    std::vector<std::vector<int>> rotations;
    for (int r = 0; r < 5; ++r) {
        std::vector<int> p(5), q(5);
        for (int v = 0; v < 5; ++v) p[v] = (v + r) % 5;
        for (int v = 0; v < 5; ++v) q[v] = (5 - v + r) % 5;
        rotations.push_back(p);
        rotations.push_back(q);
    }
    std::vector<std::vector<int>> palette;
    std::vector<int> cp{0, 1, 2};
    do palette.push_back(cp);
    while (std::next_permutation(cp.begin(), cp.end()));

    int total = 0;
    for (int code = 0; code < 243; ++code) {
        std::vector<int> phi(5);
        int c = code;
        for (int v = 0; v < 5; ++v, c /= 3) phi[v] = c % 3;
        bool proper = true;
        for (int v = 0; v < 5; ++v)
            if (phi[v] == phi[(v + 1) % 5]) proper = false;
        if (!proper) continue;
        ++total;
        std::vector<int> best = phi;
        for (const auto& sigma : rotations)
            for (const auto& pi : palette) {
                std::vector<int> img(5);
                for (int v = 0; v < 5; ++v) img[v] = pi[phi[sigma[v]]];
                best = std::min(best, img);
            }
        canon.insert(best);
    }
    CHECK(total == 30);

    corpus::CorpusSpec spec;
    spec.max_vertices = 5;
    long long count = 0;
    corpus::generate(spec, [&](corpus::CanvasInstance& inst) {
        CHECK(inst.t.g.order() == 5);
        CHECK(inst.t.s.vertex_count() == 5);
        ++count;
        return true;
    });
    CHECK(count == (long long)canon.size());
}

TEST_CASE("canvas serialization round trip") {
    corpus::CorpusSpec spec;
    spec.max_vertices = 7;
    corpus::generate(spec, [&](corpus::CanvasInstance& inst) {
        auto text = corpus::serialize_canvas(inst.t);
        std::stringstream ss(text);
        auto back = corpus::deserialize_canvas(ss);
        CHECK(back.g.rotations() == inst.t.g.rotations());
        CHECK(back.s == inst.t.s);
        CHECK(back.l.lists == inst.t.l.lists);
        CHECK(back.l.palette == inst.t.l.palette);
        CHECK(corpus::canvas_id(back) == inst.id);
        return true;
    });
}

TEST_CASE("generation is deterministic") {
    corpus::CorpusSpec spec;
    spec.max_vertices = 7;
    std::vector<std::string> a, b;
    corpus::generate(spec, [&](corpus::CanvasInstance& inst) {
        a.push_back(inst.id);
        return true;
    });
    corpus::generate(spec, [&](corpus::CanvasInstance& inst) {
        b.push_back(inst.id);
        return true;
    });
    CHECK(a == b);
    CHECK(std::set<std::string>(a.begin(), a.end()).size() == a.size()); // ids unique
}

TEST_CASE("corpus spec config round trip and errors") {
    corpus::CorpusSpec spec;
    spec.max_vertices = 10;
    spec.boundary_mode = corpus::BoundaryMode::two_facial_cycles;
    spec.min_boundary_distance = 3;
    spec.palette_size = 4;
    spec.canonicalize = false;
    spec.include_disconnected = false;
    std::stringstream ss(spec.to_config());
    auto back = corpus::spec_from_config(ss);
    CHECK(back.max_vertices == 10);
    CHECK(back.boundary_mode == corpus::BoundaryMode::two_facial_cycles);
    CHECK(back.min_boundary_distance == 3);
    CHECK(back.palette_size == 4);
    CHECK(!back.canonicalize);
    CHECK(!back.include_disconnected);

    std::stringstream bad("no_such_key=1\n");
    CHECK_THROWS(corpus::spec_from_config(bad));
    std::stringstream comments("# comment\nmax_vertices=4\n");
    CHECK(corpus::spec_from_config(comments).max_vertices == 4);
    CHECK(corpus::boundary_mode_from_string("one_facial_cycle") ==
          corpus::BoundaryMode::one_facial_cycle);
    CHECK_THROWS(corpus::boundary_mode_from_string("bogus"));
}

TEST_CASE("facial cycles") {
    // C8 + chord: outer octagon and two pentagons
    formats::AdjList adj(8);
    for (int v = 0; v < 8; ++v) adj[v] = {(v + 7) % 8, (v + 1) % 8};
    adj[0].push_back(4);
    adj[4].push_back(0);
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    auto g = *formats::embed_planar(adj);
    auto fc = corpus::facial_cycles(g);
    CHECK(fc.size() == 3);
    std::multiset<int> sizes;
    for (const auto& c : fc) sizes.insert(c.vertex_count());
    CHECK(sizes == std::multiset<int>{5, 5, 8});

    // a tree has no facial cycle
    auto p4 = *formats::embed_planar({{1}, {0, 2}, {1, 3}, {2}});
    CHECK(corpus::facial_cycles(p4).empty());
}

TEST_CASE("ingest filters by validity and girth") {
    std::string path = "ingest_test.g6";
    {
        std::ofstream out(path);
        formats::AdjList c5(5), c4(4), k4(4), c6(6);
        for (int v = 0; v < 5; ++v) c5[v] = {(v + 4) % 5, (v + 1) % 5};
        for (int v = 0; v < 4; ++v) c4[v] = {(v + 3) % 4, (v + 1) % 4};
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v)
                if (u != v) k4[u].push_back(v);
        for (int v = 0; v < 6; ++v) c6[v] = {(v + 5) % 6, (v + 1) % 6};
        for (auto* g : {&c5, &c4, &k4, &c6})
            for (auto& nb : *g) std::sort(nb.begin(), nb.end());
        out << formats::to_graph6(c5) << "\n" << formats::to_graph6(c4) << "\n"
            << formats::to_graph6(k4) << "\n" << formats::to_graph6(c6) << "\n";
    }
    auto graphs = corpus::ingest(path, "graph6");
    CHECK(graphs.size() == 2); // C5 and C6 survive the girth filter
    std::remove(path.c_str());
}
