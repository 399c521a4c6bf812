#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <queue>

#include "canvaslab/corpus.hpp"
#include "canvaslab/formats.hpp"
#include "canvaslab/plane_graph.hpp"

using namespace cvl;
using embed::Edge;
using embed::PlaneGraph;
using embed::Subgraph;

namespace {

PlaneGraph cycle(int n) {
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) rot[v] = {(v + n - 1) % n, (v + 1) % n};
    return PlaneGraph(std::move(rot));
}

PlaneGraph path(int n) {
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        if (v > 0) rot[v].push_back(v - 1);
        if (v + 1 < n) rot[v].push_back(v + 1);
    }
    return PlaneGraph(std::move(rot));
}

// BFS distance between two vertices with one edge ignored
int bfs_without_edge(const PlaneGraph& g, int s, int t, const Edge& skip) {
    std::vector<int> dist(g.order(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.rotation(v)) {
            if (embed::make_edge(u, v) == skip) continue;
            if (dist[u] == -1) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
        }
    }
    return dist[t];
}

// independent girth oracle: shortest cycle through any edge
int girth_oracle(const PlaneGraph& g) {
    int best = embed::kInfinity;
    for (const auto& [u, v] : g.edges()) {
        int d = bfs_without_edge(g, u, v, {u, v});
        if (d >= 0 && d + 1 < best) best = d + 1;
    }
    return best;
}

} // namespace

TEST_CASE("C5 basics") {
    auto g = cycle(5);
    CHECK(g.order() == 5);
    CHECK(g.size() == 5);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(4, 0));
    CHECK(!g.adjacent(0, 2));
    CHECK(g.component_count() == 1);
    CHECK(embed::girth(g) == 5);
    auto rep = embed::validate_embedding(g);
    CHECK(rep.ok());
    CHECK(rep.face_count == 2);
    auto fs = embed::faces(g);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].size() == 5);
    CHECK(fs[1].size() == 5);
}

TEST_CASE("dodecahedron as GP(10,2)") {
    // generalized Petersen graph GP(10,2) is the dodecahedron
    formats::AdjList adj(20);
    auto link = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (int i = 0; i < 10; ++i) {
        link(i, (i + 1) % 10);     // outer cycle
        link(i, 10 + i);           // spoke
        link(10 + i, 10 + (i + 2) % 10); // inner pentagram pair
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    auto g = formats::embed_planar(adj);
    REQUIRE(g.has_value());
    CHECK(g->order() == 20);
    CHECK(g->size() == 30);
    CHECK(embed::girth(*g) == 5);
    auto rep = embed::validate_embedding(*g);
    CHECK(rep.ok());
    auto fs = embed::faces(*g);
    REQUIRE(fs.size() == 12);
    for (const auto& f : fs) CHECK(f.size() == 5);
}

TEST_CASE("embedding validity failures") {
    CHECK_THROWS_AS(PlaneGraph({{1}, {0, 2}}), std::out_of_range);

    PlaneGraph not_mutual({{1}, {}});
    auto rep = embed::validate_embedding(not_mutual);
    CHECK(!rep.ok());
    CHECK(!rep.mutual);

    PlaneGraph loop(std::vector<std::vector<int>>{{0}});
    CHECK(!embed::validate_embedding(loop).no_loops);

    PlaneGraph parallel({{1, 1}, {0, 0}});
    CHECK(!embed::validate_embedding(parallel).no_parallel);

    // K4 with all rotations in index order is not a plane embedding
    PlaneGraph k4_bad({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
    CHECK(!embed::validate_embedding(k4_bad).euler_ok);
}

TEST_CASE("trees have infinite girth") {
    CHECK(embed::girth(path(4)) == embed::kInfinity);
    CHECK(embed::girth(PlaneGraph(std::vector<std::vector<int>>(3))) == embed::kInfinity);
    auto rep = embed::validate_embedding(path(4));
    CHECK(rep.ok());
    CHECK(rep.face_count == 1);
}

TEST_CASE("distances") {
    auto g = cycle(6);
    std::vector<int> a{0}, b{3};
    CHECK(embed::distance(g, a, b) == 3);
    std::vector<int> c{0, 3};
    CHECK(embed::distance(g, c, c) == 0);
    auto m = embed::distance_matrix(g);
    CHECK(m[0][3] == 3);
    CHECK(m[1][5] == 2);
    // two components
    PlaneGraph two({{1}, {0}, {3}, {2}});
    CHECK(two.component_count() == 2);
    std::vector<int> l{0}, r{2};
    CHECK(embed::distance(two, l, r) == embed::kInfinity);
    CHECK(embed::distance_matrix(two)[0][2] == embed::kInfinity);
}

TEST_CASE("girth matches brute-force oracle over small corpus graphs") {
    for (const auto& adj : corpus::generate_graphs(7, true)) {
        auto g = formats::embed_planar(adj);
        REQUIRE(g.has_value());
        CHECK(embed::girth(*g) == girth_oracle(*g));
        CHECK(embed::validate_embedding(*g).ok());
    }
}

TEST_CASE("subgraph bookkeeping") {
    auto g = cycle(5);
    Subgraph s(5, {0, 1, 2}, {{0, 1}, {1, 2}});
    CHECK(s.vertex_count() == 3);
    CHECK(s.edge_count() == 2);
    CHECK(s.has_vertex(2));
    CHECK(!s.has_vertex(3));
    CHECK(s.has_edge(1, 0));
    CHECK(!s.has_edge(2, 3));
    CHECK(s.component_count() == 1);
    CHECK(embed::is_subgraph_of(s, g));

    auto s2 = s.with_vertex(4);
    CHECK(s2.component_count() == 2); // isolated 4 counts
    CHECK(embed::contains(s2, s));
    CHECK(!embed::contains(s, s2));
    auto s3 = s2.with_edge({0, 4});
    CHECK(s3.component_count() == 1);
    CHECK(embed::is_subgraph_of(s3, g));

    CHECK_THROWS(Subgraph(5, {0, 1}, {{0, 2}})); // endpoint 2 missing
    Subgraph nonedge(5, {0, 1, 2}, {{0, 2}});
    CHECK(!embed::is_subgraph_of(nonedge, g)); // 0-2 not an edge of C5
}

TEST_CASE("surgery preserves rotation order and validity") {
    auto g = cycle(5);
    std::vector<int> del{2};
    auto res = embed::subgraph_surgery(g, del, {});
    CHECK(res.graph.order() == 4);
    CHECK(res.graph.size() == 3);
    CHECK(res.old_to_new[2] == -1);
    CHECK(res.old_to_new[3] == 2);
    CHECK(embed::validate_embedding(res.graph).ok());

    std::vector<Edge> de{{0, 1}};
    auto res2 = embed::subgraph_surgery(g, {}, de);
    CHECK(res2.graph.size() == 4);
    CHECK(embed::girth(res2.graph) == embed::kInfinity);

    std::vector<Edge> dangling{{0, 2}};
    CHECK_THROWS_AS(embed::subgraph_surgery(g, {}, dangling), std::out_of_range);

    // restrict_to on every corpus graph keeps embeddings valid
    for (const auto& adj : corpus::generate_graphs(6, true)) {
        auto pg = formats::embed_planar(adj);
        REQUIRE(pg.has_value());
        std::vector<int> vs;
        for (int v = 0; v < pg->order(); v += 2) vs.push_back(v);
        std::vector<Edge> es;
        for (const auto& e : pg->edges())
            if (e.first % 2 == 0 && e.second % 2 == 0) es.push_back(e);
        auto r = embed::restrict_to(*pg, Subgraph(pg->order(), vs, es));
        CHECK(embed::validate_embedding(r.graph).ok());
    }
}
