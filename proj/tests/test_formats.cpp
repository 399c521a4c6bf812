#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "canvaslab/corpus.hpp"
#include "canvaslab/formats.hpp"
#include "canvaslab/iso.hpp"

using namespace cvl;
using formats::AdjList;

namespace {

AdjList cycle_adj(int n) {
    AdjList a(n);
    for (int v = 0; v < n; ++v) {
        a[v] = {(v + n - 1) % n, (v + 1) % n};
        std::sort(a[v].begin(), a[v].end());
    }
    return a;
}

} // namespace

TEST_CASE("graph6 frozen encodings") {
    // reference strings produced with an independent encoder
    CHECK(formats::to_graph6(cycle_adj(5)) == "Dhc");
    CHECK(formats::to_graph6(AdjList(1)) == "@");
    CHECK(formats::to_graph6({{1}, {0}}) == "A_");
    AdjList k13{{1, 2, 3}, {0}, {0}, {0}};
    CHECK(formats::to_graph6(k13) == "Cs");

    AdjList petersen(10);
    auto link = [&](int a, int b) {
        petersen[a].push_back(b);
        petersen[b].push_back(a);
    };
    for (int i = 0; i < 5; ++i) {
        link(i, (i + 1) % 5);
        link(i, 5 + i);
        link(5 + i, 5 + (i + 2) % 5);
    }
    for (auto& nb : petersen) std::sort(nb.begin(), nb.end());
    CHECK(formats::to_graph6(petersen) == "IheA@GUAo");
}

TEST_CASE("graph6 long-form size and round trip") {
    auto c70 = cycle_adj(70);
    auto s = formats::to_graph6(c70);
    CHECK(s.size() > 100);
    CHECK(s.substr(0, 2) == "~?"); // 3-byte extended order marker
    CHECK(formats::from_graph6(s) == c70);
}

TEST_CASE("graph6 round trip over the small corpus") {
    for (const auto& adj : corpus::generate_graphs(7, true)) {
        auto s = formats::to_graph6(adj);
        CHECK(formats::from_graph6(s) == adj);
    }
}

TEST_CASE("graph6 header tolerance and errors") {
    CHECK(formats::from_graph6(">>graph6<<Dhc") == cycle_adj(5));
    CHECK_THROWS_AS(formats::from_graph6(""), formats::ParseError);
    CHECK_THROWS_AS(formats::from_graph6("D\x01"), formats::ParseError);
    CHECK_THROWS_AS(formats::from_graph6("D"), formats::ParseError); // truncated
    try {
        formats::from_graph6("Dh\x01");
        CHECK(false);
    } catch (const formats::ParseError& e) {
        CHECK(e.byte_offset == 2);
    }
}

TEST_CASE("planar code round trip") {
    std::vector<formats::AdjList> graphs = corpus::generate_graphs(7, false);
    std::vector<embed::PlaneGraph> embedded;
    for (const auto& adj : graphs) embedded.push_back(*formats::embed_planar(adj));
    std::vector<const embed::PlaneGraph*> ptrs;
    for (const auto& g : embedded) ptrs.push_back(&g);

    std::stringstream buf;
    formats::write_planar_code(buf, ptrs);
    buf.seekg(0);
    auto back = formats::read_planar_code(buf);
    REQUIRE(back.size() == embedded.size());
    for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i] == embedded[i].rotations());
}

TEST_CASE("planar code header and malformed input") {
    std::stringstream one;
    one << ">>planar_code<<";
    // triangle: each vertex lists the other two, 0-terminated, 1-based
    for (unsigned char b : {3, 2, 3, 0, 1, 3, 0, 1, 2, 0}) one.put((char)b);
    auto gs = formats::read_planar_code(one);
    REQUIRE(gs.size() == 1);
    CHECK(gs[0] == std::vector<std::vector<int>>{{1, 2}, {0, 2}, {0, 1}});

    std::stringstream bad;
    for (unsigned char b : {3, 2, 3}) bad.put((char)b); // truncated
    CHECK_THROWS_AS(formats::read_planar_code(bad), formats::ParseError);

    std::stringstream oob;
    for (unsigned char b : {2, 3, 0, 1, 0}) oob.put((char)b); // neighbor 3 > n
    CHECK_THROWS_AS(formats::read_planar_code(oob), formats::ParseError);
}

TEST_CASE("embed_planar agrees with adjacency and rejects K5/K3,3") {
    for (const auto& adj : corpus::generate_graphs(6, true)) {
        auto g = formats::embed_planar(adj);
        REQUIRE(g.has_value());
        CHECK(formats::to_adjacency(*g) == adj);
        CHECK(embed::validate_embedding(*g).ok());
    }
    AdjList k5(5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (i != j) k5[i].push_back(j);
    CHECK(!formats::embed_planar(k5).has_value());
    AdjList k33(6);
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) {
            k33[i].push_back(j);
            k33[j].push_back(i);
        }
    CHECK(!formats::embed_planar(k33).has_value());
}

TEST_CASE("isomorphism utilities") {
    auto c6 = cycle_adj(6);
    AdjList two_triangles{{1, 2}, {0, 2}, {0, 1}, {4, 5}, {3, 5}, {3, 4}};
    CHECK(!iso::are_isomorphic(c6, two_triangles));
    // relabeled C6
    AdjList c6b(6);
    std::vector<int> perm{3, 1, 4, 0, 5, 2};
    for (int v = 0; v < 6; ++v)
        for (int u : c6[v]) c6b[perm[v]].push_back(perm[u]);
    for (auto& nb : c6b) std::sort(nb.begin(), nb.end());
    CHECK(iso::are_isomorphic(c6, c6b));
    CHECK(iso::invariant_key(c6) == iso::invariant_key(c6b));
    CHECK(iso::automorphisms(c6).size() == 12);  // dihedral D6
    CHECK(iso::automorphisms(cycle_adj(5)).size() == 10);
}
