#include "canvaslab/formats.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>
#include <boost/property_map/property_map.hpp>

namespace cvl::formats {

namespace {

void append_sextets(std::string& out, const std::vector<bool>& bits) {
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int x = 0;
        for (std::size_t j = 0; j < 6; ++j) x = (x << 1) | (i + j < bits.size() && bits[i + j]);
        out.push_back(static_cast<char>(x + 63));
    }
}

} // namespace

std::string to_graph6(const AdjList& g) {
    const int n = static_cast<int>(g.size());
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int y = 1; y < n; ++y)
        for (int x = 0; x < y; ++x)
            bits.push_back(std::binary_search(g[x].begin(), g[x].end(), y));
    append_sextets(out, bits);
    return out;
}

AdjList from_graph6(const std::string& s) {
    std::size_t pos = 0;
    if (s.rfind(">>graph6<<", 0) == 0) pos = 10;
    if (pos >= s.size()) throw ParseError("empty graph6 string", pos);
    long long n;
    unsigned char c0 = static_cast<unsigned char>(s[pos]);
    if (c0 == 126) {
        if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos + 1]) == 126)
            throw ParseError("graph6 graphs beyond 258047 vertices not supported", pos);
        if (pos + 4 > s.size()) throw ParseError("truncated graph6 size", pos);
        n = 0;
        for (int i = 1; i <= 3; ++i) {
            int v = static_cast<unsigned char>(s[pos + i]) - 63;
            if (v < 0 || v > 63) throw ParseError("bad graph6 size byte", pos + i);
            n = (n << 6) | v;
        }
        pos += 4;
    } else {
        n = c0 - 63;
        if (n < 0 || n > 62) throw ParseError("bad graph6 size byte", pos);
        pos += 1;
    }
    const long long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos < nbytes) throw ParseError("truncated graph6 body", s.size());
    AdjList g(static_cast<std::size_t>(n));
    long long bit = 0;
    for (int y = 1; y < n; ++y)
        for (int x = 0; x < y; ++x, ++bit) {
            int byte = static_cast<unsigned char>(s[pos + bit / 6]) - 63;
            if (byte < 0 || byte > 63) throw ParseError("bad graph6 data byte", pos + bit / 6);
            if ((byte >> (5 - bit % 6)) & 1) {
                g[x].push_back(y);
                g[y].push_back(x);
            }
        }
    for (auto& row : g) std::sort(row.begin(), row.end());
    return g;
}

std::vector<AdjList> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<AdjList> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '>') {
            if (line.rfind(">>graph6<<", 0) == 0 && line.size() > 10)
                out.push_back(from_graph6(line.substr(10)));
            continue;
        }
        out.push_back(from_graph6(line));
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> read_planar_code(std::istream& in) {
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t pos = 0;
    const std::string header = ">>planar_code<<";
    if (data.rfind(header, 0) == 0) pos = header.size();
    std::vector<std::vector<std::vector<int>>> out;
    auto need = [&](std::size_t k) {
        if (pos + k > data.size()) throw ParseError("unexpected end of planar_code", data.size());
    };
    while (pos < data.size()) {
        need(1);
        long long n = static_cast<unsigned char>(data[pos++]);
        if (n == 0) {
            need(2);
            n = static_cast<unsigned char>(data[pos]) |
                (static_cast<long long>(static_cast<unsigned char>(data[pos + 1])) << 8);
            pos += 2;
        }
        if (n <= 0) throw ParseError("planar_code graph with no vertices", pos);
        std::vector<std::vector<int>> rot(static_cast<std::size_t>(n));
        for (long long v = 0; v < n; ++v) {
            for (;;) {
                need(1);
                int u = static_cast<unsigned char>(data[pos++]);
                if (u == 0) break;
                if (u > n) throw ParseError("planar_code neighbor out of range", pos - 1);
                rot[static_cast<std::size_t>(v)].push_back(u - 1);
            }
        }
        out.push_back(std::move(rot));
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> read_planar_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_planar_code(in);
}

void write_planar_code(std::ostream& out, const std::vector<const embed::PlaneGraph*>& graphs) {
    out << ">>planar_code<<";
    for (const auto* g : graphs) {
        const int n = g->order();
        if (n <= 255) {
            out.put(static_cast<char>(n));
        } else {
            out.put(0);
            out.put(static_cast<char>(n & 255));
            out.put(static_cast<char>((n >> 8) & 255));
        }
        for (int v = 0; v < n; ++v) {
            for (int u : g->rotation(v)) out.put(static_cast<char>(u + 1));
            out.put(0);
        }
    }
}

std::optional<embed::PlaneGraph> embed_planar(const AdjList& adj) {
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                              boost::property<boost::edge_index_t, int>>;
    const int n = static_cast<int>(adj.size());
    BoostGraph bg(static_cast<std::size_t>(n));
    int eidx = 0;
    for (int v = 0; v < n; ++v)
        for (int u : adj[v])
            if (u > v) boost::add_edge(v, u, eidx++, bg);

    using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> emb(static_cast<std::size_t>(n));
    auto emb_map = boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, bg));
    if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                             boost::boyer_myrvold_params::embedding = emb_map))
        return std::nullopt;

    std::vector<std::vector<int>> rot(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        for (const auto& e : emb[static_cast<std::size_t>(v)]) {
            int a = static_cast<int>(boost::source(e, bg));
            int b = static_cast<int>(boost::target(e, bg));
            rot[static_cast<std::size_t>(v)].push_back(a == v ? b : a);
        }
    return embed::PlaneGraph(std::move(rot));
}

AdjList to_adjacency(const embed::PlaneGraph& g) {
    AdjList adj(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        adj[static_cast<std::size_t>(v)] = g.rotation(v);
        auto& row = adj[static_cast<std::size_t>(v)];
        std::sort(row.begin(), row.end());
    }
    return adj;
}

} // namespace cvl::formats
