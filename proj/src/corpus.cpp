#include "canvaslab/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <functional>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "canvaslab/iso.hpp"

namespace cvl::corpus {

std::string to_string(BoundaryMode m) {
    switch (m) {
    case BoundaryMode::one_facial_cycle: return "one_facial_cycle";
    case BoundaryMode::two_facial_cycles: return "two_facial_cycles";
    case BoundaryMode::arbitrary_subgraph: return "arbitrary_subgraph";
    }
    return "?";
}

BoundaryMode boundary_mode_from_string(const std::string& s) {
    if (s == "one_facial_cycle") return BoundaryMode::one_facial_cycle;
    if (s == "two_facial_cycles") return BoundaryMode::two_facial_cycles;
    if (s == "arbitrary_subgraph") return BoundaryMode::arbitrary_subgraph;
    throw std::invalid_argument("unknown boundary_mode: " + s);
}

std::string CorpusSpec::to_config() const {
    std::ostringstream out;
    out << "max_vertices=" << max_vertices << "\n"
        << "boundary_mode=" << to_string(boundary_mode) << "\n"
        << "min_boundary_distance=" << min_boundary_distance << "\n"
        << "palette_size=" << palette_size << "\n"
        << "canonicalize=" << (canonicalize ? "true" : "false") << "\n"
        << "include_disconnected=" << (include_disconnected ? "true" : "false") << "\n";
    return out.str();
}

namespace {

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::invalid_argument("bad boolean value: " + v);
}

} // namespace

CorpusSpec spec_from_config(std::istream& in) {
    CorpusSpec spec;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        " is not key=value");
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "max_vertices") spec.max_vertices = std::stoi(val);
        else if (key == "boundary_mode") spec.boundary_mode = boundary_mode_from_string(val);
        else if (key == "min_boundary_distance") spec.min_boundary_distance = std::stoi(val);
        else if (key == "palette_size") spec.palette_size = std::stoi(val);
        else if (key == "canonicalize") spec.canonicalize = parse_bool(val);
        else if (key == "include_disconnected") spec.include_disconnected = parse_bool(val);
        else throw std::invalid_argument("unknown config key: " + key);
    }
    if (spec.max_vertices < 1 || spec.min_boundary_distance < 0 || spec.palette_size < 3)
        throw std::invalid_argument("config values out of range");
    return spec;
}

std::vector<formats::AdjList> generate_graphs(int max_vertices, bool include_disconnected) {
    using formats::AdjList;
    std::vector<AdjList> all;
    std::vector<AdjList> level{AdjList(1)};
    all.push_back(level[0]);
    for (int n = 2; n <= max_vertices; ++n) {
        std::vector<AdjList> next;
        std::map<std::string, std::vector<std::size_t>> buckets;
        auto offer = [&](AdjList&& child) {
            if (!formats::embed_planar(child)) return;
            auto key = iso::invariant_key(child);
            for (auto idx : buckets[key])
                if (iso::are_isomorphic(child, next[idx])) return;
            buckets[key].push_back(next.size());
            next.push_back(std::move(child));
        };
        for (const auto& parent : level) {
            const int m = n - 1;
            // pairwise distance >= 3 in the parent keeps girth >= 5 exact
            std::vector<std::vector<int>> dist(m, std::vector<int>(m, embed::kInfinity));
            for (int r = 0; r < m; ++r) {
                dist[r][r] = 0;
                std::vector<int> q{r};
                for (std::size_t h = 0; h < q.size(); ++h)
                    for (int u : parent[q[h]])
                        if (dist[r][u] == embed::kInfinity) {
                            dist[r][u] = dist[r][q[h]] + 1;
                            q.push_back(u);
                        }
            }
            std::vector<int> chosen;
            std::function<void(int)> rec = [&](int from) {
                if (!chosen.empty() || include_disconnected) {
                    AdjList child = parent;
                    child.emplace_back(chosen.begin(), chosen.end());
                    for (int u : chosen) child[u].push_back(m);
                    for (auto& row : child) std::sort(row.begin(), row.end());
                    offer(std::move(child));
                }
                for (int v = from; v < m; ++v) {
                    bool ok = true;
                    for (int u : chosen)
                        if (dist[u][v] < 3) {
                            ok = false;
                            break;
                        }
                    if (!ok) continue;
                    chosen.push_back(v);
                    rec(v + 1);
                    chosen.pop_back();
                }
            };
            rec(0);
        }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    if (!include_disconnected) {
        std::vector<AdjList> conn;
        for (auto& g : all) {
            auto pg = formats::embed_planar(g);
            if (pg && pg->component_count() == 1) conn.push_back(std::move(g));
        }
        return conn;
    }
    return all;
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string serialize_canvas(const canvas::Canvas& t) {
    std::ostringstream out;
    out << "canvas\n";
    out << "graph6 " << formats::to_graph6(formats::to_adjacency(t.g)) << "\n";
    out << "rotations\n";
    for (int v = 0; v < t.g.order(); ++v) {
        out << v << ":";
        for (int u : t.g.rotation(v)) out << " " << u;
        out << "\n";
    }
    out << "boundary_vertices";
    for (int v : t.s.vertices()) out << " " << v;
    out << "\nboundary_edges";
    for (const auto& [u, v] : t.s.edges()) out << " " << u << "-" << v;
    out << "\npalette " << t.l.palette << "\n";
    out << "lists\n" << color::to_text(t.l);
    out << "end\n";
    return out.str();
}

canvas::Canvas deserialize_canvas(std::istream& in) {
    std::string line;
    auto next_line = [&]() {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!trim(line).empty()) return true;
        }
        return false;
    };
    if (!next_line() || trim(line) != "canvas")
        throw std::invalid_argument("canvas file must start with 'canvas'");
    if (!next_line() || line.rfind("graph6 ", 0) != 0)
        throw std::invalid_argument("expected graph6 line");
    auto adj = formats::from_graph6(line.substr(7));
    const int n = (int)adj.size();
    if (!next_line() || trim(line) != "rotations")
        throw std::invalid_argument("expected rotations stanza");
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < n; ++i) {
        if (!next_line()) throw std::invalid_argument("truncated rotations");
        std::istringstream ls(line);
        int v;
        char colon;
        ls >> v >> colon;
        if (colon != ':' || v < 0 || v >= n) throw std::invalid_argument("bad rotation line");
        int u;
        while (ls >> u) rot[v].push_back(u);
    }
    embed::PlaneGraph g(std::move(rot));
    if (!next_line() || line.rfind("boundary_vertices", 0) != 0)
        throw std::invalid_argument("expected boundary_vertices");
    std::vector<int> sv;
    {
        std::istringstream ls(line.substr(17));
        int v;
        while (ls >> v) sv.push_back(v);
    }
    if (!next_line() || line.rfind("boundary_edges", 0) != 0)
        throw std::invalid_argument("expected boundary_edges");
    std::vector<embed::Edge> se;
    {
        std::istringstream ls(line.substr(14));
        std::string tok;
        while (ls >> tok) {
            auto dash = tok.find('-');
            if (dash == std::string::npos) throw std::invalid_argument("bad boundary edge");
            se.push_back(embed::make_edge(std::stoi(tok.substr(0, dash)),
                                          std::stoi(tok.substr(dash + 1))));
        }
    }
    if (!next_line() || line.rfind("palette ", 0) != 0)
        throw std::invalid_argument("expected palette line");
    int palette = std::stoi(line.substr(8));
    if (!next_line() || trim(line) != "lists") throw std::invalid_argument("expected lists");
    std::ostringstream body;
    while (next_line()) {
        if (trim(line) == "end") break;
        body << line << "\n";
    }
    std::istringstream body_in(body.str());
    auto l = color::lists_from_text(body_in, n);
    l.palette = std::max(l.palette, palette);
    return canvas::make_canvas(std::move(g), embed::Subgraph(n, std::move(sv), std::move(se)),
                               std::move(l));
}

std::string canvas_id(const canvas::Canvas& t) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  (unsigned long long)fnv1a64(serialize_canvas(t)));
    return buf;
}

std::vector<embed::Subgraph> facial_cycles(const embed::PlaneGraph& g) {
    std::vector<embed::Subgraph> out;
    std::vector<std::pair<std::vector<int>, std::vector<embed::Edge>>> seen;
    for (const auto& walk : embed::faces(g)) {
        if (walk.size() < 3) continue;
        std::vector<int> vs(walk);
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) continue; // not simple
        std::vector<embed::Edge> es;
        for (std::size_t i = 0; i < walk.size(); ++i)
            es.push_back(embed::make_edge(walk[i], walk[(i + 1) % walk.size()]));
        std::sort(es.begin(), es.end());
        auto key = std::make_pair(vs, es);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        out.emplace_back(g.order(), std::move(vs), std::move(es));
    }
    return out;
}

namespace {

using ColorVec = std::vector<int>;

/// All proper colorings of the boundary subgraph from palette 0..p-1.
std::vector<ColorVec> proper_boundary_colorings(const embed::Subgraph& s, int palette, int order) {
    std::vector<ColorVec> out;
    const auto& verts = s.vertices();
    ColorVec phi(order, -1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == verts.size()) {
            out.push_back(phi);
            return;
        }
        int v = verts[i];
        for (int c = 0; c < palette; ++c) {
            bool ok = true;
            for (int u : verts)
                if (phi[u] == c && s.has_edge(u, v)) {
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

struct CandidateKey {
    std::vector<char> in_s;
    std::vector<int> phi;
    std::vector<embed::Edge> edges;
    auto operator<=>(const CandidateKey&) const = default;
};

CandidateKey key_of(int order, const std::vector<int>& sverts,
                    const std::vector<embed::Edge>& sedges, const ColorVec& phi) {
    CandidateKey k;
    k.in_s.assign(order, 0);
    for (int v : sverts) k.in_s[v] = 1;
    k.phi = phi;
    k.edges = sedges;
    std::sort(k.edges.begin(), k.edges.end());
    return k;
}

/// Is (s, phi) the lex-least representative of its orbit under Aut(G) x
/// palette permutations?
bool is_canonical(int order, const std::vector<std::vector<int>>& auts, int palette,
                  const std::vector<int>& sverts, const std::vector<embed::Edge>& sedges,
                  const ColorVec& phi) {
    auto self = key_of(order, sverts, sedges, phi);
    std::vector<int> cperm(palette);
    for (const auto& sigma : auts) {
        std::vector<int> sv2;
        sv2.reserve(sverts.size());
        for (int v : sverts) sv2.push_back(sigma[v]);
        std::vector<embed::Edge> se2;
        se2.reserve(sedges.size());
        for (const auto& [u, v] : sedges) se2.push_back(embed::make_edge(sigma[u], sigma[v]));
        ColorVec base(order, -1);
        for (int v = 0; v < order; ++v)
            if (phi[v] >= 0) base[sigma[v]] = phi[v];
        std::iota(cperm.begin(), cperm.end(), 0);
        do {
            ColorVec phi2 = base;
            for (auto& c : phi2)
                if (c >= 0) c = cperm[c];
            if (key_of(order, sv2, se2, phi2) < self) return false;
        } while (std::next_permutation(cperm.begin(), cperm.end()));
    }
    return true;
}

} // namespace

void generate(const CorpusSpec& spec, const std::function<bool(CanvasInstance&)>& cb) {
    if (spec.palette_size < 3 || spec.palette_size > 8)
        throw std::invalid_argument("palette_size must be in 3..8");
    auto graphs = generate_graphs(spec.max_vertices, spec.include_disconnected);
    const std::uint32_t full = (1u << spec.palette_size) - 1;
    for (const auto& adj : graphs) {
        auto pgo = formats::embed_planar(adj);
        if (!pgo) continue;
        const embed::PlaneGraph& g = *pgo;
        const int n = g.order();
        int gi = embed::girth(g);
        if (gi != embed::kInfinity && gi < 5) continue;

        std::vector<std::pair<std::vector<int>, std::vector<embed::Edge>>> boundaries;
        if (spec.boundary_mode == BoundaryMode::one_facial_cycle) {
            for (const auto& c : facial_cycles(g)) boundaries.emplace_back(c.vertices(), c.edges());
        } else if (spec.boundary_mode == BoundaryMode::two_facial_cycles) {
            auto cycles = facial_cycles(g);
            for (std::size_t i = 0; i < cycles.size(); ++i)
                for (std::size_t j = i + 1; j < cycles.size(); ++j) {
                    const auto& a = cycles[i];
                    const auto& b = cycles[j];
                    bool disjoint = true;
                    for (int v : b.vertices())
                        if (a.has_vertex(v)) disjoint = false;
                    if (!disjoint) continue;
                    if (spec.min_boundary_distance > 0 &&
                        embed::distance(g, a.vertices(), b.vertices()) <
                            spec.min_boundary_distance)
                        continue;
                    auto vs = a.vertices();
                    vs.insert(vs.end(), b.vertices().begin(), b.vertices().end());
                    auto es = a.edges();
                    es.insert(es.end(), b.edges().begin(), b.edges().end());
                    boundaries.emplace_back(std::move(vs), std::move(es));
                }
        } else {
            for (int v = 0; v < n; ++v)
                boundaries.emplace_back(std::vector<int>{v}, std::vector<embed::Edge>{});
            for (const auto& e : g.edges())
                boundaries.emplace_back(std::vector<int>{e.first, e.second},
                                        std::vector<embed::Edge>{e});
        }
        if (boundaries.empty()) continue;

        std::vector<std::vector<int>> auts;
        if (spec.canonicalize) auts = iso::automorphisms(adj);

        for (const auto& [sverts, sedges] : boundaries) {
            embed::Subgraph s(n, sverts, sedges);
            for (const auto& phi : proper_boundary_colorings(s, spec.palette_size, n)) {
                if (spec.canonicalize &&
                    !is_canonical(n, auts, spec.palette_size, sverts, sedges, phi))
                    continue;
                color::ListAssignment l;
                l.palette = spec.palette_size;
                l.lists.assign(n, full);
                for (int v : sverts) l.lists[v] = 1u << phi[v];
                CanvasInstance inst{canvas::Canvas{g, s, std::move(l)}, ""};
                inst.id = canvas_id(inst.t);
                if (!cb(inst)) return;
            }
        }
    }
}

std::vector<embed::PlaneGraph> ingest(const std::string& path, const std::string& format) {
    std::vector<embed::PlaneGraph> out;
    if (format == "graph6") {
        for (const auto& adj : formats::read_graph6_file(path)) {
            auto pg = formats::embed_planar(adj);
            if (!pg) continue;
            int gi = embed::girth(*pg);
            if (gi != embed::kInfinity && gi < 5) continue;
            out.push_back(std::move(*pg));
        }
    } else if (format == "planar_code") {
        for (auto& rot : formats::read_planar_code_file(path)) {
            embed::PlaneGraph g(std::move(rot));
            if (!embed::validate_embedding(g).ok()) continue;
            int gi = embed::girth(g);
            if (gi != embed::kInfinity && gi < 5) continue;
            out.push_back(std::move(g));
        }
    } else {
        throw std::invalid_argument("unknown ingest format: " + format);
    }
    return out;
}

} // namespace cvl::corpus
