#include "canvaslab/list_coloring.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cvl::color {

bool ListAssignment::valid_for(int order) const {
    if (palette < 1 || palette > 31) return false;
    if ((int)lists.size() != order) return false;
    const std::uint32_t full = (1u << palette) - 1;
    for (auto m : lists)
        if (m == 0 || (m & ~full)) return false;
    return true;
}

std::string to_text(const ListAssignment& l) {
    std::ostringstream out;
    for (std::size_t v = 0; v < l.lists.size(); ++v) {
        out << v << ":";
        bool first = true;
        for (int c = 0; c < l.palette; ++c)
            if (l.lists[v] >> c & 1) {
                out << (first ? " " : ",") << c;
                first = false;
            }
        out << "\n";
    }
    return out.str();
}

ListAssignment lists_from_text(std::istream& in, int order) {
    ListAssignment l;
    l.lists.assign(order, 0);
    int max_color = 2;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        int v;
        char colon;
        if (!(ls >> v >> colon) || colon != ':' || v < 0 || v >= order)
            throw std::invalid_argument("bad list line " + std::to_string(lineno) + ": " + line);
        int c;
        while (ls >> c) {
            if (c < 0 || c > 30)
                throw std::invalid_argument("color out of range on line " + std::to_string(lineno));
            l.lists[v] |= 1u << c;
            max_color = std::max(max_color, c);
            char comma;
            if (!(ls >> comma)) break;
            if (comma != ',')
                throw std::invalid_argument("expected ',' on line " + std::to_string(lineno));
        }
        if (l.lists[v] == 0)
            throw std::invalid_argument("empty list on line " + std::to_string(lineno));
    }
    for (std::size_t v = 0; v < l.lists.size(); ++v)
        if (l.lists[v] == 0)
            throw std::invalid_argument("no list given for vertex " + std::to_string(v));
    l.palette = max_color + 1;
    return l;
}

std::string to_text(const PartialColoring& phi) {
    std::ostringstream out;
    for (std::size_t v = 0; v < phi.size(); ++v)
        if (phi[v] >= 0) out << v << "=" << phi[v] << "\n";
    return out.str();
}

PartialColoring coloring_from_text(std::istream& in, int order) {
    PartialColoring phi(order, -1);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        int v, c;
        char eq;
        if (!(ls >> v >> eq >> c) || eq != '=' || v < 0 || v >= order || c < 0)
            throw std::invalid_argument("bad coloring line " + std::to_string(lineno) + ": " + line);
        phi[v] = c;
    }
    return phi;
}

bool is_valid_partial(const embed::PlaneGraph& g, const ListAssignment& l,
                      const PartialColoring& phi, const std::vector<embed::Edge>* only_edges) {
    for (int v = 0; v < g.order(); ++v) {
        if (phi[v] < 0) continue;
        if (phi[v] >= l.palette || !(l.lists[v] >> phi[v] & 1)) return false;
    }
    const auto& edges = only_edges ? *only_edges : g.edges();
    for (const auto& [u, v] : edges)
        if (phi[u] >= 0 && phi[u] == phi[v]) return false;
    return true;
}

namespace {

struct Search {
    const embed::PlaneGraph& g;
    std::vector<std::vector<int>> adj; // removed edge already dropped
    std::vector<std::uint32_t> avail;
    std::vector<int> color;
    int unassigned = 0;

    Search(const embed::PlaneGraph& graph, const ListAssignment& l,
           const PartialColoring& fixed, std::optional<embed::Edge> removed)
        : g(graph), avail(l.lists), color(graph.order(), -1) {
        const int n = g.order();
        if ((int)fixed.size() != n || !l.valid_for(n))
            throw std::invalid_argument("coloring instance shape mismatch");
        adj.resize(n);
        for (int v = 0; v < n; ++v)
            for (int u : g.rotation(v)) {
                if (removed && embed::make_edge(u, v) == *removed) continue;
                adj[v].push_back(u);
            }
        for (int v = 0; v < n; ++v) {
            if (fixed[v] < 0) {
                ++unassigned;
                continue;
            }
            if (fixed[v] >= l.palette || !(l.lists[v] >> fixed[v] & 1))
                throw std::invalid_argument("fixed color outside list at vertex " +
                                            std::to_string(v));
            color[v] = fixed[v];
        }
        for (int v = 0; v < n; ++v) {
            if (color[v] < 0) continue;
            for (int u : adj[v]) {
                if (color[u] == color[v])
                    throw std::invalid_argument("fixed coloring has an adjacent clash");
                if (color[u] < 0) avail[u] &= ~(1u << color[v]);
            }
            avail[v] = 1u << color[v];
        }
    }

    int pick() const {
        int best = -1, bestc = 33;
        for (int v = 0; v < g.order(); ++v) {
            if (color[v] >= 0) continue;
            int c = __builtin_popcount(avail[v]);
            if (c < bestc) {
                bestc = c;
                best = v;
                if (c <= 1) break;
            }
        }
        return best;
    }

    // stop_at_one: return early once a completion exists. Returns the count
    // found (capped at 1 in stop mode).
    BigInt run(bool stop_at_one) {
        if (unassigned == 0) return 1;
        int v = pick();
        std::uint32_t options = avail[v];
        if (options == 0) return 0;
        BigInt total = 0;
        --unassigned;
        while (options) {
            int c = __builtin_ctz(options);
            options &= options - 1;
            color[v] = c;
            std::vector<int> touched;
            bool dead = false;
            for (int u : adj[v]) {
                if (color[u] >= 0) continue;
                if (avail[u] >> c & 1) {
                    avail[u] &= ~(1u << c);
                    touched.push_back(u);
                    if (avail[u] == 0) dead = true;
                }
            }
            if (!dead) {
                total += run(stop_at_one);
                // on an early success the coloring is kept intact up the stack
                if (stop_at_one && total > 0) return total;
            }
            for (int u : touched) avail[u] |= 1u << c;
        }
        color[v] = -1;
        ++unassigned;
        return total;
    }
};

} // namespace

std::optional<PartialColoring> solve(const embed::PlaneGraph& g, const ListAssignment& l,
                                     const PartialColoring& fixed,
                                     std::optional<embed::Edge> removed) {
    Search s(g, l, fixed, removed);
    if (s.run(true) > 0) return s.color;
    return std::nullopt;
}

BigInt count_extensions(const embed::PlaneGraph& g, const ListAssignment& l,
                        const PartialColoring& fixed, std::optional<embed::Edge> removed) {
    Search s(g, l, fixed, removed);
    return s.run(false);
}

std::uint32_t available_colors(const embed::PlaneGraph& g, const ListAssignment& l,
                               const embed::Subgraph& s, const PartialColoring& phi, int v) {
    if (s.has_vertex(v)) throw std::invalid_argument("available_colors: vertex lies on S");
    std::uint32_t a = l.lists[v];
    for (int u : g.rotation(v))
        if (s.has_vertex(u) && phi[u] >= 0) a &= ~(1u << phi[u]);
    return a;
}

namespace {

std::uint32_t permute_mask(std::uint32_t m, const std::vector<int>& perm) {
    std::uint32_t out = 0;
    while (m) {
        int c = __builtin_ctz(m);
        m &= m - 1;
        out |= 1u << perm[c];
    }
    return out;
}

} // namespace

void enumerate_list_assignments(const embed::PlaneGraph& g, const std::vector<int>& boundary,
                                int palette, bool canonicalize,
                                const std::vector<std::uint32_t>& boundary_lists,
                                const std::function<bool(const ListAssignment&)>& cb) {
    if (palette < 3) throw std::invalid_argument("palette must be at least 3");
    const int n = g.order();
    std::vector<char> on_boundary(n, 0);
    for (int v : boundary) on_boundary[v] = 1;
    const std::uint32_t full = (1u << palette) - 1;

    // all 3-subsets of the palette
    std::vector<std::uint32_t> triples;
    for (std::uint32_t m = 0; m <= full; ++m)
        if ((m & full) == m && __builtin_popcount(m) == 3) triples.push_back(m);

    std::vector<std::vector<int>> perms;
    if (canonicalize) {
        std::vector<int> p(palette);
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }

    ListAssignment l;
    l.palette = palette;
    l.lists.assign(n, full);
    for (std::size_t i = 0; i < boundary.size() && i < boundary_lists.size(); ++i)
        l.lists[boundary[i]] = boundary_lists[i];

    std::vector<int> free_verts;
    for (int v = 0; v < n; ++v)
        if (!on_boundary[v]) free_verts.push_back(v);

    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (stop) return;
        if (i == free_verts.size()) {
            if (canonicalize) {
                std::vector<std::uint32_t> permuted(n);
                for (const auto& p : perms) {
                    for (int v = 0; v < n; ++v) permuted[v] = permute_mask(l.lists[v], p);
                    if (std::lexicographical_compare(permuted.begin(), permuted.end(),
                                                     l.lists.begin(), l.lists.end()))
                        return; // a smaller representative exists
                }
            }
            if (!cb(l)) stop = true;
            return;
        }
        for (auto m : triples) {
            l.lists[free_verts[i]] = m;
            rec(i + 1);
            if (stop) return;
        }
    };
    rec(0);
}

} // namespace cvl::color
