#include "canvaslab/plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cvl::embed {

PlaneGraph::PlaneGraph(std::vector<std::vector<int>> rotations) : rot_(std::move(rotations)) {
    const int n = order();
    std::set<Edge> seen;
    for (int v = 0; v < n; ++v) {
        for (int u : rot_[v]) {
            if (u < 0 || u >= n) throw std::out_of_range("rotation references unknown vertex");
            if (u != v) seen.insert(make_edge(u, v));
        }
    }
    edges_.assign(seen.begin(), seen.end());
}

bool PlaneGraph::adjacent(int u, int v) const {
    if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
    const auto& r = rot_[u].size() <= rot_[v].size() ? rot_[u] : rot_[v];
    int other = rot_[u].size() <= rot_[v].size() ? v : u;
    return std::find(r.begin(), r.end(), other) != r.end();
}

std::vector<int> PlaneGraph::component_ids() const {
    const int n = order();
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : rot_[v])
                if (comp[u] == -1) {
                    comp[u] = next;
                    q.push_back(u);
                }
        }
        ++next;
    }
    return comp;
}

int PlaneGraph::component_count() const {
    auto ids = component_ids();
    return ids.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());
}

ValidityReport validate_embedding(const PlaneGraph& g) {
    ValidityReport r;
    const int n = g.order();
    r.components = g.component_count();
    for (int v = 0; v < n && r.detail.empty(); ++v) {
        std::set<int> uniq;
        for (int u : g.rotation(v)) {
            if (u == v) {
                r.no_loops = false;
                r.detail = "loop at vertex " + std::to_string(v);
                break;
            }
            if (!uniq.insert(u).second) {
                r.no_parallel = false;
                r.detail = "parallel edge " + std::to_string(v) + "-" + std::to_string(u);
                break;
            }
        }
    }
    if (r.no_loops && r.no_parallel) {
        for (int v = 0; v < n && r.detail.empty(); ++v)
            for (int u : g.rotation(v)) {
                const auto& ru = g.rotation(u);
                if (std::find(ru.begin(), ru.end(), v) == ru.end()) {
                    r.mutual = false;
                    r.detail = "vertex " + std::to_string(v) + " lists " + std::to_string(u) +
                               " but not vice versa";
                    break;
                }
            }
    }
    if (!r.ok()) return r;

    auto walks = faces(g);
    std::size_t arcs = 0;
    for (const auto& w : walks)
        if (w.size() > 1) arcs += w.size(); // size-1 walks are isolated vertices, no arcs
    r.arcs_covered = arcs == 2 * static_cast<std::size_t>(g.size());
    r.face_count = static_cast<int>(walks.size()) - std::max(0, r.components - 1);
    // V - E + F = 1 + c for a plane drawing with merged outer face
    r.euler_ok = n - g.size() + r.face_count == 1 + r.components;
    if (!r.arcs_covered) r.detail = "face tracing does not cover every arc exactly once";
    else if (!r.euler_ok) r.detail = "Euler relation failed";
    return r;
}

std::vector<std::vector<int>> faces(const PlaneGraph& g) {
    const int n = g.order();
    // position of u within rotation(v)
    std::vector<std::vector<int>> pos_of(n);
    std::vector<int> base(n + 1, 0);
    for (int v = 0; v < n; ++v) base[v + 1] = base[v] + g.degree(v);
    // arc id for (v, i-th neighbor) = base[v] + i
    std::vector<char> used(base[n], 0);
    for (int v = 0; v < n; ++v) {
        pos_of[v].assign(n, -1);
        const auto& r = g.rotation(v);
        for (int i = 0; i < (int)r.size(); ++i) pos_of[v][r[i]] = i;
    }

    std::vector<std::vector<int>> walks;
    // isolated vertices: a single degenerate face each
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) walks.push_back({v});

    for (int v = 0; v < n; ++v) {
        const auto& rv = g.rotation(v);
        for (int i = 0; i < (int)rv.size(); ++i) {
            if (used[base[v] + i]) continue;
            std::vector<int> walk;
            int a = v, bi = i;
            while (!used[base[a] + bi]) {
                used[base[a] + bi] = 1;
                int b = g.rotation(a)[bi];
                walk.push_back(a);
                int j = pos_of[b][a];
                int nb = (j + 1) % g.degree(b);
                a = b;
                bi = nb;
            }
            walks.push_back(std::move(walk));
        }
    }
    return walks;
}

int girth(const PlaneGraph& g) {
    const int n = g.order();
    int best = kInfinity;
    std::vector<int> dist(n), parent(n);
    for (int r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[r] = 0;
        std::deque<int> q{r};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            if (best != kInfinity && 2 * dist[v] >= best) break;
            for (int u : g.rotation(v)) {
                if (dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    q.push_back(u);
                } else if (u != parent[v]) {
                    best = std::min(best, dist[v] + dist[u] + 1);
                }
            }
        }
    }
    return best;
}

int distance(const PlaneGraph& g, std::span<const int> a, std::span<const int> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("distance: empty vertex set");
    const int n = g.order();
    std::vector<char> target(n, 0);
    for (int v : b) target[v] = 1;
    std::vector<int> dist(n, -1);
    std::deque<int> q;
    for (int v : a) {
        if (dist[v] == 0) continue;
        dist[v] = 0;
        q.push_back(v);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (target[v]) return dist[v];
        for (int u : g.rotation(v))
            if (dist[u] == -1) {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
    }
    return kInfinity;
}

std::vector<std::vector<int>> distance_matrix(const PlaneGraph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInfinity));
    for (int r = 0; r < n; ++r) {
        d[r][r] = 0;
        std::deque<int> q{r};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : g.rotation(v))
                if (d[r][u] == kInfinity) {
                    d[r][u] = d[r][v] + 1;
                    q.push_back(u);
                }
        }
    }
    return d;
}

Subgraph::Subgraph(int host_order, std::vector<int> vertices, std::vector<Edge> edges)
    : in_(host_order, 0), verts_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    for (auto& e : edges_) e = make_edge(e.first, e.second);
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (int v : verts_) {
        if (v < 0 || v >= host_order) throw std::out_of_range("subgraph vertex out of range");
        in_[v] = 1;
    }
    for (const auto& [u, v] : edges_)
        if (!has_vertex(u) || !has_vertex(v))
            throw std::invalid_argument("subgraph edge end outside vertex set");
}

bool Subgraph::has_edge(int u, int v) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
}

int Subgraph::component_count() const {
    if (verts_.empty()) return 0;
    std::vector<int> id(in_.size(), -1);
    for (std::size_t i = 0; i < verts_.size(); ++i) id[verts_[i]] = static_cast<int>(i);
    std::vector<int> uf(verts_.size());
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (const auto& [u, v] : edges_) uf[find(id[u])] = find(id[v]);
    int c = 0;
    for (std::size_t i = 0; i < uf.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
    return c;
}

Subgraph Subgraph::with_vertex(int v) const {
    auto verts = verts_;
    verts.push_back(v);
    return Subgraph(host_order(), std::move(verts), edges_);
}

Subgraph Subgraph::with_edge(const Edge& e) const {
    auto verts = verts_;
    verts.push_back(e.first);
    verts.push_back(e.second);
    auto edges = edges_;
    edges.push_back(e);
    return Subgraph(host_order(), std::move(verts), std::move(edges));
}

bool is_subgraph_of(const Subgraph& s, const PlaneGraph& g) {
    if (s.host_order() != g.order()) return false;
    for (const auto& [u, v] : s.edges())
        if (!g.adjacent(u, v)) return false;
    return true;
}

bool contains(const Subgraph& a, const Subgraph& b) {
    for (int v : b.vertices())
        if (!a.has_vertex(v)) return false;
    for (const auto& [u, v] : b.edges())
        if (!a.has_edge(u, v)) return false;
    return true;
}

SurgeryResult subgraph_surgery(const PlaneGraph& g,
                               std::span<const int> delete_vertices,
                               std::span<const Edge> delete_edges) {
    const int n = g.order();
    std::vector<char> drop_v(n, 0);
    for (int v : delete_vertices) {
        if (v < 0 || v >= n) throw std::out_of_range("surgery: unknown vertex");
        drop_v[v] = 1;
    }
    std::set<Edge> drop_e;
    for (const auto& e : delete_edges) {
        Edge ne = make_edge(e.first, e.second);
        if (!g.has_edge(ne)) throw std::out_of_range("surgery: unknown edge");
        drop_e.insert(ne);
    }
    std::vector<int> old_to_new(n, -1);
    int m = 0;
    for (int v = 0; v < n; ++v)
        if (!drop_v[v]) old_to_new[v] = m++;
    std::vector<std::vector<int>> rot(m);
    for (int v = 0; v < n; ++v) {
        if (drop_v[v]) continue;
        for (int u : g.rotation(v)) {
            if (drop_v[u] || drop_e.count(make_edge(u, v))) continue;
            rot[old_to_new[v]].push_back(old_to_new[u]);
        }
    }
    return {PlaneGraph(std::move(rot)), std::move(old_to_new)};
}

SurgeryResult restrict_to(const PlaneGraph& g, const Subgraph& keep) {
    if (!is_subgraph_of(keep, g)) throw std::invalid_argument("restrict_to: not a subgraph");
    std::vector<int> del_v;
    for (int v = 0; v < g.order(); ++v)
        if (!keep.has_vertex(v)) del_v.push_back(v);
    std::vector<Edge> del_e;
    for (const auto& e : g.edges())
        if (!keep.has_edge(e.first, e.second)) del_e.push_back(e);
    return subgraph_surgery(g, del_v, del_e);
}

} // namespace cvl::embed
