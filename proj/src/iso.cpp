#include "canvaslab/iso.hpp"

#include <algorithm>
#include <functional>

namespace cvl::iso {

namespace {

// Iterated neighborhood refinement; returns a stable color per vertex.
std::vector<std::uint64_t> wl_colors(const AdjList& g, int rounds = 4) {
    const int n = static_cast<int>(g.size());
    std::vector<std::uint64_t> color(n);
    for (int v = 0; v < n; ++v) color[v] = g[v].size();
    for (int r = 0; r < rounds; ++r) {
        std::vector<std::uint64_t> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::uint64_t> nb;
            nb.reserve(g[v].size());
            for (int u : g[v]) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            std::uint64_t h = 1469598103934665603ULL ^ color[v];
            for (auto x : nb) {
                h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
                h *= 1099511628211ULL;
            }
            next[v] = h;
        }
        color.swap(next);
    }
    return color;
}

bool extend(const AdjList& a, const AdjList& b, const std::vector<std::uint64_t>& ca,
            const std::vector<std::uint64_t>& cb, std::vector<int>& map,
            std::vector<char>& used, int v) {
    const int n = static_cast<int>(a.size());
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w] || ca[v] != cb[w] || a[v].size() != b[w].size()) continue;
        bool ok = true;
        for (int u : a[v]) {
            if (u >= v) continue;
            if (!std::binary_search(b[w].begin(), b[w].end(), map[u])) {
                ok = false;
                break;
            }
        }
        if (ok) {
            // mapped non-neighbors must stay non-neighbors
            for (int u = 0; u < v && ok; ++u)
                if (!std::binary_search(a[v].begin(), a[v].end(), u) &&
                    std::binary_search(b[w].begin(), b[w].end(), map[u]))
                    ok = false;
        }
        if (!ok) continue;
        map[v] = w;
        used[w] = 1;
        if (extend(a, b, ca, cb, map, used, v + 1)) return true;
        used[w] = 0;
    }
    return false;
}

} // namespace

std::string invariant_key(const AdjList& g) {
    auto colors = wl_colors(g);
    std::sort(colors.begin(), colors.end());
    std::string key = std::to_string(g.size());
    std::size_t m = 0;
    for (const auto& row : g) m += row.size();
    key += ":" + std::to_string(m / 2);
    std::uint64_t h = 1469598103934665603ULL;
    for (auto c : colors) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    key += ":" + std::to_string(h);
    return key;
}

bool are_isomorphic(const AdjList& a, const AdjList& b) {
    if (a.size() != b.size()) return false;
    std::size_t ma = 0, mb = 0;
    for (const auto& r : a) ma += r.size();
    for (const auto& r : b) mb += r.size();
    if (ma != mb) return false;
    auto ca = wl_colors(a), cb = wl_colors(b);
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> map(a.size(), -1);
    std::vector<char> used(a.size(), 0);
    return extend(a, b, ca, cb, map, used, 0);
}

std::vector<std::vector<int>> automorphisms(const AdjList& g) {
    const int n = static_cast<int>(g.size());
    auto c = wl_colors(g);
    std::vector<std::vector<int>> out;
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            out.push_back(map);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || c[v] != c[w] || g[v].size() != g[w].size()) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                bool e1 = std::binary_search(g[v].begin(), g[v].end(), u);
                bool e2 = std::binary_search(g[w].begin(), g[w].end(), map[u]);
                if (e1 != e2) ok = false;
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            rec(v + 1);
            used[w] = 0;
        }
    };
    rec(0);
    return out;
}

} // namespace cvl::iso
