#ifndef CANVASLAB_PLANE_GRAPH_HPP
#define CANVASLAB_PLANE_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cvl::embed {

/// Undirected edge, stored normalized with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Distance / girth value for "no path" / "no cycle".
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// A plane graph given by a rotation system: for every vertex, the cyclic
/// clockwise order of its neighbors. Vertices are 0..n-1. Values are
/// immutable after construction; all surgery returns new graphs.
class PlaneGraph {
public:
    PlaneGraph() = default;
    explicit PlaneGraph(std::vector<std::vector<int>> rotations);

    int order() const { return static_cast<int>(rot_.size()); }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    const std::vector<std::vector<int>>& rotations() const { return rot_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    bool adjacent(int u, int v) const;
    bool has_edge(const Edge& e) const { return adjacent(e.first, e.second); }

    int component_count() const;
    /// component id per vertex (ids are 0-based, assigned by smallest vertex).
    std::vector<int> component_ids() const;

private:
    std::vector<std::vector<int>> rot_;
    std::vector<Edge> edges_;
};

struct ValidityReport {
    bool no_loops = true;
    bool no_parallel = true;
    bool mutual = true;       // u in rot(v) iff v in rot(u)
    bool arcs_covered = true; // every directed arc on exactly one face walk
    bool euler_ok = true;     // |V| - |E| + |F| = 1 + c(G)
    int face_count = 0;       // merged outer faces of a disconnected drawing
    int components = 0;
    std::string detail;       // first failure, human readable

    bool ok() const { return no_loops && no_parallel && mutual && arcs_covered && euler_ok; }
};

ValidityReport validate_embedding(const PlaneGraph& g);

/// Face walks traced with the next-arc-clockwise rule: after arriving at v
/// along uv, the walk leaves along the successor of u in rotation(v).
/// Each walk is the sequence of arc tails; its length is the number of arcs.
/// Disconnected graphs yield one walk per face of each component; the
/// plane face count is walks - (c(G) - 1) since outer faces merge.
std::vector<std::vector<int>> faces(const PlaneGraph& g);

/// Length of a shortest cycle, kInfinity for forests.
int girth(const PlaneGraph& g);

/// Minimum BFS distance between two nonempty vertex sets (0 if they meet,
/// kInfinity if no connecting walk exists).
int distance(const PlaneGraph& g, std::span<const int> a, std::span<const int> b);

/// All-pairs BFS distances; kInfinity across components.
std::vector<std::vector<int>> distance_matrix(const PlaneGraph& g);

/// A subgraph of a host graph: a vertex subset plus an edge subset with both
/// ends inside it. Component counting treats isolated vertices as components.
class Subgraph {
public:
    Subgraph() = default;
    Subgraph(int host_order, std::vector<int> vertices, std::vector<Edge> edges);

    static Subgraph empty(int host_order) { return Subgraph(host_order, {}, {}); }

    bool has_vertex(int v) const { return v >= 0 && v < (int)in_.size() && in_[v]; }
    bool has_edge(int u, int v) const;
    const std::vector<int>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int host_order() const { return static_cast<int>(in_.size()); }

    int component_count() const;
    Subgraph with_vertex(int v) const;
    Subgraph with_edge(const Edge& e) const;

    bool operator==(const Subgraph&) const = default;

private:
    std::vector<char> in_;
    std::vector<int> verts_;   // sorted
    std::vector<Edge> edges_;  // normalized, sorted
};

/// Does s describe a subgraph of g (all vertices exist, all edges are edges
/// of g with both ends in s)?
bool is_subgraph_of(const Subgraph& s, const PlaneGraph& g);

/// Does a contain b (vertexwise and edgewise)?
bool contains(const Subgraph& a, const Subgraph& b);

struct SurgeryResult {
    PlaneGraph graph;
    std::vector<int> old_to_new; // -1 for deleted vertices
};

/// Remove the given vertices (with their incident edges) and edges. The
/// surviving rotation order is preserved; remaining vertices are relabeled
/// in increasing id order. Throws std::out_of_range on dangling references.
SurgeryResult subgraph_surgery(const PlaneGraph& g,
                               std::span<const int> delete_vertices,
                               std::span<const Edge> delete_edges);

/// Restrict g to exactly the vertices and edges of keep (keep must be a
/// subgraph of g). Relabels as subgraph_surgery does.
SurgeryResult restrict_to(const PlaneGraph& g, const Subgraph& keep);

} // namespace cvl::embed

#endif
