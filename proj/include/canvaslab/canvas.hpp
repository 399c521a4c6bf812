#ifndef CANVASLAB_CANVAS_HPP
#define CANVASLAB_CANVAS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "canvaslab/list_coloring.hpp"
#include "canvaslab/plane_graph.hpp"

namespace cvl::canvas {

using Rat = boost::rational<long long>;

/// Exact decimal-ish rendering "p/q (~x.xxxx)" for reports.
std::string to_string(const Rat& r);

/// A canvas (G, S, L): plane graph of girth >= 5, boundary subgraph S, list
/// assignment with |L(v)| >= 3 off S and S itself L-colorable.
struct Canvas {
    embed::PlaneGraph g;
    embed::Subgraph s;
    color::ListAssignment l;
};

/// Validate all canvas invariants; empty string when fine, else the reason.
std::string check_canvas(const Canvas& t);

/// Construct with validation; throws std::invalid_argument on violation.
Canvas make_canvas(embed::PlaneGraph g, embed::Subgraph s, color::ListAssignment l);

struct Params {
    Rat epsilon{1, 88};
    Rat alpha{3, 8};
};

struct ParamReport {
    bool positive = false;
    bool ineq1 = false; // 9e <= a
    bool ineq2 = false; // 2.5a + 5.5e <= 1
    bool ineq3 = false; // 11e + 1 <= 3a
    bool ineq4 = false; // 2a + 10e <= 1 (derived)
    bool ok() const { return positive && ineq1 && ineq2 && ineq3 && ineq4; }
};

ParamReport validate_params(const Params& p);

struct Metrics {
    long long v = 0, e = 0, q = 0;
    int cS = 0, cG = 0;
    Rat def, s, d;
};

/// Exact metrics of the canvas (G, boundary, L-independent).
Metrics metrics(const embed::PlaneGraph& g, const embed::Subgraph& s, const Params& p);
inline Metrics metrics(const Canvas& t, const Params& p) { return metrics(t.g, t.s, p); }

/// T|H = (H, S, L): throws if not S <= H <= G.
Canvas subcanvas(const Canvas& t, const embed::Subgraph& h);
/// T/H = (G, H, L).
Canvas supercanvas(const Canvas& t, const embed::Subgraph& h);

/// q_T(H, S) = sum over v in V(H)\V(S) of deg_{G-E(H)}(v).
long long q_boundary_excess(const Canvas& t, const embed::Subgraph& h);

/// d_T(T|H) = d(T|H) + alpha * q_T(H, S).
Rat d_T(const Canvas& t, const embed::Subgraph& h, const Params& p);

struct CriticalWitness {
    // per edge of E(G)\E(S): the S-coloring that extends to G-e but not G
    std::vector<embed::Edge> edges;
    std::vector<color::PartialColoring> separating;
};

/// S-criticality via the per-edge characterization: G != S, no isolated
/// vertex outside S, and for each e not in E(S) some L-coloring of S
/// (proper on E(S) only) extends to G-e but not to G.
bool is_critical(const Canvas& t, CriticalWitness* witness = nullptr);

/// Every L-coloring of S, proper on E(S) and within lists, vertices off S
/// unassigned.
std::vector<color::PartialColoring> boundary_colorings(const Canvas& t);

enum class Singularity { chord, tripod, nonsingular };

Singularity classify_singular(const Canvas& t);

/// No chord of S and no vertex outside S with >= 3 neighbors in S.
bool is_normal(const Canvas& t);

/// Relax the neighboring 2-path p1p2p3 (each with a unique S-neighbor):
/// the same canvas with boundary S u P u {p_i u_i}. Throws on violation.
Canvas relax(const Canvas& t, const std::array<int, 3>& path);

} // namespace cvl::canvas

#endif
