#ifndef CANVASLAB_LIST_COLORING_HPP
#define CANVASLAB_LIST_COLORING_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "canvaslab/plane_graph.hpp"

namespace cvl::color {

using BigInt = boost::multiprecision::cpp_int;

/// Per-vertex color sets as bit masks over palette 0..palette-1.
struct ListAssignment {
    int palette = 3;
    std::vector<std::uint32_t> lists;

    int size_of(int v) const { return __builtin_popcount(lists[v]); }
    bool valid_for(int order) const;
};

/// Text form: one `v: c1,c2,...` line per vertex (sorted colors).
std::string to_text(const ListAssignment& l);
ListAssignment lists_from_text(std::istream& in, int order);

/// Partial coloring: color per vertex, -1 when unassigned.
using PartialColoring = std::vector<int>;

/// Text form: `v=c` lines for assigned vertices.
std::string to_text(const PartialColoring& phi);
PartialColoring coloring_from_text(std::istream& in, int order);

/// Is phi proper and list-respecting on its assigned vertices? When
/// only_edges is given, properness is checked on those edges alone.
bool is_valid_partial(const embed::PlaneGraph& g, const ListAssignment& l,
                      const PartialColoring& phi,
                      const std::vector<embed::Edge>* only_edges = nullptr);

/// Complete fixed to a full proper L-coloring of g, or nullopt if none
/// exists. An edge passed as removed is ignored (coloring of g - removed).
/// Throws std::invalid_argument if fixed is itself invalid.
std::optional<PartialColoring> solve(const embed::PlaneGraph& g, const ListAssignment& l,
                                     const PartialColoring& fixed,
                                     std::optional<embed::Edge> removed = std::nullopt);

/// Exact number of full proper L-colorings extending fixed.
BigInt count_extensions(const embed::PlaneGraph& g, const ListAssignment& l,
                        const PartialColoring& fixed,
                        std::optional<embed::Edge> removed = std::nullopt);

/// A(v) = L(v) minus the colors phi uses on neighbors of v inside s.
std::uint32_t available_colors(const embed::PlaneGraph& g, const ListAssignment& l,
                               const embed::Subgraph& s, const PartialColoring& phi, int v);

/// Stream every list assignment giving each non-boundary vertex a 3-subset
/// of the palette; boundary vertices get boundary_lists (mask per boundary
/// vertex position, or full palette when empty). With canonicalize, only
/// the lexicographically least assignment per global color permutation is
/// emitted. Returning false from the callback stops the enumeration.
void enumerate_list_assignments(const embed::PlaneGraph& g, const std::vector<int>& boundary,
                                int palette, bool canonicalize,
                                const std::vector<std::uint32_t>& boundary_lists,
                                const std::function<bool(const ListAssignment&)>& cb);

} // namespace cvl::color

#endif
