#ifndef CANVASLAB_FORMATS_HPP
#define CANVASLAB_FORMATS_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "canvaslab/plane_graph.hpp"

namespace cvl::formats {

/// Abstract graph as sorted adjacency lists (no embedding).
using AdjList = std::vector<std::vector<int>>;

struct ParseError : std::runtime_error {
    std::size_t byte_offset;
    ParseError(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), byte_offset(off) {}
};

// graph6, per McKay's formal format description.
std::string to_graph6(const AdjList& g);
AdjList from_graph6(const std::string& s);
/// All graphs in a graph6 file (one per line, optional >>graph6<< header).
std::vector<AdjList> read_graph6_file(const std::string& path);

// planar_code (plantri): byte n, then per vertex the 1-based neighbors in
// rotation order, 0-terminated. The 0-escape two-byte little-endian form is
// accepted for n > 255.
std::vector<std::vector<std::vector<int>>> read_planar_code(std::istream& in);
std::vector<std::vector<std::vector<int>>> read_planar_code_file(const std::string& path);
void write_planar_code(std::ostream& out, const std::vector<const embed::PlaneGraph*>& graphs);

/// Compute a combinatorial planar embedding; nullopt if g is not planar.
std::optional<embed::PlaneGraph> embed_planar(const AdjList& g);

AdjList to_adjacency(const embed::PlaneGraph& g);

} // namespace cvl::formats

#endif
