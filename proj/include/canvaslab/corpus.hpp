#ifndef CANVASLAB_CORPUS_HPP
#define CANVASLAB_CORPUS_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "canvaslab/canvas.hpp"
#include "canvaslab/formats.hpp"

namespace cvl::corpus {

enum class BoundaryMode { one_facial_cycle, two_facial_cycles, arbitrary_subgraph };

std::string to_string(BoundaryMode m);
BoundaryMode boundary_mode_from_string(const std::string& s);

struct CorpusSpec {
    int max_vertices = 9;
    BoundaryMode boundary_mode = BoundaryMode::one_facial_cycle;
    int min_boundary_distance = 0;
    int palette_size = 3;
    bool canonicalize = true;
    bool include_disconnected = true;

    std::string to_config() const;
};

/// key=value lines (unknown keys rejected); missing keys keep defaults.
CorpusSpec spec_from_config(std::istream& in);

/// All abstract planar girth->=5 graphs with 1..max_vertices vertices, one
/// per isomorphism class, by vertex count then generation order.
std::vector<formats::AdjList> generate_graphs(int max_vertices, bool include_disconnected);

struct CanvasInstance {
    canvas::Canvas t;
    std::string id; // FNV-1a 64 of the canonical serialization, hex
};

/// Deterministic full serialization (graph6 line, rotation stanza, boundary
/// stanza, list stanza).
std::string serialize_canvas(const canvas::Canvas& t);
canvas::Canvas deserialize_canvas(std::istream& in);
std::string canvas_id(const canvas::Canvas& t);

/// Facial cycles of g: face walks that are simple cycles, deduplicated.
std::vector<embed::Subgraph> facial_cycles(const embed::PlaneGraph& g);

/// Stream the corpus for spec; cb returns false to stop early.
void generate(const CorpusSpec& spec, const std::function<bool(CanvasInstance&)>& cb);

/// Validated, girth-filtered plane graphs from a graph6 or planar_code file.
std::vector<embed::PlaneGraph> ingest(const std::string& path, const std::string& format);

std::uint64_t fnv1a64(const std::string& s);

} // namespace cvl::corpus

#endif
