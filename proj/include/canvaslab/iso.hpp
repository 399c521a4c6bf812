#ifndef CANVASLAB_ISO_HPP
#define CANVASLAB_ISO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "canvaslab/formats.hpp"

namespace cvl::iso {

using formats::AdjList;

/// Cheap isomorphism invariant: order, size, and the multiset of vertex keys
/// after a few rounds of Weisfeiler-Leman style hashing. Equal keys are
/// necessary, not sufficient, for isomorphism.
std::string invariant_key(const AdjList& g);

/// Exact isomorphism test by backtracking over degree/refinement classes.
bool are_isomorphic(const AdjList& a, const AdjList& b);

/// Every automorphism of g, as permutation vectors (image per vertex).
std::vector<std::vector<int>> automorphisms(const AdjList& g);

} // namespace cvl::iso

#endif
