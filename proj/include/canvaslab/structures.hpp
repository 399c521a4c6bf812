#ifndef CANVASLAB_STRUCTURES_HPP
#define CANVASLAB_STRUCTURES_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "canvaslab/canvas.hpp"

namespace cvl::structure {

struct Finding {
    std::string kind; // chord, two_neighbor_vertex, neighboring_path,
                      // semi_neighboring_3_path, semi_neighboring_5_path,
                      // neighboring_claw, cylinder_condition
    int k = 0;        // path length for neighboring_path
    std::vector<int> vertices;
    int relaxation_depth = 0;
    int condition = 0; // 3..8 for cylinder conditions (iii)..(viii)
};

// Detectors return the lexicographically least witness or nullopt. They do
// not require criticality; the lemma drivers do.
std::optional<Finding> find_chord(const canvas::Canvas& t);
std::optional<Finding> find_two_neighbor_vertex(const canvas::Canvas& t);
std::optional<Finding> find_neighboring_path(const canvas::Canvas& t, int k);
std::optional<Finding> find_semi_neighboring_path(const canvas::Canvas& t, int k);
std::optional<Finding> find_neighboring_claw(const canvas::Canvas& t);

/// Independent predicate re-check of a finding against its canvas.
bool check_finding(const canvas::Canvas& t, const Finding& f);

struct LemmaResult {
    bool pass = false;
    int outcome = 0; // 1-based outcome index in the lemma statement
    std::optional<Finding> finding;
};

// Each driver throws std::invalid_argument when the lemma's hypotheses do
// not hold for t. Criticality is rechecked unless assume_critical is set.
LemmaResult verify_structure(const canvas::Canvas& t, bool assume_critical = false);
LemmaResult verify_structure_b(const canvas::Canvas& t, bool assume_critical = false);
LemmaResult verify_structure_c(const canvas::Canvas& t, bool assume_critical = false);
LemmaResult verify_structure3(const canvas::Canvas& t, bool assume_critical = false);

/// All neighboring 2-paths whose vertices each have a unique S-neighbor
/// (the relaxable paths), lex order.
std::vector<std::array<int, 3>> relaxable_paths(const canvas::Canvas& t);

/// Violations of the two degree claims on critical canvases, reported for
/// study (the claims are proved only for minimal counterexamples, so a
/// violation here is data, not an error): every neighboring 2-path must have
/// degree sum >= 10 (not_all_deg3); every size-two component {p1, p2} of
/// N(S)\S must have max degree >= 4 (not_both_deg3).
std::vector<Finding> degree_claim_violations(const canvas::Canvas& t);

/// Conditions (iii)..(viii) of the cylinder structure theorem that hold for
/// (g, C1, C2, l), keyed 3..8, with lex-least witnesses. C1 and C2 must be
/// vertex-disjoint; the list-size profile must satisfy |L| >= 2 everywhere
/// and >= 3 off C1 u C2 (throws std::invalid_argument otherwise).
std::vector<Finding> cylinder_conditions(const embed::PlaneGraph& g, const std::vector<int>& c1,
                                         const std::vector<int>& c2,
                                         const color::ListAssignment& l);

} // namespace cvl::structure

#endif
