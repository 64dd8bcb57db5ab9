#ifndef XYPLANAR_PIPELINE_H
#define XYPLANAR_PIPELINE_H

#include <cstdint>
#include <map>

#include "xyplanar/twosat.h"

namespace xyplanar {

struct Verdict {
    bool accepted = false;
    std::optional<DerivedGraph> derived;  // present on accept
    CandidateSets candidates;
    std::int32_t num_vars = 0;
    std::map<std::string, int> clause_counts;           // per provenance tag
    std::vector<std::int32_t> unsat_cycle;              // literals, on reject
    std::vector<std::string> unsat_cycle_pretty;        // human-readable
};

/// The end-to-end decision: candidate sets, 2-SAT, extraction, and a
/// defensive re-verification of the derived embedding on acceptance.
Verdict test_xy_planarity(const PreparedInstance& p);

/// Checks a derived graph against everything an accepted verdict promises:
/// it induces ℰ and 𝒰, its embedding is upward planar, windrose consistent
/// and special. Returns an empty string when all checks pass.
std::string verify_derived(const PreparedInstance& p, const DerivedGraph& d);

/// Exhaustive ground truth: tries every gadget assignment (4 choices per
/// X\Y and Y\X edge) and reports whether any yields a valid derived
/// embedding. Refuses instances with more than `max_slots` free edges.
struct OracleResult {
    bool decided = false;
    bool accepted = false;
    std::uint64_t combos_tried = 0;
};
OracleResult brute_force_oracle(const PreparedInstance& p, int max_slots = 12);

/// Deterministic random instance: a spanning Y-tree grown with a random
/// upward embedding, X∩Y markings along a random topological order, and
/// X\Y chords sprinkled into faces of the evolving embedding.
struct GeneratorParams {
    int num_vertices = 6;
    int x_chords = 3;
    std::uint64_t seed = 1;
    int xy_overlap_percent = 25;  // chance a Y edge is also in X
};
BiposetInstance generate_instance(const GeneratorParams& params);

}  // namespace xyplanar

#endif
