#ifndef XYPLANAR_TWOSAT_H
#define XYPLANAR_TWOSAT_H

#include "xyplanar/gadgets.h"

namespace xyplanar {

/// Variables: one per (gadget half-edge, quadrant). Half 0 is the tail-side
/// half-edge of a G-edge, half 1 the head-side. Quadrant order NE<NW<SW<SE.
inline std::int32_t quad_var(EdgeId e, int half, Quadrant q) {
    return (e * 2 + half) * 4 + static_cast<int>(q);
}

/// Literal encoding: 2*var for the positive literal, 2*var+1 for its negation.
inline std::int32_t pos_lit(std::int32_t var) { return 2 * var; }
inline std::int32_t neg_lit(std::int32_t var) { return 2 * var + 1; }
inline std::int32_t lit_var(std::int32_t lit) { return lit >> 1; }
inline bool lit_negated(std::int32_t lit) { return lit & 1; }

enum class ClauseTag : std::uint8_t {
    AtMostOne,
    Membership,
    GadgetExclusion,
    WindroseOrder,
    Special,
};
const char* to_string(ClauseTag t);

struct TwoSatInstance {
    struct Clause {
        std::int32_t a = -1;
        std::int32_t b = -1;  // -1 for a unit clause
        ClauseTag tag = ClauseTag::AtMostOne;
    };
    std::int32_t num_vars = 0;
    std::vector<Clause> clauses;

    void add(std::int32_t a, std::int32_t b, ClauseTag tag) { clauses.push_back({a, b, tag}); }
};

/// Emits all clause families over the quadrant variables: per-half-edge
/// at-most-one and membership clauses, gadget exclusions from the candidate
/// sets, and the per-vertex windrose-order / special-embedding chains.
TwoSatInstance build_instance(const PreparedInstance& p, const CandidateSets& candidates);

struct TwoSatResult {
    bool satisfiable = false;
    std::vector<bool> assignment;
    // On UNSAT: a closed chain of implications from some literal back to
    // itself through its negation.
    std::vector<std::int32_t> conflict_cycle;
};

/// Linear-time solve via strongly connected components of the implication
/// graph. Deterministic for a fixed clause order.
TwoSatResult solve(const TwoSatInstance& ts);

/// Reads one gadget per edge off a satisfying assignment: the unique true
/// quadrant of each half-edge picks the catalog entry.
std::vector<int> extract_gadgets(const PreparedInstance& p, const std::vector<bool>& assignment);

/// DIMACS-style dump with provenance comments (debugging aid).
std::string to_dimacs(const TwoSatInstance& ts);

}  // namespace xyplanar

#endif
