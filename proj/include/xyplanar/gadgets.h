#ifndef XYPLANAR_GADGETS_H
#define XYPLANAR_GADGETS_H

#include <array>

#include "xyplanar/instance.h"
#include "xyplanar/windrose.h"

namespace xyplanar {

/// One of the eight two-edge replacements of a graph edge (u,v) through a
/// fresh subdivision vertex w. g1 is the half-edge incident to u, g2 the one
/// incident to v.
struct Gadget {
    enum class WRole : std::uint8_t { Inner, Sink, Source };

    int index = 0;     // 0..3 = Hx1..Hx4, 4..7 = Hy1..Hy4 (Hy1 repeats Hx1's shape)
    bool in_hx = false;
    bool in_hy = false;
    bool g1_from_u = true;  // g1 directed u->w (else w->u)
    bool g2_to_v = true;    // g2 directed w->v (else v->w)
    EdgeLabel l1 = EdgeLabel::NE;
    EdgeLabel l2 = EdgeLabel::NE;
    Quadrant quad_u = Quadrant::NE;  // quadrant of g1 at u
    Quadrant quad_v = Quadrant::SW;  // quadrant of g2 at v
    WRole w_role = WRole::Inner;

    bool half_edge_out_at_u() const { return g1_from_u; }
    bool half_edge_out_at_v() const { return !g2_to_v; }
    const char* name() const;
};

/// The full catalog: Hx1..Hx4 then Hy1..Hy4. Hx1 and Hy1 share the unique
/// Hx ∩ Hy shape (both half-edges labeled NE).
const std::array<Gadget, 8>& gadget_catalog();

/// The catalog entry realizing the given endpoint quadrants, if any of the
/// seven distinct shapes does ((NE,SW) resolves to Hx1).
const Gadget* gadget_from_quadrants(Quadrant at_u, Quadrant at_v);

/// Candidate sets H(e): for each X\Y edge, which of Hx1..Hx4 keeps
/// G|Y + e upward planar under the fixed embeddings.
using CandidateSets = std::vector<std::array<bool, 4>>;

/// Linear-time computation via per-face prefix sums: each (edge, gadget) pair
/// is decided in O(1) from the corner data in `p`.
CandidateSets compute_candidate_sets(const PreparedInstance& p);

/// Independent oracle: tentatively inserts every gadget and reruns the full
/// fixed-embedding upward planarity test. Quadratic; used to cross-check the
/// prefix-sum path.
CandidateSets compute_candidate_sets_naive(const PreparedInstance& p);

/// Result of tentatively inserting one gadget for an X\Y edge into G|Y.
/// The inserted half-edges get ids m and m+1 (m = |E(G)|), w gets id n.
struct GadgetInsertion {
    bool ok = false;
    std::string reason;
    BiposetGraph graph;
    Rotation rotation;  // underlying rotation of `upward`
    UpwardEmbedding upward;
    SinkSourceAssignment psi;
};

/// Places the gadget's half-edges into the upward embedding of G|Y at the
/// ℰ-fixed positions, applying the special-drawing placement rules at
/// source/sink endpoints. Fails when the rotation position contradicts the
/// gadget's half-edge direction.
GadgetInsertion insert_gadget_upward(const PreparedInstance& p, EdgeId e, const Gadget& gd);

/// The derived windrose graph G*: every G-edge replaced by its chosen gadget.
/// Star ids: half-edges of G-edge e are 2e (at tail) and 2e+1 (at head); the
/// subdivision vertex of e is n + e.
struct DerivedGraph {
    BiposetGraph star;
    std::vector<EdgeLabel> labels;   // per star edge
    UpwardEmbedding upward;          // over all star edges
    Rotation rotation;               // underlying rotation
    SinkSourceAssignment psi;
    Dart outer;                      // star dart bounding the outer face
    std::vector<int> gadget;         // per G-edge: catalog index
    std::vector<Quadrant> quad_tail; // per G-edge: quadrant of 2e at tail
    std::vector<Quadrant> quad_head; // per G-edge: quadrant of 2e+1 at head

    static EdgeId half_at_tail(EdgeId e) { return 2 * e; }
    static EdgeId half_at_head(EdgeId e) { return 2 * e + 1; }
    VertexId w_of(EdgeId e) const { return static_cast<VertexId>(e + star.num_vertices() -
                                                                 static_cast<int>(gadget.size())); }
};

struct DerivedBuild {
    bool ok = false;
    std::string reason;
    DerivedGraph d;
};

/// Builds G* with its upward embedding directly from the quadrant assignment:
/// at every G-vertex the incident half-edges must form one cyclic run per
/// quadrant in NE,NW,SW,SE order; degenerate single-quadrant vertices are cut
/// at the Y anchors (the unique special placement). `with_names` skips the
/// star's name tables (the brute-force oracle builds millions of graphs).
DerivedBuild build_derived_graph(const PreparedInstance& p, const std::vector<int>& gadget_choice,
                                 bool with_names = true);

/// Recovers (G, ℰ) from a derived graph by erasing the subdivision vertices;
/// used as a round-trip assertion.
std::pair<BiposetGraph, Rotation> erase_gadgets(const PreparedInstance& p, const DerivedGraph& d);

}  // namespace xyplanar

#endif
