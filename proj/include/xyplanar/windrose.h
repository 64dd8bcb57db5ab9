#ifndef XYPLANAR_WINDROSE_H
#define XYPLANAR_WINDROSE_H

#include "xyplanar/core.h"
#include "xyplanar/upward.h"

namespace xyplanar {

/// Quadrant of a half-edge around a vertex. Order NE < NW < SW < SE is the
/// canonical variable order throughout.
enum class Quadrant : std::uint8_t { NE = 0, NW = 1, SW = 2, SE = 3 };

/// Edge label of a windrose graph.
enum class EdgeLabel : std::uint8_t { NE = 0, NW = 1 };

const char* to_string(Quadrant q);
const char* to_string(EdgeLabel l);

inline bool is_south(Quadrant q) { return q == Quadrant::SW || q == Quadrant::SE; }
inline bool is_north(Quadrant q) { return !is_south(q); }

/// A half-edge in quadrant NE/NW leaves its vertex; SW/SE enters it.
inline bool quadrant_outgoing(Quadrant q) { return is_north(q); }

/// Label of an edge seen from one endpoint's quadrant: NE edges sit NE at the
/// tail and SW at the head, NW edges sit NW at the tail and SE at the head.
inline EdgeLabel label_from_quadrant(Quadrant q) {
    return (q == Quadrant::NE || q == Quadrant::SW) ? EdgeLabel::NE : EdgeLabel::NW;
}
inline Quadrant quadrant_at_tail(EdgeLabel l) {
    return l == EdgeLabel::NE ? Quadrant::NE : Quadrant::NW;
}
inline Quadrant quadrant_at_head(EdgeLabel l) {
    return l == EdgeLabel::NE ? Quadrant::SW : Quadrant::SE;
}

struct WindroseReport {
    bool ok = true;
    std::vector<VertexId> violations;
};

/// Lemma-style windrose consistency: at every vertex the outgoing
/// left-to-right order is NW-block then NE-block, and the incoming order is
/// NE-block then NW-block.
WindroseReport check_windrose_consistent(const UpwardEmbedding& u,
                                         const std::vector<EdgeLabel>& labels);

/// Special-drawing corner properties, checked at every vertex of G whose X
/// edges are uniformly directed and whose Y edges are uniformly directed:
///   (1) in-X, in-Y : first edge in the SW quadrant is in Y
///   (2) in-X, out-Y: last  edge in the NW quadrant is in Y
///   (3) out-X, in-Y: last  edge in the SE quadrant is in Y
///   (4) out-X, out-Y: first edge in the NE quadrant is in Y
/// `quad_tail[e]` / `quad_head[e]` give the quadrant of e's gadget half-edge
/// at its tail / head. Mixed vertices are exempt. Also flags vertices whose
/// quadrants do not form one cyclic block per quadrant in NE,NW,SW,SE order.
WindroseReport check_special(const BiposetGraph& g, const Rotation& rot,
                             const std::vector<Quadrant>& quad_tail,
                             const std::vector<Quadrant>& quad_head);

/// Single-vertex form of check_special (also used to prune the brute-force
/// oracle's search).
bool check_special_at(const BiposetGraph& g, const Rotation& rot,
                      const std::vector<Quadrant>& quad_tail,
                      const std::vector<Quadrant>& quad_head, VertexId v);

}  // namespace xyplanar

#endif
