#ifndef XYPLANAR_INSTANCE_H
#define XYPLANAR_INSTANCE_H

#include "xyplanar/core.h"
#include "xyplanar/upward.h"

namespace xyplanar {

/// A full problem instance: the graph, its planar embedding ℰ (rotation +
/// outer dart), and the fixed upward embedding 𝒰 of the Y-subgraph.
struct BiposetInstance {
    BiposetGraph graph;
    Rotation rotation;
    UpwardEmbedding upward_y;
    Dart outer;
};

/// Validated instance plus everything the testing pipeline reuses: traced
/// faces of ℰ and of 𝒰, ψ of 𝒰, per-face corner prefix sums (face-source and
/// assigned counts), and per-X-edge insertion corners.
struct PreparedInstance {
    BiposetInstance inst;

    FaceStructure fs_full;  // faces of ℰ
    Rotation rot_y;         // ℰ restricted to Y = underlying rotation of 𝒰
    FaceStructure fs_y;     // faces of 𝒰
    SinkSourceAssignment psi_y;
    FaceStats stats_y;
    Dart y_outer;  // dart of a Y edge bounding the Y-outer face

    // Prefix sums over each Y-face's corner list: cum_*[f][i] counts corners
    // 0..i-1. Used for the constant-time per-gadget candidate test.
    std::vector<std::vector<int>> cum_src;
    std::vector<std::vector<int>> cum_asn;
    std::vector<std::optional<std::pair<std::int32_t, std::int32_t>>> psi_corner;

    // Where an X\Y edge attaches: the Y-face and the corner positions at its
    // tail and head, plus the flanking Y edges at each endpoint.
    struct InsertPoint {
        std::int32_t face = -1;
        std::int32_t corner_u = -1, corner_v = -1;
        EdgeId prev_y_u = -1, next_y_u = -1;
        EdgeId prev_y_v = -1, next_y_v = -1;
    };
    std::vector<std::optional<InsertPoint>> insert_points;

    // Rotation position of every edge at each endpoint (in ℰ).
    std::vector<std::int32_t> pos_at_tail, pos_at_head;

    const BiposetGraph& graph() const { return inst.graph; }
};

/// Validates all input invariants (graph structure, planarity of ℰ, 𝒰 shape,
/// 𝒰 underlying = ℰ|Y, upward planarity of 𝒰) and precomputes the data above.
/// Throws ValidationError with a reason on any failure.
PreparedInstance prepare(BiposetInstance inst);

/// Y-face bounding the wedge that contains the given ℰ-dart (used to locate
/// the outer face of 𝒰 when the designated outer dart lies on an X\Y edge).
Dart y_dart_for(const BiposetGraph& g, const Rotation& rot, const FaceStructure& fs_full,
                Dart d);

}  // namespace xyplanar

#endif
