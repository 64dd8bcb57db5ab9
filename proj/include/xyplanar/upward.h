#ifndef XYPLANAR_UPWARD_H
#define XYPLANAR_UPWARD_H

#include "xyplanar/core.h"

namespace xyplanar {

/// Upward embedding over a designated edge subset: per vertex, the
/// left-to-right order of incoming and of outgoing subset edges.
struct UpwardEmbedding {
    std::vector<std::vector<EdgeId>> in;
    std::vector<std::vector<EdgeId>> out;

    int num_vertices() const { return static_cast<int>(in.size()); }
    bool is_sink(VertexId v) const { return out[v].empty() && !in[v].empty(); }
    bool is_source(VertexId v) const { return in[v].empty() && !out[v].empty(); }
};

/// ψ: maps each source/sink v to an edge pair (e, e') with e immediately
/// preceding e' counter-clockwise at v; equivalently picks a face corner.
struct SinkSourceAssignment {
    std::vector<std::optional<std::pair<EdgeId, EdgeId>>> pairs;

    bool assigned(VertexId v) const { return pairs[v].has_value(); }
};

struct FaceStats {
    std::vector<int> face_sources;  // n_f
    std::vector<int> face_sinks;    // equals n_f on every face
    std::vector<int> assigned;      // sources/sinks ψ sends to f
};

/// CCW rotation induced by an upward embedding: incoming left-to-right, then
/// outgoing right-to-left.
Rotation underlying_rotation(const UpwardEmbedding& u);

/// Sinks map to (rightmost incoming, leftmost incoming); sources to
/// (leftmost outgoing, rightmost outgoing).
SinkSourceAssignment assignment_from_upward(const UpwardEmbedding& u);

/// Inverse: splits each source/sink's cyclic order at its ψ pair. Throws on a
/// non-bimodal rotation or a pair that is not rotation-consecutive.
UpwardEmbedding upward_from_assignment(const BiposetGraph& g, const Rotation& rot,
                                       const SinkSourceAssignment& psi);

FaceStats count_face_stats(const BiposetGraph& g, const FaceStructure& fs,
                           const SinkSourceAssignment& psi);

/// Lemma-style consistency: the outer face holds n_f + 1 assigned vertices,
/// every inner face n_f - 1.
bool check_upward_consistent(const FaceStats& stats, std::int32_t outer_face);

struct UpwardCheck {
    bool ok = false;
    bool planar = false;
    bool bimodal = false;
    bool consistent = false;
    std::string message;
};

/// Full fixed-embedding upward planarity test for a *given* assignment:
/// planarity (Euler), bimodality, and upward consistency.
UpwardCheck check_upward_planar_embedding(const BiposetGraph& g, const Rotation& rot,
                                          const SinkSourceAssignment& psi, Dart outer_hint);

}  // namespace xyplanar

#endif
