#ifndef XYPLANAR_CORE_H
#define XYPLANAR_CORE_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace xyplanar {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

/// Raised when an input violates a structural invariant (bad rotation,
/// disconnected Y-subgraph, cyclic edge set, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct Edge {
    VertexId tail = -1;
    VertexId head = -1;
    bool in_x = false;
    bool in_y = false;
};

/// Directed multigraph with X/Y edge membership. Immutable after
/// construction; every algorithm in this library shares it read-only.
struct BiposetGraph {
    std::vector<std::string> vertex_names;  // index = VertexId
    std::vector<std::string> edge_names;    // index = EdgeId
    std::vector<Edge> edges;

    int num_vertices() const { return static_cast<int>(vertex_names.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }

    VertexId other(EdgeId e, VertexId v) const {
        const Edge& ed = edges[e];
        return ed.tail == v ? ed.head : ed.tail;
    }
    bool is_tail(EdgeId e, VertexId v) const { return edges[e].tail == v; }

    /// Structural checks: X∪Y = E, no self-loops, Y spanning/connected/acyclic,
    /// X acyclic. Throws ValidationError.
    void validate() const;
};

/// A dart is one of the two traversal directions of an edge:
/// forward = tail->head. Encoded as 2*edge + (forward ? 0 : 1).
struct Dart {
    std::int32_t code = -1;

    Dart() = default;
    Dart(EdgeId e, bool forward) : code(2 * e + (forward ? 0 : 1)) {}

    EdgeId edge() const { return code >> 1; }
    bool forward() const { return (code & 1) == 0; }
    Dart reversed() const { return Dart(edge(), !forward()); }

    bool operator==(const Dart&) const = default;
};

inline VertexId dart_tail(const BiposetGraph& g, Dart d) {
    const Edge& e = g.edges[d.edge()];
    return d.forward() ? e.tail : e.head;
}
inline VertexId dart_head(const BiposetGraph& g, Dart d) {
    const Edge& e = g.edges[d.edge()];
    return d.forward() ? e.head : e.tail;
}

/// Counter-clockwise cyclic order of incident edges per vertex. May cover a
/// subset of the graph's edges (e.g. only Y); vertices keep their global ids.
using Rotation = std::vector<std::vector<EdgeId>>;

/// One face corner: the walk arrives at `vertex` via `arrive` and leaves via
/// `leave`. The corner stands for the wedge swept counter-clockwise from
/// edge(leave) to edge(arrive) at `vertex`.
struct Corner {
    VertexId vertex = -1;
    Dart arrive;
    Dart leave;
};

struct FaceStructure {
    // faces[f] = cyclic dart sequence; corners[f][i] sits between
    // faces[f][i-1] and faces[f][i].
    std::vector<std::vector<Dart>> faces;
    std::vector<std::vector<Corner>> corners;
    std::vector<std::int32_t> dart_face;  // indexed by Dart::code
    std::vector<std::int32_t> dart_pos;
    std::int32_t outer_face = -1;

    int num_faces() const { return static_cast<int>(faces.size()); }
    std::int32_t face_of(Dart d) const { return dart_face[d.code]; }

    /// Face and corner index of the wedge CCW from `a` to `b` at v, where a
    /// immediately precedes b in v's rotation (the ψ pair convention).
    std::pair<std::int32_t, std::int32_t> corner_of_pair(const BiposetGraph& g, VertexId v,
                                                         EdgeId a, EdgeId b) const;
};

/// Traces all faces of `rot` (which must cover a connected subgraph spanning
/// every vertex that has incident edges in it). The face containing
/// `outer_hint` is marked outer. Successor of a dart arriving at v via e is
/// the dart leaving v on the edge preceding e in v's stored CCW order.
/// Throws ValidationError if the rotation fails Euler's formula.
FaceStructure trace_faces(const BiposetGraph& g, const Rotation& rot, Dart outer_hint);

/// True iff at every vertex the incoming (and outgoing) edges of the subset
/// selected by `in_subset` are cyclically consecutive within the restricted
/// rotation. Violating vertices reported.
struct BimodalReport {
    bool ok = true;
    std::vector<VertexId> violations;
};
BimodalReport check_bimodal(const BiposetGraph& g, const Rotation& rot,
                            const std::vector<bool>& edge_in_subset);
BimodalReport check_bimodal(const BiposetGraph& g, const Rotation& rot);

/// Rotation filtered to Y edges; rejects a non-spanning or disconnected
/// Y-subgraph.
Rotation restrict_to_y(const BiposetGraph& g, const Rotation& rot);

/// Utility: cyclic equality of two sequences (same elements in the same
/// cyclic order, any starting point).
bool cyclically_equal(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b);

/// Whether the graph (all edges) is a DAG. The upward planarity test assumes
/// this; callers inserting gadget edges re-check it explicitly.
bool graph_is_acyclic(const BiposetGraph& g);

}  // namespace xyplanar

#endif
