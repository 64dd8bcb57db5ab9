#include "xyplanar/instance.h"

#include <algorithm>
#include <cassert>

namespace xyplanar {

Dart y_dart_for(const BiposetGraph& g, const Rotation& rot, const FaceStructure& fs_full,
                Dart d) {
    if (g.edges[d.edge()].in_y) return d;
    // Walk the ℰ-face of d; the first Y dart on it bounds the same Y-face.
    std::int32_t f = fs_full.face_of(d);
    for (Dart w : fs_full.faces[f])
        if (g.edges[w.edge()].in_y) return w;
    // Face bounded by X edges only: scan the rotation at some corner vertex
    // for the nearest Y edge counter-clockwise; the dart leaving along it
    // bounds the enclosing Y-face.
    VertexId v = dart_tail(g, fs_full.faces[f][0]);
    const auto& r = rot[v];
    auto it = std::find(r.begin(), r.end(), fs_full.faces[f][0].edge());
    assert(it != r.end());
    int start = static_cast<int>(it - r.begin());
    int deg = static_cast<int>(r.size());
    // Nearest Y edge clockwise from the X edge: the wedge's leave edge; its
    // leave-dart bounds the Y-face enclosing this ℰ-face.
    for (int j = 1; j <= deg; ++j) {
        EdgeId prev = r[((start - j) % deg + deg) % deg];
        if (g.edges[prev].in_y) return Dart(prev, g.edges[prev].tail == v);
    }
    throw ValidationError("vertex '" + g.vertex_names[v] + "' has no incident Y edge");
}

PreparedInstance prepare(BiposetInstance inst) {
    PreparedInstance p;
    const BiposetGraph& g = inst.graph;
    g.validate();
    const int n = g.num_vertices();
    const int m = g.num_edges();

    if (m == 0) {
        p.inst = std::move(inst);
        p.pos_at_tail.clear();
        p.pos_at_head.clear();
        p.psi_corner.resize(n);
        p.insert_points.clear();
        return p;
    }

    // ℰ must be a planar rotation of the whole graph.
    if (static_cast<int>(inst.rotation.size()) != n)
        throw ValidationError("rotation must list every vertex");
    if (inst.outer.code < 0 || inst.outer.edge() >= m)
        throw ValidationError("outer face dart is missing or out of range");
    p.fs_full = trace_faces(g, inst.rotation, inst.outer);

    // 𝒰 shape: every Y edge once in its head's in-list and tail's out-list.
    const UpwardEmbedding& u = inst.upward_y;
    if (u.num_vertices() != n || static_cast<int>(u.out.size()) != n)
        throw ValidationError("upward embedding must list every vertex");
    {
        std::vector<int> seen_in(m, 0), seen_out(m, 0);
        for (VertexId v = 0; v < n; ++v) {
            for (EdgeId e : u.in[v]) {
                if (e < 0 || e >= m || !g.edges[e].in_y || g.edges[e].head != v)
                    throw ValidationError("upward in-list of '" + g.vertex_names[v] + "' is malformed");
                seen_in[e]++;
            }
            for (EdgeId e : u.out[v]) {
                if (e < 0 || e >= m || !g.edges[e].in_y || g.edges[e].tail != v)
                    throw ValidationError("upward out-list of '" + g.vertex_names[v] + "' is malformed");
                seen_out[e]++;
            }
        }
        for (EdgeId e = 0; e < m; ++e)
            if (g.edges[e].in_y && (seen_in[e] != 1 || seen_out[e] != 1))
                throw ValidationError("Y edge '" + g.edge_names[e] + "' missing from the upward embedding");
    }

    // Underlying rotation of 𝒰 must equal ℰ restricted to Y.
    p.rot_y = restrict_to_y(g, inst.rotation);
    {
        Rotation under = underlying_rotation(u);
        for (VertexId v = 0; v < n; ++v)
            if (!cyclically_equal(under[v], p.rot_y[v]))
                throw ValidationError("upward embedding disagrees with the rotation at vertex '" +
                                      g.vertex_names[v] + "'");
    }
    {
        BimodalReport bm = check_bimodal(g, p.rot_y);
        assert(bm.ok);  // underlying rotations are bimodal by construction
        (void)bm;
    }

    // 𝒰 itself must be upward planar (Lemma-style test with ψ from 𝒰).
    p.y_outer = y_dart_for(g, inst.rotation, p.fs_full, inst.outer);
    p.fs_y = trace_faces(g, p.rot_y, p.y_outer);
    p.psi_y = assignment_from_upward(u);
    p.stats_y = count_face_stats(g, p.fs_y, p.psi_y);
    if (!check_upward_consistent(p.stats_y, p.fs_y.outer_face))
        throw ValidationError("the given upward embedding of the Y-subgraph is not upward planar");

    // ψ corner handles and per-face prefix sums.
    p.psi_corner.resize(n);
    for (VertexId v = 0; v < n; ++v)
        if (p.psi_y.assigned(v)) {
            auto [a, b] = *p.psi_y.pairs[v];
            p.psi_corner[v] = p.fs_y.corner_of_pair(g, v, a, b);
        }
    p.cum_src.resize(p.fs_y.num_faces());
    p.cum_asn.resize(p.fs_y.num_faces());
    for (std::int32_t f = 0; f < p.fs_y.num_faces(); ++f) {
        const auto& cs = p.fs_y.corners[f];
        const int len = static_cast<int>(cs.size());
        p.cum_src[f].assign(len + 1, 0);
        p.cum_asn[f].assign(len + 1, 0);
        for (int i = 0; i < len; ++i) {
            const Corner& c = cs[i];
            bool a_out = g.is_tail(c.arrive.edge(), c.vertex);
            bool l_out = g.is_tail(c.leave.edge(), c.vertex);
            p.cum_src[f][i + 1] = p.cum_src[f][i] + (a_out && l_out ? 1 : 0);
            bool asn = p.psi_corner[c.vertex] &&
                       *p.psi_corner[c.vertex] == std::make_pair(f, static_cast<std::int32_t>(i));
            p.cum_asn[f][i + 1] = p.cum_asn[f][i] + (asn ? 1 : 0);
        }
    }

    // Rotation positions and, per X\Y edge, the Y corner it attaches to.
    p.pos_at_tail.assign(m, -1);
    p.pos_at_head.assign(m, -1);
    for (VertexId v = 0; v < n; ++v)
        for (std::size_t i = 0; i < inst.rotation[v].size(); ++i) {
            EdgeId e = inst.rotation[v][i];
            (g.edges[e].tail == v ? p.pos_at_tail : p.pos_at_head)[e] =
                static_cast<std::int32_t>(i);
        }
    p.insert_points.resize(m);
    // Nearest Y edge at or before / after every rotation position, per vertex.
    for (VertexId v = 0; v < n; ++v) {
        const auto& r = inst.rotation[v];
        const int deg = static_cast<int>(r.size());
        if (deg == 0) continue;
        std::vector<std::int32_t> prev_y(deg, -1), next_y(deg, -1);
        std::int32_t last = -1;
        for (int rep = 0; rep < 2; ++rep)
            for (int i = 0; i < deg; ++i) {
                if (last >= 0) prev_y[i] = last;
                if (g.edges[r[i]].in_y) last = i;
            }
        last = -1;
        for (int rep = 0; rep < 2; ++rep)
            for (int i = deg - 1; i >= 0; --i) {
                if (last >= 0) next_y[i] = last;
                if (g.edges[r[i]].in_y) last = i;
            }
        for (int i = 0; i < deg; ++i) {
            EdgeId e = r[i];
            if (g.edges[e].in_y || !g.edges[e].in_x) continue;
            if (prev_y[i] < 0 || next_y[i] < 0)
                throw ValidationError("vertex '" + g.vertex_names[v] + "' has no incident Y edge");
            auto& ip = p.insert_points[e];
            if (!ip) ip.emplace();
            auto [f, pos] = p.fs_y.corner_of_pair(g, v, r[prev_y[i]], r[next_y[i]]);
            if (g.edges[e].tail == v) {
                ip->corner_u = pos;
                ip->prev_y_u = r[prev_y[i]];
                ip->next_y_u = r[next_y[i]];
                ip->face = f;
            } else {
                ip->corner_v = pos;
                ip->prev_y_v = r[prev_y[i]];
                ip->next_y_v = r[next_y[i]];
                if (ip->face >= 0 && ip->face != f)
                    throw ValidationError("edge '" + g.edge_names[e] +
                                          "' attaches to two different Y-faces");
                ip->face = f;
            }
        }
    }
    for (EdgeId e = 0; e < m; ++e)
        if (g.edges[e].in_x && !g.edges[e].in_y) {
            auto& ip = p.insert_points[e];
            if (!ip || ip->corner_u < 0 || ip->corner_v < 0)
                throw ValidationError("internal: missing insertion corner for edge '" +
                                      g.edge_names[e] + "'");
        }

    p.inst = std::move(inst);
    return p;
}

}  // namespace xyplanar
