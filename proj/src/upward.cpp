#include "xyplanar/upward.h"

#include <algorithm>
#include <cassert>

namespace xyplanar {

Rotation underlying_rotation(const UpwardEmbedding& u) {
    Rotation rot(u.num_vertices());
    for (VertexId v = 0; v < u.num_vertices(); ++v) {
        rot[v] = u.in[v];
        rot[v].insert(rot[v].end(), u.out[v].rbegin(), u.out[v].rend());
    }
    return rot;
}

SinkSourceAssignment assignment_from_upward(const UpwardEmbedding& u) {
    SinkSourceAssignment psi;
    psi.pairs.resize(u.num_vertices());
    for (VertexId v = 0; v < u.num_vertices(); ++v) {
        if (u.is_sink(v))
            psi.pairs[v] = {u.in[v].back(), u.in[v].front()};
        else if (u.is_source(v))
            psi.pairs[v] = {u.out[v].front(), u.out[v].back()};
    }
    return psi;
}

UpwardEmbedding upward_from_assignment(const BiposetGraph& g, const Rotation& rot,
                                       const SinkSourceAssignment& psi) {
    const int n = g.num_vertices();
    UpwardEmbedding u;
    u.in.resize(n);
    u.out.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        const auto& r = rot[v];
        const int deg = static_cast<int>(r.size());
        if (deg == 0) {
            if (psi.assigned(v)) throw ValidationError("assignment on isolated vertex");
            continue;
        }
        int in_cnt = 0;
        for (EdgeId e : r)
            if (g.edges[e].head == v) ++in_cnt;

        if (in_cnt == deg || in_cnt == 0) {
            // Sink or source: ψ picks where the cyclic order splits.
            if (!psi.assigned(v))
                throw ValidationError("source/sink '" + g.vertex_names[v] + "' lacks an assignment");
            auto [a, b] = *psi.pairs[v];
            auto it = std::find(r.begin(), r.end(), b);
            if (it == r.end()) throw ValidationError("assignment pair not incident to its vertex");
            int start = static_cast<int>(it - r.begin());
            if (r[(start + deg - 1) % deg] != a)
                throw ValidationError("assignment pair is not rotation-consecutive at '" +
                                      g.vertex_names[v] + "'");
            std::vector<EdgeId> seq(deg);
            for (int i = 0; i < deg; ++i) seq[i] = r[(start + i) % deg];
            if (in_cnt == deg) {
                u.in[v] = std::move(seq);  // CCW from leftmost incoming
            } else {
                std::reverse(seq.begin(), seq.end());
                u.out[v] = std::move(seq);
            }
        } else {
            if (psi.assigned(v)) throw ValidationError("assignment on an inner vertex");
            // Bimodal rotation: locate the incoming block.
            int start = -1;
            for (int i = 0; i < deg; ++i) {
                bool prev_in = g.edges[r[(i + deg - 1) % deg]].head == v;
                bool cur_in = g.edges[r[i]].head == v;
                if (cur_in && !prev_in) {
                    if (start != -1)
                        throw ValidationError("rotation not bimodal at '" + g.vertex_names[v] + "'");
                    start = i;
                }
            }
            assert(start >= 0);
            for (int i = 0; i < deg; ++i) {
                EdgeId e = r[(start + i) % deg];
                if (g.edges[e].head == v) {
                    if (!u.out[v].empty())
                        throw ValidationError("rotation not bimodal at '" + g.vertex_names[v] + "'");
                    u.in[v].push_back(e);
                } else {
                    u.out[v].push_back(e);
                }
            }
            std::reverse(u.out[v].begin(), u.out[v].end());
        }
    }
    return u;
}

FaceStats count_face_stats(const BiposetGraph& g, const FaceStructure& fs,
                           const SinkSourceAssignment& psi) {
    FaceStats st;
    st.face_sources.assign(fs.num_faces(), 0);
    st.face_sinks.assign(fs.num_faces(), 0);
    st.assigned.assign(fs.num_faces(), 0);
    for (std::int32_t f = 0; f < fs.num_faces(); ++f) {
        for (const Corner& c : fs.corners[f]) {
            bool arrive_out = g.edges[c.arrive.edge()].tail == c.vertex;
            bool leave_out = g.edges[c.leave.edge()].tail == c.vertex;
            if (arrive_out && leave_out) st.face_sources[f]++;
            if (!arrive_out && !leave_out) st.face_sinks[f]++;
        }
        assert(st.face_sources[f] == st.face_sinks[f]);
    }
    for (VertexId v = 0; v < static_cast<VertexId>(psi.pairs.size()); ++v) {
        if (!psi.assigned(v)) continue;
        auto [a, b] = *psi.pairs[v];
        auto [f, pos] = fs.corner_of_pair(g, v, a, b);
        (void)pos;
        st.assigned[f]++;
    }
    return st;
}

bool check_upward_consistent(const FaceStats& stats, std::int32_t outer_face) {
    for (std::size_t f = 0; f < stats.face_sources.size(); ++f) {
        int want = stats.face_sources[f] + (static_cast<std::int32_t>(f) == outer_face ? 1 : -1);
        if (stats.assigned[f] != want) return false;
    }
    return true;
}

UpwardCheck check_upward_planar_embedding(const BiposetGraph& g, const Rotation& rot,
                                          const SinkSourceAssignment& psi, Dart outer_hint) {
    UpwardCheck r;
    FaceStructure fs;
    try {
        fs = trace_faces(g, rot, outer_hint);
    } catch (const ValidationError& e) {
        r.message = e.what();
        return r;
    }
    r.planar = true;
    BimodalReport bm = check_bimodal(g, rot);
    r.bimodal = bm.ok;
    if (!bm.ok) {
        r.message = "rotation not bimodal at vertex '" + g.vertex_names[bm.violations[0]] + "'";
        return r;
    }
    FaceStats st;
    try {
        st = count_face_stats(g, fs, psi);
    } catch (const ValidationError& e) {
        r.message = e.what();
        return r;
    }
    r.consistent = check_upward_consistent(st, fs.outer_face);
    if (!r.consistent) {
        r.message = "assignment is not upward consistent";
        return r;
    }
    r.ok = true;
    return r;
}

}  // namespace xyplanar
