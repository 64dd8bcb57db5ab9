#include "xyplanar/draw.h"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <queue>
#include <sstream>

#include <json.hpp>

namespace xyplanar {

std::size_t PolylineDrawing::max_coordinate_bits() const {
    std::size_t best = 0;
    for (const Point& p : vertex_pos) best = std::max({best, rat_bits(p.x), rat_bits(p.y)});
    for (const auto& poly : edge_points)
        for (const Point& p : poly) best = std::max({best, rat_bits(p.x), rat_bits(p.y)});
    return best;
}

EdgeDependencyGraph build_dependency_graph(const UpwardEmbedding& u,
                                           const std::vector<EdgeLabel>& labels) {
    (void)labels;
    EdgeDependencyGraph d;
    int m = 0;
    for (VertexId v = 0; v < u.num_vertices(); ++v) {
        for (std::size_t i = 0; i + 1 < u.out[v].size(); ++i)
            d.arcs.push_back({u.out[v][i], u.out[v][i + 1]});
        for (std::size_t i = 0; i + 1 < u.in[v].size(); ++i)
            d.arcs.push_back({u.in[v][i + 1], u.in[v][i]});
        for (EdgeId e : u.out[v]) m = std::max(m, e + 1);
        for (EdgeId e : u.in[v]) m = std::max(m, e + 1);
    }
    // Acyclicity by Kahn.
    std::vector<int> indeg(m, 0);
    std::vector<std::vector<EdgeId>> adj(m);
    for (auto [a, b] : d.arcs) {
        indeg[b]++;
        adj[a].push_back(b);
    }
    std::queue<EdgeId> q;
    for (EdgeId e = 0; e < m; ++e)
        if (indeg[e] == 0) q.push(e);
    int seen = 0;
    while (!q.empty()) {
        EdgeId e = q.front();
        q.pop();
        ++seen;
        for (EdgeId f : adj[e])
            if (--indeg[f] == 0) q.push(f);
    }
    d.acyclic = seen == m;
    return d;
}

// ---------------------------------------------------------------------------
// Validators.
// ---------------------------------------------------------------------------

namespace {

// CCW comparison of direction vectors with no horizontals: uppers (dy>0)
// before lowers in angle order starting from east.
bool angle_less(const Point& a, const Point& b) {
    bool ua = a.y > 0, ub = b.y > 0;
    if (ua != ub) return ua;  // (0,180) before (180,360)
    Rat cr = a.x * b.y - a.y * b.x;
    return sgn(cr) > 0;  // a strictly clockwise of b within the half-plane
}

struct IncidentEnd {
    EdgeId edge;
    Point dir;  // first segment direction away from the vertex
};

// Checks planarity over a set of polylines; polylines may share endpoints.
void check_planarity(const std::vector<std::vector<Point>>& polys,
                     const std::vector<std::string>& names, DrawReport& rep) {
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = i; j < polys.size(); ++j)
            for (std::size_t a = 0; a + 1 < polys[i].size(); ++a)
                for (std::size_t b = 0; b + 1 < polys[j].size(); ++b) {
                    if (i == j && b <= a + 1) continue;  // adjacent segments share a bend
                    SegCross sc = segment_intersection(polys[i][a], polys[i][a + 1], polys[j][b],
                                                       polys[j][b + 1]);
                    if (sc == SegCross::None) continue;
                    if (sc == SegCross::Touch && i != j) {
                        // Allowed only at shared polyline endpoints.
                        bool end_i = a == 0 || a + 2 == polys[i].size();
                        bool end_j = b == 0 || b + 2 == polys[j].size();
                        if (end_i && end_j) {
                            // The touch point must be a common endpoint.
                            const Point& pi0 = polys[i].front();
                            const Point& pi1 = polys[i].back();
                            const Point& pj0 = polys[j].front();
                            const Point& pj1 = polys[j].back();
                            if (pi0 == pj0 || pi0 == pj1 || pi1 == pj0 || pi1 == pj1) continue;
                        }
                    }
                    rep.ok = false;
                    rep.violations.push_back("edges " + names[i] + " and " + names[j] +
                                             " intersect");
                    return;
                }
}

void check_monotone(const std::vector<Point>& poly, bool x_inc, bool check_x, bool y_inc,
                    bool check_y, const std::string& name, DrawReport& rep) {
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
        const Point &a = poly[i], &b = poly[i + 1];
        if (a == b) {
            rep.ok = false;
            rep.violations.push_back("edge " + name + " repeats a point");
            return;
        }
        if (check_x && (x_inc ? !(b.x > a.x) : !(b.x < a.x))) {
            rep.ok = false;
            rep.violations.push_back("edge " + name + " is not strictly x-monotone");
            return;
        }
        if (check_y && (y_inc ? !(b.y > a.y) : !(b.y < a.y))) {
            rep.ok = false;
            rep.violations.push_back("edge " + name + " is not strictly y-monotone");
            return;
        }
    }
}

// Induced rotation (CCW by first-segment direction) and induced left-to-right
// in/out orders at one vertex.
struct InducedOrders {
    std::vector<EdgeId> rotation;
    std::vector<EdgeId> in_lr, out_lr;
};

InducedOrders induced_at(VertexId v, const std::vector<Edge>& edges,
                         const std::vector<std::vector<Point>>& polys,
                         const std::vector<EdgeId>& incident) {
    std::vector<IncidentEnd> ends;
    for (EdgeId e : incident) {
        const auto& poly = polys[e];
        Point dir = edges[e].tail == v ? poly[1] - poly[0]
                                       : poly[poly.size() - 2] - poly.back();
        ends.push_back({e, dir});
    }
    InducedOrders out;
    std::vector<IncidentEnd> sorted = ends;
    std::sort(sorted.begin(), sorted.end(),
              [](const IncidentEnd& a, const IncidentEnd& b) { return angle_less(a.dir, b.dir); });
    for (const auto& en : sorted) out.rotation.push_back(en.edge);
    // Incoming: directions point down; left-to-right is increasing angle
    // within (180,360), which angle_less already provides. Outgoing:
    // decreasing angle within (0,180).
    std::vector<IncidentEnd> ins, outs;
    for (const auto& en : ends)
        (sgn(en.dir.y) < 0 ? ins : outs).push_back(en);
    std::sort(ins.begin(), ins.end(),
              [](const IncidentEnd& a, const IncidentEnd& b) { return angle_less(a.dir, b.dir); });
    std::sort(outs.begin(), outs.end(),
              [](const IncidentEnd& a, const IncidentEnd& b) { return angle_less(b.dir, a.dir); });
    for (const auto& en : ins) out.in_lr.push_back(en.edge);
    for (const auto& en : outs) out.out_lr.push_back(en.edge);
    return out;
}

}  // namespace

DrawReport validate_windrose_drawing(const DerivedGraph& d, const PolylineDrawing& drawing) {
    DrawReport rep;
    const BiposetGraph& g = d.star;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto& poly = drawing.edge_points[e];
        if (poly.size() < 2 || poly.front() != drawing.vertex_pos[g.edges[e].tail] ||
            poly.back() != drawing.vertex_pos[g.edges[e].head]) {
            rep.ok = false;
            rep.violations.push_back("edge " + g.edge_names[e] + " does not join its endpoints");
            return rep;
        }
        bool ne = d.labels[e] == EdgeLabel::NE;
        check_monotone(poly, ne, true, true, true, g.edge_names[e], rep);
        if (!rep.ok) return rep;
    }
    check_planarity(drawing.edge_points, g.edge_names, rep);
    if (!rep.ok) return rep;

    std::vector<std::vector<EdgeId>> incident(g.num_vertices());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        incident[g.edges[e].tail].push_back(e);
        incident[g.edges[e].head].push_back(e);
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (incident[v].empty()) continue;
        InducedOrders io = induced_at(v, g.edges, drawing.edge_points, incident[v]);
        if (!cyclically_equal(io.rotation, d.rotation[v])) {
            rep.ok = false;
            rep.violations.push_back("rotation mismatch at vertex " + g.vertex_names[v]);
            return rep;
        }
        if (io.in_lr != d.upward.in[v] || io.out_lr != d.upward.out[v]) {
            rep.ok = false;
            rep.violations.push_back("left-to-right order mismatch at vertex " +
                                     g.vertex_names[v]);
            return rep;
        }
    }
    return rep;
}

DrawReport validate_drawing(const PreparedInstance& p, const PolylineDrawing& drawing) {
    DrawReport rep;
    const BiposetGraph& g = p.graph();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto& poly = drawing.edge_points[e];
        if (poly.size() < 2 || poly.front() != drawing.vertex_pos[g.edges[e].tail] ||
            poly.back() != drawing.vertex_pos[g.edges[e].head]) {
            rep.ok = false;
            rep.violations.push_back("(b) edge " + g.edge_names[e] +
                                     " does not join its endpoints");
            return rep;
        }
        if (g.edges[e].in_x)
            check_monotone(poly, true, true, false, false, g.edge_names[e] + " (clause b)", rep);
        if (!rep.ok) return rep;
        if (g.edges[e].in_y)
            check_monotone(poly, false, false, true, true, g.edge_names[e] + " (clause c)", rep);
        if (!rep.ok) return rep;
    }
    check_planarity(drawing.edge_points, g.edge_names, rep);  // clause (a)
    if (!rep.ok) return rep;

    std::vector<std::vector<EdgeId>> incident(g.num_vertices());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        incident[g.edges[e].tail].push_back(e);
        incident[g.edges[e].head].push_back(e);
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (incident[v].empty()) continue;
        InducedOrders io = induced_at(v, g.edges, drawing.edge_points, incident[v]);
        if (!cyclically_equal(io.rotation, p.inst.rotation[v])) {  // clause (d)
            rep.ok = false;
            rep.violations.push_back("(d) rotation mismatch at vertex " + g.vertex_names[v]);
            return rep;
        }
        std::vector<EdgeId> yin, yout;  // clause (e)
        for (EdgeId e : io.in_lr)
            if (g.edges[e].in_y && g.edges[e].head == v) yin.push_back(e);
        for (EdgeId e : io.out_lr)
            if (g.edges[e].in_y && g.edges[e].tail == v) yout.push_back(e);
        if (yin != p.inst.upward_y.in[v] || yout != p.inst.upward_y.out[v]) {
            rep.ok = false;
            rep.violations.push_back("(e) upward order mismatch at vertex " + g.vertex_names[v]);
            return rep;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Base case: upward dominance drawing of the NE-relabeled derived graph.
// ---------------------------------------------------------------------------

namespace {

struct AugState {
    BiposetGraph g;  // in_x/in_y unused
    Rotation rot;
    SinkSourceAssignment psi;
    Dart outer;
};

std::pair<EdgeId, EdgeId> pair_of_corner(const Corner& c) {
    return {c.leave.edge(), c.arrive.edge()};
}

// Reachability closure over current arcs (drawing-scale graphs only).
std::vector<std::vector<bool>> closure(const BiposetGraph& g) {
    const int n = g.num_vertices();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    std::vector<std::vector<VertexId>> adj(n);
    for (const Edge& e : g.edges) adj[e.tail].push_back(e.head);
    for (VertexId s = 0; s < n; ++s) {
        std::queue<VertexId> q;
        q.push(s);
        reach[s][s] = true;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId w : adj[v])
                if (!reach[s][w]) {
                    reach[s][w] = true;
                    q.push(w);
                }
        }
    }
    return reach;
}

void insert_in_rotation(Rotation& rot, VertexId z, EdgeId after_edge, EdgeId h) {
    auto& r = rot[z];
    auto it = std::find(r.begin(), r.end(), after_edge);
    assert(it != r.end());
    r.insert(it + 1, h);
}

// Saturates the embedded DAG: adds edges inside faces until only one source
// and one sink remain assigned (both on the outer face). Each round searches
// all chords between two face corners, evaluating the exact upward
// consistency of both sides of the split; a chord is applied when it keeps
// every face consistent, resolves at least one assigned extreme, creates no
// directed cycle, and leaves the induced embedding of the original edges
// untouched (an extreme only ever gains its resolving edge inside its own
// assignment corner).
void saturate(AugState& st) {
    while (true) {
        FaceStructure fs = trace_faces(st.g, st.rot, st.outer);
        FaceStats stats = count_face_stats(st.g, fs, st.psi);
        assert(check_upward_consistent(stats, fs.outer_face));
        int total_assigned = 0;
        for (int a : stats.assigned) total_assigned += a;
        if (total_assigned <= 2) return;

        std::vector<int> indeg(st.g.num_vertices(), 0), outdeg(st.g.num_vertices(), 0);
        for (const Edge& e : st.g.edges) {
            outdeg[e.tail]++;
            indeg[e.head]++;
        }
        int sinks = 0, sources = 0;
        for (VertexId v = 0; v < st.g.num_vertices(); ++v) {
            if (indeg[v] + outdeg[v] == 0) continue;
            if (outdeg[v] == 0) ++sinks;
            if (indeg[v] == 0) ++sources;
        }
        auto reach = closure(st.g);

        struct Endpoint {
            bool valid = false;
            bool resolves = false;       // assignment disappears
            bool repoint = false;        // assignment moves to a sub-corner
        };
        // Effect of attaching a half-edge of direction `out_h` inside corner
        // `c` of vertex z.
        auto classify = [&](const Corner& c, bool out_h) {
            Endpoint r;
            VertexId z = c.vertex;
            bool z_sink = outdeg[z] == 0, z_source = indeg[z] == 0;
            bool psi_here = st.psi.pairs[z] && *st.psi.pairs[z] == pair_of_corner(c);
            if (z_sink) {
                if (out_h) {
                    if (!psi_here || sinks < 2) return r;  // keep the embedding / last sink
                    r.resolves = true;
                } else {
                    r.repoint = psi_here;
                }
            } else if (z_source) {
                if (!out_h) {
                    if (!psi_here || sources < 2) return r;
                    r.resolves = true;
                } else {
                    r.repoint = psi_here;
                }
            } else {
                bool a_out = st.g.is_tail(c.arrive.edge(), z);
                bool l_out = st.g.is_tail(c.leave.edge(), z);
                if (out_h && !a_out && !l_out) return r;  // splits the in-block
                if (!out_h && a_out && l_out) return r;
            }
            r.valid = true;
            return r;
        };

        bool moved = false;
        for (std::int32_t f = 0; f < fs.num_faces() && !moved; ++f) {
            const auto& corners = fs.corners[f];
            const int len = static_cast<int>(corners.size());
            if (len < 2) continue;
            std::vector<bool> asn(len), src_corner(len);
            for (int i = 0; i < len; ++i) {
                const Corner& c = corners[i];
                asn[i] = st.psi.pairs[c.vertex] && *st.psi.pairs[c.vertex] == pair_of_corner(c);
                bool a_out = st.g.is_tail(c.arrive.edge(), c.vertex);
                bool l_out = st.g.is_tail(c.leave.edge(), c.vertex);
                src_corner[i] = a_out && l_out;
            }
            auto count_range = [&](const std::vector<bool>& flag, int s, int t) {
                int cnt = 0;
                for (int i = s; i != t; i = (i + 1) % len) cnt += flag[i] ? 1 : 0;
                return cnt;
            };
            const int outer_pos = f == fs.outer_face ? fs.dart_pos[st.outer.code] : -1;

            for (int a = 0; a < len && !moved; ++a)
                for (int b = 0; b < len && !moved; ++b) {
                    if (a == b) continue;
                    VertexId za = corners[a].vertex, zb = corners[b].vertex;
                    if (za == zb) continue;
                    for (int dir = 0; dir < 2 && !moved; ++dir) {
                        VertexId tail = dir == 0 ? za : zb;
                        VertexId head = dir == 0 ? zb : za;
                        if (reach[head][tail]) continue;
                        Endpoint ea = classify(corners[a], tail == za);
                        Endpoint eb = classify(corners[b], tail == zb);
                        if (!ea.valid || !eb.valid) continue;
                        if (!ea.resolves && !eb.resolves) continue;  // progress
                        // Side A keeps darts [a, b); side B keeps [b, a).
                        bool a_out_h = tail == za, b_out_h = tail == zb;
                        auto sub_switch = [&](const Corner& c, bool out_h, bool leave_side) {
                            // leave_side: the sub-corner (arrive h, leave c.leave).
                            EdgeId other = leave_side ? c.leave.edge() : c.arrive.edge();
                            bool other_out = st.g.is_tail(other, c.vertex);
                            return std::pair<bool, bool>(out_h && other_out,
                                                         !out_h && !other_out);
                        };
                        auto [srcA_a, snkA_a] = sub_switch(corners[a], a_out_h, true);
                        auto [srcB_a, snkB_a] = sub_switch(corners[a], a_out_h, false);
                        auto [srcA_b, snkA_b] = sub_switch(corners[b], b_out_h, false);
                        auto [srcB_b, snkB_b] = sub_switch(corners[b], b_out_h, true);
                        (void)snkA_a;
                        (void)snkB_a;
                        (void)snkA_b;
                        (void)snkB_b;
                        int nA = count_range(src_corner, (a + 1) % len, b) + (srcA_a ? 1 : 0) +
                                 (srcA_b ? 1 : 0);
                        int nB = count_range(src_corner, (b + 1) % len, a) + (srcB_a ? 1 : 0) +
                                 (srcB_b ? 1 : 0);
                        int asnA = count_range(asn, (a + 1) % len, b);
                        int asnB = count_range(asn, (b + 1) % len, a);
                        bool outerA = outer_pos >= 0 &&
                                      (a <= outer_pos && outer_pos < b
                                           ? a < b
                                           : (a > b && (outer_pos >= a || outer_pos < b)));
                        bool outerB = outer_pos >= 0 && !outerA;
                        int wantA = nA + (outerA ? 1 : -1);
                        int wantB = nB + (outerB ? 1 : -1);
                        // Re-point choices: 0 = to side A, 1 = to side B,
                        // only meaningful for endpoints flagged repoint.
                        for (int ra = 0; ra < (ea.repoint ? 2 : 1) && !moved; ++ra)
                            for (int rb = 0; rb < (eb.repoint ? 2 : 1) && !moved; ++rb) {
                                int fa = asnA + (ea.repoint && ra == 0 ? 1 : 0) +
                                         (eb.repoint && rb == 0 ? 1 : 0);
                                int fb = asnB + (ea.repoint && ra == 1 ? 1 : 0) +
                                         (eb.repoint && rb == 1 ? 1 : 0);
                                if (fa != wantA || fb != wantB) continue;
                                // Apply the chord.
                                EdgeId h = st.g.num_edges();
                                st.g.edge_names.push_back("aug" + std::to_string(h));
                                st.g.edges.push_back(Edge{tail, head, false, true});
                                insert_in_rotation(st.rot, za, corners[a].leave.edge(), h);
                                insert_in_rotation(st.rot, zb, corners[b].leave.edge(), h);
                                if (ea.resolves) st.psi.pairs[za].reset();
                                if (eb.resolves) st.psi.pairs[zb].reset();
                                if (ea.repoint)
                                    st.psi.pairs[za] =
                                        ra == 0 ? std::make_pair(corners[a].leave.edge(), h)
                                                : std::make_pair(h, corners[a].arrive.edge());
                                if (eb.repoint)
                                    st.psi.pairs[zb] =
                                        rb == 1 ? std::make_pair(corners[b].leave.edge(), h)
                                                : std::make_pair(h, corners[b].arrive.edge());
                                moved = true;
                            }
                    }
                }
        }
        if (!moved) throw std::logic_error("face saturation found no applicable move");
    }
}

// Dominance coordinates for the saturated, fully subdivided graph.
struct BaseDrawing {
    std::vector<Point> pos;           // per subdivided-graph vertex
    std::vector<VertexId> mid_of;     // arc -> midpoint vertex
};

BaseDrawing dominance_coordinates(const AugState& st0) {
    AugState st = st0;
    // Locate the final source and sink (the two still-assigned vertices).
    VertexId s = -1, t = -1;
    for (VertexId v = 0; v < st.g.num_vertices(); ++v) {
        if (!st.psi.pairs[v]) continue;
        bool snk = st.g.edges[st.rot[v][0]].head == v;
        (snk ? t : s) = v;
    }
    if (s >= 0 && t >= 0) {
        bool have_st = false;
        for (const Edge& e : st.g.edges) have_st |= (e.tail == s && e.head == t);
        FaceStructure fs = trace_faces(st.g, st.rot, st.outer);
        if (!have_st) {
            // The outer face is a diamond from s to t; the st edge splits it
            // and pins the assignment split of both extremes.
            EdgeId h = st.g.num_edges();
            st.g.edge_names.push_back("st");
            st.g.edges.push_back(Edge{s, t, false, true});
            auto [sa, sb] = *st.psi.pairs[s];
            auto [ta, tb] = *st.psi.pairs[t];
            insert_in_rotation(st.rot, s, sa, h);
            insert_in_rotation(st.rot, t, ta, h);
            // Keep both assignments on the side of the outer dart.
            FaceStructure fs2 = trace_faces(st.g, st.rot, st.outer);
            auto outer_has = [&](EdgeId a, EdgeId b) {
                try {
                    auto [fc, pos] = fs2.corner_of_pair(st.g, s, a, b);
                    (void)pos;
                    return fc == fs2.outer_face;
                } catch (const ValidationError&) {
                    return false;
                }
            };
            st.psi.pairs[s] = outer_has(sa, h) ? std::make_pair(sa, h) : std::make_pair(h, sb);
            auto outer_has_t = [&](EdgeId a, EdgeId b) {
                try {
                    auto [fc, pos] = fs2.corner_of_pair(st.g, t, a, b);
                    (void)pos;
                    return fc == fs2.outer_face;
                } catch (const ValidationError&) {
                    return false;
                }
            };
            st.psi.pairs[t] = outer_has_t(ta, h) ? std::make_pair(ta, h) : std::make_pair(h, tb);
        }
        (void)fs;
    }

    // Subdivide every arc once: the result has no transitive edges.
    const int n0 = st.g.num_vertices();
    const int a0 = st.g.num_edges();
    BiposetGraph sub;
    sub.vertex_names.resize(n0 + a0);
    sub.edge_names.resize(2 * a0);
    sub.edges.resize(2 * a0);
    Rotation srot(n0 + a0);
    for (EdgeId a = 0; a < a0; ++a) {
        VertexId mid = n0 + a;
        sub.edges[2 * a] = Edge{st.g.edges[a].tail, mid, false, true};
        sub.edges[2 * a + 1] = Edge{mid, st.g.edges[a].head, false, true};
        srot[mid] = {2 * a, 2 * a + 1};
    }
    for (VertexId v = 0; v < n0; ++v)
        for (EdgeId a : st.rot[v]) srot[v].push_back(st.g.edges[a].tail == v ? 2 * a : 2 * a + 1);
    Dart souter = st.outer.forward() ? Dart(2 * st.outer.edge(), true)
                                     : Dart(2 * st.outer.edge() + 1, false);
    FaceStructure fs = trace_faces(sub, srot, souter);

    // Left-of arcs from each face's two chains.
    const int N = n0 + a0;
    std::vector<std::pair<VertexId, VertexId>> left_arcs;
    for (std::int32_t f = 0; f < fs.num_faces(); ++f) {
        const auto& walk = fs.faces[f];
        const int len = static_cast<int>(walk.size());
        int start = -1;  // valley corner: both edges outgoing at the vertex
        for (int i = 0; i < len && start < 0; ++i) {
            const Corner& c = fs.corners[f][i];
            if (sub.is_tail(c.arrive.edge(), c.vertex) && sub.is_tail(c.leave.edge(), c.vertex))
                start = i;
        }
        assert(start >= 0);
        std::vector<VertexId> with_chain, against_chain;
        for (int k = 0; k < len; ++k) {
            Dart dd = walk[(start + k) % len];
            (dd.forward() ? with_chain : against_chain).push_back(dart_head(sub, dd));
        }
        // Interior vertices only (drop the face's top from the first chain
        // and the bottom from the second).
        if (!with_chain.empty()) with_chain.pop_back();
        if (!against_chain.empty()) against_chain.pop_back();
        for (VertexId l : (f == fs.outer_face ? with_chain : against_chain))
            for (VertexId r : (f == fs.outer_face ? against_chain : with_chain))
                left_arcs.push_back({l, r});
    }

    auto topo_rank = [&](bool left_forward) {
        std::vector<std::vector<VertexId>> adj(N);
        std::vector<int> indeg(N, 0);
        for (const Edge& e : sub.edges) {
            adj[e.tail].push_back(e.head);
            indeg[e.head]++;
        }
        for (auto [l, r] : left_arcs) {
            VertexId a = left_forward ? l : r, b = left_forward ? r : l;
            adj[a].push_back(b);
            indeg[b]++;
        }
        std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> q;
        for (VertexId v = 0; v < N; ++v)
            if (indeg[v] == 0) q.push(v);
        std::vector<int> rank(N, -1);
        int cnt = 0;
        while (!q.empty()) {
            VertexId v = q.top();
            q.pop();
            rank[v] = cnt++;
            for (VertexId w : adj[v])
                if (--indeg[w] == 0) q.push(w);
        }
        if (cnt != N) throw std::logic_error("left-of relation is cyclic");
        return rank;
    };
    std::vector<int> xr = topo_rank(true), yr = topo_rank(false);

    BaseDrawing out;
    out.pos.resize(N);
    for (VertexId v = 0; v < N; ++v) out.pos[v] = Point{Rat(xr[v]), Rat(yr[v])};
    out.mid_of.resize(a0);
    for (EdgeId a = 0; a < a0; ++a) out.mid_of[a] = n0 + a;
    // Every subdivided arc must ascend in both coordinates.
    for (const Edge& e : sub.edges)
        if (!(out.pos[e.head].x > out.pos[e.tail].x && out.pos[e.head].y > out.pos[e.tail].y))
            throw std::logic_error("dominance ranks not strictly increasing along an arc");
    return out;
}

// ---------------------------------------------------------------------------
// The split-and-shift round reinstating one NW edge.
// ---------------------------------------------------------------------------

// All drawing points except e's own polyline interior.
template <typename Fn>
void for_each_point(const PolylineDrawing& dr, EdgeId skip_edge, Fn&& fn) {
    for (std::size_t v = 0; v < dr.vertex_pos.size(); ++v) fn(dr.vertex_pos[v]);
    for (std::size_t e = 0; e < dr.edge_points.size(); ++e) {
        if (static_cast<EdgeId>(e) == skip_edge) continue;
        const auto& poly = dr.edge_points[e];
        for (std::size_t i = 1; i + 1 < poly.size(); ++i) fn(poly[i]);
    }
}

// Shears x' = x + sigma*y so that no drawing point shares an x-coordinate
// with another; preserves labels, planarity and all induced orders.
void ensure_distinct_x(const BiposetGraph& g, const std::vector<EdgeLabel>& labels,
                       PolylineDrawing& dr) {
    (void)g;
    auto has_collision = [&]() {
        std::vector<Rat> xs;
        for (const Point& p : dr.vertex_pos) xs.push_back(p.x);
        for (const auto& poly : dr.edge_points)
            for (std::size_t i = 1; i + 1 < poly.size(); ++i) xs.push_back(poly[i].x);
        std::sort(xs.begin(), xs.end());
        return std::adjacent_find(xs.begin(), xs.end()) != xs.end();
    };
    if (!has_collision()) return;
    // Largest safe shear: every segment must keep its x direction.
    Rat bound(1, 2);
    for (std::size_t e = 0; e < dr.edge_points.size(); ++e) {
        if (labels[e] != EdgeLabel::NW) continue;
        const auto& poly = dr.edge_points[e];
        for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
            Rat dx = poly[i + 1].x - poly[i].x, dy = poly[i + 1].y - poly[i].y;
            bound = std::min(bound, Rat(-dx / dy / 2));
        }
    }
    assert(bound > 0);
    Rat sigma = bound;
    for (int tries = 0; tries < 64; ++tries) {
        PolylineDrawing trial = dr;
        for (Point& p : trial.vertex_pos) p.x += sigma * p.y;
        for (auto& poly : trial.edge_points)
            for (Point& p : poly) p.x += sigma * p.y;
        std::swap(trial, dr);
        if (!has_collision()) return;
        std::swap(trial, dr);
        sigma /= 3;
    }
    throw std::logic_error("could not shear to general position");
}

void shift_reinstate(const DerivedGraph& d, const std::vector<EdgeLabel>& stage_labels,
                     PolylineDrawing& dr, EdgeId e) {
    const BiposetGraph& g = d.star;
    const VertexId uu = g.edges[e].tail, vv = g.edges[e].head;
    assert(dr.vertex_pos[uu].y < dr.vertex_pos[vv].y);

    // Clearance radius around an endpoint: Chebyshev distance to everything
    // not incident there (and not on e, which is redrawn anyway).
    auto clearance = [&](VertexId z, const Point& Z) {
        Rat best = -1;
        auto upd = [&](const Rat& c) {
            if (best < 0 || c < best) best = c;
        };
        for (std::size_t v = 0; v < dr.vertex_pos.size(); ++v)
            if (static_cast<VertexId>(v) != z)
                upd(std::max(abs(dr.vertex_pos[v].x - Z.x), abs(dr.vertex_pos[v].y - Z.y)));
        for (EdgeId f = 0; f < g.num_edges(); ++f) {
            if (f == e) continue;
            bool inc = g.edges[f].tail == z || g.edges[f].head == z;
            const auto& poly = dr.edge_points[f];
            for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
                if (inc) {
                    // Bends of incident edges still bound the box.
                    for (std::size_t k = 1; k + 1 < poly.size(); ++k)
                        upd(std::max(abs(poly[k].x - Z.x), abs(poly[k].y - Z.y)));
                    continue;
                }
                upd(cheb_distance_point_segment(Z, poly[i], poly[i + 1]));
            }
        }
        assert(best > 0);
        return best;
    };

    ensure_distinct_x(g, stage_labels, dr);
    const Point U2 = dr.vertex_pos[uu], V2 = dr.vertex_pos[vv];
    const auto ep = dr.edge_points[e];

    Rat fu = (ep[1].x - U2.x) / (ep[1].y - U2.y);
    Rat fv = (V2.x - ep[ep.size() - 2].x) / (V2.y - ep[ep.size() - 2].y);
    Rat eps = std::min({Rat(clearance(uu, U2) / (2 * std::max(Rat(1), fu))),
                        Rat(clearance(vv, V2) / (2 * std::max(Rat(1), fv))),
                        Rat((V2.y - U2.y) / 4), Rat((ep[1].y - U2.y) / 2),
                        Rat((V2.y - ep[ep.size() - 2].y) / 2)});
    assert(eps > 0);

    Rat maxx = U2.x;
    for_each_point(dr, e, [&](const Point& p) { maxx = std::max(maxx, p.x); });
    const Rat Delta = maxx - U2.x + 1;

    // Side of the split curve: below u's box it runs at x = U2.x, above v's
    // box at x = V2.x, between them along e.
    auto side_right = [&](const Point& p) {
        if (p.y < U2.y - eps) return p.x > U2.x;
        if (p.y <= U2.y + eps) {
            assert(p.x < U2.x - eps || p.x > U2.x || p == U2);
            return p.x > U2.x;
        }
        if (p.y < V2.y - eps) {
            // x of e at this height
            for (std::size_t i = 0; i + 1 < ep.size(); ++i)
                if (ep[i].y <= p.y && p.y <= ep[i + 1].y)
                    return p.x > x_at_y(ep[i], ep[i + 1], p.y);
            assert(false);
            return false;
        }
        if (p.y <= V2.y + eps) {
            assert(p.x < V2.x || p.x > V2.x + eps || p == V2);
            return p.x > V2.x;
        }
        return p.x > V2.x;
    };

    // Ray crossings (for the jog tilt budget).
    Rat delta_budget = eps / 2;
    std::vector<Rat> lower_heights, upper_heights;
    for (EdgeId f = 0; f < g.num_edges(); ++f) {
        if (f == e) continue;
        const auto& poly = dr.edge_points[f];
        for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
            const Point &A = poly[i], &B = poly[i + 1];
            if (std::min(A.x, B.x) < U2.x && U2.x < std::max(A.x, B.x)) {
                Rat yc = A.y + (B.y - A.y) * (U2.x - A.x) / (B.x - A.x);
                if (yc < U2.y - eps) lower_heights.push_back(yc);
            }
            if (std::min(A.x, B.x) < V2.x && V2.x < std::max(A.x, B.x)) {
                Rat yc = A.y + (B.y - A.y) * (V2.x - A.x) / (B.x - A.x);
                if (yc > V2.y + eps) upper_heights.push_back(yc);
            }
        }
    }
    for (auto* hs : {&lower_heights, &upper_heights}) {
        std::sort(hs->begin(), hs->end());
        for (std::size_t i = 0; i + 1 < hs->size(); ++i)
            delta_budget = std::min(delta_budget, Rat(((*hs)[i + 1] - (*hs)[i]) / 4));
    }

    PolylineDrawing out = dr;
    // Vertices.
    for (std::size_t v = 0; v < dr.vertex_pos.size(); ++v) {
        if (static_cast<VertexId>(v) == uu) {
            out.vertex_pos[v] = Point{U2.x + Delta, U2.y};
        } else if (static_cast<VertexId>(v) == vv) {
            out.vertex_pos[v] = V2;
        } else {
            out.vertex_pos[v] = side_right(dr.vertex_pos[v])
                                    ? Point{dr.vertex_pos[v].x + Delta, dr.vertex_pos[v].y}
                                    : dr.vertex_pos[v];
        }
    }

    auto box_exit = [&](const Point& Z, const Point& A, const Point& B, bool left_box) {
        // First intersection of segment A->B (A == Z) with the half-box of
        // radius eps on the given side of Z.
        Rat best_t = 2;
        Point hit;
        auto consider = [&](bool vertical, const Rat& coord, const Rat& lo, const Rat& hi) {
            Rat denom = vertical ? B.x - A.x : B.y - A.y;
            if (denom == 0) return;
            Rat tt = (coord - (vertical ? A.x : A.y)) / denom;
            if (tt <= 0 || tt > 1) return;
            Point q{A.x + tt * (B.x - A.x), A.y + tt * (B.y - A.y)};
            Rat other = vertical ? q.y : q.x;
            if (other < lo || other > hi) return;
            if (tt < best_t) {
                best_t = tt;
                hit = q;
            }
        };
        if (left_box) {
            consider(true, Z.x - eps, Z.y - eps, Z.y + eps);   // west side
            consider(false, Z.y - eps, Z.x - eps, Z.x);        // south
            consider(false, Z.y + eps, Z.x - eps, Z.x);        // north
        } else {
            consider(true, Z.x + eps, Z.y - eps, Z.y + eps);
            consider(false, Z.y - eps, Z.x, Z.x + eps);
            consider(false, Z.y + eps, Z.x, Z.x + eps);
        }
        assert(best_t <= 1);
        return hit;
    };

    // Edges.
    for (EdgeId f = 0; f < g.num_edges(); ++f) {
        if (f == e) {
            out.edge_points[f] = {Point{U2.x + Delta, U2.y}, V2};
            continue;
        }
        const auto& poly = dr.edge_points[f];
        const std::size_t last = poly.size() - 1;
        // Endpoint-adjacent segments of edges incident to u or v are rebuilt
        // by the box surgery; their side flips must not trigger a jog.
        auto endpoint_pair = [&](std::size_t i) {
            if (i == 1 && (poly[0] == U2 || poly[0] == V2)) return true;
            if (i == last && (poly[last] == U2 || poly[last] == V2)) return true;
            return false;
        };
        std::vector<Point> np;
        std::vector<bool> right(poly.size());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Point& p = poly[i];
            if (p == U2 && (g.edges[f].tail == uu || g.edges[f].head == uu) &&
                (i == 0 || i + 1 == poly.size()))
                right[i] = true;  // u moves right with the shift
            else
                right[i] = side_right(p);
        }
        for (std::size_t i = 0; i < poly.size(); ++i) {
            Point tp = right[i] ? Point{poly[i].x + Delta, poly[i].y} : poly[i];
            if (i > 0 && right[i] != right[i - 1] && !endpoint_pair(i)) {
                // Jog across whichever ray this segment crosses.
                const Point &A = poly[i - 1], &B = poly[i];
                Rat rx;
                if (std::min(A.x, B.x) < U2.x && U2.x < std::max(A.x, B.x)) {
                    Rat yc = A.y + (B.y - A.y) * (U2.x - A.x) / (B.x - A.x);
                    rx = (yc < U2.y) ? U2.x : V2.x;
                } else {
                    rx = V2.x;
                }
                Rat yc = A.y + (B.y - A.y) * (rx - A.x) / (B.x - A.x);
                bool ascending = B.y > A.y;
                Rat tilt = std::min(delta_budget, Rat(abs(B.y - yc) / 2));
                if (!ascending) tilt = -tilt;
                Point b1{right[i - 1] ? rx + Delta : rx, yc};
                Point b2{right[i] ? rx + Delta : rx, yc + tilt};
                np.push_back(b1);
                np.push_back(b2);
            }
            np.push_back(tp);
        }
        // Endpoint surgery at u and v.
        auto surgery = [&](VertexId z, const Point& Zold, const Point& Znew, bool left_box) {
            bool at_tail = g.edges[f].tail == z;
            bool at_head = g.edges[f].head == z;
            if (!at_tail && !at_head) return;
            // Work on the end adjacent to z.
            std::vector<Point> work = np;
            bool flipped = false;
            if (at_head) {
                std::reverse(work.begin(), work.end());
                flipped = true;
            }
            // The original first segment away from z.
            const Point A = Zold;
            const Point B = at_tail ? poly[1] : poly[poly.size() - 2];
            bool heads_left = B.x < A.x;
            if (heads_left == left_box) {
                Point X = box_exit(Zold, A, B, left_box);
                // Replace the leading point with Znew plus the box exit bend.
                Point xbend = left_box ? X : Point{X.x + Delta, X.y};
                work.erase(work.begin());
                work.insert(work.begin(), xbend);
                work.insert(work.begin(), Znew);
            } else {
                work[0] = Znew;
            }
            if (flipped) std::reverse(work.begin(), work.end());
            np = work;
        };
        if (g.edges[f].tail == uu || g.edges[f].head == uu)
            surgery(uu, U2, Point{U2.x + Delta, U2.y}, true);
        if (g.edges[f].tail == vv || g.edges[f].head == vv) surgery(vv, V2, V2, false);
        out.edge_points[f] = np;
    }
    dr = std::move(out);
}

// Dyadic snapping to keep coordinate bit-lengths bounded across rounds.
void try_snap(const DerivedGraph& d, const std::vector<EdgeLabel>& labels, PolylineDrawing& dr) {
    DerivedGraph tmp = d;
    tmp.labels = labels;
    for (unsigned k : {16u, 24u, 32u, 48u, 64u}) {
        PolylineDrawing snapped = dr;
        for (Point& p : snapped.vertex_pos) {
            p.x = dyadic_round(p.x, k);
            p.y = dyadic_round(p.y, k);
        }
        for (std::size_t e = 0; e < snapped.edge_points.size(); ++e) {
            auto& poly = snapped.edge_points[e];
            for (Point& p : poly) {
                p.x = dyadic_round(p.x, k);
                p.y = dyadic_round(p.y, k);
            }
            poly.front() = snapped.vertex_pos[tmp.star.edges[e].tail];
            poly.back() = snapped.vertex_pos[tmp.star.edges[e].head];
        }
        if (validate_windrose_drawing(tmp, snapped).ok) {
            dr = std::move(snapped);
            return;
        }
    }
}

}  // namespace

PolylineDrawing draw_windrose(const DerivedGraph& d) {
    const BiposetGraph& g = d.star;
    PolylineDrawing dr;
    dr.vertex_pos.resize(g.num_vertices(), Point{Rat(0), Rat(0)});
    dr.edge_points.resize(g.num_edges());
    if (g.num_edges() == 0) return dr;

    // Relabel order: repeatedly clear an NW edge whose dependency-graph
    // predecessors are all NW and successors all NE.
    EdgeDependencyGraph dep = build_dependency_graph(d.upward, d.labels);
    if (!dep.acyclic) throw std::logic_error("edge dependency graph has a cycle");
    std::vector<std::vector<EdgeId>> preds(g.num_edges()), succs(g.num_edges());
    for (auto [a, b] : dep.arcs) {
        succs[a].push_back(b);
        preds[b].push_back(a);
    }
    std::vector<EdgeLabel> cur = d.labels;
    std::vector<EdgeId> order;
    while (true) {
        EdgeId pick = -1;
        for (EdgeId f = 0; f < g.num_edges() && pick < 0; ++f) {
            if (cur[f] != EdgeLabel::NW) continue;
            bool ok = true;
            for (EdgeId q : preds[f]) ok &= cur[q] == EdgeLabel::NW;
            for (EdgeId q : succs[f]) ok &= cur[q] == EdgeLabel::NE;
            if (ok) pick = f;
        }
        if (pick < 0) break;
        order.push_back(pick);
        cur[pick] = EdgeLabel::NE;
    }
    for (EdgeId f = 0; f < g.num_edges(); ++f)
        if (cur[f] != EdgeLabel::NE)
            throw std::logic_error("relabeling did not reach the all-NE graph");

    // Base drawing of the all-NE graph.
    AugState st;
    st.g = g;
    st.rot = d.rotation;
    st.psi = d.psi;
    st.outer = d.outer;
    saturate(st);
    BaseDrawing base = dominance_coordinates(st);
    for (VertexId v = 0; v < g.num_vertices(); ++v) dr.vertex_pos[v] = base.pos[v];
    for (EdgeId f = 0; f < g.num_edges(); ++f) {
        dr.edge_points[f] = {base.pos[g.edges[f].tail], base.pos[base.mid_of[f]],
                             base.pos[g.edges[f].head]};
    }
    {
        DerivedGraph allne = d;
        allne.labels.assign(g.num_edges(), EdgeLabel::NE);
        DrawReport rep = validate_windrose_drawing(allne, dr);
        if (!rep.ok)
            throw std::logic_error("base drawing failed validation: " + rep.violations[0]);
    }

    // Reinstate the NW edges in reverse relabel order.
    std::vector<EdgeLabel> labels(g.num_edges(), EdgeLabel::NE);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
#ifdef XYPLANAR_DRAW_DEBUG
        PolylineDrawing before = dr;
#endif
        shift_reinstate(d, labels, dr, *it);  // e is still drawn NE here
        labels[*it] = EdgeLabel::NW;
        DerivedGraph stage = d;
        stage.labels = labels;
        DrawReport rep = validate_windrose_drawing(stage, dr);
        if (!rep.ok) {
#ifdef XYPLANAR_DRAW_DEBUG
            fprintf(stderr, "FAILED reinstating edge %d\n", *it);
            auto dump = [&](const PolylineDrawing& dd, const char* tag) {
                fprintf(stderr, "--- %s\n", tag);
                for (std::size_t ee = 0; ee < dd.edge_points.size(); ++ee) {
                    fprintf(stderr, "edge %zu [%s]:", ee, to_string(labels[ee]));
                    for (const Point& pt : dd.edge_points[ee])
                        fprintf(stderr, " (%s,%s)", pt.x.get_str().c_str(), pt.y.get_str().c_str());
                    fprintf(stderr, "\n");
                }
            };
            dump(before, "before");
            dump(dr, "after");
#endif
            throw std::logic_error("shift round failed validation: " + rep.violations[0]);
        }
        try_snap(d, labels, dr);
    }
    return dr;
}

PolylineDrawing windrose_to_xy(const PreparedInstance& p, const DerivedGraph& d,
                               const PolylineDrawing& star_drawing) {
    const BiposetGraph& g = p.graph();
    PolylineDrawing out;
    out.vertex_pos.assign(star_drawing.vertex_pos.begin(),
                          star_drawing.vertex_pos.begin() + g.num_vertices());
    out.edge_points.resize(g.num_edges());
    const auto& cat = gadget_catalog();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Gadget& gd = cat[d.gadget[e]];
        std::vector<Point> a = star_drawing.edge_points[2 * e];
        std::vector<Point> b = star_drawing.edge_points[2 * e + 1];
        if (!gd.g1_from_u) std::reverse(a.begin(), a.end());  // orient u -> w
        if (!gd.g2_to_v) std::reverse(b.begin(), b.end());    // orient w -> v
        out.edge_points[e] = a;
        out.edge_points[e].insert(out.edge_points[e].end(), b.begin() + 1, b.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Grid oracle.
// ---------------------------------------------------------------------------

GridOracleResult straightline_grid_oracle(const BiposetGraph& g, int width, int height) {
    GridOracleResult res;
    const int n = g.num_vertices();
    if (n > 7 || width > 6 || height > 6) return res;
    res.decided = true;
    const int cells = width * height;
    if (n == 0) {
        res.found = true;
        return res;
    }

    // Most-constrained-first: vertices by descending degree.
    std::vector<int> deg(n, 0);
    for (const Edge& e : g.edges) {
        deg[e.tail]++;
        deg[e.head]++;
    }
    std::vector<VertexId> vorder(n);
    for (VertexId v = 0; v < n; ++v) vorder[v] = v;
    std::sort(vorder.begin(), vorder.end(),
              [&](VertexId a, VertexId b) { return deg[a] != deg[b] ? deg[a] > deg[b] : a < b; });
    std::vector<int> vrank(n);
    for (int i = 0; i < n; ++i) vrank[vorder[i]] = i;

    std::vector<std::pair<int, int>> pos(n);
    std::vector<bool> used(cells, false);
    // Edges checkable once both endpoints are placed, keyed by the later rank.
    std::vector<std::vector<EdgeId>> ready(n);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        ready[std::max(vrank[g.edges[e].tail], vrank[g.edges[e].head])].push_back(e);

    auto seg_cross = [&](EdgeId e1, EdgeId e2) {
        auto pt = [&](VertexId v) {
            return Point{Rat(pos[v].first), Rat(pos[v].second)};
        };
        const Edge &a = g.edges[e1], &b = g.edges[e2];
        SegCross sc = segment_intersection(pt(a.tail), pt(a.head), pt(b.tail), pt(b.head));
        if (sc == SegCross::None) return false;
        if (sc == SegCross::Touch) {
            bool share = a.tail == b.tail || a.tail == b.head || a.head == b.tail ||
                         a.head == b.head;
            if (share) {
                // Must touch exactly at the shared endpoint; a Touch at any
                // other point means one endpoint lies inside the other edge.
                VertexId s = (a.tail == b.tail || a.tail == b.head) ? a.tail : a.head;
                Point sp = pt(s);
                // Check no other endpoint sits on the opposite segment.
                for (VertexId w : {a.tail, a.head}) {
                    if (w == s) continue;
                    if (orientation(pt(b.tail), pt(b.head), pt(w)) == 0 &&
                        std::min(pos[b.tail].first, pos[b.head].first) <= pos[w].first &&
                        pos[w].first <= std::max(pos[b.tail].first, pos[b.head].first) &&
                        std::min(pos[b.tail].second, pos[b.head].second) <= pos[w].second &&
                        pos[w].second <= std::max(pos[b.tail].second, pos[b.head].second))
                        return true;
                }
                for (VertexId w : {b.tail, b.head}) {
                    if (w == s) continue;
                    if (orientation(pt(a.tail), pt(a.head), pt(w)) == 0 &&
                        std::min(pos[a.tail].first, pos[a.head].first) <= pos[w].first &&
                        pos[w].first <= std::max(pos[a.tail].first, pos[a.head].first) &&
                        std::min(pos[a.tail].second, pos[a.head].second) <= pos[w].second &&
                        pos[w].second <= std::max(pos[a.tail].second, pos[a.head].second))
                        return true;
                }
                (void)sp;
                return false;
            }
            return true;
        }
        return true;  // Proper or Overlap
    };

    std::function<bool(int)> dfs = [&](int idx) -> bool {
        if (idx == n) {
            ++res.placements_tried;
            return true;
        }
        VertexId v = vorder[idx];
        for (int c = 0; c < cells; ++c) {
            if (used[c]) continue;
            pos[v] = {c % width, c / width};
            bool ok = true;
            for (EdgeId e : ready[idx]) {
                const Edge& ed = g.edges[e];
                if (ed.in_x && !(pos[ed.tail].first < pos[ed.head].first)) ok = false;
                if (ok && ed.in_y && !(pos[ed.tail].second < pos[ed.head].second)) ok = false;
                if (!ok) break;
            }
            // Crossing checks against fully placed edges.
            for (std::size_t i = 0; ok && i < ready[idx].size(); ++i)
                for (int r = 0; ok && r <= idx; ++r)
                    for (EdgeId e2 : ready[r]) {
                        if (e2 == ready[idx][i]) continue;
                        if (seg_cross(ready[idx][i], e2)) ok = false;
                        if (!ok) break;
                    }
            if (ok) {
                used[c] = true;
                if (dfs(idx + 1)) return true;
                used[c] = false;
            }
        }
        return false;
    };
    res.found = dfs(0);
    return res;
}

// ---------------------------------------------------------------------------
// Serialization.
// ---------------------------------------------------------------------------

std::string drawing_to_json(const PreparedInstance& p, const PolylineDrawing& drawing) {
    using nlohmann::json;
    const BiposetGraph& g = p.graph();
    json j;
    json verts = json::object();
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        verts[g.vertex_names[v]] = {rat_to_string(drawing.vertex_pos[v].x),
                                    rat_to_string(drawing.vertex_pos[v].y)};
    j["vertices"] = verts;
    json edges = json::object();
    int max_bends = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        json pts = json::array();
        for (const Point& pt : drawing.edge_points[e])
            pts.push_back({rat_to_string(pt.x), rat_to_string(pt.y)});
        edges[g.edge_names[e]] = pts;
        max_bends = std::max(max_bends, drawing.bends(e));
    }
    j["edges"] = edges;
    j["stats"] = {{"max_bends_per_edge", max_bends},
                  {"max_coordinate_bits", drawing.max_coordinate_bits()}};
    return j.dump(2) + "\n";
}

PolylineDrawing drawing_from_json(const PreparedInstance& p, const std::string& text) {
    using nlohmann::json;
    const BiposetGraph& g = p.graph();
    json j = json::parse(text);
    PolylineDrawing dr;
    dr.vertex_pos.resize(g.num_vertices());
    dr.edge_points.resize(g.num_edges());
    auto vid = [&](const std::string& name) {
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            if (g.vertex_names[v] == name) return v;
        throw ValidationError("unknown vertex '" + name + "' in drawing");
    };
    auto eid = [&](const std::string& name) {
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            if (g.edge_names[e] == name) return e;
        throw ValidationError("unknown edge '" + name + "' in drawing");
    };
    for (auto it = j.at("vertices").begin(); it != j.at("vertices").end(); ++it)
        dr.vertex_pos[vid(it.key())] =
            Point{rat_from_string(it.value()[0]), rat_from_string(it.value()[1])};
    for (auto it = j.at("edges").begin(); it != j.at("edges").end(); ++it) {
        auto& poly = dr.edge_points[eid(it.key())];
        for (const auto& pt : it.value())
            poly.push_back(Point{rat_from_string(pt[0]), rat_from_string(pt[1])});
    }
    return dr;
}

std::string drawing_to_svg(const PreparedInstance& p, const PolylineDrawing& drawing) {
    const BiposetGraph& g = p.graph();
    Rat minx(0), miny(0), maxx(1), maxy(1);
    bool first = true;
    auto upd = [&](const Point& pt) {
        if (first) {
            minx = maxx = pt.x;
            miny = maxy = pt.y;
            first = false;
        }
        minx = std::min(minx, pt.x);
        maxx = std::max(maxx, pt.x);
        miny = std::min(miny, pt.y);
        maxy = std::max(maxy, pt.y);
    };
    for (const Point& pt : drawing.vertex_pos) upd(pt);
    for (const auto& poly : drawing.edge_points)
        for (const Point& pt : poly) upd(pt);
    double w = std::max(1.0, Rat(maxx - minx).get_d());
    double h = std::max(1.0, Rat(maxy - miny).get_d());
    const double scale = 640.0 / std::max(w, h);
    auto X = [&](const Rat& x) { return Rat(x - minx).get_d() * scale + 40; };
    auto Y = [&](const Rat& y) { return Rat(maxy - y).get_d() * scale + 40; };  // y grows upward

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (w * scale + 80)
        << "\" height=\"" << (h * scale + 80) << "\">\n";
    svg << "<style>.x{stroke:#c0392b;} .y{stroke:#2c3e50;} .xy{stroke:#8e44ad;}\n"
        << "polyline{fill:none;stroke-width:1.5;} text{font:10px sans-serif;}</style>\n";
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edges[e];
        const char* cls = ed.in_x && ed.in_y ? "xy" : ed.in_x ? "x" : "y";
        svg << "<polyline class=\"" << cls << "\" points=\"";
        for (const Point& pt : drawing.edge_points[e]) svg << X(pt.x) << "," << Y(pt.y) << " ";
        svg << "\"><title>" << g.edge_names[e] << "</title></polyline>\n";
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        svg << "<circle cx=\"" << X(drawing.vertex_pos[v].x) << "\" cy=\""
            << Y(drawing.vertex_pos[v].y) << "\" r=\"3\" fill=\"#000\"/>\n";
        svg << "<text x=\"" << X(drawing.vertex_pos[v].x) + 5 << "\" y=\""
            << Y(drawing.vertex_pos[v].y) - 5 << "\">" << g.vertex_names[v] << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace xyplanar
