#include "xyplanar/gadgets.h"

#include <algorithm>
#include <cassert>

namespace xyplanar {

namespace {
using WR = Gadget::WRole;

Gadget make_gadget(int idx, bool hx, bool hy, bool g1fu, bool g2tv, EdgeLabel l1, EdgeLabel l2,
                   WR role) {
    Gadget g;
    g.index = idx;
    g.in_hx = hx;
    g.in_hy = hy;
    g.g1_from_u = g1fu;
    g.g2_to_v = g2tv;
    g.l1 = l1;
    g.l2 = l2;
    g.w_role = role;
    g.quad_u = g1fu ? quadrant_at_tail(l1) : quadrant_at_head(l1);
    g.quad_v = g2tv ? quadrant_at_head(l2) : quadrant_at_tail(l2);
    return g;
}
}  // namespace

const char* Gadget::name() const {
    static const char* names[8] = {"Hx1", "Hx2", "Hx3", "Hx4", "Hy1", "Hy2", "Hy3", "Hy4"};
    return names[index];
}

const std::array<Gadget, 8>& gadget_catalog() {
    static const std::array<Gadget, 8> cat = {
        // Hx shapes: u->w/w->v orientations per the x-monotone traversal.
        make_gadget(0, true, true, true, true, EdgeLabel::NE, EdgeLabel::NE, WR::Inner),
        make_gadget(1, true, false, true, false, EdgeLabel::NE, EdgeLabel::NW, WR::Sink),
        make_gadget(2, true, false, false, true, EdgeLabel::NW, EdgeLabel::NE, WR::Source),
        make_gadget(3, true, false, false, false, EdgeLabel::NW, EdgeLabel::NW, WR::Inner),
        // Hy shapes: always the path u->w->v, labels free.
        make_gadget(4, true, true, true, true, EdgeLabel::NE, EdgeLabel::NE, WR::Inner),
        make_gadget(5, false, true, true, true, EdgeLabel::NE, EdgeLabel::NW, WR::Inner),
        make_gadget(6, false, true, true, true, EdgeLabel::NW, EdgeLabel::NE, WR::Inner),
        make_gadget(7, false, true, true, true, EdgeLabel::NW, EdgeLabel::NW, WR::Inner),
    };
    return cat;
}

const Gadget* gadget_from_quadrants(Quadrant at_u, Quadrant at_v) {
    for (const Gadget& g : gadget_catalog())
        if (g.quad_u == at_u && g.quad_v == at_v) return &g;
    return nullptr;
}

namespace {

// ---------------------------------------------------------------------------
// Fast candidate test.
// ---------------------------------------------------------------------------

// Count over the cyclic half-open corner range [s, t).
int range_count(const std::vector<int>& cum, int s, int t) {
    const int len = static_cast<int>(cum.size()) - 1;
    s %= len;
    t %= len;
    if (s <= t) return cum[t] - cum[s];
    return cum[len] - cum[s] + cum[t];
}

bool in_cyclic_range(int x, int s, int t, int len) {  // x ∈ [s, t) cyclically
    if (s <= t ? (x >= s && x < t) : (x >= s || x < t)) return true;
    return false;
}

enum class YStatus { Inner, Sink, Source };

YStatus y_status(const UpwardEmbedding& u, VertexId v) {
    if (u.is_sink(v)) return YStatus::Sink;
    if (u.is_source(v)) return YStatus::Source;
    return YStatus::Inner;
}

// Whether a half-edge of the given direction may attach inside the corner at
// all, per the fixed rotation and the special placement rules.
bool placement_valid(const PreparedInstance& p, VertexId z, std::int32_t face, std::int32_t pos,
                     bool out_h) {
    const BiposetGraph& g = p.graph();
    const Corner& c = p.fs_y.corners[face][pos];
    bool arrive_out = g.is_tail(c.arrive.edge(), z);
    bool leave_out = g.is_tail(c.leave.edge(), z);
    switch (y_status(p.inst.upward_y, z)) {
        case YStatus::Inner:
            if (out_h) return arrive_out || leave_out;
            return !(arrive_out && leave_out);
        case YStatus::Sink:
            if (!out_h) return true;
            return p.psi_corner[z] && *p.psi_corner[z] == std::make_pair(face, pos);
        case YStatus::Source:
            if (out_h) return true;
            return p.psi_corner[z] && *p.psi_corner[z] == std::make_pair(face, pos);
    }
    return false;
}

}  // namespace

CandidateSets compute_candidate_sets(const PreparedInstance& p) {
    const BiposetGraph& g = p.graph();
    const auto& cat = gadget_catalog();
    CandidateSets H(g.num_edges(), {false, false, false, false});
    const std::int32_t y_outer_face = p.fs_y.outer_face;

    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!g.edges[e].in_x || g.edges[e].in_y) continue;
        const auto& ip = *p.insert_points[e];
        const std::int32_t f = ip.face;
        const VertexId u = g.edges[e].tail, v = g.edges[e].head;
        const int len = static_cast<int>(p.fs_y.faces[f].size());
        const int a = ip.corner_u, b = ip.corner_v;
        const Corner& cu = p.fs_y.corners[f][a];
        const Corner& cv = p.fs_y.corners[f][b];
        const bool au_out = g.is_tail(cu.arrive.edge(), u);
        const bool bu_out = g.is_tail(cu.leave.edge(), u);
        const bool av_out = g.is_tail(cv.arrive.edge(), v);
        const bool bv_out = g.is_tail(cv.leave.edge(), v);
        const bool f_outer = (f == y_outer_face);
        const int outer_pos = f_outer ? p.fs_y.dart_pos[p.y_outer.code] : -1;
        const bool u_psi_here =
            p.psi_corner[u] && *p.psi_corner[u] == std::make_pair(f, static_cast<std::int32_t>(a));
        const bool v_psi_here =
            p.psi_corner[v] && *p.psi_corner[v] == std::make_pair(f, static_cast<std::int32_t>(b));
        const YStatus su = y_status(p.inst.upward_y, u);
        const YStatus sv = y_status(p.inst.upward_y, v);

        for (int gi = 0; gi < 4; ++gi) {
            const Gadget& gd = cat[gi];
            const bool out_u = gd.half_edge_out_at_u();
            const bool out_v = gd.half_edge_out_at_v();
            if (!placement_valid(p, u, f, a, out_u)) continue;
            if (!placement_valid(p, v, f, b, out_v)) continue;

            // Face-source counts of the two split sides. Side 1 keeps the
            // boundary darts [a, b), side 2 keeps [b, a); the gadget path
            // closes each walk through w.
            const int w_src = (!out_u && !out_v) ? 1 : 0;
            int n1 = range_count(p.cum_src[f], a + 1, b);
            n1 += (av_out && out_v) ? 1 : 0;  // new corner at v on side 1
            n1 += w_src;
            n1 += (out_u && bu_out) ? 1 : 0;  // new corner at u on side 1
            int n2 = range_count(p.cum_src[f], b + 1, a);
            n2 += (au_out && out_u) ? 1 : 0;
            n2 += w_src;
            n2 += (out_v && bv_out) ? 1 : 0;

            int asn1 = range_count(p.cum_asn[f], a + 1, b);
            int asn2 = range_count(p.cum_asn[f], b + 1, a);
            // ψ updates at the endpoints: an incoming half-edge placed in a
            // sink's assignment corner re-points the sink to side 1, an
            // outgoing one at a source re-points to side 2.
            if (su == YStatus::Sink && !out_u && u_psi_here) asn1 += 1;
            if (su == YStatus::Source && out_u && u_psi_here) asn2 += 1;
            if (sv == YStatus::Sink && !out_v && v_psi_here) asn1 += 1;
            if (sv == YStatus::Source && out_v && v_psi_here) asn2 += 1;
            // w itself: a sink-w is assigned to the face above (side 2), a
            // source-w to the face below (side 1).
            if (out_u && out_v) asn2 += 1;
            if (!out_u && !out_v) asn1 += 1;

            bool side1_outer = f_outer && in_cyclic_range(outer_pos, a, b, len);
            bool side2_outer = f_outer && !side1_outer;
            bool ok1 = asn1 == n1 + (side1_outer ? 1 : -1);
            bool ok2 = asn2 == n2 + (side2_outer ? 1 : -1);
            H[e][gi] = ok1 && ok2;
        }
    }
    return H;
}

// ---------------------------------------------------------------------------
// Naive insertion (independent oracle for the fast path, and the building
// block of the brute-force pipeline oracle).
// ---------------------------------------------------------------------------

namespace {

struct PlaceOutcome {
    bool ok = false;
    std::string reason;
};

// Inserts half-edge h (direction out_h, flanked in ℰ by prevY/nextY) into z's
// upward lists, applying the special placement at source/sink corners.
// tail_side tells which endpoint of the X edge z is (the special rules use
// the leftmost position at the tail and the rightmost at the head).
PlaceOutcome place_half_edge(const BiposetGraph& g, UpwardEmbedding& up,
                             SinkSourceAssignment& psi, VertexId z, EdgeId h, bool out_h,
                             EdgeId prev_y, EdgeId next_y, bool tail_side) {
    PlaceOutcome r;
    auto fail = [&](const char* why) {
        r.reason = std::string(why) + " at vertex '" + g.vertex_names[z] + "'";
        return r;
    };
    auto& in = up.in[z];
    auto& out = up.out[z];
    const bool prev_out = g.is_tail(prev_y, z);
    const bool next_out = g.is_tail(next_y, z);
    const bool is_sink = out.empty() && !in.empty();
    const bool is_source = in.empty() && !out.empty();
    const bool psi_here = psi.pairs[z] && *psi.pairs[z] == std::make_pair(prev_y, next_y);

    auto insert_before = [](std::vector<EdgeId>& seq, EdgeId anchor, EdgeId h2) {
        auto it = std::find(seq.begin(), seq.end(), anchor);
        assert(it != seq.end());
        seq.insert(it, h2);
    };

    if (is_sink) {
        if (out_h) {
            if (!psi_here) return fail("outgoing half-edge outside the sink's assignment corner");
            out.push_back(h);
            psi.pairs[z].reset();
        } else if (psi_here) {
            if (tail_side) {
                EdgeId rightmost = in.back();
                in.insert(in.begin(), h);
                psi.pairs[z] = {rightmost, h};
            } else {
                EdgeId leftmost = in.front();
                in.push_back(h);
                psi.pairs[z] = {h, leftmost};
            }
        } else {
            insert_before(in, next_y, h);
        }
    } else if (is_source) {
        if (!out_h) {
            if (!psi_here) return fail("incoming half-edge outside the source's assignment corner");
            in.push_back(h);
            psi.pairs[z].reset();
        } else if (psi_here) {
            if (tail_side) {
                EdgeId rightmost = out.back();
                out.insert(out.begin(), h);
                psi.pairs[z] = {h, rightmost};
            } else {
                EdgeId leftmost = out.front();
                out.push_back(h);
                psi.pairs[z] = {leftmost, h};
            }
        } else {
            insert_before(out, prev_y, h);
        }
    } else {
        // Inner vertex: the half-edge must join its block without splitting
        // the other one.
        if (out_h) {
            if (!prev_out && !next_out) return fail("outgoing half-edge between two incoming edges");
            if (prev_out && next_out) insert_before(out, prev_y, h);
            else if (!prev_out && next_out) out.push_back(h);   // east gap: new rightmost
            else out.insert(out.begin(), h);                    // west gap: new leftmost
        } else {
            if (prev_out && next_out) return fail("incoming half-edge between two outgoing edges");
            if (!prev_out && !next_out) insert_before(in, next_y, h);
            else if (!prev_out && next_out) in.push_back(h);
            else in.insert(in.begin(), h);
        }
    }
    r.ok = true;
    return r;
}

}  // namespace

GadgetInsertion insert_gadget_upward(const PreparedInstance& p, EdgeId e, const Gadget& gd) {
    GadgetInsertion r;
    const BiposetGraph& g = p.graph();
    const int n = g.num_vertices();
    const int m = g.num_edges();
    const VertexId u = g.edges[e].tail, v = g.edges[e].head;
    if (!p.insert_points[e]) {
        r.reason = "edge is not an X\\Y edge";
        return r;
    }
    const auto& ip = *p.insert_points[e];
    const VertexId w = n;
    const EdgeId h_u = m, h_v = m + 1;

    r.graph = g;
    r.graph.vertex_names.push_back("w." + g.edge_names[e]);
    r.graph.edge_names.push_back(g.edge_names[e] + ".a");
    r.graph.edge_names.push_back(g.edge_names[e] + ".b");
    r.graph.edges.push_back(Edge{gd.g1_from_u ? u : w, gd.g1_from_u ? w : u, false, true});
    r.graph.edges.push_back(Edge{gd.g2_to_v ? w : v, gd.g2_to_v ? v : w, false, true});

    r.upward = p.inst.upward_y;
    r.upward.in.resize(n + 1);
    r.upward.out.resize(n + 1);
    r.psi = p.psi_y;
    r.psi.pairs.resize(n + 1);

    PlaceOutcome pu = place_half_edge(r.graph, r.upward, r.psi, u, h_u,
                                      gd.half_edge_out_at_u(), ip.prev_y_u, ip.next_y_u, true);
    if (!pu.ok) {
        r.reason = pu.reason;
        return r;
    }
    PlaceOutcome pv = place_half_edge(r.graph, r.upward, r.psi, v, h_v,
                                      gd.half_edge_out_at_v(), ip.prev_y_v, ip.next_y_v, false);
    if (!pv.ok) {
        r.reason = pv.reason;
        return r;
    }

    switch (gd.w_role) {
        case Gadget::WRole::Inner:
            if (gd.g1_from_u) {  // u->w->v
                r.upward.in[w] = {h_u};
                r.upward.out[w] = {h_v};
            } else {  // v->w->u
                r.upward.in[w] = {h_v};
                r.upward.out[w] = {h_u};
            }
            break;
        case Gadget::WRole::Sink:
            r.upward.in[w] = {h_u, h_v};  // NE arrives left of NW
            r.psi.pairs[w] = {h_v, h_u};  // the face above w
            break;
        case Gadget::WRole::Source:
            r.upward.out[w] = {h_u, h_v};  // NW leaves left of NE
            r.psi.pairs[w] = {h_u, h_v};   // the face below w
            break;
    }

    r.rotation = underlying_rotation(r.upward);
    r.ok = true;
    return r;
}

CandidateSets compute_candidate_sets_naive(const PreparedInstance& p) {
    const BiposetGraph& g = p.graph();
    const auto& cat = gadget_catalog();
    CandidateSets H(g.num_edges(), {false, false, false, false});
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!g.edges[e].in_x || g.edges[e].in_y) continue;
        for (int gi = 0; gi < 4; ++gi) {
            GadgetInsertion ins = insert_gadget_upward(p, e, cat[gi]);
            if (!ins.ok) continue;
            // Lemma precondition: the tested subgraph (Y plus the gadget)
            // must stay acyclic.
            BiposetGraph sub;
            sub.vertex_names = ins.graph.vertex_names;
            for (EdgeId k = 0; k < ins.graph.num_edges(); ++k)
                if (ins.graph.edges[k].in_y) {
                    sub.edge_names.push_back(ins.graph.edge_names[k]);
                    sub.edges.push_back(ins.graph.edges[k]);
                }
            if (!graph_is_acyclic(sub)) continue;
            UpwardCheck chk =
                check_upward_planar_embedding(ins.graph, ins.rotation, ins.psi, p.y_outer);
            H[e][gi] = chk.ok;
        }
    }
    return H;
}

// ---------------------------------------------------------------------------
// Derived graph construction.
// ---------------------------------------------------------------------------

namespace {

// Builds the upward lists of one original vertex from the cyclic quadrant
// sequence. Fails when the quadrants do not form one block per quadrant in
// NE,NW,SW,SE cyclic order. Degenerate all-one-quadrant vertices are cut at
// the Y anchors, which realizes the unique special placement.
bool build_vertex_lists(const std::vector<EdgeId>& half, const std::vector<Quadrant>& qs,
                        const UpwardEmbedding& uy, const std::vector<std::int32_t>& pos_of_edge_in,
                        const std::vector<std::int32_t>& pos_of_edge_out, VertexId v,
                        std::vector<EdgeId>& in_list, std::vector<EdgeId>& out_list,
                        std::string& reason) {
    const int deg = static_cast<int>(qs.size());
    auto fail = [&](const char* why) {
        reason = why;
        return false;
    };
    int south_cnt = 0;
    for (Quadrant q : qs) south_cnt += is_south(q) ? 1 : 0;

    auto check_pattern = [&](int start, int count, Quadrant first, Quadrant second) {
        bool in_second = false;
        for (int k = 0; k < count; ++k) {
            Quadrant q = qs[(start + k) % deg];
            if (q == first) {
                if (in_second) return false;
            } else if (q == second) {
                in_second = true;
            } else {
                return false;
            }
        }
        return true;
    };

    if (south_cnt == deg) {
        // Sink of G*: necessarily all Y edges at v are incoming.
        if (uy.in[v].empty()) return fail("south-only vertex without incoming Y edges");
        int start;
        bool any_sw = false, all_sw = true;
        for (Quadrant q : qs) {
            any_sw |= q == Quadrant::SW;
            all_sw &= q == Quadrant::SW;
        }
        if (any_sw && all_sw) {
            start = pos_of_edge_in[uy.in[v].front()];
        } else if (any_sw) {
            start = -1;
            for (int i = 0; i < deg; ++i)
                if (qs[i] == Quadrant::SW && qs[(i + deg - 1) % deg] != Quadrant::SW) {
                    if (start != -1) return fail("split SW block");
                    start = i;
                }
        } else {
            start = (pos_of_edge_in[uy.in[v].back()] + 1) % deg;
        }
        if (!check_pattern(start, deg, Quadrant::SW, Quadrant::SE))
            return fail("incoming quadrants out of order");
        for (int k = 0; k < deg; ++k) in_list.push_back(half[(start + k) % deg]);
        return true;
    }
    if (south_cnt == 0) {
        if (uy.out[v].empty()) return fail("north-only vertex without outgoing Y edges");
        int start;
        bool any_ne = false, all_ne = true;
        for (Quadrant q : qs) {
            any_ne |= q == Quadrant::NE;
            all_ne &= q == Quadrant::NE;
        }
        if (any_ne && all_ne) {
            start = pos_of_edge_out[uy.out[v].back()];
        } else if (any_ne) {
            start = -1;
            for (int i = 0; i < deg; ++i)
                if (qs[i] == Quadrant::NE && qs[(i + deg - 1) % deg] != Quadrant::NE) {
                    if (start != -1) return fail("split NE block");
                    start = i;
                }
        } else {
            start = (pos_of_edge_out[uy.out[v].front()] + 1) % deg;
        }
        if (!check_pattern(start, deg, Quadrant::NE, Quadrant::NW))
            return fail("outgoing quadrants out of order");
        for (int k = 0; k < deg; ++k) out_list.push_back(half[(start + k) % deg]);
        std::reverse(out_list.begin(), out_list.end());
        return true;
    }

    // Both blocks present: each must be one cyclic run.
    int in_start = -1, out_start = -1;
    for (int i = 0; i < deg; ++i) {
        bool cur = is_south(qs[i]);
        bool prev = is_south(qs[(i + deg - 1) % deg]);
        if (cur && !prev) {
            if (in_start != -1) return fail("incoming half-edges are not consecutive");
            in_start = i;
        }
        if (!cur && prev) {
            if (out_start != -1) return fail("outgoing half-edges are not consecutive");
            out_start = i;
        }
    }
    assert(in_start >= 0 && out_start >= 0);
    if (!check_pattern(in_start, south_cnt, Quadrant::SW, Quadrant::SE))
        return fail("incoming quadrants out of order");
    if (!check_pattern(out_start, deg - south_cnt, Quadrant::NE, Quadrant::NW))
        return fail("outgoing quadrants out of order");
    for (int k = 0; k < south_cnt; ++k) in_list.push_back(half[(in_start + k) % deg]);
    for (int k = 0; k < deg - south_cnt; ++k) out_list.push_back(half[(out_start + k) % deg]);
    std::reverse(out_list.begin(), out_list.end());
    return true;
}

}  // namespace

DerivedBuild build_derived_graph(const PreparedInstance& p, const std::vector<int>& gadget_choice,
                                 bool with_names) {
    DerivedBuild out;
    DerivedGraph& d = out.d;
    const BiposetGraph& g = p.graph();
    const auto& cat = gadget_catalog();
    const int n = g.num_vertices();
    const int m = g.num_edges();
    assert(static_cast<int>(gadget_choice.size()) == m);

    d.gadget = gadget_choice;
    d.quad_tail.resize(m);
    d.quad_head.resize(m);
    d.labels.resize(2 * m);
    d.star.edges.resize(2 * m);
    if (with_names) {
        d.star.vertex_names = g.vertex_names;
        d.star.edge_names.resize(2 * m);
        for (EdgeId e = 0; e < m; ++e) d.star.vertex_names.push_back("w." + g.edge_names[e]);
    } else {
        d.star.vertex_names.resize(n + m);
        d.star.edge_names.resize(2 * m);
    }

    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = g.edges[e];
        const Gadget& gd = cat[gadget_choice[e]];
        bool family_ok = (ed.in_x && ed.in_y)   ? (gd.in_hx && gd.in_hy)
                         : ed.in_x              ? gd.in_hx
                                                : gd.in_hy;
        if (!family_ok) {
            out.reason = "gadget family does not match edge membership";
            return out;
        }
        const VertexId u = ed.tail, v = ed.head, w = n + e;
        const EdgeId g1 = 2 * e, g2 = 2 * e + 1;
        d.star.edges[g1] = Edge{gd.g1_from_u ? u : w, gd.g1_from_u ? w : u, ed.in_x, ed.in_y};
        d.star.edges[g2] = Edge{gd.g2_to_v ? w : v, gd.g2_to_v ? v : w, ed.in_x, ed.in_y};
        if (with_names) {
            d.star.edge_names[g1] = g.edge_names[e] + ".a";
            d.star.edge_names[g2] = g.edge_names[e] + ".b";
        }
        d.labels[g1] = gd.l1;
        d.labels[g2] = gd.l2;
        d.quad_tail[e] = gd.quad_u;
        d.quad_head[e] = gd.quad_v;
    }

    d.upward.in.resize(n + m);
    d.upward.out.resize(n + m);
    for (EdgeId e = 0; e < m; ++e) {
        const Gadget& gd = cat[gadget_choice[e]];
        const VertexId w = n + e;
        const EdgeId g1 = 2 * e, g2 = 2 * e + 1;
        switch (gd.w_role) {
            case Gadget::WRole::Inner:
                if (gd.g1_from_u) {
                    d.upward.in[w] = {g1};
                    d.upward.out[w] = {g2};
                } else {
                    d.upward.in[w] = {g2};
                    d.upward.out[w] = {g1};
                }
                break;
            case Gadget::WRole::Sink:
                d.upward.in[w] = {g1, g2};
                break;
            case Gadget::WRole::Source:
                d.upward.out[w] = {g1, g2};
                break;
        }
    }

    for (VertexId v = 0; v < n; ++v) {
        const auto& r = p.inst.rotation[v];
        std::vector<EdgeId> half(r.size());
        std::vector<Quadrant> qs(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            EdgeId e = r[i];
            bool tail = g.is_tail(e, v);
            half[i] = tail ? 2 * e : 2 * e + 1;
            qs[i] = tail ? d.quad_tail[e] : d.quad_head[e];
        }
        std::string why;
        if (!build_vertex_lists(half, qs, p.inst.upward_y, p.pos_at_head, p.pos_at_tail, v,
                                d.upward.in[v], d.upward.out[v], why)) {
            out.reason = why + std::string(" at vertex '") + g.vertex_names[v] + "'";
            return out;
        }
    }

    d.rotation = underlying_rotation(d.upward);
    d.psi = assignment_from_upward(d.upward);
    if (m > 0) {
        const Gadget& gd = cat[gadget_choice[p.inst.outer.edge()]];
        EdgeId e = p.inst.outer.edge();
        d.outer = p.inst.outer.forward() ? Dart(2 * e, gd.g1_from_u) : Dart(2 * e + 1, !gd.g2_to_v);
    }
    out.ok = true;
    return out;
}

std::pair<BiposetGraph, Rotation> erase_gadgets(const PreparedInstance& p, const DerivedGraph& d) {
    const BiposetGraph& g = p.graph();
    BiposetGraph back;
    back.vertex_names = g.vertex_names;
    back.edge_names = g.edge_names;
    back.edges.resize(g.num_edges());
    const auto& cat = gadget_catalog();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Gadget& gd = cat[d.gadget[e]];
        const Edge& h1 = d.star.edges[2 * e];
        const Edge& h2 = d.star.edges[2 * e + 1];
        VertexId u = gd.g1_from_u ? h1.tail : h1.head;
        VertexId v = gd.g2_to_v ? h2.head : h2.tail;
        back.edges[e] = Edge{u, v, g.edges[e].in_x, g.edges[e].in_y};
    }
    Rotation rot(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        for (EdgeId h : d.rotation[v]) rot[v].push_back(h / 2);
    return {back, rot};
}

}  // namespace xyplanar
