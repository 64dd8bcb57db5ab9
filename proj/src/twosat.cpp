#include "xyplanar/twosat.h"

#include <algorithm>
#include <cassert>
#include <queue>
#include <sstream>

namespace xyplanar {

const char* to_string(ClauseTag t) {
    switch (t) {
        case ClauseTag::AtMostOne: return "at-most-one";
        case ClauseTag::Membership: return "membership";
        case ClauseTag::GadgetExclusion: return "gadget-exclusion";
        case ClauseTag::WindroseOrder: return "windrose-order";
        case ClauseTag::Special: return "special";
    }
    return "?";
}

namespace {

constexpr Quadrant kNE = Quadrant::NE, kNW = Quadrant::NW, kSW = Quadrant::SW,
                   kSE = Quadrant::SE;

std::array<bool, 4> domain_of(const Edge& ed, int half) {
    std::array<bool, 4> d{false, false, false, false};
    auto allow = [&](Quadrant q) { d[static_cast<int>(q)] = true; };
    if (half == 0) {
        if (ed.in_x) {
            allow(kNE);
            if (!ed.in_y) allow(kSE);
        }
        if (ed.in_y) {
            allow(kNE);
            if (!ed.in_x) allow(kNW);
        }
    } else {
        if (ed.in_x) {
            allow(kSW);
            if (!ed.in_y) allow(kNW);
        }
        if (ed.in_y) {
            allow(kSW);
            if (!ed.in_x) allow(kSE);
        }
    }
    return d;
}

// One σ element at a vertex: the half-edge of a G-edge with its membership
// domain.
struct SigmaElem {
    EdgeId e;
    int half;
    std::array<bool, 4> dom;
};

}  // namespace

TwoSatInstance build_instance(const PreparedInstance& p, const CandidateSets& candidates) {
    const BiposetGraph& g = p.graph();
    const auto& cat = gadget_catalog();
    const int m = g.num_edges();
    TwoSatInstance ts;
    ts.num_vars = 8 * m;

    // Per-edge clauses.
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = g.edges[e];
        for (int half = 0; half < 2; ++half)
            for (int qa = 0; qa < 4; ++qa)
                for (int qb = qa + 1; qb < 4; ++qb)
                    ts.add(neg_lit(quad_var(e, half, static_cast<Quadrant>(qa))),
                           neg_lit(quad_var(e, half, static_cast<Quadrant>(qb))),
                           ClauseTag::AtMostOne);
        if (ed.in_x) {
            ts.add(pos_lit(quad_var(e, 0, kNE)), pos_lit(quad_var(e, 0, kSE)),
                   ClauseTag::Membership);  // exits the tail in the east
            ts.add(pos_lit(quad_var(e, 1, kNW)), pos_lit(quad_var(e, 1, kSW)),
                   ClauseTag::Membership);  // enters the head from the west
        }
        if (ed.in_y) {
            ts.add(pos_lit(quad_var(e, 0, kNE)), pos_lit(quad_var(e, 0, kNW)),
                   ClauseTag::Membership);  // exits the tail in the north
            ts.add(pos_lit(quad_var(e, 1, kSW)), pos_lit(quad_var(e, 1, kSE)),
                   ClauseTag::Membership);  // enters the head from the south
        }
        if (ed.in_x && !ed.in_y) {
            for (int gi = 0; gi < 4; ++gi)
                if (!candidates[e][gi])
                    ts.add(neg_lit(quad_var(e, 0, cat[gi].quad_u)),
                           neg_lit(quad_var(e, 1, cat[gi].quad_v)), ClauseTag::GadgetExclusion);
        }
    }

    // Per-vertex windrose order and special-embedding chains.
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto& r = p.inst.rotation.empty() ? std::vector<EdgeId>{} : p.inst.rotation[v];
        const int deg = static_cast<int>(r.size());
        if (deg == 0) continue;
        std::vector<SigmaElem> sig(deg);
        bool in_y = false, out_y = false, in_x = false, out_x = false;
        for (int i = 0; i < deg; ++i) {
            EdgeId e = r[i];
            int half = g.is_tail(e, v) ? 0 : 1;
            sig[i] = SigmaElem{e, half, domain_of(g.edges[e], half)};
            if (g.edges[e].in_y) (half == 0 ? out_y : in_y) = true;
            if (g.edges[e].in_x) (half == 0 ? out_x : in_x) = true;
        }
        auto var_of = [&](int i, Quadrant q) { return quad_var(sig[i].e, sig[i].half, q); };
        auto ban = [&](int i, Quadrant qa, int j, Quadrant qb, ClauseTag tag) {
            if (sig[i].dom[static_cast<int>(qa)] && sig[j].dom[static_cast<int>(qb)])
                ts.add(neg_lit(var_of(i, qa)), neg_lit(var_of(j, qb)), tag);
        };
        // Bans every regression along consecutive σ positions in the given
        // quadrant order.
        auto chain_segment = [&](int from, int to, const std::array<Quadrant, 4>& order,
                                 ClauseTag tag) {
            for (int i = from; i != to; i = (i + 1) % deg) {
                int j = (i + 1) % deg;
                for (int x = 0; x < 4; ++x)
                    for (int y = 0; y < x; ++y) ban(i, order[x], j, order[y], tag);
            }
        };

        if (in_y && out_y) {
            int a1 = p.pos_at_tail[p.inst.upward_y.out[v].back()];
            int a2 = p.pos_at_head[p.inst.upward_y.in[v].back()];
            chain_segment(a1, a2, {kNE, kNW, kSW, kSE}, ClauseTag::WindroseOrder);
            chain_segment(a2, a1, {kSW, kSE, kNE, kNW}, ClauseTag::WindroseOrder);
            continue;
        }

        // Uniform Y direction: the Y block spans [a1..a2]; positions outside
        // it (inside the 𝒰 assignment wedge) carry X\Y half-edges only.
        const bool y_in_mode = in_y;
        int a1, a2;
        if (y_in_mode) {
            a1 = p.pos_at_head[p.inst.upward_y.in[v].front()];
            a2 = p.pos_at_head[p.inst.upward_y.in[v].back()];
        } else {
            a1 = p.pos_at_tail[p.inst.upward_y.out[v].back()];
            a2 = p.pos_at_tail[p.inst.upward_y.out[v].front()];
        }
        // Membership-side constraint for X half-edges inside the Y block.
        for (int i = a1;; i = (i + 1) % deg) {
            const auto& dom = sig[i].dom;
            bool need = false;
            std::vector<std::int32_t> lits;
            for (int q = 0; q < 4; ++q) {
                bool southish = is_south(static_cast<Quadrant>(q)) == y_in_mode;
                if (dom[q] && southish) lits.push_back(pos_lit(var_of(i, static_cast<Quadrant>(q))));
                if (dom[q] && !southish) need = true;
            }
            if (need) {
                assert(!lits.empty());
                ts.add(lits[0], lits.size() > 1 ? lits[1] : -1, ClauseTag::WindroseOrder);
            }
            if (i == a2) break;
        }
        // Order chain inside the Y block.
        if (y_in_mode)
            chain_segment(a1, a2, {kSW, kSE, kNE, kNW}, ClauseTag::WindroseOrder);
        else
            chain_segment(a1, a2, {kNE, kNW, kSW, kSE}, ClauseTag::WindroseOrder);

        std::vector<int> frees;
        for (int j = (a2 + 1) % deg; j != a1; j = (j + 1) % deg) frees.push_back(j);
        if (frees.empty()) continue;
        // Half-edges in the assignment wedge follow the pinned special
        // placement: incoming ones attach right of the Y block when they
        // enter from its own side (head-side SW / tail-side SE go left),
        // outgoing ones mirror. Along the wedge this is one linear order
        // plus two anchor conditions:
        //   in-Y : SW < NE < NW < SE; a leading SW needs the rightmost
        //          incoming Y edge in SW, a trailing SE needs the leftmost
        //          in SE.
        //   out-Y: NE < SW < SE < NW; mirrored anchor conditions.
        std::array<Quadrant, 4> order = y_in_mode ? std::array<Quadrant, 4>{kSW, kNE, kNW, kSE}
                                                  : std::array<Quadrant, 4>{kNE, kSW, kSE, kNW};
        for (std::size_t k = 0; k + 1 < frees.size(); ++k)
            for (int x = 0; x < 4; ++x)
                for (int y = 0; y < x; ++y)
                    ban(frees[k], order[x], frees[k + 1], order[y], ClauseTag::Special);
        if (y_in_mode) {
            ban(a2, kSE, frees.front(), kSW, ClauseTag::WindroseOrder);
            ban(frees.back(), kSE, a1, kSW, ClauseTag::Special);
        } else {
            ban(frees.front(), kNE, a2, kNW, ClauseTag::Special);
            ban(frees.back(), kNW, a1, kNE, ClauseTag::Special);
        }
    }
    return ts;
}

TwoSatResult solve(const TwoSatInstance& ts) {
    const int n_lits = 2 * ts.num_vars;
    std::vector<std::vector<std::int32_t>> adj(n_lits);
    auto add_edge = [&](std::int32_t from, std::int32_t to) { adj[from].push_back(to); };
    for (const auto& c : ts.clauses) {
        if (c.b < 0) {
            add_edge(c.a ^ 1, c.a);
        } else {
            add_edge(c.a ^ 1, c.b);
            add_edge(c.b ^ 1, c.a);
        }
    }

    // Iterative Tarjan.
    std::vector<std::int32_t> comp(n_lits, -1), low(n_lits, 0), disc(n_lits, -1);
    std::vector<std::int32_t> stk;
    std::vector<bool> on_stack(n_lits, false);
    std::int32_t timer = 0, comp_cnt = 0;
    struct Frame {
        std::int32_t node;
        std::size_t edge_idx;
    };
    std::vector<Frame> call;
    for (std::int32_t s = 0; s < n_lits; ++s) {
        if (disc[s] != -1) continue;
        call.push_back({s, 0});
        while (!call.empty()) {
            auto& fr = call.back();
            std::int32_t u = fr.node;
            if (fr.edge_idx == 0) {
                disc[u] = low[u] = timer++;
                stk.push_back(u);
                on_stack[u] = true;
            }
            bool descended = false;
            while (fr.edge_idx < adj[u].size()) {
                std::int32_t w = adj[u][fr.edge_idx++];
                if (disc[w] == -1) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[u] = std::min(low[u], disc[w]);
            }
            if (descended) continue;
            if (low[u] == disc[u]) {
                while (true) {
                    std::int32_t w = stk.back();
                    stk.pop_back();
                    on_stack[w] = false;
                    comp[w] = comp_cnt;
                    if (w == u) break;
                }
                ++comp_cnt;
            }
            call.pop_back();
            if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[u]);
        }
    }

    TwoSatResult res;
    std::int32_t bad_var = -1;
    for (std::int32_t v = 0; v < ts.num_vars; ++v)
        if (comp[2 * v] == comp[2 * v + 1]) {
            bad_var = v;
            break;
        }
    if (bad_var == -1) {
        res.satisfiable = true;
        res.assignment.resize(ts.num_vars);
        for (std::int32_t v = 0; v < ts.num_vars; ++v)
            res.assignment[v] = comp[2 * v] < comp[2 * v + 1];
        return res;
    }

    // Conflict cycle: a path pos ⇒ ... ⇒ neg ⇒ ... ⇒ pos.
    auto bfs_path = [&](std::int32_t from, std::int32_t to) {
        std::vector<std::int32_t> par(n_lits, -2);
        std::queue<std::int32_t> q;
        q.push(from);
        par[from] = -1;
        while (!q.empty()) {
            std::int32_t u = q.front();
            q.pop();
            if (u == to) break;
            for (std::int32_t w : adj[u])
                if (par[w] == -2) {
                    par[w] = u;
                    q.push(w);
                }
        }
        std::vector<std::int32_t> path;
        for (std::int32_t u = to; u != -1; u = par[u]) path.push_back(u);
        std::reverse(path.begin(), path.end());
        return path;
    };
    auto p1 = bfs_path(pos_lit(bad_var), neg_lit(bad_var));
    auto p2 = bfs_path(neg_lit(bad_var), pos_lit(bad_var));
    res.conflict_cycle = p1;
    res.conflict_cycle.insert(res.conflict_cycle.end(), p2.begin() + 1, p2.end());
    return res;
}

std::vector<int> extract_gadgets(const PreparedInstance& p, const std::vector<bool>& assignment) {
    const BiposetGraph& g = p.graph();
    std::vector<int> choice(g.num_edges(), -1);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        int qu = -1, qv = -1;
        for (int q = 0; q < 4; ++q) {
            if (assignment[quad_var(e, 0, static_cast<Quadrant>(q))]) {
                assert(qu == -1 && "two quadrants true on one half-edge");
                qu = q;
            }
            if (assignment[quad_var(e, 1, static_cast<Quadrant>(q))]) {
                assert(qv == -1 && "two quadrants true on one half-edge");
                qv = q;
            }
        }
        if (qu < 0 || qv < 0)
            throw std::logic_error("half-edge of '" + g.edge_names[e] + "' has no quadrant");
        const Gadget* gd =
            gadget_from_quadrants(static_cast<Quadrant>(qu), static_cast<Quadrant>(qv));
        if (!gd) throw std::logic_error("no gadget realizes the extracted quadrants");
        choice[e] = gd->index;
    }
    return choice;
}

std::string to_dimacs(const TwoSatInstance& ts) {
    std::ostringstream os;
    os << "p cnf " << ts.num_vars << " " << ts.clauses.size() << "\n";
    auto dimacs_lit = [](std::int32_t l) {
        std::int32_t v = lit_var(l) + 1;
        return lit_negated(l) ? -v : v;
    };
    for (const auto& c : ts.clauses) {
        os << "c " << to_string(c.tag) << "\n";
        os << dimacs_lit(c.a);
        if (c.b >= 0) os << " " << dimacs_lit(c.b);
        os << " 0\n";
    }
    return os.str();
}

}  // namespace xyplanar
