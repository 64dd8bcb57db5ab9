#include "xyplanar/pipeline.h"

#include <algorithm>
#include <cassert>
#include <random>
#include <sstream>

namespace xyplanar {

namespace {

std::string pretty_literal(const BiposetGraph& g, std::int32_t lit) {
    std::int32_t var = lit_var(lit);
    EdgeId e = var / 8;
    int half = (var / 4) % 2;
    Quadrant q = static_cast<Quadrant>(var % 4);
    std::string s = lit_negated(lit) ? "!" : "";
    s += g.edge_names[e];
    s += half == 0 ? ".tail^" : ".head^";
    s += to_string(q);
    return s;
}

// Tries to move every edge whose clauses allow it onto the all-NE gadget.
// Fewer NW labels mean fewer relabel/shift rounds in the drawing backend.
void prefer_ne_gadgets(const TwoSatInstance& ts, const BiposetGraph& g,
                       std::vector<bool>& assignment) {
    std::vector<std::vector<std::int32_t>> by_var(ts.num_vars);
    for (std::size_t ci = 0; ci < ts.clauses.size(); ++ci) {
        by_var[lit_var(ts.clauses[ci].a)].push_back(static_cast<std::int32_t>(ci));
        if (ts.clauses[ci].b >= 0)
            by_var[lit_var(ts.clauses[ci].b)].push_back(static_cast<std::int32_t>(ci));
    }
    auto lit_true = [&](std::int32_t lit, const std::vector<bool>& a) {
        return a[lit_var(lit)] != lit_negated(lit);
    };
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        std::int32_t ne = quad_var(e, 0, Quadrant::NE), sw = quad_var(e, 1, Quadrant::SW);
        if (assignment[ne] && assignment[sw]) continue;
        std::vector<bool> trial = assignment;
        for (int q = 0; q < 4; ++q) {
            trial[quad_var(e, 0, static_cast<Quadrant>(q))] = false;
            trial[quad_var(e, 1, static_cast<Quadrant>(q))] = false;
        }
        trial[ne] = true;
        trial[sw] = true;
        bool ok = true;
        for (int half = 0; half < 2 && ok; ++half)
            for (int q = 0; q < 4 && ok; ++q)
                for (std::int32_t ci : by_var[quad_var(e, half, static_cast<Quadrant>(q))]) {
                    const auto& c = ts.clauses[ci];
                    if (!lit_true(c.a, trial) && (c.b < 0 || !lit_true(c.b, trial))) {
                        ok = false;
                        break;
                    }
                }
        if (ok) assignment = std::move(trial);
    }
}

}  // namespace

std::string verify_derived(const PreparedInstance& p, const DerivedGraph& d) {
    const BiposetGraph& g = p.graph();
    // Gadget erasure recovers (G, ℰ).
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto& rot = d.rotation[v];
        if (rot.size() != p.inst.rotation[v].size())
            return "derived rotation degree mismatch at '" + g.vertex_names[v] + "'";
        std::vector<EdgeId> back(rot.size());
        for (std::size_t i = 0; i < rot.size(); ++i) back[i] = rot[i] / 2;
        if (!cyclically_equal(back, p.inst.rotation[v]))
            return "derived rotation does not induce the input embedding at '" +
                   g.vertex_names[v] + "'";
    }
    // The upward embedding restricted to Y equals 𝒰.
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        std::vector<EdgeId> yin, yout;
        for (EdgeId h : d.upward.in[v])
            if (g.edges[h / 2].in_y) yin.push_back(h / 2);
        for (EdgeId h : d.upward.out[v])
            if (g.edges[h / 2].in_y) yout.push_back(h / 2);
        if (yin != p.inst.upward_y.in[v] || yout != p.inst.upward_y.out[v])
            return "derived embedding does not induce the Y upward embedding at '" +
                   g.vertex_names[v] + "'";
    }
    WindroseReport wr = check_windrose_consistent(d.upward, d.labels);
    if (!wr.ok) return "derived embedding is not windrose consistent";
    WindroseReport sp = check_special(g, p.inst.rotation, d.quad_tail, d.quad_head);
    if (!sp.ok)
        return "derived embedding is not special at '" + g.vertex_names[sp.violations[0]] + "'";
    if (!graph_is_acyclic(d.star)) return "derived graph has a directed cycle";
    UpwardCheck uc = check_upward_planar_embedding(d.star, d.rotation, d.psi, d.outer);
    if (!uc.ok) return "derived embedding is not upward planar: " + uc.message;
    return {};
}

Verdict test_xy_planarity(const PreparedInstance& p) {
    Verdict v;
    const BiposetGraph& g = p.graph();
    if (g.num_edges() == 0) {
        v.accepted = true;
        DerivedBuild empty = build_derived_graph(p, {});
        v.derived = std::move(empty.d);
        return v;
    }
    v.candidates = compute_candidate_sets(p);
    TwoSatInstance ts = build_instance(p, v.candidates);
    v.num_vars = ts.num_vars;
    for (const auto& c : ts.clauses) v.clause_counts[to_string(c.tag)]++;

    TwoSatResult res = solve(ts);
    if (!res.satisfiable) {
        v.unsat_cycle = res.conflict_cycle;
        for (std::int32_t lit : res.conflict_cycle)
            v.unsat_cycle_pretty.push_back(pretty_literal(g, lit));
        return v;
    }
    prefer_ne_gadgets(ts, g, res.assignment);
    std::vector<int> choice = extract_gadgets(p, res.assignment);
    DerivedBuild build = build_derived_graph(p, choice);
    if (!build.ok)
        throw std::logic_error("satisfiable instance yielded no derived embedding: " +
                               build.reason);
    std::string bad = verify_derived(p, build.d);
    if (!bad.empty()) throw std::logic_error("derived embedding failed verification: " + bad);
    v.accepted = true;
    v.derived = std::move(build.d);
    return v;
}

// ---------------------------------------------------------------------------
// Brute-force oracle.
// ---------------------------------------------------------------------------

OracleResult brute_force_oracle(const PreparedInstance& p, int max_slots) {
    const BiposetGraph& g = p.graph();
    OracleResult res;
    const int m = g.num_edges();
    int slots = 0;
    for (const Edge& e : g.edges)
        if (!(e.in_x && e.in_y)) ++slots;
    if (slots > max_slots) return res;
    res.decided = true;
    if (m == 0) {
        res.accepted = true;
        return res;
    }

    // Edge order: complete one vertex after another so the per-vertex pruning
    // cuts subtrees as early as possible.
    std::vector<EdgeId> order;
    order.reserve(m);
    {
        std::vector<bool> emitted(m, false);
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            for (EdgeId e = 0; e < m; ++e)
                if (!emitted[e] && (g.edges[e].tail == v || g.edges[e].head == v)) {
                    emitted[e] = true;
                    order.push_back(e);
                }
        for (EdgeId e = 0; e < m; ++e)
            if (!emitted[e]) order.push_back(e);
    }
    std::vector<int> unassigned_at(g.num_vertices(), 0);
    for (const Edge& e : g.edges) {
        unassigned_at[e.tail]++;
        unassigned_at[e.head]++;
    }

    std::vector<int> choice(m, -1);
    std::vector<Quadrant> qt(m), qh(m);
    const auto& cat = gadget_catalog();

    std::function<bool(int)> dfs = [&](int idx) -> bool {
        if (idx == m) {
            ++res.combos_tried;
            DerivedBuild b = build_derived_graph(p, choice, /*with_names=*/false);
            if (!b.ok) return false;
            return verify_derived(p, b.d).empty();
        }
        EdgeId e = order[idx];
        const Edge& ed = g.edges[e];
        std::array<int, 4> opts{};
        int n_opts = 0;
        if (ed.in_x && ed.in_y) {
            opts[n_opts++] = 0;
        } else if (ed.in_x) {
            for (int gi = 0; gi < 4; ++gi) opts[n_opts++] = gi;
        } else {
            for (int gi = 4; gi < 8; ++gi) opts[n_opts++] = gi;
        }
        unassigned_at[ed.tail]--;
        unassigned_at[ed.head]--;
        for (int k = 0; k < n_opts; ++k) {
            choice[e] = opts[k];
            qt[e] = cat[opts[k]].quad_u;
            qh[e] = cat[opts[k]].quad_v;
            bool ok = true;
            for (VertexId z : {ed.tail, ed.head})
                if (unassigned_at[z] == 0 &&
                    !check_special_at(g, p.inst.rotation, qt, qh, z)) {
                    ok = false;
                    break;
                }
            if (ok && dfs(idx + 1)) return true;
        }
        choice[e] = -1;
        unassigned_at[ed.tail]++;
        unassigned_at[ed.head]++;
        return false;
    };
    res.accepted = dfs(0);
    return res;
}

// ---------------------------------------------------------------------------
// Instance generator.
// ---------------------------------------------------------------------------

namespace {

struct GenFaces {
    // Light face bookkeeping for chord insertion: walks + dart lookup.
    std::vector<std::vector<Dart>> faces;
    std::vector<std::int32_t> dart_face, dart_pos;

    void rebuild_positions(std::int32_t f) {
        for (std::int32_t i = 0; i < static_cast<std::int32_t>(faces[f].size()); ++i) {
            dart_face[faces[f][i].code] = f;
            dart_pos[faces[f][i].code] = i;
        }
    }
};

}  // namespace

BiposetInstance generate_instance(const GeneratorParams& params) {
    const int n = std::max(2, params.num_vertices);
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::mt19937_64 rng(params.seed + 0x9e3779b97f4a7c15ull * attempt);
        auto rnd = [&](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };

        BiposetInstance inst;
        BiposetGraph& g = inst.graph;
        for (int i = 0; i < n; ++i) g.vertex_names.push_back("v" + std::to_string(i));
        std::vector<int> rho(n);
        for (int i = 0; i < n; ++i) rho[i] = i;
        std::shuffle(rho.begin(), rho.end(), rng);

        UpwardEmbedding& u = inst.upward_y;
        u.in.resize(n);
        u.out.resize(n);
        for (int i = 1; i < n; ++i) {
            VertexId parent = rnd(i);
            bool up_from_parent = rnd(2) == 0;
            EdgeId e = g.num_edges();
            g.edge_names.push_back("e" + std::to_string(e));
            if (up_from_parent) {
                g.edges.push_back(Edge{parent, i, false, true});
                u.in[i] = {e};
                auto& list = u.out[parent];
                list.insert(list.begin() + rnd(static_cast<int>(list.size()) + 1), e);
            } else {
                g.edges.push_back(Edge{i, parent, false, true});
                u.out[i] = {e};
                auto& list = u.in[parent];
                list.insert(list.begin() + rnd(static_cast<int>(list.size()) + 1), e);
            }
        }
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            if (rnd(100) < params.xy_overlap_percent &&
                rho[g.edges[e].tail] < rho[g.edges[e].head])
                g.edges[e].in_x = true;

        inst.rotation = underlying_rotation(u);
        inst.outer = Dart(0, true);

        // Face bookkeeping over the evolving full embedding.
        GenFaces gf;
        {
            FaceStructure fs = trace_faces(g, inst.rotation, inst.outer);
            gf.faces = fs.faces;
            gf.dart_face = fs.dart_face;
            gf.dart_pos = fs.dart_pos;
        }

        int placed = 0;
        int attempts_left = params.x_chords * 30 + 10;
        while (placed < params.x_chords && attempts_left-- > 0) {
            int dart_code = rnd(2 * g.num_edges());
            std::int32_t f = gf.dart_face[dart_code];
            auto& walk = gf.faces[f];
            const int len = static_cast<int>(walk.size());
            int i = rnd(len), j = rnd(len);
            VertexId z1 = dart_tail(g, walk[i]);
            VertexId z2 = dart_tail(g, walk[j]);
            if (z1 == z2) continue;
            if (rho[z1] > rho[z2]) {
                std::swap(i, j);
                std::swap(z1, z2);
            }
            EdgeId e = g.num_edges();
            g.edge_names.push_back("e" + std::to_string(e));
            g.edges.push_back(Edge{z1, z2, true, false});
            // Rotation: the chord enters the wedge of corner i at z1 (between
            // the corner's leave and arrive edges) and of corner j at z2.
            auto insert_rot = [&](VertexId z, int corner_pos) {
                const int l = static_cast<int>(walk.size());
                Dart arrive = walk[(corner_pos + l - 1) % l];
                auto& r = inst.rotation[z];
                EdgeId leave_edge = walk[corner_pos].edge();
                (void)arrive;
                auto it = std::find(r.begin(), r.end(), leave_edge);
                r.insert(it + 1, e);
            };
            insert_rot(z1, i);
            insert_rot(z2, j);
            // Split the face walk at corners i and j.
            std::vector<Dart> w1, w2;
            for (int k = i; k != j; k = (k + 1) % len) w1.push_back(walk[k]);
            w1.push_back(Dart(e, false));  // z2 -> z1
            for (int k = j; k != i; k = (k + 1) % len) w2.push_back(walk[k]);
            w2.push_back(Dart(e, true));  // z1 -> z2
            gf.dart_face.resize(2 * g.num_edges(), -1);
            gf.dart_pos.resize(2 * g.num_edges(), -1);
            gf.faces[f] = std::move(w1);
            gf.faces.push_back(std::move(w2));
            gf.rebuild_positions(f);
            gf.rebuild_positions(static_cast<std::int32_t>(gf.faces.size()) - 1);
            ++placed;
        }

        try {
            prepare(inst);  // full validation
            return inst;
        } catch (const ValidationError&) {
            continue;  // resample deterministically
        }
    }
}

}  // namespace xyplanar
