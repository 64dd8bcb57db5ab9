#include "xyplanar/windrose.h"

#include <algorithm>
#include <array>
#include <cassert>

namespace xyplanar {

const char* to_string(Quadrant q) {
    switch (q) {
        case Quadrant::NE: return "NE";
        case Quadrant::NW: return "NW";
        case Quadrant::SW: return "SW";
        case Quadrant::SE: return "SE";
    }
    return "?";
}

const char* to_string(EdgeLabel l) { return l == EdgeLabel::NE ? "NE" : "NW"; }

WindroseReport check_windrose_consistent(const UpwardEmbedding& u,
                                         const std::vector<EdgeLabel>& labels) {
    WindroseReport rep;
    auto block_ok = [&](const std::vector<EdgeId>& seq, EdgeLabel first_block) {
        bool in_second = false;
        for (EdgeId e : seq) {
            if (labels[e] == first_block) {
                if (in_second) return false;
            } else {
                in_second = true;
            }
        }
        return true;
    };
    for (VertexId v = 0; v < u.num_vertices(); ++v) {
        // Outgoing: NW before NE; incoming: NE before NW.
        if (!block_ok(u.out[v], EdgeLabel::NW) || !block_ok(u.in[v], EdgeLabel::NE)) {
            rep.ok = false;
            rep.violations.push_back(v);
        }
    }
    return rep;
}

namespace {

struct RunInfo {
    bool well_formed = false;
    bool covers_all = false;
    int start = -1;  // σ position of the run's first element
    int length = 0;
};

// Decomposes the cyclic quadrant sequence into maximal runs and returns the
// run of quadrant `want`. Well-formed means: at most one run per quadrant and
// the runs appear in the cyclic order NE, NW, SW, SE.
RunInfo quadrant_run(const std::vector<Quadrant>& qs, Quadrant want) {
    RunInfo info;
    const int n = static_cast<int>(qs.size());
    std::vector<std::pair<Quadrant, int>> runs;  // (quadrant, start)
    for (int i = 0; i < n; ++i) {
        if (qs[i] != qs[(i + n - 1) % n]) runs.push_back({qs[i], i});
    }
    if (runs.empty()) {
        // Single quadrant around the whole vertex.
        info.well_formed = true;
        info.covers_all = true;
        if (qs.empty() || qs[0] != want) info.length = 0;
        else {
            info.start = 0;
            info.length = n;
        }
        return info;
    }
    std::array<int, 4> seen{0, 0, 0, 0};
    for (auto& [q, s] : runs) seen[static_cast<int>(q)]++;
    for (int c : seen)
        if (c > 1) return info;  // split run: not realizable
    // Runs must follow NE < NW < SW < SE cyclically.
    const int k = static_cast<int>(runs.size());
    bool order_ok = false;
    for (int rotn = 0; rotn < k && !order_ok; ++rotn) {
        bool ok = true;
        for (int i = 0; i + 1 < k; ++i) {
            int a = static_cast<int>(runs[(rotn + i) % k].first);
            int b = static_cast<int>(runs[(rotn + i + 1) % k].first);
            if (a >= b) ok = false;
        }
        order_ok = ok;
    }
    if (!order_ok) return info;
    info.well_formed = true;
    for (int i = 0; i < k; ++i) {
        if (runs[i].first == want) {
            info.start = runs[i].second;
            int end = runs[(i + 1) % k].second;
            info.length = (end - runs[i].second + n) % n;
            if (info.length == 0) info.length = n;
        }
    }
    return info;
}

}  // namespace

bool check_special_at(const BiposetGraph& g, const Rotation& rot,
                      const std::vector<Quadrant>& quad_tail,
                      const std::vector<Quadrant>& quad_head, VertexId v) {
    const auto& r = rot[v];
    if (r.empty()) return true;
    std::vector<Quadrant> qs(r.size());
    bool x_in = false, x_out = false, y_in = false, y_out = false;
    for (std::size_t i = 0; i < r.size(); ++i) {
        EdgeId e = r[i];
        bool tail = g.is_tail(e, v);
        qs[i] = tail ? quad_tail[e] : quad_head[e];
        if (g.edges[e].in_x) (tail ? x_out : x_in) = true;
        if (g.edges[e].in_y) (tail ? y_out : y_in) = true;
    }
    bool mixed = (x_in && x_out) || (y_in && y_out);
    bool has_x = x_in || x_out;

    // Which quadrant the property speaks about, and whether it pins the
    // run's first or last element.
    Quadrant where = Quadrant::NE;
    bool pin_first = true;
    if (!mixed && has_x) {
        if (x_in && y_in) {
            where = Quadrant::SW;
            pin_first = true;
        } else if (x_in && y_out) {
            where = Quadrant::NW;
            pin_first = false;
        } else if (x_out && y_in) {
            where = Quadrant::SE;
            pin_first = false;
        } else {
            where = Quadrant::NE;
            pin_first = true;
        }
    }

    RunInfo run = quadrant_run(qs, where);
    if (!run.well_formed) return false;
    if (mixed || !has_x) return true;
    if (run.length == 0 || run.covers_all) return true;  // empty, or cut freedom
    int pos =
        pin_first ? run.start : (run.start + run.length - 1) % static_cast<int>(r.size());
    return g.edges[r[pos]].in_y;
}

WindroseReport check_special(const BiposetGraph& g, const Rotation& rot,
                             const std::vector<Quadrant>& quad_tail,
                             const std::vector<Quadrant>& quad_head) {
    WindroseReport rep;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (!check_special_at(g, rot, quad_tail, quad_head, v)) {
            rep.ok = false;
            rep.violations.push_back(v);
        }
    return rep;
}

}  // namespace xyplanar
