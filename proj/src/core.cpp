#include "xyplanar/core.h"

#include <algorithm>
#include <cassert>
#include <queue>

namespace xyplanar {

namespace {

bool subset_acyclic(const BiposetGraph& g, bool Edge::* flag) {
    const int n = g.num_vertices();
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<VertexId>> out(n);
    for (const Edge& e : g.edges)
        if (e.*flag) {
            indeg[e.head]++;
            out[e.tail].push_back(e.head);
        }
    std::queue<VertexId> q;
    for (VertexId v = 0; v < n; ++v)
        if (indeg[v] == 0) q.push(v);
    int seen = 0;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        ++seen;
        for (VertexId w : out[v])
            if (--indeg[w] == 0) q.push(w);
    }
    return seen == n;
}

}  // namespace

void BiposetGraph::validate() const {
    const int n = num_vertices();
    for (EdgeId i = 0; i < num_edges(); ++i) {
        const Edge& e = edges[i];
        if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
            throw ValidationError("edge '" + edge_names[i] + "' references unknown vertex");
        if (e.tail == e.head)
            throw ValidationError("self-loop on edge '" + edge_names[i] + "'");
        if (!e.in_x && !e.in_y)
            throw ValidationError("edge '" + edge_names[i] + "' is in neither X nor Y");
    }
    // Y spanning and connected.
    if (n > 1) {
        std::vector<std::vector<VertexId>> adj(n);
        for (const Edge& e : edges)
            if (e.in_y) {
                adj[e.tail].push_back(e.head);
                adj[e.head].push_back(e.tail);
            }
        std::vector<bool> seen(n, false);
        std::queue<VertexId> q;
        q.push(0);
        seen[0] = true;
        int cnt = 1;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++cnt;
                    q.push(w);
                }
        }
        if (cnt != n) throw ValidationError("Y-subgraph is not a connected spanning subgraph");
    }
    if (!subset_acyclic(*this, &Edge::in_y)) throw ValidationError("Y-subgraph has a directed cycle");
    if (!subset_acyclic(*this, &Edge::in_x)) throw ValidationError("X-subgraph has a directed cycle");
}

FaceStructure trace_faces(const BiposetGraph& g, const Rotation& rot, Dart outer_hint) {
    const int n = g.num_vertices();
    FaceStructure fs;
    fs.dart_face.assign(2 * g.num_edges(), -1);
    fs.dart_pos.assign(2 * g.num_edges(), -1);

    // Position of each edge in each endpoint's rotation.
    std::vector<std::int32_t> pos_at_tail(g.num_edges(), -1), pos_at_head(g.num_edges(), -1);
    int num_rot_edges = 0;
    int vertices_with_edges = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (!rot[v].empty()) ++vertices_with_edges;
        for (std::size_t i = 0; i < rot[v].size(); ++i) {
            EdgeId e = rot[v][i];
            if (e < 0 || e >= g.num_edges()) throw ValidationError("rotation references unknown edge");
            if (g.edges[e].tail == v) {
                if (pos_at_tail[e] != -1) throw ValidationError("edge appears twice at its tail");
                pos_at_tail[e] = static_cast<std::int32_t>(i);
            } else if (g.edges[e].head == v) {
                if (pos_at_head[e] != -1) throw ValidationError("edge appears twice at its head");
                pos_at_head[e] = static_cast<std::int32_t>(i);
            } else {
                throw ValidationError("rotation lists edge at a non-endpoint");
            }
            ++num_rot_edges;
        }
    }
    if (num_rot_edges % 2 != 0) throw ValidationError("rotation covers some edge only once");
    const int m = num_rot_edges / 2;
    for (VertexId v = 0; v < n; ++v)
        for (EdgeId e : rot[v])
            if (pos_at_tail[e] == -1 || pos_at_head[e] == -1)
                throw ValidationError("edge '" + g.edge_names[e] + "' missing from one endpoint's rotation");

    auto successor = [&](Dart d) -> Dart {
        VertexId v = dart_head(g, d);
        std::int32_t p = d.forward() ? pos_at_head[d.edge()] : pos_at_tail[d.edge()];
        const auto& r = rot[v];
        std::int32_t deg = static_cast<std::int32_t>(r.size());
        EdgeId e2 = r[(p + deg - 1) % deg];
        return Dart(e2, g.edges[e2].tail == v);
    };

    int total_len = 0;
    for (VertexId v = 0; v < n; ++v) {
        for (EdgeId e : rot[v]) {
            Dart start(e, g.edges[e].tail == v);
            if (fs.dart_face[start.code] != -1) continue;
            std::int32_t f = fs.num_faces();
            fs.faces.emplace_back();
            Dart d = start;
            do {
                fs.dart_face[d.code] = f;
                fs.dart_pos[d.code] = static_cast<std::int32_t>(fs.faces[f].size());
                fs.faces[f].push_back(d);
                d = successor(d);
            } while (!(d == start));
            total_len += static_cast<int>(fs.faces[f].size());
        }
    }
    if (total_len != 2 * m) throw ValidationError("face tracing did not partition the darts");

    // Euler check for the traced (connected) subgraph.
    if (m > 0) {
        int nv = vertices_with_edges;
        if (nv - m + fs.num_faces() != 2)
            throw ValidationError("rotation system is not planar (Euler check failed)");
    }

    fs.corners.resize(fs.num_faces());
    for (std::int32_t f = 0; f < fs.num_faces(); ++f) {
        const auto& walk = fs.faces[f];
        const int len = static_cast<int>(walk.size());
        fs.corners[f].resize(len);
        for (int i = 0; i < len; ++i) {
            Dart prev = walk[(i + len - 1) % len];
            Dart cur = walk[i];
            assert(dart_head(g, prev) == dart_tail(g, cur));
            fs.corners[f][i] = Corner{dart_tail(g, cur), prev, cur};
        }
    }

    if (outer_hint.code >= 0) {
        if (fs.dart_face[outer_hint.code] == -1)
            throw ValidationError("outer face dart is not part of the traced rotation");
        fs.outer_face = fs.dart_face[outer_hint.code];
    } else if (fs.num_faces() == 1) {
        fs.outer_face = 0;
    }
    return fs;
}

std::pair<std::int32_t, std::int32_t> FaceStructure::corner_of_pair(const BiposetGraph& g,
                                                                    VertexId v, EdgeId a,
                                                                    EdgeId b) const {
    // Pair (a, b), a immediately CCW-preceding b at v, names the corner whose
    // walk arrives via b and leaves via a.
    Dart leave(a, g.edges[a].tail == v);
    std::int32_t f = dart_face[leave.code];
    std::int32_t p = dart_pos[leave.code];
    if (f < 0) throw ValidationError("assignment pair references an untraced edge");
    const Corner& c = corners[f][p];
    if (c.vertex != v || c.arrive.edge() != b)
        throw ValidationError("assignment pair is not rotation-consecutive at vertex '" +
                              g.vertex_names[v] + "'");
    return {f, p};
}

BimodalReport check_bimodal(const BiposetGraph& g, const Rotation& rot,
                            const std::vector<bool>& edge_in_subset) {
    BimodalReport rep;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        std::vector<bool> incoming;
        for (EdgeId e : rot[v])
            if (edge_in_subset.empty() || edge_in_subset[e]) incoming.push_back(g.edges[e].head == v);
        const int k = static_cast<int>(incoming.size());
        int switches = 0;
        for (int i = 0; i < k; ++i)
            if (incoming[i] != incoming[(i + 1) % k]) ++switches;
        if (switches > 2) {
            rep.ok = false;
            rep.violations.push_back(v);
        }
    }
    return rep;
}

BimodalReport check_bimodal(const BiposetGraph& g, const Rotation& rot) {
    return check_bimodal(g, rot, {});
}

Rotation restrict_to_y(const BiposetGraph& g, const Rotation& rot) {
    Rotation out(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        for (EdgeId e : rot[v])
            if (g.edges[e].in_y) out[v].push_back(e);
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.num_vertices() > 1 && out[v].empty())
            throw ValidationError("Y-subgraph does not span vertex '" + g.vertex_names[v] + "'");
    return out;
}

bool graph_is_acyclic(const BiposetGraph& g) {
    const int n = g.num_vertices();
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<VertexId>> out(n);
    for (const Edge& e : g.edges) {
        indeg[e.head]++;
        out[e.tail].push_back(e.head);
    }
    std::queue<VertexId> q;
    for (VertexId v = 0; v < n; ++v)
        if (indeg[v] == 0) q.push(v);
    int seen = 0;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        ++seen;
        for (VertexId w : out[v])
            if (--indeg[w] == 0) q.push(w);
    }
    return seen == n;
}

bool cyclically_equal(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto it = std::find(b.begin(), b.end(), a[0]);
    while (it != b.end()) {
        std::size_t off = static_cast<std::size_t>(it - b.begin());
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i)
            ok = a[i] == b[(off + i) % b.size()];
        if (ok) return true;
        it = std::find(it + 1, b.end(), a[0]);
    }
    return false;
}

}  // namespace xyplanar
