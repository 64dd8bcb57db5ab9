#ifndef XYPLANAR_TEST_HELPERS_H
#define XYPLANAR_TEST_HELPERS_H

#include <string>
#include <vector>

#include "xyplanar/instance.h"
#include "xyplanar/pipeline.h"

namespace xyplanar::testing {

struct EdgeSpec {
    std::string id, tail, head;
    bool in_x = false, in_y = true;
};

/// Compact instance builder. Rotation/upward lists are given by edge id.
struct InstanceSpec {
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;
    std::vector<std::pair<std::string, std::vector<std::string>>> rotation;
    std::vector<std::pair<std::string, std::vector<std::string>>> upward_in;
    std::vector<std::pair<std::string, std::vector<std::string>>> upward_out;
    std::string outer_dart;  // "edge:+" / "edge:-"
};

inline BiposetInstance build(const InstanceSpec& spec) {
    BiposetInstance inst;
    BiposetGraph& g = inst.graph;
    auto vid = [&](const std::string& name) -> VertexId {
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            if (g.vertex_names[v] == name) return v;
        throw std::runtime_error("unknown vertex " + name);
    };
    auto eid = [&](const std::string& name) -> EdgeId {
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            if (g.edge_names[e] == name) return e;
        throw std::runtime_error("unknown edge " + name);
    };
    g.vertex_names = spec.vertices;
    for (const auto& es : spec.edges) {
        g.edge_names.push_back(es.id);
        g.edges.push_back(Edge{vid(es.tail), vid(es.head), es.in_x, es.in_y});
    }
    inst.rotation.resize(g.num_vertices());
    for (const auto& [v, lst] : spec.rotation)
        for (const auto& e : lst) inst.rotation[vid(v)].push_back(eid(e));
    inst.upward_y.in.resize(g.num_vertices());
    inst.upward_y.out.resize(g.num_vertices());
    for (const auto& [v, lst] : spec.upward_in)
        for (const auto& e : lst) inst.upward_y.in[vid(v)].push_back(eid(e));
    for (const auto& [v, lst] : spec.upward_out)
        for (const auto& e : lst) inst.upward_y.out[vid(v)].push_back(eid(e));
    if (!spec.outer_dart.empty()) {
        auto sep = spec.outer_dart.rfind(':');
        inst.outer = Dart(eid(spec.outer_dart.substr(0, sep)), spec.outer_dart[sep + 1] == '+');
    }
    return inst;
}

/// Single edge u->v, in X∩Y by default.
inline BiposetInstance single_edge(bool in_x = true, bool in_y = true) {
    return build({{"u", "v"},
                  {{"e", "u", "v", in_x, in_y}},
                  {{"u", {"e"}}, {"v", {"e"}}},
                  {{"v", {"e"}}},
                  {{"u", {"e"}}},
                  "e:+"});
}

/// Directed path a->b->c, all Y.
inline BiposetInstance path3() {
    return build({{"a", "b", "c"},
                  {{"e1", "a", "b"}, {"e2", "b", "c"}},
                  {{"a", {"e1"}}, {"b", {"e1", "e2"}}, {"c", {"e2"}}},
                  {{"b", {"e1"}}, {"c", {"e2"}}},
                  {{"a", {"e1"}}, {"b", {"e2"}}},
                  "e1:+"});
}

/// Triangle u->v (e1), u->w (e2), v->w (e3), all Y, drawn with v to the
/// right of w. Inner face is (e1+, e3+, e2-); the outer dart is e1:-.
inline BiposetInstance triangle() {
    return build({{"u", "v", "w"},
                  {{"e1", "u", "v"}, {"e2", "u", "w"}, {"e3", "v", "w"}},
                  {{"u", {"e1", "e2"}}, {"v", {"e3", "e1"}}, {"w", {"e2", "e3"}}},
                  {{"v", {"e1"}}, {"w", {"e2", "e3"}}},
                  {{"u", {"e2", "e1"}}, {"v", {"e3"}}},
                  "e1:-"});
}

inline GeneratorParams gen_params(int n, int x, std::uint64_t seed) {
    GeneratorParams p;
    p.num_vertices = n;
    p.x_chords = x;
    p.seed = seed;
    return p;
}

}  // namespace xyplanar::testing

#endif
