#include "xyplanar/io.h"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace xyplanar {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const char* where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw ValidationError(std::string("unknown field '") + it.key() + "' in " + where);
    }
}

Dart parse_dart(const std::string& text, const std::map<std::string, EdgeId>& edge_ids) {
    auto sep = text.rfind(':');
    if (sep == std::string::npos || sep + 2 != text.size() ||
        (text[sep + 1] != '+' && text[sep + 1] != '-'))
        throw ValidationError("malformed dart '" + text + "' (want \"edgeid:+\" or \"edgeid:-\")");
    auto it = edge_ids.find(text.substr(0, sep));
    if (it == edge_ids.end()) throw ValidationError("dart references unknown edge in '" + text + "'");
    return Dart(it->second, text[sep + 1] == '+');
}

}  // namespace

BiposetInstance load_instance(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("instance file must be a JSON object");
    reject_unknown(j, {"vertices", "edges", "rotation", "upward_y", "outer_face"}, "instance");
    for (const char* req : {"vertices", "edges", "rotation", "upward_y"})
        if (!j.contains(req)) throw ValidationError(std::string("missing field '") + req + "'");

    BiposetInstance inst;
    BiposetGraph& g = inst.graph;
    std::map<std::string, VertexId> vertex_ids;
    for (const auto& v : j.at("vertices")) {
        std::string name = v.get<std::string>();
        if (vertex_ids.count(name)) throw ValidationError("duplicate vertex id '" + name + "'");
        vertex_ids[name] = g.num_vertices();
        g.vertex_names.push_back(name);
    }
    std::map<std::string, EdgeId> edge_ids;
    for (const auto& e : j.at("edges")) {
        reject_unknown(e, {"id", "tail", "head", "in_x", "in_y"}, "edge");
        std::string name = e.at("id").get<std::string>();
        if (edge_ids.count(name)) throw ValidationError("duplicate edge id '" + name + "'");
        auto vt = vertex_ids.find(e.at("tail").get<std::string>());
        auto vh = vertex_ids.find(e.at("head").get<std::string>());
        if (vt == vertex_ids.end() || vh == vertex_ids.end())
            throw ValidationError("edge '" + name + "' references unknown vertex");
        edge_ids[name] = g.num_edges();
        g.edge_names.push_back(name);
        g.edges.push_back(
            Edge{vt->second, vh->second, e.at("in_x").get<bool>(), e.at("in_y").get<bool>()});
    }

    inst.rotation.resize(g.num_vertices());
    const json& rot = j.at("rotation");
    for (auto it = rot.begin(); it != rot.end(); ++it) {
        auto vi = vertex_ids.find(it.key());
        if (vi == vertex_ids.end())
            throw ValidationError("rotation lists unknown vertex '" + it.key() + "'");
        for (const auto& en : it.value()) {
            auto ei = edge_ids.find(en.get<std::string>());
            if (ei == edge_ids.end())
                throw ValidationError("rotation of '" + it.key() + "' references unknown edge");
            inst.rotation[vi->second].push_back(ei->second);
        }
    }
    inst.upward_y.in.resize(g.num_vertices());
    inst.upward_y.out.resize(g.num_vertices());
    const json& uy = j.at("upward_y");
    for (auto it = uy.begin(); it != uy.end(); ++it) {
        auto vi = vertex_ids.find(it.key());
        if (vi == vertex_ids.end())
            throw ValidationError("upward_y lists unknown vertex '" + it.key() + "'");
        reject_unknown(it.value(), {"in", "out"}, "upward_y entry");
        for (const char* dir : {"in", "out"}) {
            if (!it.value().contains(dir)) continue;
            for (const auto& en : it.value().at(dir)) {
                auto ei = edge_ids.find(en.get<std::string>());
                if (ei == edge_ids.end())
                    throw ValidationError("upward_y of '" + it.key() + "' references unknown edge");
                (dir[0] == 'i' ? inst.upward_y.in : inst.upward_y.out)[vi->second].push_back(
                    ei->second);
            }
        }
    }
    if (j.contains("outer_face")) {
        inst.outer = parse_dart(j.at("outer_face").get<std::string>(), edge_ids);
    } else if (g.num_edges() > 0) {
        throw ValidationError("missing field 'outer_face'");
    }
    return inst;
}

BiposetInstance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_instance(ss.str());
}

std::string save_instance(const BiposetInstance& inst) {
    const BiposetGraph& g = inst.graph;
    json j;
    j["vertices"] = g.vertex_names;
    json edges = json::array();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        json je;
        je["id"] = g.edge_names[e];
        je["tail"] = g.vertex_names[g.edges[e].tail];
        je["head"] = g.vertex_names[g.edges[e].head];
        je["in_x"] = g.edges[e].in_x;
        je["in_y"] = g.edges[e].in_y;
        edges.push_back(je);
    }
    j["edges"] = edges;
    json rot = json::object();
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        json lst = json::array();
        for (EdgeId e : inst.rotation[v]) lst.push_back(g.edge_names[e]);
        rot[g.vertex_names[v]] = lst;
    }
    j["rotation"] = rot;
    json uy = json::object();
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        json entry;
        json in_list = json::array(), out_list = json::array();
        for (EdgeId e : inst.upward_y.in[v]) in_list.push_back(g.edge_names[e]);
        for (EdgeId e : inst.upward_y.out[v]) out_list.push_back(g.edge_names[e]);
        entry["in"] = in_list;
        entry["out"] = out_list;
        uy[g.vertex_names[v]] = entry;
    }
    j["upward_y"] = uy;
    if (g.num_edges() > 0)
        j["outer_face"] = g.edge_names[inst.outer.edge()] + (inst.outer.forward() ? ":+" : ":-");
    return j.dump(2) + "\n";
}

bool instances_equal(const BiposetInstance& a, const BiposetInstance& b) {
    return a.graph.vertex_names == b.graph.vertex_names &&
           a.graph.edge_names == b.graph.edge_names &&
           [&] {
               if (a.graph.edges.size() != b.graph.edges.size()) return false;
               for (std::size_t i = 0; i < a.graph.edges.size(); ++i) {
                   const Edge &x = a.graph.edges[i], &y = b.graph.edges[i];
                   if (x.tail != y.tail || x.head != y.head || x.in_x != y.in_x ||
                       x.in_y != y.in_y)
                       return false;
               }
               return true;
           }() &&
           a.rotation == b.rotation && a.upward_y.in == b.upward_y.in &&
           a.upward_y.out == b.upward_y.out &&
           (a.graph.num_edges() == 0 || a.outer == b.outer);
}

}  // namespace xyplanar
