#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "xyplanar/io.h"
#include "xyplanar/pipeline.h"

using namespace xyplanar;
using nlohmann::json;

namespace {

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 3;

json verdict_to_json(const PreparedInstance& p, const Verdict& v) {
    json j;
    j["accepted"] = v.accepted;
    j["num_variables"] = v.num_vars;
    json counts = json::object();
    int total = 0;
    for (const auto& [tag, cnt] : v.clause_counts) {
        counts[tag] = cnt;
        total += cnt;
    }
    j["clause_counts"] = counts;
    j["num_clauses"] = total;
    json cands = json::object();
    const auto& cat = gadget_catalog();
    for (EdgeId e = 0; e < p.graph().num_edges(); ++e) {
        const Edge& ed = p.graph().edges[e];
        if (!ed.in_x || ed.in_y) continue;
        json lst = json::array();
        for (int gi = 0; gi < 4; ++gi)
            if (!v.candidates.empty() && v.candidates[e][gi]) lst.push_back(cat[gi].name());
        cands[p.graph().edge_names[e]] = lst;
    }
    j["candidate_sets"] = cands;
    if (v.accepted) {
        json gadgets = json::object();
        for (EdgeId e = 0; e < p.graph().num_edges(); ++e)
            gadgets[p.graph().edge_names[e]] = cat[v.derived->gadget[e]].name();
        j["gadgets"] = gadgets;
    } else {
        j["unsat_cycle"] = v.unsat_cycle_pretty;
    }
    return j;
}

int cmd_check(const std::string& path, bool as_json, const std::string& dump_cnf) {
    PreparedInstance p;
    try {
        p = prepare(load_instance_file(path));
    } catch (const ValidationError& e) {
        if (as_json) {
            json j;
            j["accepted"] = false;
            j["invalid_input"] = e.what();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cerr << "invalid input: " << e.what() << "\n";
        }
        return kExitInvalid;
    }
    if (!dump_cnf.empty()) {
        TwoSatInstance ts = build_instance(p, compute_candidate_sets(p));
        std::ofstream out(dump_cnf);
        out << to_dimacs(ts);
    }
    Verdict v = test_xy_planarity(p);
    if (as_json) {
        std::cout << verdict_to_json(p, v).dump(2) << "\n";
    } else {
        std::cout << (v.accepted ? "accepted" : "rejected") << "\n";
    }
    return v.accepted ? kExitAccepted : kExitRejected;
}

int cmd_oracle(const std::string& path) {
    PreparedInstance p;
    try {
        p = prepare(load_instance_file(path));
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    }
    OracleResult o = brute_force_oracle(p);
    if (!o.decided) {
        std::cerr << "instance too large for exhaustive search\n";
        return kExitInternal;
    }
    std::cout << (o.accepted ? "accepted" : "rejected") << " (" << o.combos_tried
              << " full assignments tested)\n";
    return o.accepted ? kExitAccepted : kExitRejected;
}

int cmd_gen(int n, int x, std::uint64_t seed, const std::string& out_path) {
    GeneratorParams gp;
    gp.num_vertices = n;
    gp.x_chords = x;
    gp.seed = seed;
    BiposetInstance inst = generate_instance(gp);
    std::string text = save_instance(inst);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return kExitInternal;
        }
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"xy-planarity tester: decides whether a directed graph with edge sets X and Y,\n"
                 "a fixed planar embedding and a fixed upward embedding of the Y-subgraph admits\n"
                 "a planar drawing with X edges x-monotone and Y edges y-monotone."};
    app.require_subcommand(1);

    std::string path, out_path, format = "svg", dump_cnf;
    bool as_json = false;
    int gen_n = 6, gen_x = 3;
    std::uint64_t gen_seed = 1;

    auto* check = app.add_subcommand("check", "test an instance file for xy-planarity");
    check->add_option("file", path)->required();
    check->add_flag("--json", as_json, "print a JSON verdict");
    check->add_option("--dump-cnf", dump_cnf, "write the 2-SAT instance in DIMACS form");

    auto* draw = app.add_subcommand("draw", "compute a validated polyline drawing");
    draw->add_option("file", path)->required();
    draw->add_option("--format", format)->check(CLI::IsMember({"svg", "json"}));
    draw->add_option("-o,--output", out_path)->required();

    auto* oracle = app.add_subcommand("oracle", "exhaustive gadget enumeration (small instances)");
    oracle->add_option("file", path)->required();

    auto* gen = app.add_subcommand("gen", "generate a random valid instance");
    gen->add_option("--n", gen_n, "number of vertices");
    gen->add_option("--x", gen_x, "number of X-only chords");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("-o,--output", out_path, "output file ('-' for stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(path, as_json, dump_cnf);
        if (oracle->parsed()) return cmd_oracle(path);
        if (gen->parsed()) return cmd_gen(gen_n, gen_x, gen_seed, out_path);
        if (draw->parsed()) {
            extern int cmd_draw_impl(const std::string&, const std::string&, const std::string&);
            return cmd_draw_impl(path, format, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
