#include <doctest.h>

#include "helpers.h"
#include "xyplanar/pipeline.h"

using namespace xyplanar;
using namespace xyplanar::testing;

TEST_CASE("trivial instances are accepted") {
    PreparedInstance p = prepare(single_edge(true, true));
    Verdict v = test_xy_planarity(p);
    CHECK(v.accepted);
    OracleResult o = brute_force_oracle(p);
    REQUIRE(o.decided);
    CHECK(o.accepted);

    PreparedInstance tri = prepare(triangle());
    CHECK(test_xy_planarity(tri).accepted);
}

TEST_CASE("oracle equivalence on random instances") {
    int tried = 0, accepted = 0;
    for (std::uint64_t seed = 1; seed <= 250; ++seed) {
        BiposetInstance inst =
            generate_instance(gen_params(2 + seed % 7, seed % 6, seed * 1009));
        PreparedInstance p = prepare(std::move(inst));
        OracleResult o = brute_force_oracle(p);
        if (!o.decided) continue;
        Verdict v = test_xy_planarity(p);
        ++tried;
        accepted += v.accepted ? 1 : 0;
        CAPTURE(seed);
        CHECK(v.accepted == o.accepted);
    }
    MESSAGE("decided instances: ", tried, ", accepted: ", accepted);
    CHECK(tried >= 200);
    CHECK(accepted >= 1);
    CHECK(accepted < tried);  // both outcomes must be exercised
}

TEST_CASE("accepted verdicts carry verified derived embeddings") {
    for (std::uint64_t seed = 500; seed <= 560; ++seed) {
        BiposetInstance inst = generate_instance(gen_params(3 + seed % 6, seed % 5, seed));
        PreparedInstance p = prepare(std::move(inst));
        Verdict v = test_xy_planarity(p);
        if (v.accepted) CHECK(verify_derived(p, *v.derived).empty());
    }
}

TEST_CASE("rejections come with a closed implication cycle") {
    for (std::uint64_t seed = 700; seed <= 900; ++seed) {
        BiposetInstance inst = generate_instance(gen_params(4 + seed % 5, 2 + seed % 4, seed));
        PreparedInstance p = prepare(std::move(inst));
        Verdict v = test_xy_planarity(p);
        if (v.accepted) continue;
        REQUIRE(v.unsat_cycle.size() >= 3);
        CHECK(v.unsat_cycle.front() == v.unsat_cycle.back());
        return;  // one rejected instance suffices
    }
    FAIL("no rejected instance found in the seed range");
}

TEST_CASE("generator is deterministic and produces valid instances") {
    BiposetInstance a = generate_instance(gen_params(6, 3, 12345));
    BiposetInstance b = generate_instance(gen_params(6, 3, 12345));
    CHECK(a.graph.vertex_names == b.graph.vertex_names);
    CHECK(a.rotation == b.rotation);
    CHECK(a.upward_y.in == b.upward_y.in);
    CHECK(a.graph.num_edges() == b.graph.num_edges());
    for (std::uint64_t seed = 1; seed <= 30; ++seed)
        CHECK_NOTHROW(prepare(generate_instance(gen_params(2 + seed % 8, seed % 6, seed))));
}

TEST_CASE("validation failures are distinguished from rejections") {
    // X ∪ Y must cover E.
    BiposetInstance bad = single_edge(false, false);
    CHECK_THROWS_AS(prepare(std::move(bad)), ValidationError);

    // Upward embedding inconsistent with the rotation.
    BiposetInstance tri = triangle();
    std::swap(tri.upward_y.in[2][0], tri.upward_y.in[2][1]);
    CHECK_THROWS_AS(prepare(std::move(tri)), ValidationError);
}
