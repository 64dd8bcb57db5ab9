#include <doctest.h>

#include "helpers.h"
#include "xyplanar/io.h"

using namespace xyplanar;
using namespace xyplanar::testing;

TEST_CASE("load(save(instance)) reproduces the instance exactly") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        BiposetInstance inst = generate_instance(gen_params(3 + seed % 6, seed % 5, seed * 7));
        BiposetInstance back = load_instance(save_instance(inst));
        CHECK(instances_equal(inst, back));
        // And byte-for-byte stability of the serialization itself.
        CHECK(save_instance(inst) == save_instance(back));
    }
}

TEST_CASE("unknown fields are rejected") {
    std::string text = save_instance(single_edge());
    text.insert(text.find('{') + 1, "\n  \"comment\": \"nope\",");
    CHECK_THROWS_AS(load_instance(text), ValidationError);
}

TEST_CASE("malformed darts and dangling references are rejected") {
    CHECK_THROWS_AS(load_instance(R"({"vertices":["a"],"edges":[],"rotation":{},
        "upward_y":{},"outer_face":"e:+"})"),
                    ValidationError);
    CHECK_THROWS_AS(load_instance(R"({"vertices":["a","b"],
        "edges":[{"id":"e","tail":"a","head":"zzz","in_x":true,"in_y":true}],
        "rotation":{},"upward_y":{}})"),
                    ValidationError);
}

TEST_CASE("instances that violate structural invariants fail validation on prepare") {
    // X ∪ Y ≠ E
    std::string text = R"({
      "vertices": ["a", "b"],
      "edges": [{"id": "e", "tail": "a", "head": "b", "in_x": false, "in_y": false}],
      "rotation": {"a": ["e"], "b": ["e"]},
      "upward_y": {"a": {"in": [], "out": []}, "b": {"in": [], "out": []}},
      "outer_face": "e:+"
    })";
    BiposetInstance inst = load_instance(text);
    CHECK_THROWS_AS(prepare(std::move(inst)), ValidationError);
}
