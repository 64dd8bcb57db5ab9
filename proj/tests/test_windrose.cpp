#include <doctest.h>

#include "helpers.h"
#include "xyplanar/windrose.h"

using namespace xyplanar;
using namespace xyplanar::testing;

TEST_CASE("windrose consistency checks outgoing NW-before-NE and incoming NE-before-NW") {
    UpwardEmbedding u;
    u.in = {{}};
    u.out = {{0, 1}};
    std::vector<EdgeLabel> nw_ne{EdgeLabel::NW, EdgeLabel::NE};
    CHECK(check_windrose_consistent(u, nw_ne).ok);
    std::vector<EdgeLabel> ne_nw{EdgeLabel::NE, EdgeLabel::NW};
    WindroseReport rep = check_windrose_consistent(u, ne_nw);
    CHECK(!rep.ok);
    CHECK(rep.violations == std::vector<VertexId>{0});

    UpwardEmbedding vin;
    vin.in = {{0, 1}};
    vin.out = {{}};
    CHECK(check_windrose_consistent(vin, ne_nw).ok);   // incoming: NE then NW
    CHECK(!check_windrose_consistent(vin, nw_ne).ok);
}

TEST_CASE("quadrant and label coherence helpers") {
    CHECK(label_from_quadrant(Quadrant::NE) == EdgeLabel::NE);
    CHECK(label_from_quadrant(Quadrant::SW) == EdgeLabel::NE);
    CHECK(label_from_quadrant(Quadrant::NW) == EdgeLabel::NW);
    CHECK(label_from_quadrant(Quadrant::SE) == EdgeLabel::NW);
    CHECK(quadrant_outgoing(Quadrant::NE));
    CHECK(quadrant_outgoing(Quadrant::NW));
    CHECK(!quadrant_outgoing(Quadrant::SW));
    CHECK(!quadrant_outgoing(Quadrant::SE));
}

TEST_CASE("special property 1: first SW edge at an all-incoming vertex must be in Y") {
    // Vertex c with incoming Y edge y1 and incoming X edge x1; rotation (x1, y1)
    // puts x1 counter-clockwise before y1.
    InstanceSpec spec;
    spec.vertices = {"c", "p", "q"};
    spec.edges = {{"x1", "p", "c", true, false}, {"y1", "q", "c", false, true}};
    spec.rotation = {{"c", {"x1", "y1"}}, {"p", {"x1"}}, {"q", {"y1"}}};
    BiposetInstance inst = build(spec);
    std::vector<Quadrant> qt(2, Quadrant::NE), qh(2, Quadrant::SW);

    // Both in SW with x1 cyclically before y1: x1 is first in SW. Violation.
    qh[0] = Quadrant::SW;
    qh[1] = Quadrant::SW;
    WindroseReport rep = check_special(inst.graph, inst.rotation, qt, qh);
    // All-SW covers the whole vertex: the cut is free, so this passes.
    CHECK(rep.ok);

    // y1 in SE forces the SW run to consist of x1 alone: violation.
    qh[1] = Quadrant::SE;
    rep = check_special(inst.graph, inst.rotation, qt, qh);
    CHECK(!rep.ok);
    CHECK(inst.graph.vertex_names[rep.violations[0]] == "c");

    // x1 entering from the northwest instead satisfies the property.
    qh[0] = Quadrant::NW;
    CHECK(check_special(inst.graph, inst.rotation, qt, qh).ok);
}

TEST_CASE("mixed vertices are exempt from the special properties") {
    // c has an incoming and an outgoing X edge: properties do not apply.
    InstanceSpec spec;
    spec.vertices = {"c", "p", "q", "r"};
    spec.edges = {{"x1", "p", "c", true, false},
                  {"x2", "c", "q", true, false},
                  {"y1", "r", "c", false, true}};
    spec.rotation = {{"c", {"x1", "y1", "x2"}}, {"p", {"x1"}}, {"q", {"x2"}}, {"r", {"y1"}}};
    BiposetInstance inst = build(spec);
    std::vector<Quadrant> qt{Quadrant::NE, Quadrant::NE, Quadrant::NE};
    std::vector<Quadrant> qh{Quadrant::SW, Quadrant::SW, Quadrant::SW};
    // x1 first in SW, but c is mixed in X: vacuously special.
    CHECK(check_special(inst.graph, inst.rotation, qt, qh).ok);
}

TEST_CASE("split quadrant runs are flagged as incoherent") {
    // Quadrants SW, SE, SW, SE around one vertex split both runs: no
    // realizable angular placement exists.
    InstanceSpec spec;
    spec.vertices = {"c", "p", "q", "r", "s"};
    spec.edges = {{"a", "p", "c", false, true},
                  {"b", "q", "c", false, true},
                  {"d", "r", "c", false, true},
                  {"f", "s", "c", false, true}};
    spec.rotation = {
        {"c", {"a", "b", "d", "f"}}, {"p", {"a"}}, {"q", {"b"}}, {"r", {"d"}}, {"s", {"f"}}};
    BiposetInstance inst = build(spec);
    std::vector<Quadrant> qt(4, Quadrant::NE);
    std::vector<Quadrant> qh{Quadrant::SW, Quadrant::SE, Quadrant::SW, Quadrant::SE};
    CHECK(!check_special(inst.graph, inst.rotation, qt, qh).ok);

    // The cyclic word SW, SE, SW is a single wrapped SW run plus one SE run:
    // coherent, and with no X edges vacuously special.
    std::vector<Quadrant> qh3{Quadrant::SW, Quadrant::SE, Quadrant::SW};
    InstanceSpec spec3;
    spec3.vertices = {"c", "p", "q", "r"};
    spec3.edges = {{"a", "p", "c", false, true},
                   {"b", "q", "c", false, true},
                   {"d", "r", "c", false, true}};
    spec3.rotation = {{"c", {"a", "b", "d"}}, {"p", {"a"}}, {"q", {"b"}}, {"r", {"d"}}};
    BiposetInstance inst3 = build(spec3);
    std::vector<Quadrant> qt3(3, Quadrant::NE);
    CHECK(check_special(inst3.graph, inst3.rotation, qt3, qh3).ok);
}
