#ifndef XYPLANAR_DRAW_H
#define XYPLANAR_DRAW_H

#include "xyplanar/geometry.h"
#include "xyplanar/pipeline.h"

namespace xyplanar {

/// Polyline drawing with exact rational coordinates. edge_points[e] runs from
/// the edge's tail to its head, endpoints included; interior points are bends.
struct PolylineDrawing {
    std::vector<Point> vertex_pos;
    std::vector<std::vector<Point>> edge_points;

    int bends(EdgeId e) const { return static_cast<int>(edge_points[e].size()) - 2; }
    std::size_t max_coordinate_bits() const;
};

/// Arcs of the edge dependency graph: consecutive outgoing edges left-to-right
/// give forward arcs, consecutive incoming ones reversed arcs.
struct EdgeDependencyGraph {
    std::vector<std::pair<EdgeId, EdgeId>> arcs;
    bool acyclic = false;
};
EdgeDependencyGraph build_dependency_graph(const UpwardEmbedding& u,
                                           const std::vector<EdgeLabel>& labels);

struct DrawReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Exact checks of a windrose drawing of the derived graph: per-label strict
/// monotonicity, planarity, induced rotation and induced left-to-right orders.
DrawReport validate_windrose_drawing(const DerivedGraph& d, const PolylineDrawing& drawing);

/// Windrose planar drawing of the derived graph: an upward dominance drawing
/// of the NE-relabeled graph followed by one split-and-shift round per NW
/// edge, validated after every round.
PolylineDrawing draw_windrose(const DerivedGraph& d);

/// Concatenates the two gadget half-edge polylines of every original edge;
/// the subdivision vertex becomes a bend.
PolylineDrawing windrose_to_xy(const PreparedInstance& p, const DerivedGraph& d,
                               const PolylineDrawing& star_drawing);

/// The five drawing checks against the instance: (a) planarity, (b) X edges
/// strictly x-increasing, (c) Y edges strictly y-increasing, (d) induced
/// rotation equals the input embedding, (e) induced Y orders equal 𝒰.
DrawReport validate_drawing(const PreparedInstance& p, const PolylineDrawing& drawing);

/// Exhaustive search for a straight-line drawing satisfying checks (a)-(c)
/// on an integer grid (embedding-free). Refuses more than 7 vertices or
/// grids beyond 6x6.
struct GridOracleResult {
    bool decided = false;
    bool found = false;
    std::uint64_t placements_tried = 0;
};
GridOracleResult straightline_grid_oracle(const BiposetGraph& g, int width, int height);

std::string drawing_to_json(const PreparedInstance& p, const PolylineDrawing& drawing);
PolylineDrawing drawing_from_json(const PreparedInstance& p, const std::string& text);
std::string drawing_to_svg(const PreparedInstance& p, const PolylineDrawing& drawing);

}  // namespace xyplanar

#endif
