#include <fstream>
#include <iostream>
#include <string>

#include "xyplanar/draw.h"
#include "xyplanar/io.h"

using namespace xyplanar;

int cmd_draw_impl(const std::string& path, const std::string& format,
                  const std::string& out_path) {
    PreparedInstance p;
    try {
        p = prepare(load_instance_file(path));
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
    Verdict v = test_xy_planarity(p);
    if (!v.accepted) {
        std::cerr << "instance rejected: no xy-planar drawing exists for these embeddings\n";
        return 1;
    }
    PolylineDrawing star = draw_windrose(*v.derived);
    PolylineDrawing dr = windrose_to_xy(p, *v.derived, star);
    DrawReport rep = validate_drawing(p, dr);
    if (!rep.ok) {
        std::cerr << "internal error: produced drawing failed validation: " << rep.violations[0]
                  << "\n";
        return 3;
    }
    std::string text = format == "svg" ? drawing_to_svg(p, dr) : drawing_to_json(p, dr);
    if (out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return 3;
        }
        out << text;
    }
    int max_bends = 0;
    for (EdgeId e = 0; e < p.graph().num_edges(); ++e)
        max_bends = std::max(max_bends, dr.bends(e));
    std::cerr << "drawing written: " << p.graph().num_edges() << " edges, at most " << max_bends
              << " bends per edge, coordinates up to " << dr.max_coordinate_bits() << " bits\n";
    return 0;
}
