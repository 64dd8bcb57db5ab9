#ifndef XYPLANAR_IO_H
#define XYPLANAR_IO_H

#include <string>

#include "xyplanar/instance.h"

namespace xyplanar {

/// Instance file schema (JSON object, unknown fields rejected):
///   vertices   : [string, ...]
///   edges      : [{id, tail, head, in_x, in_y}, ...]
///   rotation   : {vertex: [edge id, ...]}          counter-clockwise
///   upward_y   : {vertex: {in: [...], out: [...]}} left-to-right
///   outer_face : "edgeid:+" or "edgeid:-"          (absent iff no edges)
/// Darts are written as edge id plus ":+" (tail->head) or ":-".
BiposetInstance load_instance(const std::string& json_text);
BiposetInstance load_instance_file(const std::string& path);
std::string save_instance(const BiposetInstance& inst);

bool instances_equal(const BiposetInstance& a, const BiposetInstance& b);

}  // namespace xyplanar

#endif
