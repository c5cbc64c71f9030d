#pragma once

#include <string>
#include <string_view>

#include "stretchlab/shear.hpp"
#include "stretchlab/traintrack.hpp"

namespace stretchlab {

struct SurfaceDoc {
  std::string label;
  ShearStructure structure;
};

// JSON surface document:
//   {"surface": label,
//    "triangulation": "S_1_1" | {"genus": g, "triangles": [["e0","e1","e2"], ...]},
//    "shears": {"e0": x0, ...}}
// Throws StretchError (Parse, or the kind of the violated invariant).
SurfaceDoc parse_surface(std::string_view text);
SurfaceDoc read_surface_file(const std::string& path);

// Fixed key order, shears at 17 significant digits, trailing newline.
std::string emit_surface(const SurfaceDoc& doc);

// {"branches": n, "switches": [{"left": [...], "right": [...]}, ...]}
TrainTrack parse_track(std::string_view text);
TrainTrack read_track_file(const std::string& path);

std::string read_text_file(const std::string& path);

// printf-style %.<digits>g.
std::string format_number(double x, int digits = 12);

}  // namespace stretchlab
