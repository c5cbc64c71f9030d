#include "stretchlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stretchlab/error.hpp"

namespace stretchlab {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) {
  throw StretchError(ErrorKind::Parse, what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
}

int edge_id(const json& v) {
  if (!v.is_string()) parse_fail("edge ids must be strings \"e<k>\"");
  const std::string s = v.get<std::string>();
  if (s.size() < 2 || s[0] != 'e') parse_fail("bad edge id '" + s + "'");
  int k = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9' || (i == 1 && s[i] == '0' && s.size() > 2)) {
      parse_fail("bad edge id '" + s + "'");
    }
    k = k * 10 + (s[i] - '0');
    if (k > 1'000'000) parse_fail("edge id out of range '" + s + "'");
  }
  return k;
}

IdealTriangulation parse_triangulation(const json& t) {
  if (t.is_string()) {
    if (t.get<std::string>() != "S_1_1") {
      parse_fail("unknown built-in triangulation '" + t.get<std::string>() + "'");
    }
    return standard_torus_triangulation();
  }
  if (!t.is_object() || !t.contains("triangles")) {
    parse_fail("triangulation must be \"S_1_1\" or an object with \"triangles\"");
  }
  std::optional<int> genus;
  if (t.contains("genus")) {
    if (!t["genus"].is_number_integer()) parse_fail("genus must be an integer");
    genus = t["genus"].get<int>();
  }
  const json& tris = t["triangles"];
  if (!tris.is_array()) parse_fail("triangles must be a list");
  std::vector<std::array<int, 3>> lists;
  for (const json& tri : tris) {
    if (!tri.is_array() || tri.size() != 3) parse_fail("each triangle lists exactly 3 edges");
    lists.push_back({edge_id(tri[0]), edge_id(tri[1]), edge_id(tri[2])});
  }
  return IdealTriangulation::from_edge_lists(std::move(lists), genus);
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_number(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

SurfaceDoc parse_surface(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) parse_fail("surface file must be a JSON object");
  for (const char* key : {"surface", "triangulation", "shears"}) {
    if (!doc.contains(key)) parse_fail(std::string("missing key \"") + key + "\"");
  }
  if (!doc["surface"].is_string()) parse_fail("\"surface\" must be a string");
  IdealTriangulation tri = parse_triangulation(doc["triangulation"]);

  const json& sh = doc["shears"];
  if (!sh.is_object()) parse_fail("\"shears\" must be an object keyed by edge id");
  std::vector<double> shears(tri.edge_count(), 0.0);
  std::vector<bool> seen(tri.edge_count(), false);
  for (const auto& [key, value] : sh.items()) {
    const int e = edge_id(json(key));
    if (e >= tri.edge_count()) parse_fail("shear for unknown edge '" + key + "'");
    if (!value.is_number()) parse_fail("shear '" + key + "' is not a number");
    shears[e] = value.get<double>();
    seen[e] = true;
  }
  for (int e = 0; e < tri.edge_count(); ++e) {
    if (!seen[e]) parse_fail("missing shear for edge e" + std::to_string(e));
  }
  return {doc["surface"].get<std::string>(), ShearStructure(std::move(tri), std::move(shears))};
}

SurfaceDoc read_surface_file(const std::string& path) {
  return parse_surface(read_text_file(path));
}

std::string emit_surface(const SurfaceDoc& doc) {
  const IdealTriangulation& tri = doc.structure.triangulation();
  std::ostringstream out;
  out << "{\n  \"surface\": " << json(doc.label).dump() << ",\n  \"triangulation\": ";
  if (tri.is_standard_torus()) {
    out << "\"S_1_1\"";
  } else {
    out << "{\n    \"genus\": " << tri.genus() << ",\n    \"triangles\": [";
    const auto& lists = tri.edge_lists();
    for (std::size_t t = 0; t < lists.size(); ++t) {
      out << (t ? ", " : "") << "[\"e" << lists[t][0] << "\", \"e" << lists[t][1] << "\", \"e"
          << lists[t][2] << "\"]";
    }
    out << "]\n  }";
  }
  out << ",\n  \"shears\": {";
  const auto& shears = doc.structure.shears();
  for (std::size_t e = 0; e < shears.size(); ++e) {
    out << (e ? "," : "") << "\n    \"e" << e << "\": " << format_number(shears[e], 17);
  }
  out << "\n  }\n}\n";
  return out.str();
}

TrainTrack parse_track(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("branches") || !doc.contains("switches")) {
    parse_fail("track file needs \"branches\" and \"switches\"");
  }
  if (!doc["branches"].is_number_integer()) parse_fail("\"branches\" must be an integer");
  if (!doc["switches"].is_array()) parse_fail("\"switches\" must be a list");
  auto ids = [](const json& sw, const char* side) {
    if (!sw.contains(side) || !sw[side].is_array()) {
      parse_fail(std::string("switch needs a \"") + side + "\" list");
    }
    std::vector<int> out;
    for (const json& v : sw[side]) {
      if (!v.is_number_integer()) parse_fail("half-branch ids must be integers");
      out.push_back(v.get<int>());
    }
    return out;
  };
  std::vector<Switch> switches;
  for (const json& sw : doc["switches"]) {
    if (!sw.is_object()) parse_fail("each switch must be an object");
    switches.push_back({ids(sw, "left"), ids(sw, "right")});
  }
  return TrainTrack(doc["branches"].get<int>(), std::move(switches));
}

TrainTrack read_track_file(const std::string& path) { return parse_track(read_text_file(path)); }

}  // namespace stretchlab
