#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cwidth/measures.hpp"
#include "cwidth/symmetry.hpp"

namespace cwidth {

using Json = nlohmann::json;

/// Parses a support function description. Throws InvalidInputError on
/// malformed input. Schemas (all lengths in the same unit):
///   {"type":"example","a":3,"b":3,"C":0}
///   {"type":"sphere","width":1}
///   {"type":"rotsym","p":[...],"q":[...],"shift":0}         coefficients of R^{2k}
///   {"type":"rational","A":[[...]],"B":[[...]]}             entries x or [re, im]
///   {"type":"shift","base":{...},"C":0.5}
///   {"type":"translate","base":{...},"p":[x1,x2,x3]}
///   {"type":"average","base":{...},"group":{...}}           or "elements":[{"q":[w,x,y,z],"improper":false}]
SupportFunction support_from_json(const Json& j);
Json support_to_json(const SupportFunction& s);

/// {"group":"tetrahedral"|"cyclic","n":k,"orientation":[w,x,y,z]}. Returns the
/// group and the orientation (the tetrahedral default when omitted).
std::pair<PointGroup, Quaternion> group_from_json(const Json& j);

/// Parses "q0,q1,q2,q3".
Quaternion parse_orientation(const std::string& text);
/// Parses "NxM".
std::pair<int, int> parse_grid(const std::string& text);

struct SceneConfig {
  Json support;
  int n_theta = 64;
  int n_phi = 128;
  std::string output = "out";
  std::string format = "json";
  std::optional<Json> group;
};

SceneConfig scene_from_json(const Json& j);
SceneConfig load_scene(const std::string& path);

/// Rounds to 12 significant digits for stable JSON output.
double round12(double v);
Json to_json(const MeasureReport& r);

}  // namespace cwidth
