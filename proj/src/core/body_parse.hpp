#pragma once

#include <optional>
#include <string>

#include "core/body.hpp"
#include "core/config.hpp"
#include "core/polytope2.hpp"

namespace polarlab {

/// Parsed body: always a grid body; planar polytope input additionally
/// carries the exact representation.
struct ParsedBody {
  GridBody body;
  std::optional<Polytope2> exact;
};

/// Body grammar:
///   {"kind":"ball","r":1.0}
///   {"kind":"polytope","vertices":[[x,y],...]}
///   {"kind":"halfspaces","normals":[[...],...],"offsets":[...]}   (offsets >= 0)
///   {"kind":"cone_j","j":2}
///   {"kind":"segment","to":[x,y]}
///   {"kind":"origin"} | {"kind":"space"}
///   {"kind":"scale","r":2.0,"of":{...}}
///   {"kind":"image","matrix":[[...],...],"of":{...}}
ParsedBody parse_body(const std::string& json_text, const Config& cfg);

/// Support/radial sample dump; +-inf rendered as "inf".
std::string body_to_json(const GridBody& a);

/// Inverse of body_to_json (used by tools that feed emitted bodies back in).
GridBody body_from_json_samples(const std::string& json_text, const Config& cfg);

}  // namespace polarlab
