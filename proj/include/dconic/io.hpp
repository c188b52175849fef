#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dconic/discrete_conic.hpp"
#include "dconic/pencil.hpp"
#include "dconic/render.hpp"
#include "dconic/verifier.hpp"

namespace dconic {

// JSON interchange. Numbers are written as shortest round-trip decimals, so
// deserialize(serialize(x)) == x bit for bit.
//
//   polygon: {"p","t","theta","phi","n","closed","vertices":[[x,y],...]}
//   report:  {"check","residuals","max_residual","tolerance","pass","metadata"}
//   conic:   {"p","t"}
//   scene:   {"viewbox":[xmin,ymin,xmax,ymax],"conics":[conic],"polygons":[polygon],
//             "points":[{"label","x","y"}],"lines":[{"a","b","c"}]}
//
// Readers throw InvalidArgument on malformed text or missing fields.

std::string serialize(const DiscreteConic& d);
std::string serialize(const Report& r);
std::string serialize(const FocalConic& c);
std::string serialize(const Scene& s);
std::string serialize(const std::vector<Report>& reports);
std::string serialize(const std::vector<DiscreteConic>& polygons);

DiscreteConic deserialize_polygon(std::string_view text);
Report deserialize_report(std::string_view text);
FocalConic deserialize_conic(std::string_view text);
Scene deserialize_scene(std::string_view text);

/// A single polygon object or an array of them.
std::vector<DiscreteConic> deserialize_polygons(std::string_view text);

/// True when the text holds a scene object (has a "viewbox" key).
bool looks_like_scene(std::string_view text);

/// Angles as plain radians ("0.5") or pi fractions: "pi", "-pi/4", "2pi/12",
/// "3*pi/2", "pi/6". Throws InvalidArgument otherwise.
double parse_angle(std::string_view text);

}  // namespace dconic
