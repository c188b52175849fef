#pragma once

#include <array>
#include <string>
#include <vector>

#include "dconic/discrete_conic.hpp"
#include "dconic/geom.hpp"
#include "dconic/pencil.hpp"

namespace dconic {

struct LabeledPoint {
  std::string label;
  Point at;

  friend bool operator==(const LabeledPoint&, const LabeledPoint&) = default;
};

/// Everything one figure shows. viewbox = {xmin, ymin, xmax, ymax} in
/// mathematical (y-up) coordinates.
struct Scene {
  std::array<double, 4> viewbox{-1.0, -1.0, 1.0, 1.0};
  std::vector<FocalConic> conics;
  std::vector<DiscreteConic> polygons;
  std::vector<LabeledPoint> points;
  std::vector<Line> lines;

  std::size_t item_count() const { return conics.size() + polygons.size() + points.size() + lines.size(); }

  friend bool operator==(const Scene&, const Scene&) = default;
};

/// Samples per conic branch. Hyperbola branches are split at the asymptotic
/// directions and wherever they leave a margin around the viewbox.
inline constexpr int kBranchSamples = 1024;

/// SVG 1.1 document with one top-level element per scene item, in the order
/// conics, polygons, lines, points. Throws EmptyScene when there is nothing to
/// draw and InvalidArgument for a degenerate viewbox or non-finite data.
std::string render_svg(const Scene& s);

/// Carrier, inscribed member (closed polygons), the polygon and its focus,
/// framed with a margin.
Scene scene_from_polygon(const DiscreteConic& d);

/// Members (p, t) for each t with the shared focus marked.
Scene pencil_scene(double p, const std::vector<double>& ts, std::array<double, 4> viewbox);

}  // namespace dconic
