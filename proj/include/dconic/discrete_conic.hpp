#pragma once

#include <vector>

#include "dconic/geom.hpp"
#include "dconic/pencil.hpp"

namespace dconic {

/// Polygon V_1..V_n on the pencil member (p, t) whose consecutive vertices
/// subtend the angle theta at the focus (-p, 0); V_j sits at focal angle
/// phi + (j - 1) theta.
struct DiscreteConic {
  double p = 0.0;
  double t = 1.0;
  double theta = 0.0;
  double phi = 0.0;
  int n = 0;
  bool closed = false;
  std::vector<Point> vertices;

  FocalConic carrier() const { return FocalConic(p, t); }
  Point focus() const { return {-p, 0.0}; }
  double focal_phase(int j) const { return phi + (j - 1) * theta; }

  /// 1-based. Closed polygons wrap the index; open chains throw InvalidArgument
  /// outside 1..n.
  Point vertex(int j) const;
  int side_count() const { return closed ? n : n - 1; }
  /// S_j = V_j V_{j+1}.
  Line side(int j) const;

  friend bool operator==(const DiscreteConic&, const DiscreteConic&) = default;
};

/// n * theta is a multiple of 2pi within 1e-9.
bool closes(int n, double theta);

/// Vertices at focal angles phi + (j-1) theta on pencil member (p, t).
/// Requires theta in (0, pi) and n >= 3.
DiscreteConic synthesize(double p, double t, double theta, double phi, int n);

/// Vertices from the closed-form coordinates
///   V_j = ((p - cos b) / (p cos b - 1), (p^2 - 1) sin b / (p cos b - 1)),
///   b = (j - 1) theta + phi.
/// These lie on x^2 + y^2 / (1 - p^2) = 1, i.e. the t = 1 member.
DiscreteConic closed_form_vertices(double p, double theta, double phi, int n);

struct PedalScaffold {
  Point pedal_point;            ///< P = (p, 0)
  std::vector<Point> samples;   ///< X_j = (cos(j theta + phi), sin(j theta + phi)), j = 0..n
  std::vector<Line> lines;      ///< L_j through X_j, perpendicular to P X_j
};

struct PedalConstruction {
  PedalScaffold scaffold;
  DiscreteConic conic;          ///< V_{j+1} = L_j ∩ L_{j+1}, j = 0..n-1
};

/// Discrete negative pedal of the unit circle from P = (p, 0). The vertices
/// land on the member t = sec^2(theta/2) at focal phase phi + theta/2.
PedalConstruction negative_pedal(double p, double theta, double phi, int n);

/// Contact points M_j of the sides S_j with the member t cos^2(theta/2).
DiscreteConic tangency_points(const DiscreteConic& d);

/// Intersections Z_i = S_i ∩ S_{i+k} of side lines k apart (closed polygons,
/// 1 <= k < n, 2k != n).
DiscreteConic grid_layer(const DiscreteConic& d, int k);

struct OppositeSides {
  std::vector<Point> points;   ///< K_i = S_i ∩ S_{i+n/2}, parallel pairs skipped
  std::vector<int> indices;    ///< the i of each K_i
  Line line;                   ///< total least-squares fit
  double max_residual = 0.0;   ///< worst point-to-line distance
};

OppositeSides opposite_side_intersections(const DiscreteConic& d);

/// Number of consecutive vertex pairs lying on opposite sides of the focus
/// along their focal direction (hyperbola carriers switching branch).
int branch_changes(const DiscreteConic& d);

/// Threshold on |a1 b2 - a2 b1| used by every construction in this module.
inline constexpr double kConstructionParallelEps = 1e-10;

}  // namespace dconic
