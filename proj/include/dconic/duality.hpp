#pragma once

#include "dconic/geom.hpp"
#include "dconic/pencil.hpp"

namespace dconic {

/// Polar duality about the circle of radius k centered at `center`.
struct Reciprocator {
  Point center;
  double k = 1.0;
};

/// Throws InvalidArgument unless k > 0.
Reciprocator make_reciprocator(Point center, double k = 1.0);

/// Line perpendicular to OP through the inverse of P. Throws CenterHasNoPolar.
Line polar_of(const Reciprocator& r, Point p);

/// Inverse of the foot of the perpendicular from the center. Throws LineThroughCenter.
Point pole_of(const Reciprocator& r, const Line& l);

/// Inverse of a circle not passing through the reciprocation center.
Circle invert_circle(const Reciprocator& r, const Circle& c);

struct DualPolicy {
  bool require_focus_inside = true;
  int max_retries = 8;
  int verify_samples = 32;
};

struct DualCircle {
  Circle circle;
  double k = 1.0;              ///< radius actually used (after retries)
  double max_deviation = 0.0;  ///< worst pole-to-circle distance over sampled tangents
};

/// Reciprocal of a pencil member about its focus: the inverse of its pedal
/// circle. Poles of sampled tangents are measured against the result.
/// Throws CenterNotFocus, ParabolaMember, FocusOutsideDual.
DualCircle dual_conic(const Reciprocator& r, const FocalConic& c, const DualPolicy& policy = {});

}  // namespace dconic
