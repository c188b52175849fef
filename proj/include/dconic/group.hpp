#pragma once

#include <optional>

#include "dconic/discrete_conic.hpp"
#include "dconic/pencil.hpp"

namespace dconic {

enum class ActionKind { G, H };

/// Element of the abelian group generated by G_theta (tangent intersections)
/// and H_theta (chord envelopes), stored as its scale on the dual circle
/// radius: G_theta <-> sec(theta/2), H_theta <-> cos(theta/2). Composition is
/// multiplication; the pencil parameter scales by s^2.
class GroupElement {
 public:
  explicit GroupElement(double scale);

  static GroupElement identity() { return GroupElement(1.0); }

  double scale() const { return s_; }
  GroupElement inverse() const { return GroupElement(1.0 / s_); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  double s_;
};

/// theta must lie in [0, pi); throws AngleOutOfRange otherwise.
GroupElement from_angle(ActionKind kind, double theta);

GroupElement compose(const GroupElement& a, const GroupElement& b);

struct AngleChart {
  ActionKind kind;
  double angle;
};

/// (G, 2 acos(1/s)) for s >= 1, else (H, 2 acos(s)).
AngleChart as_angle(const GroupElement& e);

/// t * s^2. Throws NonpositiveT.
double act_on_parameter(const GroupElement& e, double t);

/// Phase and parameter update of a discrete conic: t -> t s^2,
/// phi -> phi + angle/2 for both kinds, vertices re-synthesized.
DiscreteConic act_on_discrete(const GroupElement& e, const DiscreteConic& d);

/// k when the element's chart angle is k * theta for a positive integer k.
/// Only then do the image vertices coincide with tangent intersections
/// (G) or chord contacts (H) of the source vertices.
std::optional<int> angle_multiple(const GroupElement& e, double theta, double tol = 1e-9);

/// G'-construction: intersection of the tangents at focal angles alpha and
/// alpha + gap.
Point tangent_intersection(const FocalConic& c, double alpha, double gap);

/// H'-construction: the point where the chord joining focal angles alpha and
/// alpha + gap touches its envelope (chord line meets its alpha-derivative).
Point chord_envelope_point(const FocalConic& c, double alpha, double gap);

/// Vertices V_j' = T_j ∩ T_{j+k}, T_j the tangent to the carrier at V_j.
std::vector<Point> tangent_intersections(const DiscreteConic& d, int k);

}  // namespace dconic
