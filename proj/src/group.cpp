#include "dconic/group.hpp"

#include "dconic/error.hpp"

namespace dconic {

GroupElement::GroupElement(double scale) : s_(scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw GeometryError(ErrorCode::InvalidArgument, "group element scale must be positive and finite");
  }
}

GroupElement from_angle(ActionKind kind, double theta) {
  if (!(theta >= 0.0) || !(theta < kPi)) {
    throw GeometryError(ErrorCode::AngleOutOfRange, "group angles are restricted to [0, pi)");
  }
  const double c = std::cos(0.5 * theta);
  return GroupElement(kind == ActionKind::G ? 1.0 / c : c);
}

GroupElement compose(const GroupElement& a, const GroupElement& b) { return GroupElement(a.scale() * b.scale()); }

AngleChart as_angle(const GroupElement& e) {
  const double s = e.scale();
  if (s >= 1.0) return {ActionKind::G, 2.0 * std::acos(1.0 / s)};
  return {ActionKind::H, 2.0 * std::acos(s)};
}

double act_on_parameter(const GroupElement& e, double t) {
  if (!(t > 0.0)) throw GeometryError(ErrorCode::NonpositiveT, "pencil parameter t must be positive");
  return t * e.scale() * e.scale();
}

DiscreteConic act_on_discrete(const GroupElement& e, const DiscreteConic& d) {
  const AngleChart chart = as_angle(e);
  return synthesize(d.p, act_on_parameter(e, d.t), d.theta, d.phi + 0.5 * chart.angle, d.n);
}

std::optional<int> angle_multiple(const GroupElement& e, double theta, double tol) {
  if (!(theta > 0.0)) return std::nullopt;
  const double ratio = as_angle(e).angle / theta;
  const double k = std::round(ratio);
  if (k >= 1.0 && std::abs(ratio - k) <= tol) return static_cast<int>(k);
  return std::nullopt;
}

Point tangent_intersection(const FocalConic& c, double alpha, double gap) {
  return intersect_lines(tangent_at(c, alpha), tangent_at(c, alpha + gap), kConstructionParallelEps);
}

Point chord_envelope_point(const FocalConic& c, double alpha, double gap) {
  const Point x = point_at(c, alpha);
  const Point y = point_at(c, alpha + gap);
  const Point dx = point_derivative(c, alpha);
  const Point dy = point_derivative(c, alpha + gap);
  // Chord: nrm . P + off = 0 with nrm = perp(y - x), off = -nrm . x.
  const Point nrm = perp(y - x);
  const double off = -dot(nrm, x);
  const Point dnrm = perp(dy - dx);
  const double doff = -dot(dnrm, x) - dot(nrm, dx);
  const double det = nrm.x * dnrm.y - dnrm.x * nrm.y;
  if (std::abs(det) <= kDegeneracyEps * std::max(1.0, dot(nrm, nrm))) {
    throw GeometryError(ErrorCode::ParallelLines, "chord family is stationary here");
  }
  return {(nrm.y * doff - dnrm.y * off) / det, (dnrm.x * off - nrm.x * doff) / det};
}

std::vector<Point> tangent_intersections(const DiscreteConic& d, int k) {
  const QuadraticForm q = quadratic_form(d.carrier());
  auto tangent = [&](int j) {
    const Point v = d.vertex(j);
    const Point g = q.gradient(v);
    return Line::from_coefficients(g.x, g.y, -dot(g, v));
  };
  std::vector<Point> out;
  const int count = d.closed ? d.n : d.n - k;
  for (int j = 1; j <= count; ++j) {
    out.push_back(intersect_lines(tangent(j), tangent(j + k), kConstructionParallelEps));
  }
  return out;
}

}  // namespace dconic
