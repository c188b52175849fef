#include "dconic/duality.hpp"

#include <algorithm>

#include "dconic/error.hpp"

namespace dconic {

Reciprocator make_reciprocator(Point center, double k) {
  if (!(k > 0.0) || !std::isfinite(k) || !is_finite(center)) {
    throw GeometryError(ErrorCode::InvalidArgument, "reciprocation radius must be positive");
  }
  return {center, k};
}

Line polar_of(const Reciprocator& r, Point p) {
  const Point v = p - r.center;
  const double n2 = dot(v, v);
  if (std::sqrt(n2) <= kDegeneracyEps * std::max(1.0, norm(r.center))) {
    throw GeometryError(ErrorCode::CenterHasNoPolar, "the center of reciprocation has no polar");
  }
  const Point inverse = r.center + (r.k * r.k / n2) * v;
  return Line::from_coefficients(v.x, v.y, -dot(v, inverse));
}

Point pole_of(const Reciprocator& r, const Line& l) {
  const double s = l.signed_distance(r.center);
  if (std::abs(s) <= kDegeneracyEps * std::max(1.0, norm(r.center))) {
    throw GeometryError(ErrorCode::LineThroughCenter, "a line through the center has no pole");
  }
  // Foot is center - s n; inverting it scales the offset by k^2 / s^2.
  return r.center - (r.k * r.k / s) * l.normal();
}

Circle invert_circle(const Reciprocator& r, const Circle& c) {
  const Point off = c.center - r.center;
  const double d2 = dot(off, off);
  const double den = d2 - c.radius * c.radius;
  if (std::abs(den) <= kDegeneracyEps * std::max(1.0, d2)) {
    throw GeometryError(ErrorCode::DegenerateConfiguration, "circle passes through the reciprocation center");
  }
  const double k2 = r.k * r.k;
  return {r.center + (k2 / den) * off, k2 * c.radius / std::abs(den)};
}

DualCircle dual_conic(const Reciprocator& r, const FocalConic& c, const DualPolicy& policy) {
  if (distance(r.center, c.focus()) > kDegeneracyEps * std::max(1.0, norm(c.focus()))) {
    throw GeometryError(ErrorCode::CenterNotFocus, "reciprocate about the focus of the conic");
  }
  const Circle pedal = pedal_circle(c);

  Reciprocator rec = r;
  for (int attempt = 0;; ++attempt) {
    const Circle dual = invert_circle(rec, pedal);
    const bool inside = distance(dual.center, rec.center) < dual.radius;
    if (inside || !policy.require_focus_inside) {
      DualCircle out{dual, rec.k, 0.0};
      const double step = kTwoPi / policy.verify_samples;
      for (int i = 0; i < policy.verify_samples; ++i) {
        double a = 0.05 + step * i;
        Line tangent{};
        // Skip measure-zero tangents through the focus (and asymptotic rays).
        for (int guard = 0;; ++guard) {
          try {
            tangent = tangent_at(c, a);
            if (std::abs(tangent.signed_distance(rec.center)) > 1e-9) break;
          } catch (const GeometryError& e) {
            if (e.code() != ErrorCode::AsymptoticDirection) throw;
          }
          if (guard > 8) throw GeometryError(ErrorCode::DegenerateConfiguration, "no usable tangent sample");
          a += 0.013;
        }
        const Point pole = pole_of(rec, tangent);
        out.max_deviation = std::max(out.max_deviation, std::abs(distance(pole, dual.center) - dual.radius));
      }
      return out;
    }
    if (attempt >= policy.max_retries) {
      throw GeometryError(ErrorCode::FocusOutsideDual, "focus stays outside the dual circle");
    }
    rec.k *= 0.5;
  }
}

}  // namespace dconic
