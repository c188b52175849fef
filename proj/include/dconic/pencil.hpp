#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dconic/geom.hpp"

namespace dconic {

enum class ConicKind { Ellipse, Parabola, Hyperbola };

/// A x^2 + B xy + C y^2 + D x + E y + G = 0.
struct QuadraticForm {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0, g = 0.0;

  double value(Point p) const { return a * p.x * p.x + b * p.x * p.y + c * p.y * p.y + d * p.x + e * p.y + g; }
  Point gradient(Point p) const { return {2.0 * a * p.x + b * p.y + d, b * p.x + 2.0 * c * p.y + e}; }
  double max_coefficient() const;
  /// Same zero set, largest coefficient magnitude 1.
  QuadraticForm normalized() const;
  /// |Q(P)| with Q normalized, divided by max(1, |P|^2).
  double membership_residual(Point p) const;
};

struct Circle {
  Point center;
  double radius = 1.0;
};

struct CircleFit {
  Circle circle;
  double max_deviation = 0.0;  ///< max | |P - center| - radius | over the samples
};

/// Algebraic least-squares circle through three or more points.
CircleFit fit_circle(std::span<const Point> points);

/// Member of the focus-sharing pencil (p + x)^2 + y^2 = t (1 + p x)^2.
/// Focus (-p, 0), directrix x = -1/p, eccentricity p*sqrt(t).
class FocalConic {
 public:
  /// Throws DegenerateP for |p| within 1e-9 of 1 and NonpositiveT for t <= 0.
  FocalConic(double p, double t);

  double p() const { return p_; }
  double t() const { return t_; }
  Point focus() const { return {-p_, 0.0}; }
  double eccentricity() const { return p_ * std::sqrt(t_); }
  /// Semi-latus rectum sqrt(t) (1 - p^2); negative when |p| > 1.
  double semi_latus() const { return std::sqrt(t_) * (1.0 - p_ * p_); }
  /// x-coordinate of the line the pencil avoids; empty for p = 0.
  std::optional<double> excluded_line_x() const;
  ConicKind kind() const;

  /// Signed focal radius along direction alpha: F + r (cos a, sin a) is on the conic.
  double radius_at(double alpha) const;
  /// d r / d alpha.
  double radius_derivative(double alpha) const;

  /// Center of an ellipse or hyperbola member. Throws ParabolaMember.
  Point center() const;
  /// The other focus, F reflected through the center. Throws ParabolaMember.
  Point second_focus() const;

  friend bool operator==(const FocalConic&, const FocalConic&) = default;

 private:
  double p_;
  double t_;
};

FocalConic pencil_member(double p, double t);

/// Throws AsymptoticDirection when 1 - sqrt(t) p cos(alpha) vanishes.
Point point_at(const FocalConic& c, double alpha);
/// d/d alpha of point_at.
Point point_derivative(const FocalConic& c, double alpha);
Line tangent_at(const FocalConic& c, double alpha);

/// Pencil parameter of the member through X. Throws OnExcludedLine.
double parameter_of(double p, Point x);

ConicKind classify(const FocalConic& c);
QuadraticForm quadratic_form(const FocalConic& c);

/// Relative discriminant of the line/conic substitution: zero iff tangent.
double tangency_residual(const QuadraticForm& q, const Line& l);
double tangency_residual(const FocalConic& c, const Line& l);

/// Point where a (near-)tangent line touches the conic: the vertex of the
/// quadratic obtained by restricting the form to the line.
Point tangency_point(const QuadraticForm& q, const Line& l);

FocalConic limiting_conic(double p);

/// Circle through the feet of perpendiculars from the focus to sampled
/// tangents. Throws ParabolaMember.
CircleFit pedal_circle_fit(const FocalConic& c, int samples = 16);
Circle pedal_circle(const FocalConic& c);

/// Sample angles used for the pedal fit, kept clear of asymptotic directions.
std::vector<double> safe_sample_angles(const FocalConic& c, int count, double offset = 0.1);

}  // namespace dconic
