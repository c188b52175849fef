#include "dconic/pencil.hpp"

#include <Eigen/Dense>

#include <algorithm>

#include "dconic/error.hpp"

namespace dconic {

namespace {
constexpr double kClassifyHalfWidth = 1e-12;
constexpr double kDegenerateP = 1e-9;
}  // namespace

double QuadraticForm::max_coefficient() const {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d), std::abs(e), std::abs(g)});
}

QuadraticForm QuadraticForm::normalized() const {
  const double m = max_coefficient();
  if (m == 0.0) return *this;
  return {a / m, b / m, c / m, d / m, e / m, g / m};
}

double QuadraticForm::membership_residual(Point p) const {
  return std::abs(normalized().value(p)) / std::max(1.0, dot(p, p));
}

CircleFit fit_circle(std::span<const Point> points) {
  if (points.size() < 3) {
    throw GeometryError(ErrorCode::InvalidArgument, "circle fit needs at least three points");
  }
  Point centroid{};
  for (Point p : points) centroid = centroid + p;
  centroid = centroid / static_cast<double>(points.size());

  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point q = points[static_cast<std::size_t>(i)] - centroid;
    a(i, 0) = q.x;
    a(i, 1) = q.y;
    a(i, 2) = 1.0;
    rhs(i) = -(q.x * q.x + q.y * q.y);
  }
  const Eigen::Vector3d sol = a.colPivHouseholderQr().solve(rhs);
  const Point center{-sol(0) / 2.0, -sol(1) / 2.0};
  const double r2 = center.x * center.x + center.y * center.y - sol(2);
  if (!(r2 > 0.0)) {
    throw GeometryError(ErrorCode::DegenerateConfiguration, "points do not determine a circle");
  }
  CircleFit fit{{center + centroid, std::sqrt(r2)}, 0.0};
  for (Point p : points) {
    fit.max_deviation = std::max(fit.max_deviation, std::abs(distance(p, fit.circle.center) - fit.circle.radius));
  }
  return fit;
}

// ---------------------------------------------------------------------------

FocalConic::FocalConic(double p, double t) : p_(p), t_(t) {
  if (!std::isfinite(p) || std::abs(std::abs(p) - 1.0) <= kDegenerateP) {
    throw GeometryError(ErrorCode::DegenerateP, "p = +-1 collapses the pencil");
  }
  if (!std::isfinite(t) || !(t > 0.0)) {
    throw GeometryError(ErrorCode::NonpositiveT, "pencil parameter t must be positive");
  }
}

std::optional<double> FocalConic::excluded_line_x() const {
  if (p_ == 0.0) return std::nullopt;
  return -1.0 / p_;
}

ConicKind FocalConic::kind() const {
  const double e2 = p_ * p_ * t_;
  if (std::abs(e2 - 1.0) <= kClassifyHalfWidth) return ConicKind::Parabola;
  return e2 < 1.0 ? ConicKind::Ellipse : ConicKind::Hyperbola;
}

double FocalConic::radius_at(double alpha) const {
  const double den = 1.0 - std::sqrt(t_) * p_ * std::cos(alpha);
  if (std::abs(den) <= kDegeneracyEps) {
    throw GeometryError(ErrorCode::AsymptoticDirection, "focal ray is parallel to an asymptote");
  }
  return semi_latus() / den;
}

double FocalConic::radius_derivative(double alpha) const {
  const double k = std::sqrt(t_) * p_;
  const double den = 1.0 - k * std::cos(alpha);
  if (std::abs(den) <= kDegeneracyEps) {
    throw GeometryError(ErrorCode::AsymptoticDirection, "focal ray is parallel to an asymptote");
  }
  return -semi_latus() * k * std::sin(alpha) / (den * den);
}

Point FocalConic::center() const {
  if (kind() == ConicKind::Parabola) {
    throw GeometryError(ErrorCode::ParabolaMember, "a parabola has no center");
  }
  return {-p_ * (1.0 - t_) / (1.0 - t_ * p_ * p_), 0.0};
}

Point FocalConic::second_focus() const { return 2.0 * center() - focus(); }

FocalConic pencil_member(double p, double t) { return FocalConic(p, t); }

Point point_at(const FocalConic& c, double alpha) {
  return c.focus() + c.radius_at(alpha) * unit_vector(alpha);
}

Point point_derivative(const FocalConic& c, double alpha) {
  const Point u = unit_vector(alpha);
  return c.radius_derivative(alpha) * u + c.radius_at(alpha) * perp(u);
}

Line tangent_at(const FocalConic& c, double alpha) {
  const Point x = point_at(c, alpha);
  const Point g = quadratic_form(c).gradient(x);
  return Line::from_coefficients(g.x, g.y, -dot(g, x));
}

double parameter_of(double p, Point x) {
  if (std::abs(std::abs(p) - 1.0) <= kDegenerateP) {
    throw GeometryError(ErrorCode::DegenerateP, "p = +-1 collapses the pencil");
  }
  const double w = 1.0 + p * x.x;
  if (std::abs(w) <= kDegeneracyEps * std::max(1.0, std::abs(p * x.x))) {
    throw GeometryError(ErrorCode::OnExcludedLine, "point lies on x = -1/p");
  }
  const double u = p + x.x;
  return (u * u + x.y * x.y) / (w * w);
}

ConicKind classify(const FocalConic& c) { return c.kind(); }

QuadraticForm quadratic_form(const FocalConic& c) {
  // (p + x)^2 + y^2 - t (1 + p x)^2
  const double p = c.p(), t = c.t();
  return {1.0 - t * p * p, 0.0, 1.0, 2.0 * p * (1.0 - t), 0.0, p * p - t};
}

double tangency_residual(const QuadraticForm& q, const Line& l) {
  const QuadraticForm qn = q.normalized();
  const Point p0 = l.anchor();
  const Point d = l.direction();
  const double alpha = qn.a * d.x * d.x + qn.b * d.x * d.y + qn.c * d.y * d.y;
  const double beta = dot(qn.gradient(p0), d);
  const double gamma = qn.value(p0);
  const double disc = beta * beta - 4.0 * alpha * gamma;
  return std::abs(disc) / std::max({1.0, beta * beta, std::abs(4.0 * alpha * gamma)});
}

double tangency_residual(const FocalConic& c, const Line& l) {
  return tangency_residual(quadratic_form(c), l);
}

Point tangency_point(const QuadraticForm& q, const Line& l) {
  const QuadraticForm qn = q.normalized();
  const Point p0 = l.anchor();
  const Point d = l.direction();
  const double alpha = qn.a * d.x * d.x + qn.b * d.x * d.y + qn.c * d.y * d.y;
  const double beta = dot(qn.gradient(p0), d);
  if (std::abs(alpha) <= kDegeneracyEps) {
    throw GeometryError(ErrorCode::DegenerateConfiguration, "line runs along an asymptotic direction");
  }
  return p0 + (-beta / (2.0 * alpha)) * d;
}

FocalConic limiting_conic(double p) { return FocalConic(p, 1.0); }

std::vector<double> safe_sample_angles(const FocalConic& c, int count, double offset) {
  const double k = std::sqrt(c.t()) * c.p();
  const double step = kTwoPi / count;
  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    double a = offset + step * i;
    for (int guard = 0; guard < 8 && std::abs(1.0 - k * std::cos(a)) < 0.05; ++guard) a += 0.37 * step;
    angles.push_back(a);
  }
  return angles;
}

CircleFit pedal_circle_fit(const FocalConic& c, int samples) {
  if (c.kind() == ConicKind::Parabola) {
    throw GeometryError(ErrorCode::ParabolaMember, "the focal pedal of a parabola is a line");
  }
  std::vector<Point> feet;
  feet.reserve(static_cast<std::size_t>(samples));
  for (double a : safe_sample_angles(c, samples)) {
    feet.push_back(foot_perpendicular(c.focus(), tangent_at(c, a)));
  }
  return fit_circle(feet);
}

Circle pedal_circle(const FocalConic& c) { return pedal_circle_fit(c).circle; }

}  // namespace dconic
