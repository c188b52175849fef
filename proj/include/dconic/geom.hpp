#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <span>

namespace dconic {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Degeneracy threshold for coincidences and parallelism, in normalized units.
inline constexpr double kDegeneracyEps = 1e-12;

/// Default residual tolerance for verification reports.
inline constexpr double kDefaultTolerance = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
  friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Point, Point) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
constexpr Point perp(Point a) { return {-a.y, a.x}; }
inline Point unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline bool is_finite(Point a) { return std::isfinite(a.x) && std::isfinite(a.y); }

/// Line a*x + b*y + c = 0 kept with a^2 + b^2 = 1 and the first nonzero of
/// (a, b) positive, so equal lines compare equal coefficient-wise.
struct Line {
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;

  /// Normalizes arbitrary coefficients. Throws InvalidArgument when a = b = 0.
  static Line from_coefficients(double a, double b, double c);

  double signed_distance(Point p) const { return a * p.x + b * p.y + c; }
  Point normal() const { return {a, b}; }
  Point direction() const { return {-b, a}; }
  /// Point of the line closest to the origin.
  Point anchor() const { return {-a * c, -b * c}; }

  friend bool operator==(const Line&, const Line&) = default;
};

Line line_through(Point p, Point q);

/// Intersection of two lines; `parallel_eps` bounds |a1 b2 - a2 b1|.
Point intersect_lines(const Line& l1, const Line& l2, double parallel_eps = kDegeneracyEps);

Point reflect_point(Point p, const Line& l);
Point foot_perpendicular(Point p, const Line& l);

/// Reduces any angle to [0, 2pi). All angle wrapping goes through here.
double normalize_angle(double angle);

/// Distance from `angle` to the nearest integer multiple of `period`.
double angle_residual(double angle, double period = kTwoPi);

/// Counterclockwise angle from ray F->A to ray F->B in [0, 2pi).
double directed_angle(Point focus, Point a, Point b);

/// Direction angle of a line modulo pi, in [0, pi).
double line_angle(const Line& l);

/// Normalized triangle area |cross(B-A, C-A)| / max(|B-A|, |C-A|).
double collinearity(Point a, Point b, Point c);

/// Projective map of the plane acting on homogeneous coordinates.
class ProjectiveMap {
 public:
  using Matrix = std::array<std::array<double, 3>, 3>;

  ProjectiveMap();
  explicit ProjectiveMap(const Matrix& m);

  static ProjectiveMap identity() { return ProjectiveMap(); }

  const Matrix& matrix() const { return m_; }
  double determinant() const;

  /// True when the matrices are proportional within `tol` after scaling
  /// both to unit Frobenius norm.
  bool equivalent(const ProjectiveMap& other, double tol = 1e-9) const;

 private:
  Matrix m_;
};

ProjectiveMap projective_from_correspondences(std::span<const Point, 4> src,
                                              std::span<const Point, 4> dst);

Point apply_map(const ProjectiveMap& map, Point p);

}  // namespace dconic
