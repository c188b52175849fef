#include "dconic/geom.hpp"

#include <Eigen/Dense>

#include <algorithm>

#include "dconic/error.hpp"

namespace dconic {

Line Line::from_coefficients(double a, double b, double c) {
  const double n = std::hypot(a, b);
  if (!(n > 0.0) || !std::isfinite(n) || !std::isfinite(c)) {
    throw GeometryError(ErrorCode::InvalidArgument, "line needs finite (a, b) not both zero");
  }
  a /= n;
  b /= n;
  c /= n;
  if (a < 0.0 || (a == 0.0 && b < 0.0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return Line{a, b, c};
}

Line line_through(Point p, Point q) {
  const Point d = q - p;
  const double len = norm(d);
  const double scale = std::max({1.0, norm(p), norm(q)});
  if (len <= kDegeneracyEps * scale) {
    throw GeometryError(ErrorCode::CoincidentPoints, "line_through needs two distinct points");
  }
  // Normal (dy, -dx); c chosen so that p lies on the line.
  const double a = d.y / len;
  const double b = -d.x / len;
  return Line::from_coefficients(a, b, -(a * p.x + b * p.y));
}

Point intersect_lines(const Line& l1, const Line& l2, double parallel_eps) {
  const double det = l1.a * l2.b - l2.a * l1.b;
  if (std::abs(det) <= parallel_eps) {
    throw GeometryError(ErrorCode::ParallelLines, "lines do not intersect in a finite point");
  }
  return {(l1.b * l2.c - l2.b * l1.c) / det, (l2.a * l1.c - l1.a * l2.c) / det};
}

Point reflect_point(Point p, const Line& l) {
  const double s = l.signed_distance(p);
  return p - 2.0 * s * l.normal();
}

Point foot_perpendicular(Point p, const Line& l) {
  const double s = l.signed_distance(p);
  return p - s * l.normal();
}

double normalize_angle(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round back up to exactly 2pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double angle_residual(double angle, double period) {
  double r = std::fmod(angle, period);
  if (r < 0.0) r += period;
  return std::min(r, period - r);
}

double directed_angle(Point focus, Point a, Point b) {
  const Point u = a - focus;
  const Point v = b - focus;
  const double scale = std::max(1.0, norm(focus));
  if (norm(u) <= kDegeneracyEps * scale || norm(v) <= kDegeneracyEps * scale) {
    throw GeometryError(ErrorCode::DegenerateRay, "angle measured from a point coinciding with the vertex");
  }
  return normalize_angle(std::atan2(cross(u, v), dot(u, v)));
}

double line_angle(const Line& l) {
  double a = std::atan2(l.direction().y, l.direction().x);
  a = std::fmod(a, kPi);
  if (a < 0.0) a += kPi;
  if (a >= kPi) a = 0.0;
  return a;
}

double collinearity(Point a, Point b, Point c) {
  const Point u = b - a;
  const Point v = c - a;
  const double m = std::max(norm(u), norm(v));
  if (m == 0.0) return 0.0;
  return std::abs(cross(u, v)) / m;
}

// ---------------------------------------------------------------------------
// Projective maps

ProjectiveMap::ProjectiveMap() : m_{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}} {}

ProjectiveMap::ProjectiveMap(const Matrix& m) : m_(m) {
  if (std::abs(determinant()) <= kDegeneracyEps) {
    throw GeometryError(ErrorCode::DegenerateConfiguration, "singular projective matrix");
  }
}

double ProjectiveMap::determinant() const {
  const auto& m = m_;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

namespace {

Eigen::Matrix3d to_eigen(const ProjectiveMap::Matrix& m) {
  Eigen::Matrix3d e;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) e(r, c) = m[r][c];
  return e;
}

// Similarity moving the centroid to the origin with mean distance sqrt(2).
Eigen::Matrix3d conditioning(std::span<const Point, 4> pts) {
  Point centroid{};
  for (Point p : pts) centroid = centroid + p;
  centroid = centroid / 4.0;
  double mean = 0.0;
  for (Point p : pts) mean += distance(p, centroid);
  mean /= 4.0;
  const double s = std::sqrt(2.0) / mean;
  Eigen::Matrix3d t;
  t << s, 0, -s * centroid.x, 0, s, -s * centroid.y, 0, 0, 1;
  return t;
}

bool has_collinear_triple(std::span<const Point, 4> pts) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) {
        const Point u = pts[j] - pts[i];
        const Point v = pts[k] - pts[i];
        const double m = std::max(dot(u, u), dot(v, v));
        if (m == 0.0 || std::abs(cross(u, v)) <= 1e-10 * m) return true;
      }
  return false;
}

}  // namespace

bool ProjectiveMap::equivalent(const ProjectiveMap& other, double tol) const {
  Eigen::Matrix3d a = to_eigen(m_);
  Eigen::Matrix3d b = to_eigen(other.m_);
  a /= a.norm();
  b /= b.norm();
  // Fix the sign by the largest-magnitude entry of a.
  Eigen::Index r, c;
  a.cwiseAbs().maxCoeff(&r, &c);
  if (a(r, c) * b(r, c) < 0.0) b = -b;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

ProjectiveMap projective_from_correspondences(std::span<const Point, 4> src,
                                              std::span<const Point, 4> dst) {
  if (has_collinear_triple(src) || has_collinear_triple(dst)) {
    throw GeometryError(ErrorCode::DegenerateConfiguration, "three of the four points are collinear");
  }
  const Eigen::Matrix3d ts = conditioning(src);
  const Eigen::Matrix3d td = conditioning(dst);

  // Eight equations in the nine entries of H, solved under |H| = 1.
  Eigen::Matrix<double, 8, 9> a;
  for (int i = 0; i < 4; ++i) {
    const Eigen::Vector3d s = ts * Eigen::Vector3d(src[i].x, src[i].y, 1.0);
    const Eigen::Vector3d d = td * Eigen::Vector3d(dst[i].x, dst[i].y, 1.0);
    const double x = s.x() / s.z(), y = s.y() / s.z();
    const double u = d.x() / d.z(), v = d.y() / d.z();
    a.row(2 * i) << x, y, 1, 0, 0, 0, -u * x, -u * y, -u;
    a.row(2 * i + 1) << 0, 0, 0, x, y, 1, -v * x, -v * y, -v;
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 8, 9>> svd(a, Eigen::ComputeFullV);
  const Eigen::Matrix<double, 9, 1> h = svd.matrixV().col(8);
  Eigen::Matrix3d hn;
  hn << h(0), h(1), h(2), h(3), h(4), h(5), h(6), h(7), h(8);
  Eigen::Matrix3d hm = td.inverse() * hn * ts;
  hm /= hm.norm();

  ProjectiveMap::Matrix out{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[r][c] = hm(r, c);
  return ProjectiveMap(out);
}

Point apply_map(const ProjectiveMap& map, Point p) {
  const auto& m = map.matrix();
  const double x = m[0][0] * p.x + m[0][1] * p.y + m[0][2];
  const double y = m[1][0] * p.x + m[1][1] * p.y + m[1][2];
  const double w = m[2][0] * p.x + m[2][1] * p.y + m[2][2];
  double fro = 0.0;
  for (const auto& row : m)
    for (double v : row) fro += v * v;
  const double scale = std::sqrt(fro) * std::max(1.0, norm(p));
  if (std::abs(w) <= kDegeneracyEps * scale) {
    throw GeometryError(ErrorCode::PointAtInfinity, "point lies on the vanishing line of the map");
  }
  return {x / w, y / w};
}

}  // namespace dconic
