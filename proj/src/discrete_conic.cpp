#include "dconic/discrete_conic.hpp"

#include <algorithm>
#include <string>

#include "dconic/error.hpp"

namespace dconic {

namespace {

void require_closed(const DiscreteConic& d, const char* op) {
  if (!d.closed) throw GeometryError(ErrorCode::NotClosed, std::string(op) + " needs a closed polygon");
}

void require_theta(double theta) {
  if (!(theta > 0.0) || !(theta < kPi)) {
    throw GeometryError(ErrorCode::AngleOutOfRange, "theta must lie in (0, pi)");
  }
}

}  // namespace

Point DiscreteConic::vertex(int j) const {
  if (n <= 0 || vertices.size() != static_cast<std::size_t>(n)) {
    throw GeometryError(ErrorCode::InvalidArgument, "vertex list does not match n");
  }
  if (closed) {
    const int i = ((j - 1) % n + n) % n;
    return vertices[static_cast<std::size_t>(i)];
  }
  if (j < 1 || j > n) throw GeometryError(ErrorCode::InvalidArgument, "vertex index outside open chain");
  return vertices[static_cast<std::size_t>(j - 1)];
}

Line DiscreteConic::side(int j) const { return line_through(vertex(j), vertex(j + 1)); }

bool closes(int n, double theta) { return angle_residual(n * theta, kTwoPi) <= 1e-9; }

DiscreteConic synthesize(double p, double t, double theta, double phi, int n) {
  const FocalConic c(p, t);
  require_theta(theta);
  if (n < 3) throw GeometryError(ErrorCode::InvalidArgument, "a discrete conic needs n >= 3");
  DiscreteConic d{p, t, theta, phi, n, closes(n, theta), {}};
  d.vertices.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) d.vertices.push_back(point_at(c, d.focal_phase(j)));
  return d;
}

DiscreteConic closed_form_vertices(double p, double theta, double phi, int n) {
  (void)FocalConic(p, 1.0);
  require_theta(theta);
  if (n < 3) throw GeometryError(ErrorCode::InvalidArgument, "a discrete conic needs n >= 3");
  DiscreteConic d{p, 1.0, theta, phi, n, closes(n, theta), {}};
  d.vertices.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const double b = d.focal_phase(j);
    const double den = p * std::cos(b) - 1.0;
    if (std::abs(den) <= kDegeneracyEps) {
      throw GeometryError(ErrorCode::FormulaPole, "vertex formula denominator vanishes");
    }
    d.vertices.push_back({(p - std::cos(b)) / den, (p * p - 1.0) * std::sin(b) / den});
  }
  d.t = parameter_of(p, d.vertices.front());
  return d;
}

PedalConstruction negative_pedal(double p, double theta, double phi, int n) {
  (void)FocalConic(p, 1.0);
  require_theta(theta);
  if (n < 3) throw GeometryError(ErrorCode::InvalidArgument, "a discrete conic needs n >= 3");

  PedalConstruction out;
  PedalScaffold& s = out.scaffold;
  s.pedal_point = {p, 0.0};
  for (int j = 0; j <= n; ++j) {
    const Point x = unit_vector(j * theta + phi);
    const Point nrm = x - s.pedal_point;
    s.samples.push_back(x);
    s.lines.push_back(Line::from_coefficients(nrm.x, nrm.y, -dot(nrm, x)));
  }

  const double half = 0.5 * theta;
  DiscreteConic& d = out.conic;
  d = DiscreteConic{p, 1.0 / (std::cos(half) * std::cos(half)), theta, phi + half, n, closes(n, theta), {}};
  for (int j = 0; j < n; ++j) {
    d.vertices.push_back(intersect_lines(s.lines[static_cast<std::size_t>(j)],
                                         s.lines[static_cast<std::size_t>(j + 1)], kConstructionParallelEps));
  }
  return out;
}

DiscreteConic tangency_points(const DiscreteConic& d) {
  if (d.n < 2) throw GeometryError(ErrorCode::InvalidArgument, "need at least two vertices");
  const double half = 0.5 * d.theta;
  const double cos_half = std::cos(half);
  const FocalConic inner(d.p, d.t * cos_half * cos_half);
  DiscreteConic m{d.p, inner.t(), d.theta, d.phi + half, d.side_count(), d.closed, {}};
  for (int j = 1; j <= m.n; ++j) m.vertices.push_back(point_at(inner, m.focal_phase(j)));
  return m;
}

DiscreteConic grid_layer(const DiscreteConic& d, int k) {
  require_closed(d, "grid_layer");
  if (k < 1 || k >= d.n) throw GeometryError(ErrorCode::InvalidArgument, "grid step must satisfy 1 <= k < n");
  if (2 * k == d.n) {
    throw GeometryError(ErrorCode::ParallelLines,
                        "k = n/2 pairs opposite sides; use opposite_side_intersections");
  }
  double acted = normalize_angle(k * d.theta);
  if (acted > kPi) acted -= kTwoPi;

  DiscreteConic z{d.p, 0.0, d.theta, d.phi + 0.5 * d.theta + 0.5 * acted, d.n, true, {}};
  double t_sum = 0.0;
  for (int i = 1; i <= d.n; ++i) {
    const Point zi = intersect_lines(d.side(i), d.side(i + k), kConstructionParallelEps);
    z.vertices.push_back(zi);
    t_sum += parameter_of(d.p, zi);
  }
  z.t = t_sum / d.n;
  return z;
}

OppositeSides opposite_side_intersections(const DiscreteConic& d) {
  require_closed(d, "opposite_side_intersections");
  if (d.n % 2 != 0) throw GeometryError(ErrorCode::InvalidArgument, "opposite sides need an even polygon");
  const int m = d.n / 2;
  OppositeSides out;
  for (int i = 1; i <= m; ++i) {
    try {
      out.points.push_back(intersect_lines(d.side(i), d.side(i + m), kConstructionParallelEps));
      out.indices.push_back(i);
    } catch (const GeometryError& e) {
      if (e.code() != ErrorCode::ParallelLines) throw;
    }
  }
  if (out.points.empty()) {
    throw GeometryError(ErrorCode::AllOppositeSidesParallel, "every pair of opposite sides is parallel");
  }
  if (out.points.size() < 2) {
    throw GeometryError(ErrorCode::DegenerateConfiguration, "a single opposite-side intersection fixes no line");
  }

  Point centroid{};
  for (Point k : out.points) centroid = centroid + k;
  centroid = centroid / static_cast<double>(out.points.size());
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (Point k : out.points) {
    const Point q = k - centroid;
    sxx += q.x * q.x;
    sxy += q.x * q.y;
    syy += q.y * q.y;
  }
  const double dir = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
  const Point u = unit_vector(dir);
  out.line = Line::from_coefficients(-u.y, u.x, -(-u.y * centroid.x + u.x * centroid.y));
  for (Point k : out.points) out.max_residual = std::max(out.max_residual, std::abs(out.line.signed_distance(k)));
  return out;
}

int branch_changes(const DiscreteConic& d) {
  int changes = 0;
  double prev = 0.0;
  for (int j = 1; j <= d.n; ++j) {
    const double s = dot(d.vertex(j) - d.focus(), unit_vector(d.focal_phase(j)));
    if (j > 1 && (s > 0.0) != (prev > 0.0)) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace dconic
