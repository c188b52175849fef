#include "dconic/verifier.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <limits>

#include "dconic/duality.hpp"
#include "dconic/error.hpp"
#include "dconic/group.hpp"

namespace dconic {

namespace {

constexpr double kHuge = std::numeric_limits<double>::max();

std::string num(double v) { return fmt::format("{}", v); }

void require_closed(const DiscreteConic& d, const char* check) {
  if (!d.closed) throw GeometryError(ErrorCode::NotClosed, std::string(check) + " needs a closed polygon");
}

double angle_period(const DiscreteConic& d) { return d.p * d.p * d.t < 1.0 ? kTwoPi : kPi; }

FocalConic inner_member(const DiscreteConic& d) {
  const double c = std::cos(0.5 * d.theta);
  return FocalConic(d.p, d.t * c * c);
}

// |angle(F, A, Z) - angle(F, Z, B)| modulo `period`: zero iff line FZ bisects AFB.
double bisection_residual(Point f, Point a, Point z, Point b, double period) {
  return angle_residual(directed_angle(f, a, z) - directed_angle(f, z, b), period);
}

Line line_with_normal_through(Point normal, Point through) {
  return Line::from_coefficients(normal.x, normal.y, -dot(normal, through));
}

Point unit(Point v) { return v / norm(v); }

void append(Report& into, const Report& part) {
  into.residuals.insert(into.residuals.end(), part.residuals.begin(), part.residuals.end());
}

Report merged(std::string name, const std::vector<Report>& parts, double tol,
              std::map<std::string, std::string> metadata) {
  Report r;
  for (const Report& p : parts) append(r, p);
  return make_report(std::move(name), std::move(r.residuals), tol, std::move(metadata));
}

}  // namespace

Report make_report(std::string name, std::vector<double> residuals, double tolerance,
                   std::map<std::string, std::string> metadata) {
  if (residuals.empty()) throw GeometryError(ErrorCode::InvalidArgument, name + ": no residuals");
  Report r{std::move(name), std::move(residuals), 0.0, tolerance, false, std::move(metadata)};
  for (double& v : r.residuals) {
    if (!std::isfinite(v)) {
      v = kHuge;
      r.metadata["nonfinite"] = "true";
    }
    r.max_residual = std::max(r.max_residual, v);
  }
  r.pass = r.max_residual <= tolerance;
  return r;
}

Report check_equal_angles(const DiscreteConic& d, Point focus, double tol) {
  if (d.n < 3) throw GeometryError(ErrorCode::InvalidArgument, "equal_angles needs at least three vertices");
  const double period = angle_period(d);
  std::vector<double> res;
  for (int j = 1; j <= d.side_count(); ++j) {
    res.push_back(angle_residual(directed_angle(focus, d.vertex(j), d.vertex(j + 1)) - d.theta, period));
  }
  return make_report("equal_angles", std::move(res), tol,
                     {{"period", num(period)}, {"branch_changes", std::to_string(branch_changes(d))}});
}

Report check_projective_regular(const DiscreteConic& d, double tol) {
  require_closed(d, "projective_regular");
  if (d.n < 5) throw GeometryError(ErrorCode::InvalidArgument, "projective_regular needs n >= 5");

  const std::array<Point, 4> src{d.vertex(1), d.vertex(2), d.vertex(3), d.vertex(4)};
  auto attempt = [&](double orientation) {
    std::array<Point, 4> dst{};
    for (int j = 1; j <= 4; ++j) dst[static_cast<std::size_t>(j - 1)] = unit_vector(orientation * (j - 1) * d.theta);
    const ProjectiveMap map = projective_from_correspondences(src, dst);
    std::vector<double> res;
    for (int j = 5; j <= d.n; ++j) {
      try {
        res.push_back(distance(apply_map(map, d.vertex(j)), unit_vector(orientation * (j - 1) * d.theta)));
      } catch (const GeometryError& e) {
        if (e.code() != ErrorCode::PointAtInfinity) throw;
        res.push_back(kHuge);
      }
    }
    return res;
  };

  std::vector<double> ccw = attempt(1.0);
  const double ccw_max = *std::max_element(ccw.begin(), ccw.end());
  if (ccw_max <= tol) return make_report("projective_regular", std::move(ccw), tol, {{"orientation", "ccw"}});
  std::vector<double> cw = attempt(-1.0);
  const double cw_max = *std::max_element(cw.begin(), cw.end());
  if (cw_max < ccw_max) return make_report("projective_regular", std::move(cw), tol, {{"orientation", "cw"}});
  return make_report("projective_regular", std::move(ccw), tol, {{"orientation", "ccw"}});
}

Report check_poncelet(const DiscreteConic& d, double tol) {
  require_closed(d, "poncelet");
  const FocalConic inner = inner_member(d);
  std::vector<double> res;
  for (int j = 1; j <= d.n; ++j) res.push_back(tangency_residual(inner, d.side(j)));
  return make_report("poncelet", std::move(res), tol, {{"inner_t", num(inner.t())}});
}

Report check_diagonals(const DiscreteConic& d, double tol) {
  require_closed(d, "diagonals");
  const Point f = d.focus();
  std::vector<double> res;
  std::map<std::string, std::string> meta;
  if (d.n % 2 == 0) {
    const int h = d.n / 2;
    for (int j = 1; j <= h; ++j) res.push_back(std::abs(line_through(d.vertex(j), d.vertex(j + h)).signed_distance(f)));
    meta["pairing"] = "V_j V_{j+n/2}";
  } else {
    const DiscreteConic m = tangency_points(d);
    const int h = (d.n - 1) / 2;
    double alt = 0.0;
    for (int j = 1; j <= d.n; ++j) {
      res.push_back(std::abs(line_through(d.vertex(j), m.vertex(j + h)).signed_distance(f)));
      alt = std::max(alt, std::abs(line_through(d.vertex(j), m.vertex(j + h + 1)).signed_distance(f)));
    }
    meta["pairing"] = "V_j M_{j+(n-1)/2}";
    meta["alt_pairing"] = "V_j M_{j+(n+1)/2}";
    meta["alt_pairing_max"] = num(alt);
  }
  return make_report("diagonals", std::move(res), tol, std::move(meta));
}

Report check_reflective(const DiscreteConic& d, int j, double tol) {
  require_closed(d, "reflective");
  const Point f = d.focus();
  const Point f2 = inner_member(d).second_focus();
  const DiscreteConic m = tangency_points(d);

  // F' -> S_j -> F: the mirror image of F' in S_j, the hit point and F line up.
  const Line sj = d.side(j);
  const Point image = reflect_point(f2, sj);
  std::vector<double> res{collinearity(image, m.vertex(j), f)};
  const Point hit = intersect_lines(sj, line_through(image, f), kConstructionParallelEps);
  const Line onward = line_through(hit, f);

  std::map<std::string, std::string> meta{{"j", std::to_string(j)}, {"second_focus_x", num(f2.x)}};
  if (d.n % 2 == 0) {
    const int opp = j + d.n / 2;
    res.push_back(collinearity(m.vertex(j), f, m.vertex(opp)));
    const Line so = d.side(opp);
    const Point hit2 = intersect_lines(onward, so, kConstructionParallelEps);
    res.push_back(collinearity(reflect_point(f, so), hit2, f2));
  } else {
    const int h = (d.n - 1) / 2;
    const int idx = ((j - h - 1) % d.n + d.n) % d.n + 1;
    res.push_back(std::abs(onward.signed_distance(d.vertex(idx))) / std::max(1.0, norm(d.vertex(idx))));
    meta["target_vertex"] = std::to_string(idx);
    meta["alt_target_residual"] = num(std::abs(onward.signed_distance(d.vertex(j + h))));
  }
  return make_report("reflective", std::move(res), tol, std::move(meta));
}

Report check_isogonal(const DiscreteConic& d, int i, int j, double tol) {
  require_closed(d, "isogonal");
  const Line si = d.side(i);
  const Line sj = d.side(j);
  const Point z = intersect_lines(si, sj, kConstructionParallelEps);
  const Point f = d.focus();
  const Point f2 = inner_member(d).second_focus();
  const DiscreteConic m = tangency_points(d);
  const double period = angle_period(d);

  std::vector<double> res{
      bisection_residual(f, m.vertex(i), z, m.vertex(j), period),
      bisection_residual(f, d.vertex(i), z, d.vertex(j + 1), period),
      bisection_residual(f, d.vertex(i + 1), z, d.vertex(j), period),
  };
  std::map<std::string, std::string> meta{{"i", std::to_string(i)}, {"j", std::to_string(j)}};
  const double scale = std::max(1.0, norm(z));
  if (distance(z, f) > 1e-9 * scale && distance(z, f2) > 1e-9 * scale) {
    const double from_si = line_angle(line_through(z, f)) - line_angle(si);
    const double to_sj = line_angle(sj) - line_angle(line_through(z, f2));
    res.push_back(angle_residual(from_si - to_sj, kPi));
  } else {
    meta["isogonality"] = "skipped: Z at a focus";
  }
  return make_report("isogonal", std::move(res), tol, std::move(meta));
}

Report check_grid(const DiscreteConic& d, int k, double tol) {
  const DiscreteConic layer = grid_layer(d, k);
  std::vector<double> res;
  for (Point z : layer.vertices) res.push_back(std::abs(parameter_of(d.p, z) - layer.t) / std::max(1.0, layer.t));

  const Report angles = check_equal_angles(layer, d.focus(), tol);
  res.insert(res.end(), angles.residuals.begin(), angles.residuals.end());

  // Predicted layer: G_{k theta} applied to the contact polygon, using the
  // shorter of the two arcs k and n - k.
  double acted = normalize_angle(k * d.theta);
  if (acted > kPi) acted = kTwoPi - acted;
  const GroupElement g = from_angle(ActionKind::G, acted);
  const double cos_half = std::cos(0.5 * d.theta);
  const double expected_t = act_on_parameter(g, d.t * cos_half * cos_half);
  res.push_back(std::abs(layer.t - expected_t) / std::max(1.0, expected_t));

  const DiscreteConic predicted = act_on_discrete(g, tangency_points(d));
  for (Point z : layer.vertices) {
    double best = kHuge;
    for (Point q : predicted.vertices) best = std::min(best, distance(z, q));
    res.push_back(best / std::max(1.0, norm(z)));
  }
  return make_report("grid", std::move(res), tol,
                     {{"k", std::to_string(k)}, {"layer_t", num(layer.t)}, {"expected_t", num(expected_t)}});
}

Report check_pascal_line(const DiscreteConic& d, double tol) {
  const OppositeSides os = opposite_side_intersections(d);
  const auto& k = os.points;
  std::vector<double> res;
  for (std::size_t i = 2; i < k.size(); ++i) res.push_back(collinearity(k[0], k[1], k[i]));
  res.push_back(std::abs(os.line.direction().x));

  // A line is the limiting hyperbola-like member: focal rays wrap through F,
  // so the angle steps are compared modulo pi.
  const Point f = d.focus();
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    if (os.indices[i + 1] != os.indices[i] + 1) continue;
    res.push_back(angle_residual(directed_angle(f, k[i], k[i + 1]) - d.theta, kPi));
  }

  double mean_x = 0.0;
  for (Point q : k) mean_x += q.x;
  mean_x /= static_cast<double>(k.size());
  std::map<std::string, std::string> meta{{"line_x", num(mean_x)},
                                          {"points", std::to_string(k.size())},
                                          {"fit_max_residual", num(os.max_residual)}};
  if (d.p != 0.0) meta["directrix_x"] = num(-1.0 / d.p);
  return make_report("pascal_line", std::move(res), tol, std::move(meta));
}

Report check_reflective_all(const DiscreteConic& d, double tol) {
  std::vector<Report> parts;
  for (int j = 1; j <= d.n; ++j) parts.push_back(check_reflective(d, j, tol));
  auto meta = parts.front().metadata;
  meta.erase("j");
  meta.erase("target_vertex");
  meta.erase("alt_target_residual");
  meta["indices"] = "1.." + std::to_string(d.n);
  return merged("reflective", parts, tol, std::move(meta));
}

Report check_isogonal_all(const DiscreteConic& d, double tol) {
  require_closed(d, "isogonal");
  std::vector<Report> parts;
  int skipped = 0;
  for (int i = 1; i <= d.n; ++i) {
    for (int j = i + 1; j <= d.n; ++j) {
      try {
        parts.push_back(check_isogonal(d, i, j, tol));
      } catch (const GeometryError& e) {
        if (e.code() != ErrorCode::ParallelLines) throw;
        ++skipped;
      }
    }
  }
  if (parts.empty()) throw GeometryError(ErrorCode::ParallelLines, "every side pair is parallel");
  return merged("isogonal", parts, tol,
                {{"pairs", std::to_string(parts.size())}, {"parallel_pairs_skipped", std::to_string(skipped)}});
}

Report check_grid_all(const DiscreteConic& d, double tol) {
  require_closed(d, "grid");
  std::vector<Report> parts;
  for (int k = 1; 2 * k < d.n; ++k) parts.push_back(check_grid(d, k, tol));
  return merged("grid", parts, tol, {{"k_range", "1.." + std::to_string((d.n - 1) / 2)}});
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"equal_angles", "projective_regular", "poncelet", "diagonals",
                                              "reflective",   "isogonal",           "grid",     "pascal_line"};
  return names;
}

std::vector<Report> run_checks(const DiscreteConic& d, std::string_view which, double tol) {
  const bool all = which == "all";
  auto wanted = [&](std::string_view name) { return all || which == name; };
  if (!all && std::find(check_names().begin(), check_names().end(), which) == check_names().end()) {
    throw GeometryError(ErrorCode::InvalidArgument, "unknown check '" + std::string(which) + "'");
  }

  std::vector<Report> out;
  if (wanted("equal_angles")) out.push_back(check_equal_angles(d, d.focus(), tol));
  if (all && !d.closed) return out;
  if (wanted("projective_regular") && (!all || d.n >= 5)) out.push_back(check_projective_regular(d, tol));
  if (wanted("poncelet")) out.push_back(check_poncelet(d, tol));
  if (wanted("diagonals")) out.push_back(check_diagonals(d, tol));
  if (wanted("reflective")) out.push_back(check_reflective_all(d, tol));
  if (wanted("isogonal")) out.push_back(check_isogonal_all(d, tol));
  if (wanted("grid")) out.push_back(check_grid_all(d, tol));
  if (wanted("pascal_line") && (!all || (d.n % 2 == 0 && d.p != 0.0))) out.push_back(check_pascal_line(d, tol));
  return out;
}

// ---------------------------------------------------------------------------

Report check_equal_distances(const EqualDistancesParams& prm, double tol) {
  const Point o = prm.circle.center;
  const double r = prm.circle.radius;
  const Point x = o + r * unit_vector(prm.x_angle);
  const Point y = o + r * unit_vector(prm.y_angle);
  const Line chord = line_through(x, y);
  const Line perp_x = line_with_normal_through(chord.direction(), x);
  const Line perp_y = line_with_normal_through(chord.direction(), y);
  const Point u = unit_vector(prm.line_angle);
  const Line through_o = line_with_normal_through(perp(u), o);

  const Point p1 = intersect_lines(through_o, perp_x);
  const Point p2 = intersect_lines(through_o, perp_y);
  const bool parallel_branch = std::abs(cross(u, chord.direction())) <= 1e-12;
  return make_report("lemma_equal_distances", {std::abs(distance(o, p1) - distance(o, p2)) / std::max(1.0, r)}, tol,
                     {{"branch", parallel_branch ? "L parallel to chord" : "general"}});
}

Report check_rectangle_billiard(const RectangleBilliardParams& prm, double tol) {
  const Point o = prm.center;
  const double c = std::cos(prm.rotation), s = std::sin(prm.rotation);
  auto corner = [&](double u, double v) { return o + Point{c * u - s * v, s * u + c * v}; };
  const Point a = corner(-prm.half_width, -prm.half_height);
  const Point b = corner(prm.half_width, -prm.half_height);
  const Point cc = corner(prm.half_width, prm.half_height);
  const Point dd = corner(-prm.half_width, prm.half_height);
  const Line ab = line_through(a, b), bc = line_through(b, cc), cd = line_through(cc, dd), da = line_through(dd, a);

  const Point e = a + prm.e_fraction * (b - a);
  const Point f = 2.0 * o - e;
  // Mirror points: G on BC and H on DA reflect E towards F.
  const Point g = intersect_lines(line_through(e, reflect_point(f, bc)), bc);
  const Point h = intersect_lines(line_through(e, reflect_point(f, da)), da);

  auto parallel = [](Point u, Point v) { return std::abs(cross(unit(u), unit(v))); };
  std::vector<double> res{
      collinearity(reflect_point(e, bc), g, f),
      collinearity(reflect_point(e, da), h, f),
      collinearity(reflect_point(g, ab), e, h),
      collinearity(reflect_point(g, cd), f, h),
      collinearity(g, h, o),
      parallel(g - e, cc - a),
      parallel(f - g, dd - b),
      parallel(h - f, cc - a),
      parallel(e - h, dd - b),
  };
  return make_report("lemma_rectangle_billiard", std::move(res), tol,
                     {{"G", fmt::format("{},{}", g.x, g.y)}, {"H", fmt::format("{},{}", h.x, h.y)}});
}

Report check_parallelism(const ParallelismParams& prm, double tol) {
  const FocalConic conic(prm.p, prm.t);
  const Point f = conic.focus();
  const Point f2 = conic.second_focus();
  const Circle o = pedal_circle(conic);
  const Point x = o.center + o.radius * unit_vector(prm.alpha);
  const Line l = line_with_normal_through(x - f, x);
  const Point dir = l.direction();
  const Point y = x + (-2.0 * dot(x - o.center, dir)) * dir;
  const Point z = tangency_point(quadratic_form(conic), l);

  std::vector<double> res{tangency_residual(conic, l)};
  res.push_back(std::abs(cross(unit(z - f2), unit(x - o.center))));
  if (distance(y, o.center) > 0.0) res.push_back(std::abs(cross(unit(z - f), unit(y - o.center))));
  return make_report("lemma_parallelism", std::move(res), tol,
                     {{"Z", fmt::format("{},{}", z.x, z.y)}, {"pedal_radius", num(o.radius)}});
}

Report check_lemma(LemmaId id, const LemmaParams& params, double tol) {
  switch (id) {
    case LemmaId::EqualDistances:
      if (const auto* p = std::get_if<EqualDistancesParams>(&params)) return check_equal_distances(*p, tol);
      break;
    case LemmaId::RectangleBilliard:
      if (const auto* p = std::get_if<RectangleBilliardParams>(&params)) return check_rectangle_billiard(*p, tol);
      break;
    case LemmaId::Parallelism:
      if (const auto* p = std::get_if<ParallelismParams>(&params)) return check_parallelism(*p, tol);
      break;
  }
  throw GeometryError(ErrorCode::InvalidArgument, "lemma parameters do not match the lemma id");
}

// ---------------------------------------------------------------------------

Report check_duality_diagrams(const FocalConic& c, double theta, double k, double tol, bool require_focus_inside,
                              int samples) {
  if (!(theta > 0.0) || !(theta < kPi)) throw GeometryError(ErrorCode::AngleOutOfRange, "theta must lie in (0, pi)");
  DualPolicy policy;
  policy.require_focus_inside = require_focus_inside;
  const DualCircle dual = dual_conic(make_reciprocator(c.focus(), k), c, policy);
  const Reciprocator rec{c.focus(), dual.k};
  const Point center = dual.circle.center;
  const double radius = dual.circle.radius;
  const double step = kTwoPi / samples;

  auto circle_tangent = [&](double psi) { return line_with_normal_through(unit_vector(psi), center + radius * unit_vector(psi)); };
  auto to_circle = [](Point q, const Circle& ci) { return std::abs(distance(q, ci.center) - ci.radius); };

  // d(H'_theta(C)): poles of chords; G_theta(d(C)): tangent intersections of the dual circle.
  std::vector<Point> chord_poles, dual_corners;
  // d(G'_theta(C)): polars of tangent intersections; H_theta(d(C)): chords of the dual circle.
  std::vector<Line> corner_polars, dual_chords;
  std::vector<Point> corners, dual_chord_poles, dual_chord_mids;

  for (int i = 0; i < samples; ++i) {
    const double a = 0.05 + step * i;
    try {
      const Line chord = line_through(point_at(c, a), point_at(c, a + theta));
      chord_poles.push_back(pole_of(rec, chord));
    } catch (const GeometryError&) {
      // chord through the focus or an asymptotic ray: no finite image
    }
    try {
      const Point z = tangent_intersection(c, a, theta);
      corners.push_back(z);
      corner_polars.push_back(polar_of(rec, z));
    } catch (const GeometryError&) {
    }
    const double psi = a;
    dual_corners.push_back(intersect_lines(circle_tangent(psi), circle_tangent(psi + theta)));
    const Point p0 = center + radius * unit_vector(psi);
    const Point p1 = center + radius * unit_vector(psi + theta);
    const Line dc = line_through(p0, p1);
    dual_chords.push_back(dc);
    dual_chord_mids.push_back(0.5 * (p0 + p1));
    try {
      dual_chord_poles.push_back(pole_of(rec, dc));
    } catch (const GeometryError&) {
    }
  }
  if (chord_poles.size() < 3 || corners.size() < 3 || dual_chord_poles.size() < 3) {
    throw GeometryError(ErrorCode::DegenerateConfiguration, "too few finite samples for the diagrams");
  }

  std::vector<double> res;
  // Square 1, compared as point sets both ways.
  const Circle left1 = fit_circle(chord_poles).circle;
  const Circle right1 = fit_circle(dual_corners).circle;
  double sq1 = 0.0;
  for (Point q : chord_poles) sq1 = std::max(sq1, to_circle(q, right1));
  for (Point q : dual_corners) sq1 = std::max(sq1, to_circle(q, left1));
  res.push_back(sq1);

  // Square 2: polars of G'-points touch the H-circle of the dual ...
  const Circle h_circle = fit_circle(dual_chord_mids).circle;
  double sq2 = 0.0;
  for (const Line& l : corner_polars) sq2 = std::max(sq2, std::abs(std::abs(l.signed_distance(h_circle.center)) - h_circle.radius));
  res.push_back(sq2);
  // ... and the poles of those chords land on the G'-locus, a pencil member.
  double t_mean = 0.0;
  for (Point z : corners) t_mean += parameter_of(c.p(), z);
  t_mean /= static_cast<double>(corners.size());
  const QuadraticForm g_locus = quadratic_form(FocalConic(c.p(), t_mean));
  double sq2b = 0.0;
  for (Point q : dual_chord_poles) sq2b = std::max(sq2b, g_locus.membership_residual(q));
  for (Point z : corners) sq2b = std::max(sq2b, g_locus.membership_residual(z));
  res.push_back(sq2b);

  return make_report("duality_diagrams", std::move(res), tol,
                     {{"k", num(dual.k)},
                      {"dual_radius", num(radius)},
                      {"dual_center_x", num(center.x)},
                      {"dual_fit_deviation", num(dual.max_deviation)},
                      {"g_locus_t", num(t_mean)}});
}

}  // namespace dconic
