#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dconic/discrete_conic.hpp"
#include "dconic/pencil.hpp"

namespace dconic {

/// Outcome of one numerical check: pass iff max_residual <= tolerance.
struct Report {
  std::string check_name;
  std::vector<double> residuals;
  double max_residual = 0.0;
  double tolerance = kDefaultTolerance;
  bool pass = false;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Builds a report from a non-empty residual list. Non-finite residuals are
/// clamped to the largest double so the report stays serializable and fails.
Report make_report(std::string name, std::vector<double> residuals, double tolerance,
                   std::map<std::string, std::string> metadata = {});

/// Angles are compared modulo 2pi on ellipse carriers and modulo pi
/// otherwise, where focal rays may wrap through the focus.
Report check_equal_angles(const DiscreteConic& d, Point focus, double tol = kDefaultTolerance);
Report check_projective_regular(const DiscreteConic& d, double tol = kDefaultTolerance);
Report check_poncelet(const DiscreteConic& d, double tol = kDefaultTolerance);
Report check_diagonals(const DiscreteConic& d, double tol = kDefaultTolerance);
Report check_reflective(const DiscreteConic& d, int j, double tol = kDefaultTolerance);
Report check_isogonal(const DiscreteConic& d, int i, int j, double tol = kDefaultTolerance);
Report check_grid(const DiscreteConic& d, int k, double tol = kDefaultTolerance);
Report check_pascal_line(const DiscreteConic& d, double tol = kDefaultTolerance);

// Sweeps: one report covering every applicable index.
Report check_reflective_all(const DiscreteConic& d, double tol = kDefaultTolerance);
Report check_isogonal_all(const DiscreteConic& d, double tol = kDefaultTolerance);
Report check_grid_all(const DiscreteConic& d, double tol = kDefaultTolerance);

/// Names accepted by run_checks besides "all".
const std::vector<std::string>& check_names();

/// Runs one named check, or every check applicable to `d` for "all".
/// Throws InvalidArgument for unknown names.
std::vector<Report> run_checks(const DiscreteConic& d, std::string_view which = "all",
                               double tol = kDefaultTolerance);

// ---------------------------------------------------------------------------
// Lemmas about the negative pedal construction.

/// Chord XY of a circle, perpendiculars to it at X and Y, and a line through
/// the center at `line_angle`: the two cut points are equidistant from O.
struct EqualDistancesParams {
  Circle circle;
  double x_angle = 0.0;
  double y_angle = 1.0;
  double line_angle = 0.0;
};

/// Rectangle ABCD (A, B, C, D counterclockwise from the lower-left corner
/// before rotation) with E = A + e_fraction (B - A) and F = 2 O - E.
struct RectangleBilliardParams {
  Point center;
  double half_width = 1.0;
  double half_height = 1.0;
  double rotation = 0.0;
  double e_fraction = 0.5;
};

/// Pencil member (p, t) and a point X at angle alpha on its focal pedal circle.
struct ParallelismParams {
  double p = 0.0;
  double t = 1.0;
  double alpha = 0.0;
};

enum class LemmaId { EqualDistances, RectangleBilliard, Parallelism };

using LemmaParams = std::variant<EqualDistancesParams, RectangleBilliardParams, ParallelismParams>;

Report check_equal_distances(const EqualDistancesParams& params, double tol = kDefaultTolerance);
Report check_rectangle_billiard(const RectangleBilliardParams& params, double tol = kDefaultTolerance);
Report check_parallelism(const ParallelismParams& params, double tol = kDefaultTolerance);

/// Dispatches on `id`; throws InvalidArgument if `params` holds another lemma.
Report check_lemma(LemmaId id, const LemmaParams& params, double tol = kDefaultTolerance);

// ---------------------------------------------------------------------------

/// Both commuting squares between the focal group action and reciprocation
/// about the focus, sampled at `samples` angles:
///   d(H'_theta(C)) = G_theta(d(C))  and  d(G'_theta(C)) = H_theta(d(C)).
/// Residuals are absolute point-to-curve (or line-to-circle) distances.
Report check_duality_diagrams(const FocalConic& c, double theta, double k = 1.0, double tol = 1e-8,
                              bool require_focus_inside = true, int samples = 64);

}  // namespace dconic
