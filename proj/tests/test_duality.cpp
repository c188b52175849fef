#include <gtest/gtest.h>

#include <random>

#include "dconic/duality.hpp"
#include "dconic/verifier.hpp"
#include "test_util.hpp"

using namespace dconic;

TEST(Polar, Examples) {
  const Reciprocator r = make_reciprocator({0, 0}, 1.0);
  const Line half = polar_of(r, {2, 0});
  EXPECT_NEAR(half.a, 1.0, 1e-15);
  EXPECT_NEAR(half.c, -0.5, 1e-15);
  const Line tangent = polar_of(r, {1, 0});
  EXPECT_NEAR(tangent.c, -1.0, 1e-15);
  EXPECT_EQ(code_of([&] { polar_of(r, {0, 0}); }), ErrorCode::CenterHasNoPolar);
  EXPECT_EQ(code_of([] { make_reciprocator({0, 0}, 0.0); }), ErrorCode::InvalidArgument);
}

TEST(Pole, Examples) {
  const Reciprocator r = make_reciprocator({0, 0}, 1.0);
  const Point a = pole_of(r, Line::from_coefficients(1, 0, -0.5));
  EXPECT_NEAR(a.x, 2.0, 1e-15);
  EXPECT_NEAR(a.y, 0.0, 1e-15);
  const Point b = pole_of(r, Line::from_coefficients(1, 0, -1));
  EXPECT_NEAR(b.x, 1.0, 1e-15);
  EXPECT_EQ(code_of([&] { pole_of(r, Line::from_coefficients(0, 1, 0)); }), ErrorCode::LineThroughCenter);
}

TEST(Reciprocation, IsAnInvolution) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-4, 4), ku(0.2, 3);
  for (int i = 0; i < 300; ++i) {
    const Reciprocator r = make_reciprocator({u(rng), u(rng)}, ku(rng));
    const Point p{u(rng), u(rng)};
    if (distance(p, r.center) < 1e-2) continue;
    const Point back = pole_of(r, polar_of(r, p));
    EXPECT_LT(distance(back, p), 1e-10 * std::max(1.0, norm(p)));
    const Line l = line_through({u(rng), u(rng)}, {u(rng), u(rng)});
    if (std::abs(l.signed_distance(r.center)) < 1e-2) continue;
    const Line l2 = polar_of(r, pole_of(r, l));
    EXPECT_NEAR(l2.a, l.a, 1e-10);
    EXPECT_NEAR(l2.b, l.b, 1e-10);
    EXPECT_NEAR(l2.c, l.c, 1e-10 * std::max(1.0, std::abs(l.c)));
  }
}

TEST(Reciprocation, ReversesIncidence) {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(-3, 3);
  const Reciprocator r = make_reciprocator({0.4, -0.2}, 1.3);
  for (int i = 0; i < 300; ++i) {
    const Point a{u(rng), u(rng)}, b{u(rng), u(rng)};
    if (distance(a, b) < 1e-2) continue;
    const Line l = line_through(a, b);
    if (std::abs(l.signed_distance(r.center)) < 1e-2 || distance(a, r.center) < 1e-2) continue;
    // a on l  =>  pole(l) on polar(a)
    const Point pole = pole_of(r, l);
    EXPECT_LT(std::abs(polar_of(r, a).signed_distance(pole)) / std::max(1.0, norm(pole)), 1e-9);
  }
}

TEST(DualConic, CircleIsSelfDual) {
  const DualCircle d = dual_conic(make_reciprocator({0, 0}), FocalConic(0.0, 1.0));
  EXPECT_NEAR(norm(d.circle.center), 0.0, 1e-12);
  EXPECT_NEAR(d.circle.radius, 1.0, 1e-12);
  EXPECT_LT(d.max_deviation, 1e-9);
}

TEST(DualConic, TangentPolesLieOnCircleCenteredOnAxis) {
  const FocalConic c(0.75, 1.0);
  const Reciprocator r = make_reciprocator(c.focus());
  const DualCircle d = dual_conic(r, c);
  EXPECT_NEAR(d.circle.center.y, 0.0, 1e-12);
  EXPECT_LT(d.max_deviation, 1e-9);
  for (double a = 0.05; a < kTwoPi; a += 0.37) {
    const Point pole = pole_of(r, tangent_at(c, a));
    EXPECT_NEAR(distance(pole, d.circle.center), d.circle.radius, 1e-9);
  }
  EXPECT_LT(distance(c.focus(), d.circle.center), d.circle.radius);
}

TEST(DualConic, RequiresFocusAsCenter) {
  EXPECT_EQ(code_of([] { dual_conic(make_reciprocator({0, 0}), FocalConic(0.75, 1.0)); }), ErrorCode::CenterNotFocus);
}

TEST(DualConic, HyperbolaPutsFocusOutside) {
  const FocalConic h(0.75, 2.0);
  ASSERT_EQ(h.kind(), ConicKind::Hyperbola);
  EXPECT_EQ(code_of([&] { dual_conic(make_reciprocator(h.focus()), h); }), ErrorCode::FocusOutsideDual);
  DualPolicy lenient;
  lenient.require_focus_inside = false;
  const DualCircle d = dual_conic(make_reciprocator(h.focus()), h, lenient);
  EXPECT_LT(d.max_deviation, 1e-9);
  EXPECT_GT(distance(h.focus(), d.circle.center), d.circle.radius);
}

TEST(DualityDiagrams, CommuteOnEllipses) {
  for (double t : {0.5, 1.0}) {
    for (double theta : {kPi / 6, kPi / 3, 2.0}) {
      const Report r = check_duality_diagrams(FocalConic(0.75, t), theta);
      EXPECT_TRUE(r.pass) << t << " " << theta << " " << r.max_residual;
    }
  }
}

TEST(DualityDiagrams, IndependentOfReciprocationRadius) {
  const Report a = check_duality_diagrams(FocalConic(-0.3, 1.7), kPi / 5, 0.5);
  const Report b = check_duality_diagrams(FocalConic(-0.3, 1.7), kPi / 5, 2.5);
  EXPECT_TRUE(a.pass) << a.max_residual;
  EXPECT_TRUE(b.pass) << b.max_residual;
}

TEST(DualityDiagrams, RejectsBadAngle) {
  EXPECT_EQ(code_of([] { check_duality_diagrams(FocalConic(0.5, 1.0), kPi); }), ErrorCode::AngleOutOfRange);
}
