#include <gtest/gtest.h>

#include <random>

#include "dconic/group.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace dconic;

namespace {

// Vertex sets equal up to a cyclic relabeling.
double cyclic_distance(const std::vector<Point>& a, const std::vector<Point>& b) {
  double best = 1e300;
  for (std::size_t shift = 0; shift < b.size(); ++shift) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, distance(a[i], b[(i + shift) % b.size()]));
    best = std::min(best, worst);
  }
  return best;
}

}  // namespace

TEST(FromAngle, Examples) {
  EXPECT_NEAR(from_angle(ActionKind::G, kPi / 2).scale(), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(from_angle(ActionKind::H, kPi / 2).scale(), std::sqrt(2.0) / 2, 1e-15);
  EXPECT_EQ(from_angle(ActionKind::G, 0.0), GroupElement::identity());
  EXPECT_EQ(code_of([] { from_angle(ActionKind::G, kPi); }), ErrorCode::AngleOutOfRange);
  EXPECT_EQ(code_of([] { from_angle(ActionKind::H, -0.1); }), ErrorCode::AngleOutOfRange);
  EXPECT_EQ(code_of([] { GroupElement(0.0); }), ErrorCode::InvalidArgument);
}

TEST(Compose, ClosedFormForTwoGElements) {
  const AngleChart c = as_angle(compose(from_angle(ActionKind::G, kPi / 2), from_angle(ActionKind::G, kPi / 2)));
  EXPECT_EQ(c.kind, ActionKind::G);
  EXPECT_NEAR(c.angle, 2 * kPi / 3, 1e-12);

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, kPi);
  int done = 0;
  while (done < 100) {
    const double a = u(rng), b = u(rng);
    const double expected = 2 * std::acos(std::cos(a / 2) * std::cos(b / 2));
    if (expected >= kPi) continue;
    const AngleChart got = as_angle(compose(from_angle(ActionKind::G, a), from_angle(ActionKind::G, b)));
    EXPECT_NEAR(got.angle, expected, 1e-12);
    ++done;
  }
}

TEST(Compose, GAndHAreInverse) {
  for (double a : {0.1, 1.0, 2.5}) {
    EXPECT_NEAR(compose(from_angle(ActionKind::G, a), from_angle(ActionKind::H, a)).scale(), 1.0, 1e-15);
  }
  const GroupElement g = from_angle(ActionKind::G, 0.8);
  EXPECT_NEAR(compose(g, g.inverse()).scale(), 1.0, 1e-15);
}

TEST(Compose, AbelianAndAssociative) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int i = 0; i < 100; ++i) {
    const GroupElement a(u(rng)), b(u(rng)), c(u(rng));
    const double ab_c = compose(compose(a, b), c).scale();
    const double a_bc = compose(a, compose(b, c)).scale();
    EXPECT_LE(std::abs(ab_c - a_bc), 1e-15 * ab_c);
    EXPECT_EQ(compose(a, b).scale(), compose(b, a).scale());
  }
}

TEST(AsAngle, Examples) {
  const AngleChart a = as_angle(GroupElement(std::sqrt(2.0)));
  EXPECT_EQ(a.kind, ActionKind::G);
  EXPECT_NEAR(a.angle, kPi / 2, 1e-12);
  const AngleChart one = as_angle(GroupElement::identity());
  EXPECT_EQ(one.kind, ActionKind::G);
  EXPECT_EQ(one.angle, 0.0);
  const AngleChart h = as_angle(GroupElement(0.5));
  EXPECT_EQ(h.kind, ActionKind::H);
  EXPECT_NEAR(h.angle, 2 * kPi / 3, 1e-12);
  for (double t : {0.0, 0.3, 1.7, 3.0}) {
    EXPECT_NEAR(as_angle(from_angle(ActionKind::G, t)).angle, t, 1e-12);
    EXPECT_NEAR(as_angle(from_angle(ActionKind::H, t)).angle, t, 1e-12);
  }
}

TEST(ActOnParameter, Examples) {
  EXPECT_NEAR(act_on_parameter(from_angle(ActionKind::G, kPi / 3), 1.0), 4.0 / 3.0, 1e-15);
  EXPECT_EQ(act_on_parameter(GroupElement::identity(), 5.0), 5.0);
  const double t = act_on_parameter(from_angle(ActionKind::G, 0.7), act_on_parameter(from_angle(ActionKind::H, 0.7), 2.0));
  EXPECT_NEAR(t, 2.0, 1e-15);
  EXPECT_EQ(code_of([] { act_on_parameter(GroupElement::identity(), 0.0); }), ErrorCode::NonpositiveT);
}

TEST(ActOnDiscrete, RegularPolygonGrowsAndRotates) {
  const int n = 6;
  const double theta = kTwoPi / n;
  const DiscreteConic d = synthesize(0.0, 1.0, theta, 0.0, n);
  const DiscreteConic g = act_on_discrete(from_angle(ActionKind::G, theta), d);
  const double r = 1.0 / std::cos(kPi / n);
  for (int j = 1; j <= n; ++j) {
    const Point v = g.vertex(j);
    EXPECT_NEAR(norm(v), r, 1e-12);
    EXPECT_NEAR(v.x, r * std::cos((j - 1) * theta + kPi / n), 1e-12);
    EXPECT_NEAR(v.y, r * std::sin((j - 1) * theta + kPi / n), 1e-12);
  }
}

TEST(ActOnDiscrete, IdentityLeavesPolygonUnchanged) {
  const DiscreteConic d = synthesize(0.4, 1.3, kPi / 4, 0.2, 8);
  const DiscreteConic same = act_on_discrete(GroupElement::identity(), d);
  for (int j = 1; j <= d.n; ++j) EXPECT_LT(distance(same.vertex(j), d.vertex(j)), 1e-15);
}

TEST(ActOnDiscrete, GAfterHRestoresPolygonUpToRelabeling) {
  for (double p : {-0.5, 0.0, 0.75}) {
    const double theta = kTwoPi / 9;
    const DiscreteConic d = synthesize(p, 0.9, theta, 0.3, 9);
    const DiscreteConic back =
        act_on_discrete(from_angle(ActionKind::G, theta), act_on_discrete(from_angle(ActionKind::H, theta), d));
    EXPECT_NEAR(back.t, d.t, 1e-15);
    EXPECT_LT(cyclic_distance(back.vertices, d.vertices), 1e-9);
  }
}

TEST(ActOnDiscrete, GImageIsTangentIntersections) {
  const double theta = kPi / 6;
  const DiscreteConic d = synthesize(0.75, 1.0, theta, 0.1, 12);
  for (int k = 1; k <= 3; ++k) {
    const GroupElement g = from_angle(ActionKind::G, k * theta);
    const DiscreteConic image = act_on_discrete(g, d);
    const std::vector<Point> corners = tangent_intersections(d, k);
    EXPECT_LT(cyclic_distance(corners, image.vertices), 1e-9) << k;
    const double expected_t = 1.0 / std::pow(std::cos(k * theta / 2), 2);
    for (Point z : corners) EXPECT_NEAR(parameter_of(0.75, z), expected_t, 1e-9);
    EXPECT_EQ(angle_multiple(g, theta), std::optional<int>(k));
  }
  EXPECT_FALSE(angle_multiple(from_angle(ActionKind::G, 0.3), theta).has_value());
}

TEST(TangentIntersection, AgreesWithFiniteDifferenceTangents) {
  const double p = -0.35, t = 1.6, gap = 0.7;
  const FocalConic c(p, t);
  for (double a : {0.2, 1.5, 3.3, 5.0}) {
    const oracle::P2 pa = oracle::focal_point(p, t, a), pb = oracle::focal_point(p, t, a + gap);
    const auto z = oracle::meet(pa, oracle::fd_tangent(p, t, a), pb, oracle::fd_tangent(p, t, a + gap));
    ASSERT_TRUE(z.has_value());
    const Point got = tangent_intersection(c, a, gap);
    EXPECT_NEAR(got.x, z->x, 1e-6);
    EXPECT_NEAR(got.y, z->y, 1e-6);
    EXPECT_NEAR(parameter_of(p, got), t / std::pow(std::cos(gap / 2), 2), 1e-9);
  }
}

TEST(ChordEnvelope, LandsOnShrunkMember) {
  const FocalConic c(0.6, 1.2);
  const double gap = 0.9;
  std::vector<double> ts;
  for (double a = 0.1; a < kTwoPi; a += 0.31) ts.push_back(parameter_of(0.6, chord_envelope_point(c, a, gap)));
  const auto [lo, hi] = std::minmax_element(ts.begin(), ts.end());
  EXPECT_LT(*hi - *lo, 1e-9);
  EXPECT_NEAR(*lo, 1.2 * std::pow(std::cos(gap / 2), 2), 1e-9);
}
