#include <gtest/gtest.h>

#include "dconic/batch.hpp"
#include "test_util.hpp"

using namespace dconic;

TEST(Corpus, ReproducibleEllipseCarriers) {
  const auto a = make_ellipse_corpus(64, 5), b = make_ellipse_corpus(64, 5);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, make_ellipse_corpus(64, 6));
  for (const DiscreteConic& d : a) {
    EXPECT_TRUE(d.closed);
    EXPECT_GE(d.n, 4);
    EXPECT_LE(d.n, 16);
    EXPECT_GT(d.p, -0.9);
    EXPECT_LT(d.p, 0.9);
    EXPECT_EQ(d.carrier().kind(), ConicKind::Ellipse);
  }
}

TEST(Perturb, MovesOneVertexTangentially) {
  const DiscreteConic d = synthesize(0.2, 1.0, kTwoPi / 6, 0.0, 6);
  const DiscreteConic e = perturb_vertex(d, 3, 1e-3);
  for (int j = 1; j <= 6; ++j) {
    const double moved = distance(d.vertex(j), e.vertex(j));
    EXPECT_NEAR(moved, j == 3 ? 1e-3 : 0.0, 1e-15);
  }
  EXPECT_NEAR(dot(e.vertex(3) - d.vertex(3), d.vertex(3) - d.focus()), 0.0, 1e-15);
  EXPECT_EQ(code_of([&] { perturb_vertex(d, 7); }), ErrorCode::InvalidArgument);
}

TEST(Verify, ParallelMatchesSerialExactly) {
  const auto corpus = make_ellipse_corpus(80, 123);
  const auto serial = verify_corpus_serial(corpus, "all", 1e-8);
  const auto parallel = verify_corpus_parallel(corpus, "all", 1e-8);
  EXPECT_EQ(serial, parallel);
  EXPECT_TRUE(all_pass(serial));
}

TEST(Verify, ParallelRethrowsFirstFailureInOrder) {
  auto corpus = make_ellipse_corpus(10, 3);
  corpus[4].closed = false;  // pascal/poncelet requests on an open chain throw NotClosed
  corpus[7].closed = false;
  EXPECT_EQ(code_of([&] { verify_corpus_parallel(corpus, "poncelet"); }), ErrorCode::NotClosed);
  EXPECT_EQ(code_of([&] { verify_corpus_serial(corpus, "poncelet"); }), ErrorCode::NotClosed);
}
