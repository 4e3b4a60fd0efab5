#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthotwin/lattice.hpp"
#include "orthotwin/mat3.hpp"
#include "test_util.hpp"

using namespace otw;

TEST_CASE("cofactor: identity and diagonal") {
  CHECK((cofactor(Mat3::identity()) - Mat3::identity()).norm() == doctest::Approx(0.0));
  Mat3 d = Mat3::diag(1.06372, 0.91542, 1.02368);
  Mat3 c = cofactor(d);
  CHECK(c(0, 0) == doctest::Approx(0.91542 * 1.02368).epsilon(1e-14));
  CHECK(c(1, 1) == doctest::Approx(1.06372 * 1.02368).epsilon(1e-14));
  CHECK(c(2, 2) == doctest::Approx(1.06372 * 0.91542).epsilon(1e-14));
}

TEST_CASE("cofactor of U1 has eigenvalue alpha*gamma with axis eigenvector") {
  LatticeParams p = test::preset();
  VariantSet vs = variants(p);
  SymEigen e = sym_eigen(SymMat3(cofactor(vs.of(1))));
  // independent oracle: plain product of the stretches
  double want = p.alpha * p.gamma;
  CHECK(e.values[2] == doctest::Approx(want).epsilon(1e-12));
  CHECK(std::abs(e.vectors[2].x) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(e.vectors[2].y) < 1e-10);
  CHECK(std::abs(e.vectors[2].z) < 1e-10);
}

TEST_CASE("property: M cof(M)^T = det M * 1") {
  auto g = test::rng(11);
  for (int i = 0; i < 500; ++i) {
    Mat3 m = test::random_mat(g, 2.0);
    if (m.det() <= 0.05) continue;
    Mat3 lhs = m * cofactor(m).transpose();
    CHECK((lhs - Mat3::identity() * m.det()).norm() < 1e-10 * std::max(1.0, m.norm()));
  }
}

TEST_CASE("sym_eigen: identity and variant stretches") {
  SymEigen e = sym_eigen(SymMat3(Mat3::identity()));
  for (int i = 0; i < 3; ++i) CHECK(e.values[i] == doctest::Approx(1.0));

  LatticeParams p = test::preset();
  VariantSet vs = variants(p);
  SymEigen u1 = sym_eigen(vs.u[0]);
  CHECK(u1.values[0] == doctest::Approx(p.beta).epsilon(1e-12));
  CHECK(u1.values[1] == doctest::Approx(p.gamma).epsilon(1e-12));
  CHECK(u1.values[2] == doctest::Approx(p.alpha).epsilon(1e-12));
}

TEST_CASE("property: sym_eigen reconstruction residual <= 1e-10") {
  auto g = test::rng(12);
  for (int i = 0; i < 1000; ++i) {
    SymMat3 s = test::random_sym(g, 3.0);
    SymEigen e = sym_eigen(s);
    Mat3 rec = Mat3::zero();
    for (int k = 0; k < 3; ++k)
      rec = rec + Mat3::outer(e.vectors[k], e.vectors[k]) * e.values[k];
    CHECK((rec - s.mat()).norm() < 1e-10 * std::max(1.0, s.mat().norm()));
    CHECK(e.values[0] <= e.values[1]);
    CHECK(e.values[1] <= e.values[2]);
    // orthonormal basis
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        double want = a == b ? 1.0 : 0.0;
        CHECK(std::abs(e.vectors[a].dot(e.vectors[b]) - want) < 1e-12);
      }
  }
}

TEST_CASE("sym_eigen handles repeated eigenvalues") {
  Mat3 m = Mat3::diag(2.0, 2.0, 5.0);
  SymEigen e = sym_eigen(SymMat3(m));
  Mat3 rec = Mat3::zero();
  for (int k = 0; k < 3; ++k) rec = rec + Mat3::outer(e.vectors[k], e.vectors[k]) * e.values[k];
  CHECK((rec - m).norm() < 1e-10);
}

TEST_CASE("polar_rotation: pure rotation and pure stretch") {
  auto g = test::rng(13);
  Rotation3 r = test::random_rotation(g);
  Rotation3 rr = polar_rotation(r.mat());
  CHECK((rr.mat() - r.mat()).norm() < 1e-10);

  VariantSet vs = variants(test::preset());
  Rotation3 id = polar_rotation(vs.of(1));
  CHECK((id.mat() - Mat3::identity()).norm() < 1e-10);
}

TEST_CASE("property: polar_rotation recovers R from R*U") {
  auto g = test::rng(14);
  for (int i = 0; i < 500; ++i) {
    Rotation3 r = test::random_rotation(g);
    Mat3 u = test::random_spd(g);
    Rotation3 rec = polar_rotation(r.mat() * u);
    CHECK((rec.mat() - r.mat()).norm() < 1e-8);
    // R^T F symmetric
    Mat3 s = rec.mat().transpose() * (r.mat() * u);
    CHECK((s - s.transpose()).norm() < 1e-10 * std::max(1.0, s.norm()));
  }
}

TEST_CASE("polar_rotation rejects singular input") {
  Mat3 sing = Mat3::outer({1, 2, 3}, {0, 1, 0});
  CHECK_THROWS_AS(polar_rotation(sing), Error);
  try {
    polar_rotation(sing);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonInvertible);
  }
}

TEST_CASE("rank_one_decompose: conventions and recovery") {
  auto zero = rank_one_decompose(Mat3::zero());
  REQUIRE(zero.has_value());
  CHECK(zero->a.norm() == 0.0);
  CHECK(zero->n[0] == doctest::Approx(1.0));

  auto r = rank_one_decompose(Mat3::outer({1, 2, 3}, {0, 1, 0}));
  REQUIRE(r.has_value());
  CHECK(r->n[0] == doctest::Approx(0.0));
  CHECK(r->n[1] == doctest::Approx(1.0));  // sign convention: first big component positive
  CHECK(r->a.x == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r->a.y == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(r->a.z == doctest::Approx(3.0).epsilon(1e-9));

  CHECK_FALSE(rank_one_decompose(Mat3::identity()).has_value());
}

TEST_CASE("property: rank_one_decompose inverts the outer product") {
  auto g = test::rng(15);
  for (int i = 0; i < 500; ++i) {
    Vec3 a = test::random_vec(g, 2.0);
    UnitVec3 n = test::random_dir(g);
    if (a.norm() < 1e-3) continue;
    Mat3 m = Mat3::outer(a, n.vec());
    auto r = rank_one_decompose(m);
    REQUIRE(r.has_value());
    CHECK((Mat3::outer(r->a, r->n.vec()) - m).norm() < 1e-9 * m.norm());
  }
}

TEST_CASE("strong type invariants") {
  CHECK_THROWS_AS(UnitVec3(Vec3{1, 1, 0}), Error);
  CHECK_NOTHROW(UnitVec3(Vec3{1, 0, 0}));
  CHECK_THROWS_AS(Rotation3(Mat3::diag(1, 1, 2)), Error);
  Mat3 improper = Mat3::diag(1, 1, -1);
  CHECK_THROWS_AS(Rotation3{improper}, Error);
  // SymMat3 symmetrizes
  Mat3 skewed = Mat3::from_rows({1, 5, 0}, {0, 1, 0}, {0, 0, 1});
  SymMat3 s(skewed);
  CHECK((s.mat() - s.mat().transpose()).norm() == 0.0);
}
