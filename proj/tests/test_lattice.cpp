#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "orthotwin/lattice.hpp"
#include "orthotwin/symmetry.hpp"
#include "test_util.hpp"

using namespace otw;

TEST_CASE("cubic limit: all variants equal the identity") {
  VariantSet vs = variants(LatticeParams{1, 1, 1});
  for (int s = 1; s <= 6; ++s) CHECK((vs.of(s) - Mat3::identity()).norm() == 0.0);
}

TEST_CASE("preset variant entries") {
  LatticeParams p = test::preset();
  VariantSet vs = variants(p);
  // oracle: plain arithmetic on the stretches
  double mean = (p.alpha + p.gamma) / 2;   // 1.04370
  double half = (p.alpha - p.gamma) / 2;   // 0.02002
  CHECK(mean == doctest::Approx(1.04370).epsilon(1e-6));
  CHECK(half == doctest::Approx(0.02002).epsilon(1e-6));
  CHECK(vs.of(1)(0, 0) == doctest::Approx(0.91542));
  CHECK(vs.of(1)(1, 1) == doctest::Approx(mean));
  CHECK(vs.of(1)(1, 2) == doctest::Approx(half));
  CHECK(vs.of(1)(2, 1) == doctest::Approx(half));
  CHECK(vs.of(2)(1, 2) == doctest::Approx(-half));
  CHECK(vs.of(3)(0, 2) == doctest::Approx(half));
  CHECK(vs.of(5)(0, 1) == doctest::Approx(half));
}

TEST_CASE("conjugation consistency: Q17 U2 Q17^T = U1") {
  VariantSet vs = variants(test::preset());
  const Mat3& q17 = cubic_group()[17].matrix.mat();
  CHECK((q17 * vs.of(2) * q17.transpose() - vs.of(1)).norm() < 1e-14);
}

TEST_CASE("all variants are cubic conjugates of U1; equal determinants") {
  VariantSet vs = variants(test::preset());
  for (int s = 1; s <= 6; ++s) {
    bool conjugate = false;
    for (const CubicRotation& q : cubic_group()) {
      Mat3 c = q.matrix.mat() * vs.of(1) * q.matrix.mat().transpose();
      conjugate = conjugate || (c - vs.of(s)).norm() < 1e-12;
    }
    CHECK(conjugate);
    CHECK(std::abs(vs.of(s).det() - vs.of(1).det()) < 1e-14);
  }
}

TEST_CASE("variant eigenvalues are the stretches") {
  auto g = test::rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    LatticeParams p{test::uniform(g, 1.0, 1.3), test::uniform(g, 0.7, 1.0),
                    test::uniform(g, 0.95, 1.2)};
    VariantSet vs = variants(p);
    for (int s = 1; s <= 6; ++s) {
      SymEigen e = sym_eigen(vs.u[s - 1]);
      std::array<double, 3> want{p.alpha, p.beta, p.gamma};
      std::sort(want.begin(), want.end());
      for (int i = 0; i < 3; ++i) CHECK(e.values[i] == doctest::Approx(want[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("assumption report at the preset") {
  AssumptionReport r = check_assumptions(test::preset());
  CHECK(r.a1);
  CHECK(r.a2);
  CHECK(r.a3);
  CHECK(r.a4);
  CHECK(r.norm_check == doctest::Approx(3.10099).epsilon(1e-5));
  CHECK(r.cof_norm == doctest::Approx(3.01206).epsilon(1e-5));
  CHECK(r.a_minus_b == doctest::Approx(0.202513).epsilon(1e-5));
  // oracle: products of the preset stretches
  LatticeParams p = test::preset();
  CHECK(r.det_u == doctest::Approx(p.alpha * p.beta * p.gamma).epsilon(1e-15));
  CHECK(r.det_u == doctest::Approx(0.99681).epsilon(1e-5));
  CHECK(r.det_le_one);
  CHECK(r.lam_max_cof == doctest::Approx(1.08891).epsilon(1e-5));
  CHECK(r.cof_max_ge_one);
  for (bool b : r.boundary) CHECK_FALSE(b);
}

TEST_CASE("degenerate cubic parameters: A2 equality band, A4 fails") {
  AssumptionReport r = check_assumptions(LatticeParams{1, 1, 1});
  CHECK(r.norm_check == doctest::Approx(3.0));
  CHECK(r.a2);           // holds with equality
  CHECK(r.boundary[1]);  // flagged as a boundary case
  CHECK_FALSE(r.a4);     // A - B = 0 is not > 0
  CHECK(r.boundary[3]);
  CHECK_FALSE(r.a1);     // gamma < alpha fails
}

TEST_CASE("property: P > 0 and N > 0 iff (a^2+g^2)/2 > b^2, for alpha > gamma") {
  auto g = test::rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    double gamma = test::uniform(g, 0.8, 1.3);
    double alpha = gamma + test::uniform(g, 0.01, 0.3);
    double beta = test::uniform(g, 0.5, 1.4);
    AssumptionReport r = check_assumptions(LatticeParams{alpha, beta, gamma});
    CHECK(r.P > 0);
    bool want = (alpha * alpha + gamma * gamma) / 2 > beta * beta;
    CHECK((r.N > 0) == want);
  }
}

TEST_CASE("parameter file loading") {
  const char* path = "params_test.txt";
  {
    std::ofstream f(path);
    f << "# CuAlNi specimen stretches\n";
    f << "alpha = 1.06372\n";
    f << "beta=0.91542   # middle stretch\n";
    f << "gamma\t= 1.02368\n";
  }
  LatticeParams p = load_params(path);
  CHECK(is_preset_cualni(p));
  std::remove(path);

  {
    std::ofstream f(path);
    f << "alpha = 1.0\nbeta = 0.9\n";  // gamma missing
  }
  CHECK_THROWS_AS(load_params(path), Error);
  std::remove(path);
  CHECK_THROWS_AS(load_params("does_not_exist.txt"), Error);
}

TEST_CASE("invalid parameters and energy density guard") {
  CHECK_THROWS_AS(variants(LatticeParams{-1, 1, 1}), Error);
  CHECK_THROWS_AS(EnergyDensity(0.0), Error);
  CHECK_THROWS_AS(EnergyDensity(-2.0), Error);
  CHECK(EnergyDensity().depth == 1.0);
}
