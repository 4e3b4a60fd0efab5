#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthotwin/reference_data.hpp"
#include "orthotwin/symmetry.hpp"
#include "orthotwin/twinning.hpp"
#include "test_util.hpp"

using namespace otw;

namespace {

std::vector<VariantPair> tabulated_pairs() {
  std::vector<VariantPair> out;
  for (int l = 1; l <= 6; ++l)
    for (int s = 1; s <= 6; ++s)
      if (l != s && !is_compound_pair(s, l)) out.push_back({l, s});
  return out;
}

}  // namespace

TEST_CASE("twin element constants at the preset") {
  TwinElementConstants c = twin_constants(test::preset());

  // Type-II components match the published block.
  CHECK(c.t1 == doctest::Approx(ref::printed_t[0]).epsilon(5e-6));
  CHECK(c.t2 == doctest::Approx(ref::printed_t[1]).epsilon(5e-6));
  CHECK(c.v1 == doctest::Approx(ref::printed_v[0]).epsilon(5e-6));
  CHECK(c.v2 == doctest::Approx(ref::printed_v[1]).epsilon(5e-6));
  CHECK(c.v3 == doctest::Approx(ref::printed_v[2]).epsilon(5e-6));

  // The Type-II normal pattern (t1,t1,t2) is exactly unit by construction.
  CHECK(2 * c.t1 * c.t1 + c.t2 * c.t2 == doctest::Approx(1.0).epsilon(1e-14));

  // Type-I shear from the closed form; the independent oracle below pins it.
  CHECK(c.u1 == doctest::Approx(-0.192613).epsilon(5e-6));
  CHECK(c.u2 == doctest::Approx(-0.168110).epsilon(5e-6));
  CHECK(c.u3 == doctest::Approx(-0.052930).epsilon(5e-6));
}

TEST_CASE("oracle: closed-form Type-I shear equals the generic eigen solution") {
  // Solve Q U_1 - U_3 = a(x)n from scratch and take the solution whose normal
  // is parallel to (1,-1,0); its shear must equal (u1,u2,u3) of the table row.
  LatticeParams p = test::preset();
  TwinElementConstants c = twin_constants(p);
  bool found = false;
  for (const TwinSystem& t : solve_twins_generic(p, 3, 1)) {
    Vec3 d{1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0};
    if (t.n.vec().cross(d).norm() > 1e-9) continue;
    found = true;
    double sgn = t.n.dot(d) > 0 ? 1.0 : -1.0;  // representative with n = d
    Vec3 a = t.a * sgn;
    CHECK(a.x == doctest::Approx(c.u1).epsilon(1e-10));
    CHECK(a.y == doctest::Approx(c.u2).epsilon(1e-10));
    CHECK(a.z == doctest::Approx(c.u3).epsilon(1e-10));
  }
  CHECK(found);
}

TEST_CASE("tabulated rows: published component patterns") {
  LatticeParams p = test::preset();
  TwinElementConstants c = twin_constants(p);

  SUBCASE("Type-I row (1,3)") {
    TwinSystem t = type1_twin(p, {1, 3});
    CHECK(t.s == 3);
    CHECK(t.l == 1);
    CHECK(t.n[0] == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(t.n[1] == doctest::Approx(-1 / std::sqrt(2.0)));
    CHECK(t.n[2] == doctest::Approx(0.0));
    CHECK(t.a.x == doctest::Approx(c.u1));
    CHECK(t.a.y == doctest::Approx(c.u2));
    CHECK(t.a.z == doctest::Approx(c.u3));
  }
  SUBCASE("Type-I row (3,1) is the sign/permutation image") {
    TwinSystem t = type1_twin(p, {3, 1});
    CHECK(t.a.x == doctest::Approx(-c.u2));
    CHECK(t.a.y == doctest::Approx(-c.u1));
    CHECK(t.a.z == doctest::Approx(-c.u3));
  }
  SUBCASE("Type-II row (1,3)") {
    TwinSystem t = type2_twin(p, {1, 3});
    CHECK(t.n[0] == doctest::Approx(c.t1));
    CHECK(t.n[1] == doctest::Approx(c.t1));
    CHECK(t.n[2] == doctest::Approx(c.t2));
    CHECK(t.a.x == doctest::Approx(c.v1));
    CHECK(t.a.y == doctest::Approx(c.v2));
    CHECK(t.a.z == doctest::Approx(c.v3));
  }
  SUBCASE("Type-II row (1,6)") {
    TwinSystem t = type2_twin(p, {1, 6});
    CHECK(t.n[0] == doctest::Approx(-c.t1));
    CHECK(t.n[1] == doctest::Approx(c.t2));
    CHECK(t.n[2] == doctest::Approx(c.t1));
    CHECK(t.a.x == doctest::Approx(-c.v1));
    CHECK(t.a.y == doctest::Approx(c.v3));
    CHECK(t.a.z == doctest::Approx(c.v2));
  }
}

TEST_CASE("every tabulated row satisfies the twinning equation") {
  LatticeParams p = test::preset();
  VariantSet vs = variants(p);
  for (VariantPair pair : tabulated_pairs()) {
    TwinSystem t1 = type1_twin(p, pair);
    TwinSystem t2 = type2_twin(p, pair);
    CHECK(t1.residual <= 1e-9);
    CHECK(t2.residual <= 1e-9);
    // determinant identity forces U_s^-1 a . n = 0
    CHECK(std::abs(twin_det_mismatch(t1, vs)) <= 1e-10);
    CHECK(std::abs(twin_det_mismatch(t2, vs)) <= 1e-10);
    Mat3 usi = vs.of(pair.s).inverse();
    CHECK(std::abs((usi * t2.a).dot(t2.n.vec())) <= 1e-10);
  }
}

TEST_CASE("errors: compound pairs, equal indices, degenerate parameters") {
  LatticeParams p = test::preset();
  CHECK_THROWS_AS(type1_twin(p, {1, 2}), Error);
  CHECK_THROWS_AS(type2_twin(p, {3, 4}), Error);
  CHECK_THROWS_AS(type1_twin(p, {2, 2}), Error);
  try {
    type1_twin(p, {5, 6});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PairNotTabulated);
  }
  CHECK_THROWS_AS(twin_constants(LatticeParams{1.05, 0.9, 1.05}), Error);
  try {
    twin_constants(LatticeParams{1.05, 0.9, 1.05});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateTwin);
  }
}

TEST_CASE("generic solver agrees with the closed forms as tensors") {
  LatticeParams p = test::preset();
  for (VariantPair pair : tabulated_pairs()) {
    auto sols = solve_twins_generic(p, pair.s, pair.l);
    REQUIRE(sols.size() == 2);
    TwinSystem t1 = type1_twin(p, pair);
    TwinSystem t2 = type2_twin(p, pair);
    int type1_hits = 0, type2_hits = 0;
    for (const TwinSystem& t : sols) {
      Mat3 tensor = Mat3::outer(t.a, t.n.vec());
      if ((tensor - Mat3::outer(t1.a, t1.n.vec())).norm() <= 1e-8) {
        ++type1_hits;
        CHECK(t.kind == TwinKind::TypeI);
      }
      if ((tensor - Mat3::outer(t2.a, t2.n.vec())).norm() <= 1e-8) {
        ++type2_hits;
        CHECK(t.kind == TwinKind::TypeII);
      }
      CHECK(t.residual <= 1e-9);
    }
    CHECK(type1_hits == 1);
    CHECK(type2_hits == 1);
  }
}

TEST_CASE("generic solver on a compound pair: axis normals, flagged compound") {
  auto sols = solve_twins_generic(test::preset(), 1, 2);
  REQUIRE(sols.size() == 2);
  for (const TwinSystem& t : sols) {
    CHECK(t.kind == TwinKind::Compound);
    CHECK(t.residual <= 1e-9);
    // normals are coordinate axes: two components vanish
    int zeros = 0;
    for (int i = 0; i < 3; ++i)
      if (std::abs(t.n[i]) < 1e-9) ++zeros;
    CHECK(zeros == 2);
  }
}

TEST_CASE("identity parameters admit no rank-one connection") {
  CHECK_THROWS_AS(solve_twins_generic(LatticeParams{1, 1, 1}, 1, 3), Error);
  try {
    solve_twins_generic(LatticeParams{1, 1, 1}, 1, 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoRankOneConnection);
  }
}

TEST_CASE("property: symmetry transport of twin systems") {
  LatticeParams p = test::preset();
  VariantSet vs = variants(p);
  const SymmetryTable& table = canonical_symmetry_table();
  auto g = test::rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const CubicRotation& q = cubic_group()[std::uniform_int_distribution<int>(0, 23)(g)];
    VariantPair pair = tabulated_pairs()[std::uniform_int_distribution<int>(0, 23)(g)];
    TwinSystem t = type2_twin(p, pair);
    int s2 = table.entry[pair.s - 1][q.index];
    int l2 = table.entry[pair.l - 1][q.index];
    Vec3 a2 = q.matrix.mat() * t.a;
    Vec3 n2 = q.matrix.mat() * t.n.vec();
    // transported elements solve the (s2, l2) equation
    Mat3 f = vs.of(s2) + Mat3::outer(a2, n2);
    Rotation3 rot = polar_rotation(f * vs.of(l2).inverse());
    CHECK((rot.mat() * vs.of(l2) - vs.of(s2) - Mat3::outer(a2, n2)).norm() <= 1e-9);
  }
}
