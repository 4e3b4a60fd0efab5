#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthotwin/specimen.hpp"
#include "test_util.hpp"

using namespace otw;

TEST_CASE("octant convention") {
  CHECK(octant_of({1, 1, 1}) == 1);
  CHECK(octant_of({-1, 1, 1}) == 2);
  CHECK(octant_of({1, -1, 1}) == 3);
  CHECK(octant_of({1, 1, -1}) == 4);
  CHECK(octant_of({-1, -1, -1}) == 5);  // O5 = -O1
  CHECK(octant_of({1, -1, -1}) == 6);
  CHECK(octant_of({-1, 1, -1}) == 7);
  CHECK(octant_of({-1, -1, 1}) == 8);
  CHECK(octant_of({0, 1, 1}) == 0);  // on a coordinate plane
  for (int k = 1; k <= 8; ++k) {
    auto sg = octant_signs(k);
    CHECK(octant_of({double(sg[0]), double(sg[1]), double(sg[2])}) == k);
    int anti = k <= 4 ? k + 4 : k - 4;
    auto sa = octant_signs(anti);
    for (int i = 0; i < 3; ++i) CHECK(sa[i] == -sg[i]);
  }
}

TEST_CASE("parallelepiped geometry") {
  Parallelepiped box = Parallelepiped::axis_aligned({0, 0, 0}, {4, 1, 1});
  auto corners = box.corners();
  bool used[9] = {};
  for (const auto& c : corners) {
    CHECK(c.octant != 0);
    CHECK_FALSE(used[c.octant]);
    used[c.octant] = true;
  }
  CHECK_THROWS_AS(Parallelepiped({0, 0, 0}, {Vec3{1, 0, 0}, Vec3{2, 0, 0}, Vec3{0, 0, 1}}),
                  Error);
}

TEST_CASE("edge admissibility spot checks for variant 1") {
  LatticeParams p = test::preset();
  EdgeVerdict e1 = edge_admissible(1, UnitVec3(Vec3{0, 1, 0}), p);
  CHECK(e1.admissible);
  CHECK(e1.via == EdgeVia::M);
  EdgeVerdict e2 = edge_admissible(1, UnitVec3(Vec3{1, 0, 0}), p);
  CHECK(e2.admissible);
  CHECK(e2.via == EdgeVia::UinvSqMinv);
  double isq = 1 / std::sqrt(2.0);
  EdgeVerdict e3 = edge_admissible(1, UnitVec3(Vec3{0, isq, -isq}), p);
  CHECK_FALSE(e3.admissible);
  CHECK(e3.via == EdgeVia::None);
}

TEST_CASE("face admissibility spot checks") {
  LatticeParams p = test::preset();
  CHECK(face_admissible(1, UnitVec3(Vec3{1, 0, 0}), p).admissible);
  // every face of the axis-aligned cut, every variant
  for (int s = 1; s <= 6; ++s)
    for (int i = 0; i < 3; ++i) {
      Vec3 n{0, 0, 0};
      n[i] = 1;
      CHECK(face_admissible(s, UnitVec3(n), p).admissible);
    }
  // non-coverage witness normal
  auto [dir, witness] = coverage_witness(1, p);
  (void)dir;
  CHECK_FALSE(face_admissible(1, witness, p).admissible);
}

TEST_CASE("specimen verdicts") {
  LatticeParams p = test::preset();
  SUBCASE("axis-aligned cut admissible for every variant") {
    Parallelepiped box = Parallelepiped::axis_aligned({0, 0, 0}, {4, 1, 1});
    for (int s = 1; s <= 6; ++s) {
      AdmissibilityReport r = classify_specimen(s, box, p);
      CHECK(r.domain_admissible);
      for (const EdgeVerdict& e : r.edges) CHECK(e.admissible);
      for (const FaceVerdict& f : r.faces) CHECK(f.admissible);
    }
  }
  SUBCASE("a cut with an edge along (0,1,-1)/sqrt2 is inadmissible for variant 1") {
    double isq = 1 / std::sqrt(2.0);
    Parallelepiped box({0, 0, 0}, {Vec3{1, 0, 0}, Vec3{0, isq, -isq}, Vec3{0, isq, isq}});
    AdmissibilityReport r = classify_specimen(1, box, p);
    CHECK_FALSE(r.domain_admissible);
  }
}

TEST_CASE("property: an admissible edge makes its two adjacent faces admissible") {
  LatticeParams p = test::preset();
  auto g = test::rng(51);
  int admissible_edges_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Rotation3 r = test::random_rotation(g);
    std::array<Vec3, 3> edges{r.mat().col(0), r.mat().col(1) * 1.7, r.mat().col(2) * 0.6};
    Parallelepiped box({0, 0, 0}, edges);
    for (int s = 1; s <= 6; ++s) {
      AdmissibilityReport rep = classify_specimen(s, box, p);
      for (int i = 0; i < 3; ++i) {
        if (!rep.edges[4 * i].admissible) continue;
        ++admissible_edges_seen;
        // faces meeting edge i are the two whose normals are orthogonal to it
        for (int j = 0; j < 3; ++j) {
          if (j == i) continue;
          CHECK(rep.faces[2 * j].admissible);
        }
      }
    }
  }
  CHECK(admissible_edges_seen > 50);
}

TEST_CASE("report invariant under edge rescaling") {
  LatticeParams p = test::preset();
  Parallelepiped a({1, 2, 3}, {Vec3{1, 0.1, 0}, Vec3{0, 1, 0.2}, Vec3{0.1, 0, 1}});
  Parallelepiped b({-4, 0, 9}, {Vec3{3, 0.3, 0}, Vec3{0, 0.5, 0.1}, Vec3{0.7, 0, 7}});
  for (int s = 1; s <= 6; ++s) {
    AdmissibilityReport ra = classify_specimen(s, a, p);
    AdmissibilityReport rb = classify_specimen(s, b, p);
    CHECK(ra.domain_admissible == rb.domain_admissible);
    for (int i = 0; i < 12; ++i) CHECK(ra.edges[i].admissible == rb.edges[i].admissible);
  }
}
