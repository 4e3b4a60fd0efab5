#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orthotwin/habit.hpp"
#include "orthotwin/specimen.hpp"

namespace otw {

// One sign-resolved (twin, habit) combination at a corner. sign_n flips
// (a, n) jointly and sign_m flips (b, m) jointly, leaving both rank-one
// tensors unchanged; the resolved normals lie strictly inside `octant`.
struct CornerCandidate {
  int s = 0, l = 0;
  LatticeParams params{1, 1, 1};
  TwinSystem twin;
  HabitSolution habit;
  int sign_n = +1, sign_m = +1;
  int octant = 0;              // shared octant of sign_n*n and sign_m*m
  Vec3 b_tilde;                // R * (sign_m * b)
  double inj_sign = 0;         // U_s^-1 b_tilde . (sign_n * n)
  std::array<bool, 3> perpendicular_flags{};  // n or m perpendicular to an edge
  bool valid = false;          // inj_sign < 0 and no perpendicular flag

  Vec3 signed_n() const { return twin.n.vec() * double(sign_n); }
  Vec3 signed_a() const { return twin.a * double(sign_n); }
  Vec3 signed_m() const { return habit.m.vec() * double(sign_m); }
  Vec3 signed_b() const { return habit.b * double(sign_m); }
};

// All octant-sharing candidates for stabilized variant s against every
// non-compound partner, both branches, both kappa, both sign choices.
// Specimen edge directions default to the cubic axes; `kind` selects which
// twin family feeds the enumeration (Type-II for the axis-aligned cut).
std::vector<CornerCandidate> enumerate_candidates(
    int s, const LatticeParams& params,
    const std::array<Vec3, 3>& specimen_edges = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}},
    TwinKind kind = TwinKind::TypeII);

struct OctantVerdict {
  int variant = 0;
  std::vector<int> octants;                 // sorted, closed under antipodes
  std::vector<CornerCandidate> witnesses;   // the valid candidates behind it
};

OctantVerdict nucleating_octants(int s, const LatticeParams& params);

// Three-region piecewise-affine deformation at a corner, in coordinates
// centered on the corner. The specimen occupies the cone opposite to the
// candidate octant; regions (with k_m, k_n < 0):
//   S1 = {x.m > k_m}            austenite, gradient R
//   S2 = {x.m < k_m, x.n > k_n} twin laminate, gradient (1-l)Us + l QUl
//   S3 = {x.n < k_n}            stabilized variant, gradient Us
struct CornerConstruction {
  CornerCandidate candidate;
  double r = 1, k_n = 0, k_m = 0;
  double separation_margin = 0;  // distance slack of the plane-disjointness condition
  Mat3 grad1, grad2, grad3;
  Vec3 trans1, trans2, trans3;
  double vol_s1 = 0, vol_s2 = 0, vol_s3 = 0;  // exact region volumes

  // region of a point in corner coordinates: 1, 2 or 3 (3 covers the
  // exterior of the ball, where the deformation continues as U_s x)
  int region(const Vec3& x) const;
  Vec3 deform(const Vec3& x) const;
  bool in_cone(const Vec3& x) const;
};

// Assembles and verifies the construction. The overload without offsets picks
// |k_n| = 0.7 r min|n_i| and |k_m| = 0.5 |k_n| min(|m_i|/|n_i|), which keeps
// the laminate slab inside the corner ball with positive separation margin.
// Throws PlanesOverlap / EmptyRegion when the offsets are unusable.
CornerConstruction build_construction(const CornerCandidate& cand, double r, double k_n,
                                      double k_m);
CornerConstruction build_construction(const CornerCandidate& cand, double r = 1.0);

struct InjectivityReport {
  double twin_orth;      // |U_s^-1 a . n|
  double rtb_dot_m;      // R^T b_tilde . m, must be in (-1, 0]
  double inj_sign;       // U_s^-1 b_tilde . n, must be < 0
  bool analytic_ok;
  long pairs_checked = 0;
  long collisions = 0;
  std::uint64_t seed = 0;
};

// Checks the three analytic conditions, then hunts for collisions by random
// pair sampling and by pulling images back through the other region maps.
// Throws InjectivityViolated (with a witness in the message) on collision.
InjectivityReport verify_injectivity(const CornerConstruction& con, long pair_samples,
                                     std::uint64_t seed = 0x5eed0c0de);

// -depth * vol(S1), with the volume estimated by Monte Carlo over the tight
// bounding box of the austenite region (1e6 points, fixed seed).
double energy_change(const CornerConstruction& con, const EnergyDensity& density,
                     std::uint64_t seed = 0x5eed0e12);

// Monte-Carlo volume of S1 alone (the estimator behind energy_change).
double monte_carlo_volume_s1(const CornerConstruction& con, int points,
                             std::uint64_t seed = 0x5eed0e12);

// |<nu, det> - det(mean)| for the laminate (1-l) d_{U_s} + l d_{Q U_l};
// det is affine along rank-one segments, so this vanishes for valid twins.
double laminate_minors_residual(const TwinSystem& twin, const VariantSet& vs, double lambda);

// Same residual for an arbitrary matrix segment (1-l)A + lB.
double segment_det_residual(const Mat3& a, const Mat3& b, double lambda);

}  // namespace otw
