#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "orthotwin/lattice.hpp"
#include "orthotwin/mat3.hpp"

namespace otw {

// Closed-form membership predicates for the maximal-direction sets M_s and
// M_s^-1, the normal sets N_s and N_s^-1, and their transformed companions.
// The closed forms require the lattice-parameter assumptions:
//   M_s, N_s need A1, A2; M_s^-1, N_s^-1 need A1, A3, A4.
// AssumptionViolated is thrown otherwise.
bool in_M(int s, const UnitVec3& e, const LatticeParams& params);
bool in_Minv(int s, const UnitVec3& e, const LatticeParams& params);
bool in_UinvSq_Minv(int s, const UnitVec3& e, const LatticeParams& params);
bool in_N(int s, const UnitVec3& n, const LatticeParams& params);
bool in_Ninv(int s, const UnitVec3& n, const LatticeParams& params);

// Brute-force oracles evaluating the defining max conditions directly over
// all wells (and a great-circle witness search for the normal sets). These
// are the independent route against which the closed forms are tested.
bool oracle_in_M(int s, const UnitVec3& e, const VariantSet& vs);
bool oracle_in_Minv(int s, const UnitVec3& e, const VariantSet& vs);
bool oracle_in_N(int s, const UnitVec3& n, const VariantSet& vs, int sweep = 10000);
bool oracle_in_Ninv(int s, const UnitVec3& n, const VariantSet& vs, int sweep = 10000);

// Closed-form verdict for a direction plus the oracle verdicts and the
// distance to the nearest predicate boundary; closed form and oracle agree
// whenever |margin| > 1e-9.
struct DirectionVerdict {
  bool in_M = false;
  bool in_UinvSqMinv = false;
  bool in_M_oracle = false;
  bool in_Minv_oracle_preimage = false;
  double margin = 0;
};

DirectionVerdict classify_direction(int s, const UnitVec3& e, const VariantSet& vs);

struct NormalVerdict {
  bool in_N = false;
  bool in_UsqNinv = false;
  double margin = 0;
};

NormalVerdict classify_normal(int s, const UnitVec3& n, const LatticeParams& params);

// Signed slack of the closed-form predicates (positive inside); the margin
// used to exclude boundary-band points from oracle comparisons.
double margin_M(int s, const UnitVec3& e, const LatticeParams& params);
double margin_Minv(int s, const UnitVec3& e, const LatticeParams& params);

// A direction outside M_s u U_s^-2 M_s^-1 and a normal outside
// N_s u U_s^2 N_s^-1, built from the published non-coverage recipe.
std::pair<UnitVec3, UnitVec3> coverage_witness(int s, const LatticeParams& params);

enum class SphereLabel { M, UM, Both, None };

const char* sphere_label_name(SphereLabel label);

struct SpherePoint {
  UnitVec3 dir;
  SphereLabel label;
};

struct SpherePointCloud {
  int variant = 0;
  int count = 0;
  std::uint64_t seed = 0;
  std::vector<SpherePoint> points;  // sample-index order
};

// Deterministic Fibonacci-lattice sample of the unit sphere, labeled by the
// closed-form predicates. seed != 0 applies a seed-derived global rotation.
SpherePointCloud classify_sphere(int s, const LatticeParams& params, int count,
                                 std::uint64_t seed);

// CSV with header x,y,z,label and labels M, UM, BOTH, NONE.
void write_csv(const SpherePointCloud& cloud, std::ostream& os);

struct PathSample {
  double t;
  Vec3 sigma;
};

// Discrete rigidity check: a sampled path whose segment speeds never exceed
// the end-to-end chord speed must be the chord. Returns false when either the
// slope bound (1e-12 band) or the chord-coincidence (1e-9 * length band)
// fails. Throws MalformedPath for non-increasing t or fewer than 3 samples.
bool check_rigidity(const std::vector<PathSample>& path);

}  // namespace otw
