#pragma once

#include <vector>

#include "orthotwin/lattice.hpp"
#include "orthotwin/mat3.hpp"

namespace otw {

enum class TwinKind { TypeI, TypeII, Compound };

const char* twin_kind_name(TwinKind k);

// Variant pair in published row order: the elements of row (l, s) solve
//   Q U_l - U_s = a (x) n,
// i.e. the second index is the stabilized variant carrying the laminate.
struct VariantPair {
  int l;
  int s;
};

// A solution of the twinning equation Q U_l - U_s = a (x) n.
struct TwinSystem {
  int s = 0;  // stabilized variant
  int l = 0;  // laminate partner
  TwinKind kind = TwinKind::TypeI;
  Vec3 a;      // shear
  UnitVec3 n;  // twin plane normal
  Rotation3 q;
  double residual = 0;  // ||Q U_l - U_s - a(x)n||
};

// Closed-form element components at given parameters:
// (u1,u2,u3) Type-I shear, (t1,t2) Type-II normal, (v1,v2,v3) Type-II shear.
// Throws DegenerateTwin when alpha == gamma (variants coincide pairwise).
struct TwinElementConstants {
  double u1, u2, u3;
  double t1, t2;
  double v1, v2, v3;
};

TwinElementConstants twin_constants(const LatticeParams& params);

// Tabulated closed-form systems for the 24 non-compound pairs.
// Throws PairNotTabulated for compound pairs (1,2),(3,4),(5,6) and s == l.
TwinSystem type1_twin(const LatticeParams& params, VariantPair pair);
TwinSystem type2_twin(const LatticeParams& params, VariantPair pair);

// Generic rank-one-connection solver: eigendecomposition of
// C = U_s^-1 U_l^2 U_s^-1; requires the middle eigenvalue to equal 1.
// Returns the two classical solutions, classified against the closed forms
// (Compound for the compound pairs). Throws NoRankOneConnection otherwise.
std::vector<TwinSystem> solve_twins_generic(const LatticeParams& params, int s, int l);

// det(U_s + a(x)n) - det(U_l); zero for any valid twin system.
double twin_det_mismatch(const TwinSystem& twin, const VariantSet& vs);

bool is_compound_pair(int s, int l);

}  // namespace otw
