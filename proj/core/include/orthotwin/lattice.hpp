#pragma once

#include <array>
#include <string>

#include "orthotwin/mat3.hpp"

namespace otw {

// The three orthorhombic stretches. Everything else in the library derives
// from these (dimensionless, all positive).
struct LatticeParams {
  double alpha;
  double beta;
  double gamma;

  void validate() const;

  // CuAlNi specimen preset used by all regressions.
  static LatticeParams cualni_seiner() { return {1.06372, 0.91542, 1.02368}; }

  bool operator==(const LatticeParams&) const = default;
};

bool is_preset_cualni(const LatticeParams& p);

// key=value text file with keys alpha, beta, gamma ('#' comments allowed).
LatticeParams load_params(const std::string& path);

// The six variant stretch tensors U_1..U_6 plus the generating parameters.
struct VariantSet {
  std::array<SymMat3, 6> u;
  LatticeParams params;

  const Mat3& of(int s) const { return u[s - 1].mat(); }
};

VariantSet variants(const LatticeParams& params);

// Evaluation of the lattice-parameter assumptions (A1)-(A4) plus the two
// standing constraints det U <= 1 and lambda_max(cof U) >= 1.
//
// a*_boundary flags mark inequalities that hold only within a 1e-12 band, so
// borderline parameter sets are reported rather than silently classified.
struct AssumptionReport {
  bool a1 = false, a2 = false, a3 = false, a4 = false;
  double norm_check = 0;   // 2 a^2 + b^2 (A2 left-hand side)
  double cof_norm = 0;     // |cof U|^2 = a^2 g^2 + a^2 b^2 + b^2 g^2 (A3)
  double a_minus_b = 0;    // A - B (A4)
  double A = 0, B = 0, N = 0, P = 0;
  double det_u = 0;        // a b g
  double lam_max_cof = 0;  // a g
  bool det_le_one = false;
  bool cof_max_ge_one = false;
  std::array<bool, 4> boundary{};  // |slack| <= 1e-12 per assumption

  bool all() const { return a1 && a2 && a3 && a4; }
  bool standing() const { return det_le_one && cof_max_ge_one; }
};

AssumptionReport check_assumptions(const LatticeParams& params);

// Well depth of the transformation energy: -depth on the austenite well,
// 0 on the martensite wells. Only the sign of energy differences matters,
// so the default depth is 1.
struct EnergyDensity {
  double depth;

  explicit EnergyDensity(double d = 1.0) : depth(d) {
    if (!(d > 0)) throw Error(ErrorCode::BadInput, "energy well depth must be > 0");
  }
};

}  // namespace otw
