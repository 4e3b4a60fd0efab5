#pragma once

#include <nlohmann/json.hpp>

#include "orthotwin/habit.hpp"
#include "orthotwin/nucleation.hpp"
#include "orthotwin/specimen.hpp"
#include "orthotwin/twinning.hpp"

namespace otw {

using nlohmann::json;

json to_json(const Vec3& v);
Vec3 vec3_from_json(const json& j);
json to_json(const Mat3& m);  // row-major 9-array
Mat3 mat3_from_json(const json& j);

// {s, l, kind, a, n, q, residual}
json to_json(const TwinSystem& t);
TwinSystem twin_from_json(const json& j);

// {pair:[s,l], twin_kind, branch, kappa, lambda, m, b, r, residuals:{...}}
struct HabitExport {
  int s = 0, l = 0;
  TwinKind twin_kind = TwinKind::TypeII;
  Branch branch = Branch::Small;
  int kappa = +1;
  double lambda = 0;
  Vec3 m, b;
  Mat3 r;
  double residual_equation = 0, residual_identity = 0;

  bool operator==(const HabitExport&) const = default;
};

HabitExport make_habit_export(const TwinSystem& twin, const HabitSolution& sol,
                              const HabitResiduals& res);
json to_json(const HabitExport& h);
HabitExport habit_from_json(const json& j);

// {variant, edges:[{dir, admissible, via}], faces:[...], domain_admissible}
json to_json(const AdmissibilityReport& r);

// {variant, octants, candidates:[{l, twin_kind, branch, kappa, n, m, inj_sign}],
//  energy:{depth, volume_s1, delta_I, seed}}
json nucleation_to_json(const OctantVerdict& verdict, const EnergyDensity& density,
                        bool with_energy = true);

bool twin_equal(const TwinSystem& a, const TwinSystem& b, double tol = 0.0);

}  // namespace otw
