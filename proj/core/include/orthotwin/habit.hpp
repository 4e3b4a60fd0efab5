#pragma once

#include <optional>
#include <vector>

#include "orthotwin/twinning.hpp"

namespace otw {

enum class Branch { Small, Large };  // volume fraction in (0,1/2) vs (1/2,1)

const char* branch_name(Branch b);

// Volume-fraction invariants of the habit-plane problem for one twin system.
// delta is recovered by inverting lambda* = (1 - sqrt(1 + 2/delta)) / 2;
// eta_ref is a stored reference constant, available only at the CuAlNi preset.
struct HabitInvariants {
  double lambda_star;
  double delta;
  std::optional<double> eta_ref;
};

// A solution of U_s + lambda a(x)n = R (1 + b(x)m).
struct HabitSolution {
  Vec3 b;      // habit shear
  UnitVec3 m;  // habit plane normal
  Rotation3 r;
  double lambda = 0;
  int kappa = +1;  // +1 or -1; +1 is the small-|m.n| solution (anchored at pair (1,3))
  Branch branch = Branch::Small;
};

struct HabitResiduals {
  double equation;  // ||U_s + lambda a(x)n - R(1 + b(x)m)||
  double identity;  // ||(U_s+l n(x)a)(U_s+l a(x)n) - (1+m(x)b)(1+b(x)m)||
};

// lambda_2((U_s + l n(x)a)(U_s + l a(x)n)) - 1; a habit plane exists at the
// roots of this function.
double middle_eigen_deficit(const TwinSystem& twin, const VariantSet& vs, double lambda);

// All roots of the deficit in (0,1), located by a 2000-point scan plus
// bisection to 1e-12.
std::vector<double> deficit_roots(const TwinSystem& twin, const VariantSet& vs);

// Throws NoHabitPlane when the deficit has no root in (0,1).
HabitInvariants solve_volume_fractions(const TwinSystem& twin, const VariantSet& vs);

HabitSolution habit_solution(const TwinSystem& twin, const VariantSet& vs, Branch branch,
                             int kappa);

HabitResiduals verify_habit(const HabitSolution& sol, const TwinSystem& twin,
                            const VariantSet& vs);

}  // namespace otw
