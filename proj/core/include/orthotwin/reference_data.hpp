#pragma once

#include <array>

#include "orthotwin/symmetry.hpp"

namespace otw::ref {

// Published reference values for the CuAlNi cubic-to-orthorhombic transition
// (lattice parameters alpha=1.06372, beta=0.91542, gamma=1.02368). These are
// regression targets only; nothing in the library computes from them.

// Variant symmetry table (6 x 24, identity column first).
const SymmetryTable& symmetry_table();

// Twin element components as printed in the reference tables. Note: the
// printed Type-I shear block duplicates the Type-II one verbatim; the value
// consistent with the twinning equation is closed_form_u below. Both are kept
// so the discrepancy stays visible in the regression output.
inline constexpr std::array<double, 3> printed_u = {0.197977, -0.173644, 0.00379754};
inline constexpr std::array<double, 2> printed_t = {-0.688388, -0.228571};
inline constexpr std::array<double, 3> printed_v = {0.197977, -0.173644, 0.00379754};

// Assumption scalars.
inline constexpr double norm_check = 3.10099;   // 2 a^2 + b^2
inline constexpr double cof_norm = 3.01206;     // |cof U|^2
inline constexpr double a_minus_b = 0.202513;   // A - B

// Habit invariants.
inline constexpr double lambda_star = 0.300782;
inline constexpr double delta = -2.37742;
inline constexpr double eta = 0.0091991;

// Habit table building blocks s1..s6 and z1..z6.
inline constexpr std::array<double, 6> table_s = {0.141221, 0.668151, 0.730501,
                                                  0.261549, 0.727152, 0.634699};
inline constexpr std::array<double, 6> table_z = {0.0244382, 0.0728267, 0.0575181,
                                                  0.0123419, 0.0674388, 0.0671488};

// Habit plane rows: patterns over (s_i, z_i) keyed by pair (l, s), one table
// per (branch, kappa family). Codes are +-k referencing s_k / z_k.
struct HabitRow {
  int l, s;
  std::array<int, 3> m;  // +-k -> +-s_k
  std::array<int, 3> b;  // +-k -> +-z_k
};

// kappa = +1, volume fraction in (0, 1/2)
const std::array<HabitRow, 24>& habit_rows_plus_small();
// kappa = -1, volume fraction in (0, 1/2)
const std::array<HabitRow, 24>& habit_rows_minus_small();
// kappa = +1, volume fraction in (1/2, 1)
const std::array<HabitRow, 24>& habit_rows_plus_large();
// kappa = -1, volume fraction in (1/2, 1)
const std::array<HabitRow, 24>& habit_rows_minus_large();

std::array<double, 3> habit_m(const HabitRow& row);
std::array<double, 3> habit_b(const HabitRow& row);

// Corner-injectivity constant U_s^-1 (R b) . n for every admitted candidate.
inline constexpr double injectivity_constant = -0.0226521;

// Nucleating octants per stabilized variant (rows 1..6).
inline constexpr std::array<std::array<int, 4>, 6> nucleating_octants = {{
    {1, 2, 5, 6},
    {3, 4, 7, 8},
    {1, 3, 5, 7},
    {2, 4, 6, 8},
    {1, 4, 5, 8},
    {2, 3, 6, 7},
}};

}  // namespace otw::ref
