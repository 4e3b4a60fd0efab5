#include "orthotwin/reference_data.hpp"

namespace otw::ref {

const SymmetryTable& symmetry_table() {
  static const SymmetryTable t = [] {
    SymmetryTable t;
    constexpr int rows[6][24] = {
        {1, 3, 5, 6, 4, 5, 4, 6, 3, 4, 3, 6, 5, 1, 1, 1, 2, 2, 2, 2, 5, 6, 4, 3},
        {2, 4, 6, 5, 3, 6, 3, 5, 4, 3, 4, 5, 6, 2, 2, 2, 1, 1, 1, 1, 6, 5, 3, 4},
        {3, 5, 1, 2, 5, 2, 6, 1, 6, 2, 1, 3, 3, 6, 5, 4, 3, 4, 6, 5, 4, 4, 1, 2},
        {4, 6, 2, 1, 6, 1, 5, 2, 5, 1, 2, 4, 4, 5, 6, 3, 4, 3, 5, 6, 3, 3, 2, 1},
        {5, 1, 3, 3, 2, 4, 1, 4, 2, 5, 5, 2, 1, 4, 3, 6, 6, 5, 3, 4, 2, 1, 6, 6},
        {6, 2, 4, 4, 1, 3, 2, 3, 1, 6, 6, 1, 2, 3, 4, 5, 5, 6, 4, 3, 1, 2, 5, 5},
    };
    for (int s = 0; s < 6; ++s)
      for (int q = 0; q < 24; ++q) t.entry[s][q] = rows[s][q];
    return t;
  }();
  return t;
}

namespace {

using Rows = std::array<HabitRow, 24>;

// m+1 / b+1 rows (kappa = +1, small branch)
const Rows kPlusSmall = {{
    {1, 3, {-1, 2, -3}, {-1, -2, -3}}, {3, 1, {-2, 1, 3}, {2, 1, 3}},
    {1, 4, {4, -5, -6}, {4, 5, -6}},   {4, 1, {-5, 4, 6}, {5, 4, 6}},
    {1, 5, {1, 3, -2}, {1, 3, 2}},     {5, 1, {-5, -6, -4}, {5, -6, -4}},
    {1, 6, {4, -6, -5}, {4, -6, 5}},   {6, 1, {-2, -3, -1}, {2, -3, -1}},
    {2, 3, {4, -5, 6}, {4, 5, 6}},     {3, 2, {-2, -1, 3}, {2, -1, 3}},
    {2, 4, {-1, 2, 3}, {-1, -2, 3}},   {4, 2, {-5, -4, 6}, {5, -4, 6}},
    {2, 5, {4, 6, -5}, {4, 6, 5}},     {5, 2, {-5, -6, 4}, {5, -6, 4}},
    {2, 6, {1, -3, -2}, {1, -3, 2}},   {6, 2, {-2, -3, 1}, {2, -3, 1}},
    {3, 5, {3, 1, -2}, {3, 1, 2}},     {5, 3, {3, -2, 1}, {3, 2, 1}},
    {3, 6, {3, -1, -2}, {3, -1, 2}},   {6, 3, {-6, 5, -4}, {-6, -5, -4}},
    {4, 5, {6, 4, -5}, {6, 4, 5}},     {5, 4, {3, -2, -1}, {3, 2, -1}},
    {4, 6, {6, -4, -5}, {6, -4, 5}},   {6, 4, {-6, 5, 4}, {-6, -5, 4}},
}};

// m-1 / b-1 rows (kappa = -1, small branch)
const Rows kMinusSmall = {{
    {1, 3, {4, 5, 6}, {4, -5, 6}},     {3, 1, {-5, -4, -6}, {5, -4, -6}},
    {1, 4, {-1, -2, 3}, {-1, 2, 3}},   {4, 1, {-2, -1, -3}, {2, -1, -3}},
    {1, 5, {-4, -6, -5}, {-4, -6, 5}}, {5, 1, {-2, 3, 1}, {2, 3, 1}},
    {1, 6, {-1, 3, -2}, {-1, 3, 2}},   {6, 1, {-5, 6, 4}, {5, 6, 4}},
    {2, 3, {-1, -2, -3}, {-1, 2, -3}}, {3, 2, {-5, 4, -6}, {5, 4, -6}},
    {2, 4, {4, 5, -6}, {4, -5, -6}},   {4, 2, {-2, 1, -3}, {2, 1, -3}},
    {2, 5, {-1, -3, -2}, {-1, -3, 2}}, {5, 2, {-2, 3, -1}, {2, 3, -1}},
    {2, 6, {-4, 6, -5}, {-4, 6, 5}},   {6, 2, {-5, 6, -4}, {5, 6, -4}},
    {3, 5, {-6, -4, -5}, {-6, -4, 5}}, {5, 3, {-6, -5, -4}, {-6, 5, -4}},
    {3, 6, {-6, 4, -5}, {-6, 4, 5}},   {6, 3, {3, 2, 1}, {3, -2, 1}},
    {4, 5, {-3, -1, -2}, {-3, -1, 2}}, {5, 4, {-6, -5, 4}, {-6, 5, 4}},
    {4, 6, {-3, 1, -2}, {-3, 1, 2}},   {6, 4, {3, 2, -1}, {3, -2, -1}},
}};

// m+2 / b+2 rows (kappa = +1, large branch)
const Rows kPlusLarge = {{
    {1, 3, {-2, 1, 3}, {2, 1, 3}},     {3, 1, {4, 5, 6}, {4, -5, 6}},
    {1, 4, {-5, 4, 6}, {5, 4, 6}},     {4, 1, {-1, -2, 3}, {-1, 2, 3}},
    {1, 5, {-5, -6, -4}, {5, -6, -4}}, {5, 1, {1, 3, -2}, {1, 3, 2}},
    {1, 6, {-2, -3, -1}, {2, -3, -1}}, {6, 1, {4, -6, -5}, {4, -6, 5}},
    {2, 3, {-2, -1, 3}, {2, -1, 3}},   {3, 2, {4, -5, 6}, {4, 5, 6}},
    {2, 4, {-5, -4, 6}, {5, -4, 6}},   {4, 2, {-1, 2, 3}, {-1, -2, 3}},
    {2, 5, {-5, -6, 4}, {5, -6, 4}},   {5, 2, {1, 3, 2}, {1, 3, -2}},
    {2, 6, {-2, -3, 1}, {2, -3, 1}},   {6, 2, {4, -6, 5}, {4, -6, -5}},
    {3, 5, {3, -2, 1}, {3, 2, 1}},     {5, 3, {3, 1, -2}, {3, 1, 2}},
    {3, 6, {-6, 5, -4}, {-6, -5, -4}}, {6, 3, {3, -1, -2}, {3, -1, 2}},
    {4, 5, {3, -2, -1}, {3, 2, -1}},   {5, 4, {6, 4, -5}, {6, 4, 5}},
    {4, 6, {-6, 5, 4}, {-6, -5, 4}},   {6, 4, {6, -4, -5}, {6, -4, 5}},
}};

// m-2 / b-2 rows (kappa = -1, large branch)
const Rows kMinusLarge = {{
    {1, 3, {-5, -4, -6}, {5, -4, -6}}, {3, 1, {-1, 2, -3}, {-1, -2, -3}},
    {1, 4, {-2, -1, -3}, {2, -1, -3}}, {4, 1, {4, -5, -6}, {4, 5, -6}},
    {1, 5, {-2, 3, 1}, {2, 3, 1}},     {5, 1, {-4, -6, -5}, {-4, -6, 5}},
    {1, 6, {-5, 6, 4}, {5, 6, 4}},     {6, 1, {-1, 3, -2}, {-1, 3, 2}},
    {2, 3, {-5, 4, -6}, {5, 4, -6}},   {3, 2, {-1, -2, -3}, {-1, 2, -3}},
    {2, 4, {-2, 1, -3}, {2, 1, -3}},   {4, 2, {4, 5, -6}, {4, -5, -6}},
    {2, 5, {-2, 3, -1}, {2, 3, -1}},   {5, 2, {-4, -6, 5}, {-4, -6, -5}},
    {2, 6, {-5, 6, -4}, {5, 6, -4}},   {6, 2, {-1, 3, 2}, {-1, 3, -2}},
    {3, 5, {-6, -5, -4}, {-6, 5, -4}}, {5, 3, {-6, -4, -5}, {-6, -4, 5}},
    {3, 6, {3, 2, 1}, {3, -2, 1}},     {6, 3, {-6, 4, -5}, {-6, 4, 5}},
    {4, 5, {-6, -5, 4}, {-6, 5, 4}},   {5, 4, {-3, -1, -2}, {-3, -1, 2}},
    {4, 6, {3, 2, -1}, {3, -2, -1}},   {6, 4, {-3, 1, -2}, {-3, 1, 2}},
}};

double decode(int code, const std::array<double, 6>& c) {
  double v = c[std::abs(code) - 1];
  return code < 0 ? -v : v;
}

}  // namespace

const Rows& habit_rows_plus_small() { return kPlusSmall; }
const Rows& habit_rows_minus_small() { return kMinusSmall; }
const Rows& habit_rows_plus_large() { return kPlusLarge; }
const Rows& habit_rows_minus_large() { return kMinusLarge; }

std::array<double, 3> habit_m(const HabitRow& row) {
  return {decode(row.m[0], table_s), decode(row.m[1], table_s), decode(row.m[2], table_s)};
}

std::array<double, 3> habit_b(const HabitRow& row) {
  return {decode(row.b[0], table_z), decode(row.b[1], table_z), decode(row.b[2], table_z)};
}

}  // namespace otw::ref
