#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "orthotwin/lattice.hpp"
#include "orthotwin/mat3.hpp"

namespace otw {

// One element of the 24-rotation cubic point group. `entries` are the exact
// integer matrix entries; `matrix` is the same data as a checked rotation.
// axis/angle are documentation metadata (index 0 is the identity).
struct CubicRotation {
  int index;
  std::array<std::array<int, 3>, 3> entries;
  Rotation3 matrix;
  Vec3 axis;
  double angle;
};

// The cubic point group in the fixed published order (identity first).
const std::array<CubicRotation, 24>& cubic_group();

struct SymmetryTable {
  // entry[s-1][q] = i such that Q_q U_s Q_q^T = U_i, with q = 0 the identity.
  std::array<std::array<int, 24>, 6> entry{};

  bool operator==(const SymmetryTable&) const = default;
};

// Recomputes the variant symmetry table from a concrete variant set by
// matching conjugates against the six variants to 1e-10.
// Throws NoMatch if some conjugate is not a variant.
SymmetryTable build_symmetry_table(const VariantSet& variants);

// The parameter-independent table, derived with exact integer arithmetic on
// the variant patterns.
const SymmetryTable& canonical_symmetry_table();

// All group elements Q with Q U_s Q^T = U_l (exactly four per pair).
std::vector<CubicRotation> conjugating_rotations(int s, int l);

// Golden fixture I/O: 6 rows x 24 comma-separated digits, row s ascending q.
SymmetryTable load_table_csv(const std::string& path);
void write_table_csv(const SymmetryTable& table, std::ostream& os);

}  // namespace otw
