#include "orthotwin/symmetry.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace otw {

namespace {

struct RotSpec {
  std::array<int, 9> m;  // row-major
  Vec3 axis;
  double angle;
};

constexpr double kThird = 2.0 * M_PI / 3.0;

// The 24 proper rotations of the cube, identity first, in the fixed published
// order. Entries are exact integers.
const std::array<RotSpec, 24> kGroup = {{
    {{1, 0, 0, 0, 1, 0, 0, 0, 1}, {0, 0, 0}, 0.0},
    {{0, 0, 1, 1, 0, 0, 0, 1, 0}, {1, 1, 1}, kThird},
    {{0, 1, 0, 0, 0, 1, 1, 0, 0}, {1, 1, 1}, -kThird},
    {{0, -1, 0, 0, 0, 1, -1, 0, 0}, {-1, 1, 1}, kThird},
    {{0, 0, -1, -1, 0, 0, 0, 1, 0}, {-1, 1, 1}, -kThird},
    {{0, -1, 0, 0, 0, -1, 1, 0, 0}, {1, -1, 1}, kThird},
    {{0, 0, 1, -1, 0, 0, 0, -1, 0}, {1, -1, 1}, -kThird},
    {{0, 1, 0, 0, 0, -1, -1, 0, 0}, {1, 1, -1}, kThird},
    {{0, 0, -1, 1, 0, 0, 0, -1, 0}, {1, 1, -1}, -kThird},
    {{0, 1, 0, 1, 0, 0, 0, 0, -1}, {1, 1, 0}, M_PI},
    {{0, -1, 0, -1, 0, 0, 0, 0, -1}, {1, -1, 0}, M_PI},
    {{0, 0, 1, 0, -1, 0, 1, 0, 0}, {1, 0, 1}, M_PI},
    {{0, 0, -1, 0, -1, 0, -1, 0, 0}, {1, 0, -1}, M_PI},
    {{-1, 0, 0, 0, 0, 1, 0, 1, 0}, {0, 1, 1}, M_PI},
    {{-1, 0, 0, 0, 0, -1, 0, -1, 0}, {0, 1, -1}, M_PI},
    {{1, 0, 0, 0, -1, 0, 0, 0, -1}, {1, 0, 0}, M_PI},
    {{-1, 0, 0, 0, 1, 0, 0, 0, -1}, {0, 1, 0}, M_PI},
    {{-1, 0, 0, 0, -1, 0, 0, 0, 1}, {0, 0, 1}, M_PI},
    {{1, 0, 0, 0, 0, -1, 0, 1, 0}, {1, 0, 0}, M_PI / 2},
    {{1, 0, 0, 0, 0, 1, 0, -1, 0}, {1, 0, 0}, -M_PI / 2},
    {{0, 0, 1, 0, 1, 0, -1, 0, 0}, {0, 1, 0}, M_PI / 2},
    {{0, 0, -1, 0, 1, 0, 1, 0, 0}, {0, 1, 0}, -M_PI / 2},
    {{0, -1, 0, 1, 0, 0, 0, 0, 1}, {0, 0, 1}, M_PI / 2},
    {{0, 1, 0, -1, 0, 0, 0, 0, 1}, {0, 0, 1}, -M_PI / 2},
}};

Mat3 to_mat(const std::array<int, 9>& m) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = m[3 * i + j];
  return r;
}

// Integer 3x3 helpers for the exact pattern conjugation.
using IMat = std::array<std::array<int, 3>, 3>;

IMat imul(const IMat& a, const IMat& b) {
  IMat r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

IMat itrans(const IMat& a) {
  IMat r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
  return r;
}

// Each variant is beta*E + p*Q + q*D with integer patterns E (beta slot),
// Q (diagonal (alpha+gamma)/2 slot) and D (off-diagonal (alpha-gamma)/2 slot).
struct VariantPattern {
  IMat e, q, d;
  bool operator==(const VariantPattern&) const = default;
};

std::array<VariantPattern, 6> variant_patterns() {
  auto diag = [](int a, int b, int c) { return IMat{{{a, 0, 0}, {0, b, 0}, {0, 0, c}}}; };
  auto off = [](int i, int j, int sign) {
    IMat m{};
    m[i][j] = sign;
    m[j][i] = sign;
    return m;
  };
  return {
      VariantPattern{diag(1, 0, 0), diag(0, 1, 1), off(1, 2, 1)},
      VariantPattern{diag(1, 0, 0), diag(0, 1, 1), off(1, 2, -1)},
      VariantPattern{diag(0, 1, 0), diag(1, 0, 1), off(0, 2, 1)},
      VariantPattern{diag(0, 1, 0), diag(1, 0, 1), off(0, 2, -1)},
      VariantPattern{diag(0, 0, 1), diag(1, 1, 0), off(0, 1, 1)},
      VariantPattern{diag(0, 0, 1), diag(1, 1, 0), off(0, 1, -1)},
  };
}

}  // namespace

const std::array<CubicRotation, 24>& cubic_group() {
  static const std::array<CubicRotation, 24> group = [] {
    std::array<CubicRotation, 24> g{};
    for (int q = 0; q < 24; ++q) {
      const RotSpec& spec = kGroup[q];
      std::array<std::array<int, 3>, 3> e{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e[i][j] = spec.m[3 * i + j];
      g[q] = CubicRotation{q, e, Rotation3(to_mat(spec.m)), spec.axis, spec.angle};
    }
    return g;
  }();
  return group;
}

const SymmetryTable& canonical_symmetry_table() {
  static const SymmetryTable table = [] {
    SymmetryTable t;
    auto patterns = variant_patterns();
    for (int s = 0; s < 6; ++s) {
      for (int q = 0; q < 24; ++q) {
        const IMat& rot = cubic_group()[q].entries;
        IMat rt = itrans(rot);
        VariantPattern conj{imul(imul(rot, patterns[s].e), rt),
                            imul(imul(rot, patterns[s].q), rt),
                            imul(imul(rot, patterns[s].d), rt)};
        int hit = 0;
        for (int i = 0; i < 6; ++i) {
          if (conj == patterns[i]) {
            t.entry[s][q] = i + 1;
            ++hit;
          }
        }
        if (hit != 1)
          throw Error(ErrorCode::NoMatch, "variant pattern conjugation did not match uniquely");
      }
    }
    return t;
  }();
  return table;
}

SymmetryTable build_symmetry_table(const VariantSet& variants) {
  SymmetryTable t;
  for (int s = 1; s <= 6; ++s) {
    for (int q = 0; q < 24; ++q) {
      const Mat3& rot = cubic_group()[q].matrix.mat();
      Mat3 conj = rot * variants.of(s) * rot.transpose();
      int found = 0;
      for (int i = 1; i <= 6; ++i) {
        if ((conj - variants.of(i)).norm() <= 1e-10) {
          t.entry[s - 1][q] = i;
          ++found;
        }
      }
      if (found != 1)
        throw Error(ErrorCode::NoMatch,
                    "conjugate of variant " + std::to_string(s) + " is not a variant");
    }
  }
  return t;
}

std::vector<CubicRotation> conjugating_rotations(int s, int l) {
  if (s < 1 || s > 6 || l < 1 || l > 6)
    throw Error(ErrorCode::BadInput, "variant indices must be in 1..6");
  const SymmetryTable& t = canonical_symmetry_table();
  std::vector<CubicRotation> out;
  for (int q = 0; q < 24; ++q)
    if (t.entry[s - 1][q] == l) out.push_back(cubic_group()[q]);
  return out;
}

SymmetryTable load_table_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open table fixture: " + path);
  SymmetryTable t;
  std::string line;
  for (int s = 0; s < 6; ++s) {
    if (!std::getline(in, line))
      throw Error(ErrorCode::BadInput, "table fixture has fewer than 6 rows");
    std::stringstream ss(line);
    std::string cell;
    for (int q = 0; q < 24; ++q) {
      if (!std::getline(ss, cell, ','))
        throw Error(ErrorCode::BadInput, "table fixture row has fewer than 24 columns");
      int v = std::stoi(cell);
      if (v < 1 || v > 6) throw Error(ErrorCode::BadInput, "table fixture entries must be 1..6");
      t.entry[s][q] = v;
    }
  }
  return t;
}

void write_table_csv(const SymmetryTable& table, std::ostream& os) {
  for (int s = 0; s < 6; ++s) {
    for (int q = 0; q < 24; ++q) {
      os << table.entry[s][q];
      os << (q == 23 ? '\n' : ',');
    }
  }
}

}  // namespace otw
