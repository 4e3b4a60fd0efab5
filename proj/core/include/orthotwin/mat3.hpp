#pragma once

#include <array>
#include <cmath>
#include <optional>

#include "orthotwin/errors.hpp"

namespace otw {

// Central tolerance record. Everything numeric in the library keys off these.
struct Tol {
  static constexpr double ortho = 1e-10;  // orthogonality / eigen residuals
  static constexpr double rank = 1e-10;   // rank-one detection
  static constexpr double set = 1e-12;    // set membership, exact-value bands
};

struct Vec3 {
  double x = 0, y = 0, z = 0;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double c) const { return {c * x, c * y, c * z}; }
  Vec3 operator/(double c) const { return {x / c, y / c, z / c}; }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  double max_abs() const { return std::max({std::abs(x), std::abs(y), std::abs(z)}); }
  double min_abs() const { return std::min({std::abs(x), std::abs(y), std::abs(z)}); }
  Vec3 normalized() const;
  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline Vec3 operator*(double c, const Vec3& v) { return v * c; }

// Row-major 3x3 matrix.
struct Mat3 {
  std::array<std::array<double, 3>, 3> a{};

  static Mat3 identity();
  static Mat3 zero() { return {}; }
  static Mat3 diag(double d0, double d1, double d2);
  static Mat3 outer(const Vec3& u, const Vec3& v);  // u (x) v
  static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2);

  double operator()(int i, int j) const { return a[i][j]; }
  double& operator()(int i, int j) { return a[i][j]; }

  Vec3 row(int i) const { return {a[i][0], a[i][1], a[i][2]}; }
  Vec3 col(int j) const { return {a[0][j], a[1][j], a[2][j]}; }

  Mat3 operator+(const Mat3& o) const;
  Mat3 operator-(const Mat3& o) const;
  Mat3 operator*(const Mat3& o) const;
  Mat3 operator*(double c) const;
  Vec3 operator*(const Vec3& v) const;

  Mat3 transpose() const;
  double det() const;
  double trace() const { return a[0][0] + a[1][1] + a[2][2]; }
  Mat3 inverse() const;  // throws NonInvertible when |det| <= 1e-14
  double norm() const;   // Frobenius
  double max_abs() const;
  bool finite() const;
};

inline Mat3 operator*(double c, const Mat3& m) { return m * c; }

// Matrix of signed 2x2 minors: M * cof(M)^T = det(M) * 1.
Mat3 cofactor(const Mat3& m);

// Unit vector on S^2; construction enforces | |v| - 1 | <= Tol::set.
class UnitVec3 {
 public:
  UnitVec3() : v_{1, 0, 0} {}
  explicit UnitVec3(const Vec3& v);
  static UnitVec3 normalize(const Vec3& v);  // throws BadInput on (near-)zero input

  const Vec3& vec() const { return v_; }
  double operator[](int i) const { return v_[i]; }
  double dot(const Vec3& o) const { return v_.dot(o); }
  UnitVec3 operator-() const { return UnitVec3(-v_); }

 private:
  Vec3 v_;
};

// Symmetric 3x3; construction symmetrizes.
class SymMat3 {
 public:
  SymMat3() : m_(Mat3::identity()) {}
  explicit SymMat3(const Mat3& m) : m_((m + m.transpose()) * 0.5) {}

  const Mat3& mat() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  Mat3 m_;
};

// Proper rotation; construction enforces ||R^T R - 1|| <= Tol::ortho and det R > 0.
class Rotation3 {
 public:
  Rotation3() : m_(Mat3::identity()) {}
  explicit Rotation3(const Mat3& m);
  static Rotation3 identity() { return Rotation3(Mat3::identity()); }

  const Mat3& mat() const { return m_; }
  Vec3 operator*(const Vec3& v) const { return m_ * v; }
  Rotation3 transpose() const { return Rotation3(m_.transpose()); }

 private:
  Mat3 m_;
};

struct SymEigen {
  std::array<double, 3> values;   // ascending
  std::array<Vec3, 3> vectors;    // orthonormal, vectors[i] pairs with values[i]
};

// Closed-form symmetric eigensolver (trigonometric roots of the characteristic
// cubic, eigenvectors by deflation) with a Rayleigh-quotient polish step.
SymEigen sym_eigen(const SymMat3& s);

// Rotation factor of F = R U (U symmetric positive definite).
// Throws NonInvertible when det F <= 1e-14.
Rotation3 polar_rotation(const Mat3& f);

struct RankOne {
  Vec3 a;
  UnitVec3 n;
};

// If rank(M) <= 1 (second singular value <= Tol::rank * ||M||) returns (a, n)
// with M = a (x) n, n unit, sign fixed so the first component of n with
// magnitude > 1e-9 is positive. Zero matrix maps to a = 0, n = (1,0,0).
std::optional<RankOne> rank_one_decompose(const Mat3& m);

}  // namespace otw
