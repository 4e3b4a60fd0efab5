#include "orthotwin/mat3.hpp"

#include <algorithm>
#include <cmath>

namespace otw {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonInvertible: return "NonInvertible";
    case ErrorCode::NotARotation: return "NotARotation";
    case ErrorCode::NoMatch: return "NoMatch";
    case ErrorCode::DegenerateTwin: return "DegenerateTwin";
    case ErrorCode::PairNotTabulated: return "PairNotTabulated";
    case ErrorCode::NoRankOneConnection: return "NoRankOneConnection";
    case ErrorCode::NoHabitPlane: return "NoHabitPlane";
    case ErrorCode::AssumptionViolated: return "AssumptionViolated";
    case ErrorCode::MalformedPath: return "MalformedPath";
    case ErrorCode::DegenerateSpecimen: return "DegenerateSpecimen";
    case ErrorCode::PlanesOverlap: return "PlanesOverlap";
    case ErrorCode::EmptyRegion: return "EmptyRegion";
    case ErrorCode::InjectivityViolated: return "InjectivityViolated";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "UnknownError";
}

Vec3 Vec3::normalized() const {
  double n = norm();
  if (n <= 0) throw Error(ErrorCode::BadInput, "cannot normalize zero vector");
  return *this / n;
}

Mat3 Mat3::identity() { return diag(1, 1, 1); }

Mat3 Mat3::diag(double d0, double d1, double d2) {
  Mat3 m;
  m.a[0][0] = d0;
  m.a[1][1] = d1;
  m.a[2][2] = d2;
  return m;
}

Mat3 Mat3::outer(const Vec3& u, const Vec3& v) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.a[i][j] = u[i] * v[j];
  return m;
}

Mat3 Mat3::from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
  Mat3 m;
  for (int j = 0; j < 3; ++j) {
    m.a[0][j] = r0[j];
    m.a[1][j] = r1[j];
    m.a[2][j] = r2[j];
  }
  return m;
}

Mat3 Mat3::operator+(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.a[i][j] = a[i][j] + o.a[i][j];
  return r;
}

Mat3 Mat3::operator-(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.a[i][j] = a[i][j] - o.a[i][j];
  return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * o.a[k][j];
      r.a[i][j] = s;
    }
  return r;
}

Mat3 Mat3::operator*(double c) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.a[i][j] = c * a[i][j];
  return r;
}

Vec3 Mat3::operator*(const Vec3& v) const {
  return {a[0][0] * v.x + a[0][1] * v.y + a[0][2] * v.z,
          a[1][0] * v.x + a[1][1] * v.y + a[1][2] * v.z,
          a[2][0] * v.x + a[2][1] * v.y + a[2][2] * v.z};
}

Mat3 Mat3::transpose() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.a[i][j] = a[j][i];
  return r;
}

double Mat3::det() const {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 cofactor(const Mat3& m) {
  Mat3 c;
  c(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  c(0, 1) = -(m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0));
  c(0, 2) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  c(1, 0) = -(m(0, 1) * m(2, 2) - m(0, 2) * m(2, 1));
  c(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  c(1, 2) = -(m(0, 0) * m(2, 1) - m(0, 1) * m(2, 0));
  c(2, 0) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  c(2, 1) = -(m(0, 0) * m(1, 2) - m(0, 2) * m(1, 0));
  c(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return c;
}

Mat3 Mat3::inverse() const {
  double d = det();
  if (std::abs(d) <= 1e-14) throw Error(ErrorCode::NonInvertible, "matrix is singular");
  return cofactor(*this).transpose() * (1.0 / d);
}

double Mat3::norm() const {
  double s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a[i][j] * a[i][j];
  return std::sqrt(s);
}

double Mat3::max_abs() const {
  double s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s = std::max(s, std::abs(a[i][j]));
  return s;
}

bool Mat3::finite() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!std::isfinite(a[i][j])) return false;
  return true;
}

UnitVec3::UnitVec3(const Vec3& v) : v_(v) {
  if (!v.finite() || std::abs(v.norm() - 1.0) > Tol::set)
    throw Error(ErrorCode::BadInput, "vector is not unit length");
}

UnitVec3 UnitVec3::normalize(const Vec3& v) { return UnitVec3(v.normalized()); }

Rotation3::Rotation3(const Mat3& m) : m_(m) {
  Mat3 g = m.transpose() * m - Mat3::identity();
  if (!m.finite() || g.norm() > Tol::ortho || m.det() <= 0)
    throw Error(ErrorCode::NotARotation, "matrix is not a proper rotation");
}

namespace {

// Eigenvector for a known eigenvalue of A via the best-conditioned cross
// product of rows of (A - eval*I).
Vec3 eigenvector_for(const Mat3& A, double eval) {
  Mat3 m = A - Mat3::diag(eval, eval, eval);
  Vec3 r0 = m.row(0), r1 = m.row(1), r2 = m.row(2);
  Vec3 c01 = r0.cross(r1), c02 = r0.cross(r2), c12 = r1.cross(r2);
  double n01 = c01.dot(c01), n02 = c02.dot(c02), n12 = c12.dot(c12);
  Vec3 best = c01;
  double nb = n01;
  if (n02 > nb) { best = c02; nb = n02; }
  if (n12 > nb) { best = c12; nb = n12; }
  if (nb <= 0) return {1, 0, 0};  // caller handles degenerate case
  return best / std::sqrt(nb);
}

}  // namespace

SymEigen sym_eigen(const SymMat3& s) {
  const Mat3& A = s.mat();
  double scale = A.max_abs();
  SymEigen out;
  if (scale == 0) {
    out.values = {0, 0, 0};
    out.vectors = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
    return out;
  }
  Mat3 B = A * (1.0 / scale);

  double q = B.trace() / 3.0;
  Mat3 C = B - Mat3::diag(q, q, q);
  double p2 = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p2 += C(i, j) * C(i, j);
  p2 /= 6.0;
  double p = std::sqrt(p2);

  std::array<double, 3> ev;
  if (p < 1e-14) {
    ev = {q, q, q};
  } else {
    double r = (C * (1.0 / p)).det() / 2.0;
    r = std::clamp(r, -1.0, 1.0);
    double phi = std::acos(r) / 3.0;
    ev[2] = q + 2 * p * std::cos(phi);
    ev[0] = q + 2 * p * std::cos(phi + 2.0 * M_PI / 3.0);
    ev[1] = 3 * q - ev[0] - ev[2];
  }

  // Eigenvectors by deflation: start from the best-separated eigenvalue,
  // then solve the remaining 2x2 problem in the orthogonal complement.
  double sep_low = ev[1] - ev[0], sep_high = ev[2] - ev[1];
  if (sep_low < 1e-14 * scale && sep_high < 1e-14 * scale) {
    out.vectors = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
  } else {
    int iso = (sep_low >= sep_high) ? 0 : 2;  // most isolated eigenvalue
    Vec3 v0 = eigenvector_for(B, ev[iso]);
    // orthonormal complement {p1, p2}
    Vec3 t = (std::abs(v0.x) < 0.9) ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    Vec3 p1 = v0.cross(t).normalized();
    Vec3 p2 = v0.cross(p1);
    // 2x2 symmetric problem restricted to span{p1,p2}
    double a11 = p1.dot(B * p1), a12 = p1.dot(B * p2), a22 = p2.dot(B * p2);
    double theta = 0.5 * std::atan2(2 * a12, a11 - a22);
    double ct = std::cos(theta), st = std::sin(theta);
    Vec3 w1 = p1 * ct + p2 * st;
    Vec3 w2 = p1 * (-st) + p2 * ct;
    double l1 = w1.dot(B * w1), l2 = w2.dot(B * w2);
    if (l1 > l2) { std::swap(w1, w2); std::swap(l1, l2); }
    if (iso == 0) {
      out.vectors = {v0, w1, w2};
      ev = {ev[0], l1, l2};
    } else {
      out.vectors = {w1, w2, v0};
      ev = {l1, l2, ev[2]};
    }
  }

  // Rayleigh-quotient polish on the original matrix, then sort ascending.
  for (int i = 0; i < 3; ++i) out.values[i] = out.vectors[i].dot(A * out.vectors[i]);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2 - i; ++j)
      if (out.values[j] > out.values[j + 1]) {
        std::swap(out.values[j], out.values[j + 1]);
        std::swap(out.vectors[j], out.vectors[j + 1]);
      }
  // Re-orthonormalize (modified Gram-Schmidt; exact for well-separated spectra).
  out.vectors[0] = out.vectors[0].normalized();
  out.vectors[1] = (out.vectors[1] - out.vectors[0] * out.vectors[0].dot(out.vectors[1])).normalized();
  out.vectors[2] = out.vectors[0].cross(out.vectors[1]);
  return out;
}

Rotation3 polar_rotation(const Mat3& f) {
  if (f.det() <= 1e-14) throw Error(ErrorCode::NonInvertible, "polar factor needs det F > 0");
  SymEigen e = sym_eigen(SymMat3(f.transpose() * f));
  Mat3 inv_sqrt = Mat3::zero();
  for (int i = 0; i < 3; ++i) {
    if (e.values[i] <= 0) throw Error(ErrorCode::NonInvertible, "F^T F not positive definite");
    inv_sqrt = inv_sqrt + Mat3::outer(e.vectors[i], e.vectors[i]) * (1.0 / std::sqrt(e.values[i]));
  }
  Mat3 r = f * inv_sqrt;
  // Newton polish for orthogonality, R <- (R + R^-T)/2; quadratic convergence.
  for (int it = 0; it < 2; ++it) r = (r + r.inverse().transpose()) * 0.5;
  return Rotation3(r);
}

std::optional<RankOne> rank_one_decompose(const Mat3& m) {
  double nm = m.norm();
  if (nm == 0) return RankOne{Vec3{0, 0, 0}, UnitVec3(Vec3{1, 0, 0})};
  SymEigen e = sym_eigen(SymMat3(m.transpose() * m));
  Vec3 n = e.vectors[2];  // right singular vector of the dominant direction
  // sign convention: first component of n above 1e-9 made positive
  for (int i = 0; i < 3; ++i) {
    if (std::abs(n[i]) > 1e-9) {
      if (n[i] < 0) n = -n;
      break;
    }
  }
  Vec3 a = m * n;
  // Deflation residual ||M - (Mn)(x)n|| equals sqrt(s2^2 + s3^2); thresholding
  // it avoids the squared conditioning of reading sigma_2 off M^T M.
  if ((m - Mat3::outer(a, n)).norm() > Tol::rank * nm) return std::nullopt;
  return RankOne{a, UnitVec3(n.normalized())};
}

}  // namespace otw
