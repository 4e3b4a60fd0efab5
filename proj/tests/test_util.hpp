#pragma once

#include <cmath>
#include <random>

#include "orthotwin/lattice.hpp"
#include "orthotwin/mat3.hpp"

namespace otw::test {

inline std::mt19937_64 rng(std::uint64_t seed = 0xfeedbeef) { return std::mt19937_64{seed}; }

inline double uniform(std::mt19937_64& g, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline Vec3 random_vec(std::mt19937_64& g, double scale = 1.0) {
  return {scale * uniform(g), scale * uniform(g), scale * uniform(g)};
}

inline UnitVec3 random_dir(std::mt19937_64& g) {
  for (;;) {
    Vec3 v = random_vec(g);
    double n = v.norm();
    if (n > 1e-3 && n <= 1.0) return UnitVec3::normalize(v);
  }
}

inline Mat3 random_mat(std::mt19937_64& g, double scale = 1.0) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = scale * uniform(g);
  return m;
}

inline SymMat3 random_sym(std::mt19937_64& g, double scale = 1.0) {
  return SymMat3(random_mat(g, scale));
}

inline Rotation3 random_rotation(std::mt19937_64& g) {
  // Shoemake: uniform quaternion -> rotation
  double u1 = uniform(g, 0, 1), u2 = uniform(g, 0, 1), u3 = uniform(g, 0, 1);
  double a = std::sqrt(1 - u1), b = std::sqrt(u1);
  double qx = a * std::sin(2 * M_PI * u2), qy = a * std::cos(2 * M_PI * u2);
  double qz = b * std::sin(2 * M_PI * u3), qw = b * std::cos(2 * M_PI * u3);
  Mat3 r;
  r(0, 0) = 1 - 2 * (qy * qy + qz * qz);
  r(0, 1) = 2 * (qx * qy - qz * qw);
  r(0, 2) = 2 * (qx * qz + qy * qw);
  r(1, 0) = 2 * (qx * qy + qz * qw);
  r(1, 1) = 1 - 2 * (qx * qx + qz * qz);
  r(1, 2) = 2 * (qy * qz - qx * qw);
  r(2, 0) = 2 * (qx * qz - qy * qw);
  r(2, 1) = 2 * (qy * qz + qx * qw);
  r(2, 2) = 1 - 2 * (qx * qx + qy * qy);
  return Rotation3(r);
}

inline Mat3 random_spd(std::mt19937_64& g) {
  // random eigenbasis with eigenvalues in [0.5, 2]
  Rotation3 r = random_rotation(g);
  Mat3 d = Mat3::diag(uniform(g, 0.5, 2.0), uniform(g, 0.5, 2.0), uniform(g, 0.5, 2.0));
  return r.mat() * d * r.mat().transpose();
}

inline LatticeParams preset() { return LatticeParams::cualni_seiner(); }

}  // namespace otw::test
