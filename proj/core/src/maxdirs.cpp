#include "orthotwin/maxdirs.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "orthotwin/symmetry.hpp"

namespace otw {

namespace {

// Axis-role decomposition behind the closed forms: variant pairs (1,2), (3,4),
// (5,6) distinguish the x-, y-, z-axis respectively, and the odd member of
// each pair carries the positive product sign.
struct Roles {
  double x, y, z;  // distinguished component, then the remaining two
  double sign;     // (-1)^(s-1) pattern
  int axis;        // distinguished axis index
};

Roles roles(int s, const Vec3& v) {
  if (s < 1 || s > 6) throw Error(ErrorCode::BadInput, "variant index must be in 1..6");
  switch (s) {
    case 1: return {v.x, v.y, v.z, +1.0, 0};
    case 2: return {v.x, v.y, v.z, -1.0, 0};
    case 3: return {v.y, v.x, v.z, +1.0, 1};
    case 4: return {v.y, v.x, v.z, -1.0, 1};
    case 5: return {v.z, v.x, v.y, +1.0, 2};
    default: return {v.z, v.x, v.y, -1.0, 2};
  }
}

void require_direct(const LatticeParams& params) {
  AssumptionReport r = check_assumptions(params);
  if (!(r.a1 && r.a2))
    throw Error(ErrorCode::AssumptionViolated, "closed form needs assumptions A1 and A2");
}

void require_cof(const LatticeParams& params) {
  AssumptionReport r = check_assumptions(params);
  if (!(r.a1 && r.a3 && r.a4))
    throw Error(ErrorCode::AssumptionViolated, "closed form needs assumptions A1, A3 and A4");
}

Vec3 emax_axis(int s) {
  Vec3 v{0, 0, 0};
  v[roles(s, v).axis] = 1.0;
  return v;
}

bool at_emax(int s, const Vec3& e) {
  Vec3 ax = emax_axis(s);
  return std::min((e - ax).norm(), (e + ax).norm()) <= Tol::set;
}

// U_s^2 and U_s^-2 applied through the closed block pattern of the variants.
Vec3 usq_apply(int s, const LatticeParams& p, const Vec3& v, bool inverse) {
  double a2 = p.alpha * p.alpha, b2 = p.beta * p.beta, g2 = p.gamma * p.gamma;
  double bb = inverse ? 1.0 / b2 : b2;
  double pp = inverse ? (a2 + g2) / (2 * a2 * g2) : (a2 + g2) / 2;
  double qq = inverse ? (g2 - a2) / (2 * a2 * g2) : (a2 - g2) / 2;
  auto block = [&](double d, double e1, double e2, double* o1, double* o2) {
    *o1 = pp * e1 + qq * e2;
    *o2 = qq * e1 + pp * e2;
    return bb * d;
  };
  Vec3 o;
  switch (s) {
    case 1: o.x = block(v.x, v.y, v.z, &o.y, &o.z); return o;
    case 2: qq = -qq; o.x = block(v.x, v.y, v.z, &o.y, &o.z); return o;
    case 3: o.y = block(v.y, v.x, v.z, &o.x, &o.z); return o;
    case 4: qq = -qq; o.y = block(v.y, v.x, v.z, &o.x, &o.z); return o;
    case 5: o.z = block(v.z, v.x, v.y, &o.x, &o.y); return o;
    default: qq = -qq; o.z = block(v.z, v.x, v.y, &o.x, &o.y); return o;
  }
}

}  // namespace

double margin_M(int s, const UnitVec3& e, const LatticeParams& params) {
  (void)params;
  Roles r = roles(s, e.vec());
  return std::min(r.sign * r.y * r.z, std::min(std::abs(r.y), std::abs(r.z)) - std::abs(r.x));
}

bool in_M(int s, const UnitVec3& e, const LatticeParams& params) {
  require_direct(params);
  return margin_M(s, e, params) >= 0.0;
}

double margin_Minv(int s, const UnitVec3& e, const LatticeParams& params) {
  (void)params;
  Roles r = roles(s, e.vec());
  return std::min(-r.sign * r.y * r.z, std::abs(r.x) - std::max(std::abs(r.y), std::abs(r.z)));
}

bool in_Minv(int s, const UnitVec3& e, const LatticeParams& params) {
  require_cof(params);
  if (at_emax(s, e.vec())) return true;
  return margin_Minv(s, e, params) > 0.0;
}

bool in_UinvSq_Minv(int s, const UnitVec3& e, const LatticeParams& params) {
  Vec3 f = usq_apply(s, params, e.vec(), /*inverse=*/false);
  return in_Minv(s, UnitVec3::normalize(f), params);
}

bool in_N(int s, const UnitVec3& n, const LatticeParams& params) {
  require_direct(params);
  Roles r = roles(s, n.vec());
  return r.sign * r.y * r.z <= 0.0 || std::abs(r.x) >= std::abs(r.y) + std::abs(r.z);
}

bool in_Ninv(int s, const UnitVec3& n, const LatticeParams& params) {
  require_cof(params);
  Roles r = roles(s, n.vec());
  double ax = std::abs(r.x), ay = std::abs(r.y), az = std::abs(r.z);
  if (ax <= Tol::set) return true;  // plane perpendicular to e_max(cof U_s)
  if (r.sign * r.y * r.z <= 0.0 && ax < ay + az) return true;
  if (r.sign * r.y * r.z >= 0.0 && ax < std::max(ay, az)) return true;
  return false;
}

bool oracle_in_M(int s, const UnitVec3& e, const VariantSet& vs) {
  double target = (vs.of(s) * e.vec()).norm();
  double best = 1.0;
  for (int i = 1; i <= 6; ++i) best = std::max(best, (vs.of(i) * e.vec()).norm());
  return best - target <= 1e-13;
}

bool oracle_in_Minv(int s, const UnitVec3& e, const VariantSet& vs) {
  Mat3 cof_s = cofactor(vs.of(s));
  // e_max(cof U_s) via the eigensolver, both signs
  SymEigen eig = sym_eigen(SymMat3(cof_s));
  Vec3 top = eig.vectors[2];
  if (std::min((e.vec() - top).norm(), (e.vec() + top).norm()) <= Tol::set) return true;
  double target = (cof_s * e.vec()).norm();
  double best = 1.0;
  for (int i = 1; i <= 6; ++i) {
    if (i == s) continue;
    best = std::max(best, (cofactor(vs.of(i)) * e.vec()).norm());
  }
  return target > best;
}

namespace {

// Orthonormal basis of the plane perpendicular to n.
std::pair<Vec3, Vec3> plane_basis(const Vec3& n) {
  Vec3 t = (std::abs(n.x) < 0.9) ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  Vec3 p = n.cross(t).normalized();
  return {p, n.cross(p)};
}

}  // namespace

bool oracle_in_N(int s, const UnitVec3& n, const VariantSet& vs, int sweep) {
  auto [p, q] = plane_basis(n.vec());
  for (int k = 0; k < sweep; ++k) {
    double th = M_PI * k / sweep;  // antipodal symmetry: half circle suffices
    Vec3 e = p * std::cos(th) + q * std::sin(th);
    if (margin_M(s, UnitVec3::normalize(e), vs.params) >= 0.0) return true;
  }
  return false;
}

bool oracle_in_Ninv(int s, const UnitVec3& n, const VariantSet& vs, int sweep) {
  if (std::abs(n.dot(emax_axis(s))) <= 1e-9) return true;  // e_max lies in the plane
  auto [p, q] = plane_basis(n.vec());
  for (int k = 0; k < sweep; ++k) {
    double th = M_PI * k / sweep;
    Vec3 e = p * std::cos(th) + q * std::sin(th);
    if (margin_Minv(s, UnitVec3::normalize(e), vs.params) > 0.0) return true;
  }
  return false;
}

DirectionVerdict classify_direction(int s, const UnitVec3& e, const VariantSet& vs) {
  DirectionVerdict v;
  v.in_M = in_M(s, e, vs.params);
  v.in_UinvSqMinv = in_UinvSq_Minv(s, e, vs.params);
  v.in_M_oracle = oracle_in_M(s, e, vs);
  UnitVec3 image = UnitVec3::normalize(usq_apply(s, vs.params, e.vec(), false));
  v.in_Minv_oracle_preimage = oracle_in_Minv(s, image, vs);
  double m1 = margin_M(s, e, vs.params);
  double m2 = at_emax(s, image.vec()) ? 0.0 : margin_Minv(s, image, vs.params);
  v.margin = std::abs(m1) <= std::abs(m2) ? m1 : m2;
  return v;
}

namespace {

// Distance to the nearest boundary surface of the N / N^-1 closed forms.
double normal_margin(int s, const Vec3& n) {
  Roles r = roles(s, n);
  double ax = std::abs(r.x), ay = std::abs(r.y), az = std::abs(r.z);
  return std::min({std::abs(r.sign * r.y * r.z), std::abs(ax - (ay + az)),
                   std::abs(ax - std::max(ay, az)), ax});
}

}  // namespace

NormalVerdict classify_normal(int s, const UnitVec3& n, const LatticeParams& params) {
  NormalVerdict v;
  v.in_N = in_N(s, n, params);
  Vec3 pre = usq_apply(s, params, n.vec(), /*inverse=*/true);
  UnitVec3 preimage = UnitVec3::normalize(pre);
  v.in_UsqNinv = in_Ninv(s, preimage, params);
  v.margin = std::min(normal_margin(s, n.vec()), normal_margin(s, preimage.vec()));
  return v;
}

std::pair<UnitVec3, UnitVec3> coverage_witness(int s, const LatticeParams& params) {
  // Reference witnesses for variant 1, transported to s by the conjugating
  // rotation, since membership commutes with the cubic symmetry.
  Vec3 dir1{0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)};
  Vec3 rec1 = Vec3{0.9, 0.5, 0.5}.normalized();  // product positive, middle size

  Mat3 qt = conjugating_rotations(s, 1).front().matrix.mat().transpose();
  Vec3 dir_s = qt * dir1;
  Vec3 rec_s = qt * rec1;
  Vec3 normal_s = usq_apply(s, params, rec_s, /*inverse=*/false).normalized();

  UnitVec3 dir = UnitVec3::normalize(dir_s);
  UnitVec3 normal = UnitVec3::normalize(normal_s);
  if (in_M(s, dir, params) || in_UinvSq_Minv(s, dir, params) || in_N(s, normal, params) ||
      in_Ninv(s, UnitVec3::normalize(usq_apply(s, params, normal.vec(), true)), params))
    throw Error(ErrorCode::AssumptionViolated, "coverage witness is covered at these parameters");
  return {dir, normal};
}

const char* sphere_label_name(SphereLabel label) {
  switch (label) {
    case SphereLabel::M: return "M";
    case SphereLabel::UM: return "UM";
    case SphereLabel::Both: return "BOTH";
    case SphereLabel::None: return "NONE";
  }
  return "?";
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double unit_double(std::uint64_t bits) { return (bits >> 11) * 0x1.0p-53; }

// Uniform rotation from a seed (Shoemake quaternion method).
Mat3 seeded_rotation(std::uint64_t seed) {
  if (seed == 0) return Mat3::identity();
  std::uint64_t st = seed;
  double u1 = unit_double(splitmix64(st));
  double u2 = unit_double(splitmix64(st));
  double u3 = unit_double(splitmix64(st));
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
  return r;
}

}  // namespace

SpherePointCloud classify_sphere(int s, const LatticeParams& params, int count,
                                 std::uint64_t seed) {
  if (count < 0) throw Error(ErrorCode::BadInput, "sample count must be >= 0");
  require_direct(params);
  require_cof(params);
  SpherePointCloud cloud;
  cloud.variant = s;
  cloud.count = count;
  cloud.seed = seed;
  cloud.points.reserve(count);

  Mat3 jitter = seeded_rotation(seed);
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    double z = 1.0 - 2.0 * (i + 0.5) / count;
    double rad = std::sqrt(std::max(0.0, 1.0 - z * z));
    double phi = golden * i;
    Vec3 p = jitter * Vec3{rad * std::cos(phi), rad * std::sin(phi), z};
    UnitVec3 e = UnitVec3::normalize(p);
    bool m = in_M(s, e, params);
    bool um = in_UinvSq_Minv(s, e, params);
    SphereLabel label = m ? (um ? SphereLabel::Both : SphereLabel::M)
                          : (um ? SphereLabel::UM : SphereLabel::None);
    cloud.points.push_back(SpherePoint{e, label});
  }
  return cloud;
}

void write_csv(const SpherePointCloud& cloud, std::ostream& os) {
  os << "x,y,z,label\n";
  char buf[96];
  for (const SpherePoint& p : cloud.points) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,", p.dir[0], p.dir[1], p.dir[2]);
    os << buf << sphere_label_name(p.label) << '\n';
  }
}

bool check_rigidity(const std::vector<PathSample>& path) {
  if (path.size() < 3) throw Error(ErrorCode::MalformedPath, "need at least 3 samples");
  for (size_t i = 1; i < path.size(); ++i)
    if (!(path[i].t > path[i - 1].t))
      throw Error(ErrorCode::MalformedPath, "t must be strictly increasing");

  const double T = path.back().t - path.front().t;
  const Vec3 chord = path.back().sigma - path.front().sigma;
  const double chord_speed = chord.norm() / T;

  for (size_t i = 1; i < path.size(); ++i) {
    double dt = path[i].t - path[i - 1].t;
    double speed = (path[i].sigma - path[i - 1].sigma).norm() / dt;
    if (speed > chord_speed + 1e-12) return false;  // slope bound violated
  }
  const double band = 1e-9 * std::max(chord.norm(), 1e-300);
  for (const PathSample& p : path) {
    Vec3 expected = path.front().sigma + chord * ((p.t - path.front().t) / T);
    if ((p.sigma - expected).norm() > band) return false;
  }
  return true;
}

}  // namespace otw
