#include "orthotwin/nucleation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace otw {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double unit_double(std::uint64_t& state) { return (splitmix64(state) >> 11) * 0x1.0p-53; }

// Uniform point in the corner cone intersected with the ball of radius rad:
// uniform in the ball, components folded onto the cone's sign pattern.
Vec3 sample_cone_ball(std::uint64_t& state, const std::array<int, 3>& oct_signs, double rad) {
  for (;;) {
    Vec3 p{2 * unit_double(state) - 1, 2 * unit_double(state) - 1, 2 * unit_double(state) - 1};
    if (p.dot(p) <= 1.0) {
      return {-oct_signs[0] * std::abs(p.x) * rad, -oct_signs[1] * std::abs(p.y) * rad,
              -oct_signs[2] * std::abs(p.z) * rad};
    }
  }
}

}  // namespace

std::vector<CornerCandidate> enumerate_candidates(int s, const LatticeParams& params,
                                                  const std::array<Vec3, 3>& specimen_edges,
                                                  TwinKind kind) {
  if (s < 1 || s > 6) throw Error(ErrorCode::BadInput, "variant index must be in 1..6");
  if (kind == TwinKind::Compound)
    throw Error(ErrorCode::BadInput, "compound twins are excluded from the corner construction");
  VariantSet vs = variants(params);
  Mat3 usi = vs.of(s).inverse();

  std::vector<CornerCandidate> out;
  for (int l = 1; l <= 6; ++l) {
    if (l == s || is_compound_pair(s, l)) continue;
    TwinSystem twin = (kind == TwinKind::TypeII) ? type2_twin(params, VariantPair{l, s})
                                                 : type1_twin(params, VariantPair{l, s});
    for (Branch branch : {Branch::Small, Branch::Large}) {
      for (int kappa : {+1, -1}) {
        HabitSolution sol = habit_solution(twin, vs, branch, kappa);
        Vec3 rb = sol.r.mat() * sol.b;
        double base_inj = (usi * rb).dot(twin.n.vec());
        for (int sn : {+1, -1}) {
          for (int sm : {+1, -1}) {
            int on = octant_of(twin.n.vec() * double(sn));
            int om = octant_of(sol.m.vec() * double(sm));
            if (on == 0 || om == 0 || on != om) continue;
            CornerCandidate c;
            c.s = s;
            c.l = l;
            c.params = params;
            c.twin = twin;
            c.habit = sol;
            c.sign_n = sn;
            c.sign_m = sm;
            c.octant = on;
            c.b_tilde = rb * double(sm);
            c.inj_sign = double(sn * sm) * base_inj;
            for (int i = 0; i < 3; ++i) {
              Vec3 dir = specimen_edges[i].normalized();
              c.perpendicular_flags[i] = std::abs(dir.dot(c.signed_n())) <= 1e-9 ||
                                         std::abs(dir.dot(c.signed_m())) <= 1e-9;
            }
            bool perp = c.perpendicular_flags[0] || c.perpendicular_flags[1] ||
                        c.perpendicular_flags[2];
            c.valid = c.inj_sign < 0 && !perp;
            out.push_back(std::move(c));
          }
        }
      }
    }
  }
  return out;
}

OctantVerdict nucleating_octants(int s, const LatticeParams& params) {
  OctantVerdict verdict;
  verdict.variant = s;
  std::set<int> octs;
  for (CornerCandidate& c : enumerate_candidates(s, params)) {
    if (!c.valid) continue;
    octs.insert(c.octant);
    octs.insert(c.octant <= 4 ? c.octant + 4 : c.octant - 4);  // antipodal corner
    verdict.witnesses.push_back(std::move(c));
  }
  verdict.octants.assign(octs.begin(), octs.end());
  return verdict;
}

int CornerConstruction::region(const Vec3& x) const {
  Vec3 m = candidate.signed_m();
  Vec3 n = candidate.signed_n();
  if (x.norm() > r) return 3;  // deformation continues as U_s x outside the ball
  if (x.dot(m) > k_m) return 1;
  if (x.dot(n) > k_n) return 2;
  return 3;
}

Vec3 CornerConstruction::deform(const Vec3& x) const {
  switch (region(x)) {
    case 1: return grad1 * x + trans1;
    case 2: return grad2 * x + trans2;
    default: return grad3 * x + trans3;
  }
}

bool CornerConstruction::in_cone(const Vec3& x) const {
  auto sg = octant_signs(candidate.octant);
  return sg[0] * x.x <= 0 && sg[1] * x.y <= 0 && sg[2] * x.z <= 0;
}

CornerConstruction build_construction(const CornerCandidate& cand, double r, double k_n,
                                      double k_m) {
  if (!(r > 0)) throw Error(ErrorCode::BadInput, "ball radius must be positive");
  if (cand.octant == 0) throw Error(ErrorCode::BadInput, "candidate has no shared octant");
  if (!(k_n < 0) || !(k_m < 0))
    throw Error(ErrorCode::PlanesOverlap, "plane offsets must be negative (corner at origin)");

  Vec3 n = cand.signed_n();
  Vec3 m = cand.signed_m();
  Vec3 a = cand.signed_a();

  // Containment bounds along the cone edges: the n-simplex must stay inside
  // the ball (so the spherical boundary deforms as U_s x) and every cone
  // point past the n-plane must stay strictly below the m-plane.
  double reach_n = std::abs(k_n) / n.min_abs();
  if (reach_n >= r)
    throw Error(ErrorCode::PlanesOverlap, "laminate slab reaches the spherical boundary");
  double ratio = std::min({std::abs(m.x / n.x), std::abs(m.y / n.y), std::abs(m.z / n.z)});
  double margin = std::abs(k_n) * ratio - std::abs(k_m);
  if (margin <= 0)
    throw Error(ErrorCode::PlanesOverlap, "regions {x.m >= k_m} and {x.n <= k_n} intersect");

  VariantSet vs = variants(cand.params);
  CornerConstruction con;
  con.candidate = cand;
  con.r = r;
  con.k_n = k_n;
  con.k_m = k_m;
  con.separation_margin = margin;

  const Mat3& us = vs.of(cand.s);
  const Mat3& ul = vs.of(cand.l);
  double lambda = cand.habit.lambda;
  con.grad1 = cand.habit.r.mat();
  con.grad2 = us * (1.0 - lambda) + (cand.twin.q.mat() * ul) * lambda;
  con.grad3 = us;
  con.trans1 = cand.b_tilde * k_m - a * (lambda * k_n);
  con.trans2 = a * (-lambda * k_n);
  con.trans3 = Vec3{0, 0, 0};

  // Hadamard jump conditions across the two interfaces.
  Mat3 jump_n = con.grad2 - con.grad3;
  Mat3 jump_m = con.grad2 - con.grad1;
  if ((jump_n - Mat3::outer(a, n) * lambda).norm() > 1e-10)
    throw Error(ErrorCode::PlanesOverlap, "gradient jump across the twin plane is not l a(x)n");
  if ((jump_m - Mat3::outer(cand.b_tilde, m)).norm() > 1e-10)
    throw Error(ErrorCode::PlanesOverlap, "gradient jump across the habit plane is not b(x)m");
  if (!rank_one_decompose(jump_m) || (jump_n.norm() > 1e-12 && !rank_one_decompose(jump_n)))
    throw Error(ErrorCode::PlanesOverlap, "interface gradient jump is not rank one");

  // Translation consistency: the three affine pieces agree on their planes.
  auto sg = octant_signs(cand.octant);
  Vec3 probe{-sg[0] * 0.3, -sg[1] * 0.2, -sg[2] * 0.1};
  Vec3 on_m = probe + m * ((k_m - probe.dot(m)) / m.dot(m));
  Vec3 on_n = probe + n * ((k_n - probe.dot(n)) / n.dot(n));
  double c1 = ((con.grad1 * on_m + con.trans1) - (con.grad2 * on_m + con.trans2)).norm();
  double c2 = ((con.grad2 * on_n + con.trans2) - (con.grad3 * on_n + con.trans3)).norm();
  if (c1 > 1e-10 || c2 > 1e-10)
    throw Error(ErrorCode::PlanesOverlap, "piecewise deformation is discontinuous");

  // Exact region volumes; the two corner simplices sit fully inside the ball.
  double vol_m = std::pow(std::abs(k_m), 3) / (6.0 * std::abs(m.x * m.y * m.z));
  double vol_n = std::pow(std::abs(k_n), 3) / (6.0 * std::abs(n.x * n.y * n.z));
  con.vol_s1 = vol_m;
  con.vol_s2 = vol_n - vol_m;
  con.vol_s3 = M_PI * r * r * r / 6.0 - vol_n;
  if (con.vol_s1 <= 0 || con.vol_s2 <= 0 || con.vol_s3 <= 0)
    throw Error(ErrorCode::EmptyRegion, "a construction region is empty");
  return con;
}

CornerConstruction build_construction(const CornerCandidate& cand, double r) {
  Vec3 n = cand.signed_n();
  Vec3 m = cand.signed_m();
  if (cand.octant == 0) throw Error(ErrorCode::BadInput, "candidate has no shared octant");
  double k_n = -0.7 * r * n.min_abs();
  double ratio = std::min({std::abs(m.x / n.x), std::abs(m.y / n.y), std::abs(m.z / n.z)});
  double k_m = -0.5 * std::abs(k_n) * ratio;
  return build_construction(cand, r, k_n, k_m);
}

InjectivityReport verify_injectivity(const CornerConstruction& con, long pair_samples,
                                     std::uint64_t seed) {
  const CornerCandidate& cand = con.candidate;
  VariantSet vs = variants(cand.params);
  Mat3 usi = vs.of(cand.s).inverse();
  Vec3 n = cand.signed_n();
  Vec3 m = cand.signed_m();
  Vec3 a = cand.signed_a();

  InjectivityReport rep;
  rep.seed = seed;
  rep.twin_orth = std::abs((usi * a).dot(n));
  rep.rtb_dot_m = (con.grad1.transpose() * cand.b_tilde).dot(m);
  rep.inj_sign = (usi * cand.b_tilde).dot(n);
  rep.analytic_ok = rep.twin_orth <= 1e-10 && rep.rtb_dot_m > -1.0 && rep.rtb_dot_m <= 0.0 &&
                    rep.inj_sign < 0.0;

  auto sg = octant_signs(cand.octant);
  std::uint64_t state = seed;
  auto fail = [&](const Vec3& x1, const Vec3& x2) {
    std::ostringstream os;
    os << "collision witness x1=(" << x1.x << "," << x1.y << "," << x1.z << ") x2=(" << x2.x
       << "," << x2.y << "," << x2.z << ")";
    throw Error(ErrorCode::InjectivityViolated, os.str());
  };

  const Vec3 trans[3] = {con.trans1, con.trans2, con.trans3};
  Mat3 inv[3] = {con.grad1.inverse(), con.grad2.inverse(), con.grad3.inverse()};

  for (long i = 0; i < pair_samples; ++i) {
    // random pair, sampled slightly beyond the ball so the exterior U_s piece
    // participates
    Vec3 x1 = sample_cone_ball(state, sg, 1.2 * con.r);
    Vec3 x2 = sample_cone_ball(state, sg, 1.2 * con.r);
    Vec3 y1 = con.deform(x1);
    Vec3 y2 = con.deform(x2);
    ++rep.pairs_checked;
    if ((y1 - y2).norm() < 1e-9 * con.r && (x1 - x2).norm() > 1e-6 * con.r) {
      ++rep.collisions;
      fail(x1, x2);
    }
    // pull the image back through the other two affine pieces; a pre-image
    // landing strictly inside another region is an exact collision
    int r1 = con.region(x1);
    for (int j = 1; j <= 3; ++j) {
      if (j == r1) continue;
      Vec3 xb = inv[j - 1] * (y1 - trans[j - 1]);
      if (!con.in_cone(xb)) continue;
      if (con.region(xb) != j) continue;
      double dm = std::abs(xb.dot(m) - con.k_m);
      double dn = std::abs(xb.dot(n) - con.k_n);
      double db = std::abs(xb.norm() - con.r);
      if (std::min({dm, dn, db}) <= 1e-9 * con.r) continue;  // boundary grazing
      if ((xb - x1).norm() <= 1e-6 * con.r) continue;
      ++rep.collisions;
      fail(x1, xb);
    }
  }
  return rep;
}

double monte_carlo_volume_s1(const CornerConstruction& con, int points, std::uint64_t seed) {
  const CornerCandidate& cand = con.candidate;
  Vec3 m = cand.signed_m();
  auto sg = octant_signs(cand.octant);
  // Tight axis-aligned box around S1: simplex vertices are at -sg_i * |k_m|/|m_i|.
  Vec3 extent{std::abs(con.k_m / m.x), std::abs(con.k_m / m.y), std::abs(con.k_m / m.z)};
  double box_vol = extent.x * extent.y * extent.z;
  std::uint64_t state = seed;
  long hits = 0;
  for (int i = 0; i < points; ++i) {
    Vec3 x{-sg[0] * extent.x * unit_double(state), -sg[1] * extent.y * unit_double(state),
           -sg[2] * extent.z * unit_double(state)};
    if (x.dot(m) > con.k_m && x.norm() <= con.r) ++hits;
  }
  return box_vol * double(hits) / double(points);
}

double energy_change(const CornerConstruction& con, const EnergyDensity& density,
                     std::uint64_t seed) {
  double vol = monte_carlo_volume_s1(con, 1000000, seed);
  double de = -density.depth * vol;
  if (!(de < 0)) throw Error(ErrorCode::EmptyRegion, "austenite region has no volume");
  return de;
}

double segment_det_residual(const Mat3& a, const Mat3& b, double lambda) {
  Mat3 mean = a * (1.0 - lambda) + b * lambda;
  double measure_det = (1.0 - lambda) * a.det() + lambda * b.det();
  return std::abs(measure_det - mean.det());
}

double laminate_minors_residual(const TwinSystem& twin, const VariantSet& vs, double lambda) {
  return segment_det_residual(vs.of(twin.s), twin.q.mat() * vs.of(twin.l), lambda);
}

}  // namespace otw
