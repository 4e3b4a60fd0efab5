#include "orthotwin/twinning.hpp"

#include <cmath>
#include <string>

namespace otw {

const char* twin_kind_name(TwinKind k) {
  switch (k) {
    case TwinKind::TypeI: return "I";
    case TwinKind::TypeII: return "II";
    case TwinKind::Compound: return "compound";
  }
  return "?";
}

bool is_compound_pair(int s, int l) {
  return (s == 1 && l == 2) || (s == 2 && l == 1) || (s == 3 && l == 4) || (s == 4 && l == 3) ||
         (s == 5 && l == 6) || (s == 6 && l == 5);
}

TwinElementConstants twin_constants(const LatticeParams& params) {
  params.validate();
  const double al = params.alpha, be = params.beta, ga = params.gamma;
  const double a2 = al * al, b2 = be * be, g2 = ga * ga;

  if (std::abs(al - ga) <= 1e-12)
    throw Error(ErrorCode::DegenerateTwin, "alpha == gamma: twin elements degenerate");
  const double den1 = 2 * a2 * g2 + b2 * (a2 + g2);
  if (den1 <= 1e-12) throw Error(ErrorCode::DegenerateTwin, "Type-I denominator vanishes");
  const double D = 8 * b2 * (b2 - a2 - g2) + 6 * a2 * a2 - 4 * a2 * g2 + 6 * g2 * g2;
  if (D <= 1e-12) throw Error(ErrorCode::DegenerateTwin, "Type-II discriminant vanishes");

  TwinElementConstants c{};
  const double f1 = std::sqrt(2.0) / den1;
  c.u1 = f1 * (al + ga) / 2.0 * (4 * al * ga * b2 - 2 * a2 * g2 - b2 * (a2 + g2));
  c.u2 = f1 * be * (b2 * (a2 + g2) - 2 * a2 * g2);
  c.u3 = f1 * (ga - al) / 2.0 * (4 * al * ga * b2 + 2 * a2 * g2 + b2 * (a2 + g2));

  const double sD = std::sqrt(D);
  c.t1 = (2 * b2 - a2 - g2) / sD;
  c.t2 = 2 * (g2 - a2) / sD;
  const double den2 = a2 + g2 + 2 * b2;
  c.v1 = sD / den2 * (al + ga) / 2.0;
  c.v2 = sD / den2 * (-be);
  c.v3 = sD / den2 * (al - ga) / 2.0;
  return c;
}

namespace {

// Row patterns of the published element tables, keyed (l, s). Normal entries
// reference the constant slots, shear entries a signed permutation:
// Type I:  n over {0,+-1}/sqrt2 literals, a over +-u_k (code +-k).
// Type II: n over +-t_k (code +-k), a over +-v_k (code +-k).
struct Row {
  int l, s;
  int n[3];
  int a[3];
};

const Row kTypeI[24] = {
    {1, 3, {1, -1, 0}, {1, 2, 3}},    {3, 1, {1, -1, 0}, {-2, -1, -3}},
    {1, 4, {1, 1, 0}, {1, -2, -3}},   {4, 1, {1, 1, 0}, {-2, 1, 3}},
    {1, 5, {1, 0, -1}, {1, 3, 2}},    {5, 1, {1, 0, -1}, {-2, -3, -1}},
    {1, 6, {1, 0, 1}, {1, -3, -2}},   {6, 1, {1, 0, 1}, {-2, 3, 1}},
    {2, 3, {1, 1, 0}, {1, -2, 3}},    {3, 2, {1, 1, 0}, {-2, 1, -3}},
    {2, 4, {1, -1, 0}, {1, 2, -3}},   {4, 2, {1, -1, 0}, {-2, -1, 3}},
    {2, 5, {1, 0, 1}, {1, 3, -2}},    {5, 2, {1, 0, 1}, {-2, -3, 1}},
    {2, 6, {1, 0, -1}, {1, -3, 2}},   {6, 2, {1, 0, -1}, {-2, 3, -1}},
    {3, 5, {0, 1, -1}, {3, 1, 2}},    {5, 3, {0, 1, -1}, {-3, -2, -1}},
    {3, 6, {0, 1, 1}, {-3, 1, -2}},   {6, 3, {0, 1, 1}, {3, -2, 1}},
    {4, 5, {0, 1, 1}, {3, 1, -2}},    {5, 4, {0, 1, 1}, {-3, -2, 1}},
    {4, 6, {0, 1, -1}, {-3, 1, 2}},  {6, 4, {0, 1, -1}, {3, -2, -1}},
};

const Row kTypeII[24] = {
    {1, 3, {1, 1, 2}, {1, 2, 3}},     {3, 1, {1, 1, 2}, {2, 1, 3}},
    {1, 4, {-1, 1, 2}, {-1, 2, 3}},   {4, 1, {-1, 1, 2}, {-2, 1, 3}},
    {1, 5, {1, 2, 1}, {1, 3, 2}},     {5, 1, {1, 2, 1}, {2, 3, 1}},
    {1, 6, {-1, 2, 1}, {-1, 3, 2}},   {6, 1, {-1, 2, 1}, {-2, 3, 1}},
    {2, 3, {1, -1, 2}, {1, -2, 3}},   {3, 2, {1, -1, 2}, {2, -1, 3}},
    {2, 4, {1, 1, -2}, {1, 2, -3}},   {4, 2, {1, 1, -2}, {2, 1, -3}},
    {2, 5, {1, 2, -1}, {1, 3, -2}},   {5, 2, {1, 2, -1}, {2, 3, -1}},
    {2, 6, {1, -2, 1}, {1, -3, 2}},   {6, 2, {1, -2, 1}, {2, -3, 1}},
    {3, 5, {2, 1, 1}, {3, 1, 2}},     {5, 3, {2, 1, 1}, {3, 2, 1}},
    {3, 6, {2, -1, 1}, {3, -1, 2}},   {6, 3, {2, -1, 1}, {3, -2, 1}},
    {4, 5, {2, 1, -1}, {3, 1, -2}},   {5, 4, {2, 1, -1}, {3, 2, -1}},
    {4, 6, {-2, 1, 1}, {-3, 1, 2}},   {6, 4, {-2, 1, 1}, {-3, 2, 1}},
};

const Row* find_row(const Row* table, VariantPair pair) {
  for (int i = 0; i < 24; ++i)
    if (table[i].l == pair.l && table[i].s == pair.s) return &table[i];
  return nullptr;
}

double pick(int code, double c1, double c2, double c3) {
  double v = (std::abs(code) == 1) ? c1 : (std::abs(code) == 2 ? c2 : c3);
  return code < 0 ? -v : v;
}

TwinSystem assemble(const LatticeParams& params, VariantPair pair, TwinKind kind, const Vec3& a,
                    const Vec3& n_raw) {
  VariantSet vs = variants(params);
  UnitVec3 n = UnitVec3::normalize(n_raw);
  const Mat3& us = vs.of(pair.s);
  const Mat3& ul = vs.of(pair.l);
  Mat3 f = us + Mat3::outer(a, n.vec());
  Rotation3 q = polar_rotation(f * ul.inverse());
  double residual = (q.mat() * ul - us - Mat3::outer(a, n.vec())).norm();
  return TwinSystem{pair.s, pair.l, kind, a, n, q, residual};
}

void require_tabulated(VariantPair pair) {
  if (pair.l < 1 || pair.l > 6 || pair.s < 1 || pair.s > 6)
    throw Error(ErrorCode::BadInput, "variant indices must be in 1..6");
  if (pair.l == pair.s)
    throw Error(ErrorCode::PairNotTabulated, "no twin between a variant and itself");
  if (is_compound_pair(pair.s, pair.l))
    throw Error(ErrorCode::PairNotTabulated,
                "compound pair (" + std::to_string(pair.l) + "," + std::to_string(pair.s) +
                    ") is not tabulated; use solve_twins_generic");
}

}  // namespace

TwinSystem type1_twin(const LatticeParams& params, VariantPair pair) {
  require_tabulated(pair);
  const Row* row = find_row(kTypeI, pair);
  if (!row) throw Error(ErrorCode::PairNotTabulated, "pair not in the Type-I table");
  TwinElementConstants c = twin_constants(params);
  Vec3 n{row->n[0] / std::sqrt(2.0), row->n[1] / std::sqrt(2.0), row->n[2] / std::sqrt(2.0)};
  Vec3 a{pick(row->a[0], c.u1, c.u2, c.u3), pick(row->a[1], c.u1, c.u2, c.u3),
         pick(row->a[2], c.u1, c.u2, c.u3)};
  return assemble(params, pair, TwinKind::TypeI, a, n);
}

TwinSystem type2_twin(const LatticeParams& params, VariantPair pair) {
  require_tabulated(pair);
  const Row* row = find_row(kTypeII, pair);
  if (!row) throw Error(ErrorCode::PairNotTabulated, "pair not in the Type-II table");
  TwinElementConstants c = twin_constants(params);
  Vec3 n{pick(row->n[0], c.t1, c.t2, 0), pick(row->n[1], c.t1, c.t2, 0),
         pick(row->n[2], c.t1, c.t2, 0)};
  Vec3 a{pick(row->a[0], c.v1, c.v2, c.v3), pick(row->a[1], c.v1, c.v2, c.v3),
         pick(row->a[2], c.v1, c.v2, c.v3)};
  return assemble(params, pair, TwinKind::TypeII, a, n);
}

std::vector<TwinSystem> solve_twins_generic(const LatticeParams& params, int s, int l) {
  if (s < 1 || s > 6 || l < 1 || l > 6)
    throw Error(ErrorCode::BadInput, "variant indices must be in 1..6");
  if (s == l) throw Error(ErrorCode::BadInput, "need two distinct variants");
  VariantSet vs = variants(params);
  const Mat3& us = vs.of(s);
  const Mat3& ul = vs.of(l);
  Mat3 usi = us.inverse();
  SymEigen e = sym_eigen(SymMat3(usi * ul * ul * usi));
  const double l1 = e.values[0], l2 = e.values[1], l3 = e.values[2];

  if (std::abs(l2 - 1.0) > 1e-9 || l3 - l1 < 1e-12)
    throw Error(ErrorCode::NoRankOneConnection,
                "wells of variants " + std::to_string(s) + " and " + std::to_string(l) +
                    " admit no rank-one connection");

  // Closed-form references for classification (tensors are sign-free).
  Mat3 ref1 = Mat3::zero(), ref2 = Mat3::zero();
  bool tabulated = !is_compound_pair(s, l);
  if (tabulated) {
    TwinSystem t1 = type1_twin(params, VariantPair{l, s});
    TwinSystem t2 = type2_twin(params, VariantPair{l, s});
    ref1 = Mat3::outer(t1.a, t1.n.vec());
    ref2 = Mat3::outer(t2.a, t2.n.vec());
  }

  std::vector<TwinSystem> out;
  for (int kappa : {+1, -1}) {
    double c1 = std::sqrt(std::max(0.0, l3 * (1 - l1) / (l3 - l1)));
    double c3 = std::sqrt(std::max(0.0, l1 * (l3 - 1) / (l3 - l1)));
    Vec3 c = e.vectors[0] * c1 + e.vectors[2] * (kappa * c3);
    double k = (std::sqrt(l3) - std::sqrt(l1)) / std::sqrt(l3 - l1);
    Vec3 nn = (us * e.vectors[0]) * (-k * std::sqrt(std::max(0.0, 1 - l1))) +
              (us * e.vectors[2]) * (kappa * k * std::sqrt(std::max(0.0, l3 - 1)));
    double rho = nn.norm();
    if (rho <= 1e-14)
      throw Error(ErrorCode::NoRankOneConnection, "degenerate twin normal");
    Vec3 n = nn / rho;
    Vec3 a = c * rho;

    TwinKind kind = TwinKind::Compound;
    if (tabulated) {
      Mat3 tensor = Mat3::outer(a, n);
      double d1 = (tensor - ref1).norm();
      double d2 = (tensor - ref2).norm();
      if (d1 <= 1e-8 * std::max(1.0, ref1.norm()))
        kind = TwinKind::TypeI;
      else if (d2 <= 1e-8 * std::max(1.0, ref2.norm()))
        kind = TwinKind::TypeII;
      else
        throw Error(ErrorCode::NoMatch, "generic solution matches neither closed form");
    }
    out.push_back(assemble(params, VariantPair{l, s}, kind, a, n));
  }
  return out;
}

double twin_det_mismatch(const TwinSystem& twin, const VariantSet& vs) {
  Mat3 f = vs.of(twin.s) + Mat3::outer(twin.a, twin.n.vec());
  return f.det() - vs.of(twin.l).det();
}

}  // namespace otw
