#include "orthotwin/json_io.hpp"

#include <cmath>

namespace otw {

json to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::BadInput, "expected a 3-array");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json to_json(const Mat3& m) {
  json a = json::array();
  for (int i = 0; i < 3; ++i)
    for (int j2 = 0; j2 < 3; ++j2) a.push_back(m(i, j2));
  return a;
}

Mat3 mat3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 9) throw Error(ErrorCode::BadInput, "expected a 9-array");
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) m(i, k) = j[3 * i + k].get<double>();
  return m;
}

namespace {

TwinKind twin_kind_from_name(const std::string& s) {
  if (s == "I") return TwinKind::TypeI;
  if (s == "II") return TwinKind::TypeII;
  if (s == "compound") return TwinKind::Compound;
  throw Error(ErrorCode::BadInput, "unknown twin kind: " + s);
}

Branch branch_from_name(const std::string& s) {
  if (s == "small") return Branch::Small;
  if (s == "large") return Branch::Large;
  throw Error(ErrorCode::BadInput, "unknown branch: " + s);
}

}  // namespace

json to_json(const TwinSystem& t) {
  return json{{"s", t.s},
              {"l", t.l},
              {"kind", twin_kind_name(t.kind)},
              {"a", to_json(t.a)},
              {"n", to_json(t.n.vec())},
              {"q", to_json(t.q.mat())},
              {"residual", t.residual}};
}

TwinSystem twin_from_json(const json& j) {
  TwinSystem t;
  t.s = j.at("s").get<int>();
  t.l = j.at("l").get<int>();
  t.kind = twin_kind_from_name(j.at("kind").get<std::string>());
  t.a = vec3_from_json(j.at("a"));
  t.n = UnitVec3(vec3_from_json(j.at("n")));
  t.q = Rotation3(mat3_from_json(j.at("q")));
  t.residual = j.at("residual").get<double>();
  return t;
}

HabitExport make_habit_export(const TwinSystem& twin, const HabitSolution& sol,
                              const HabitResiduals& res) {
  HabitExport h;
  h.s = twin.s;
  h.l = twin.l;
  h.twin_kind = twin.kind;
  h.branch = sol.branch;
  h.kappa = sol.kappa;
  h.lambda = sol.lambda;
  h.m = sol.m.vec();
  h.b = sol.b;
  h.r = sol.r.mat();
  h.residual_equation = res.equation;
  h.residual_identity = res.identity;
  return h;
}

json to_json(const HabitExport& h) {
  return json{{"pair", json::array({h.s, h.l})},
              {"twin_kind", twin_kind_name(h.twin_kind)},
              {"branch", branch_name(h.branch)},
              {"kappa", h.kappa},
              {"lambda", h.lambda},
              {"m", to_json(h.m)},
              {"b", to_json(h.b)},
              {"r", to_json(h.r)},
              {"residuals", json{{"equation", h.residual_equation},
                                 {"identity", h.residual_identity}}}};
}

HabitExport habit_from_json(const json& j) {
  HabitExport h;
  h.s = j.at("pair")[0].get<int>();
  h.l = j.at("pair")[1].get<int>();
  h.twin_kind = twin_kind_from_name(j.at("twin_kind").get<std::string>());
  h.branch = branch_from_name(j.at("branch").get<std::string>());
  h.kappa = j.at("kappa").get<int>();
  h.lambda = j.at("lambda").get<double>();
  h.m = vec3_from_json(j.at("m"));
  h.b = vec3_from_json(j.at("b"));
  h.r = mat3_from_json(j.at("r"));
  h.residual_equation = j.at("residuals").at("equation").get<double>();
  h.residual_identity = j.at("residuals").at("identity").get<double>();
  return h;
}

namespace {

const char* edge_via_name(EdgeVia v) {
  switch (v) {
    case EdgeVia::M: return "M";
    case EdgeVia::UinvSqMinv: return "UinvSqMinv";
    case EdgeVia::None: return "none";
  }
  return "?";
}

const char* face_via_name(FaceVia v) {
  switch (v) {
    case FaceVia::N: return "N";
    case FaceVia::UsqNinv: return "UsqNinv";
    case FaceVia::None: return "none";
  }
  return "?";
}

}  // namespace

json to_json(const AdmissibilityReport& r) {
  json edges = json::array();
  for (const EdgeVerdict& e : r.edges)
    edges.push_back(json{{"dir", to_json(e.dir.vec())},
                         {"admissible", e.admissible},
                         {"via", edge_via_name(e.via)}});
  json faces = json::array();
  for (const FaceVerdict& f : r.faces)
    faces.push_back(json{{"normal", to_json(f.normal.vec())},
                         {"admissible", f.admissible},
                         {"via", face_via_name(f.via)}});
  return json{{"variant", r.variant},
              {"edges", edges},
              {"faces", faces},
              {"domain_admissible", r.domain_admissible}};
}

json nucleation_to_json(const OctantVerdict& verdict, const EnergyDensity& density,
                        bool with_energy) {
  json cands = json::array();
  for (const CornerCandidate& c : verdict.witnesses)
    cands.push_back(json{{"l", c.l},
                         {"twin_kind", twin_kind_name(c.twin.kind)},
                         {"branch", branch_name(c.habit.branch)},
                         {"kappa", c.habit.kappa},
                         {"octant", c.octant},
                         {"n", to_json(c.signed_n())},
                         {"m", to_json(c.signed_m())},
                         {"inj_sign", c.inj_sign}});
  json out{{"variant", verdict.variant}, {"octants", verdict.octants}, {"candidates", cands}};
  if (with_energy && !verdict.witnesses.empty()) {
    CornerConstruction con = build_construction(verdict.witnesses.front());
    std::uint64_t seed = 0x5eed0e12;
    double vol = monte_carlo_volume_s1(con, 1000000, seed);
    out["energy"] = json{{"depth", density.depth},
                         {"volume_s1", vol},
                         {"delta_I", -density.depth * vol},
                         {"seed", seed}};
  }
  return out;
}

bool twin_equal(const TwinSystem& a, const TwinSystem& b, double tol) {
  auto close = [tol](double x, double y) { return std::abs(x - y) <= tol; };
  bool vec_ok = close(a.a.x, b.a.x) && close(a.a.y, b.a.y) && close(a.a.z, b.a.z) &&
                close(a.n[0], b.n[0]) && close(a.n[1], b.n[1]) && close(a.n[2], b.n[2]);
  bool rot_ok = (a.q.mat() - b.q.mat()).max_abs() <= tol;
  return a.s == b.s && a.l == b.l && a.kind == b.kind && vec_ok && rot_ok &&
         close(a.residual, b.residual);
}

}  // namespace otw
