#include "orthotwin/lattice.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace otw {

void LatticeParams::validate() const {
  if (!(alpha > 0) || !(beta > 0) || !(gamma > 0) || !std::isfinite(alpha) ||
      !std::isfinite(beta) || !std::isfinite(gamma))
    throw Error(ErrorCode::BadInput, "lattice stretches must be positive and finite");
}

bool is_preset_cualni(const LatticeParams& p) {
  LatticeParams q = LatticeParams::cualni_seiner();
  return std::abs(p.alpha - q.alpha) <= Tol::set && std::abs(p.beta - q.beta) <= Tol::set &&
         std::abs(p.gamma - q.gamma) <= Tol::set;
}

LatticeParams load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open parameter file: " + path);
  LatticeParams p{0, 0, 0};
  bool got_a = false, got_b = false, got_g = false;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t b = s.find_first_not_of(" \t\r");
      size_t e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty()) continue;
    double x = 0;
    try {
      x = std::stod(val);
    } catch (...) {
      throw Error(ErrorCode::BadInput, "bad numeric value for key '" + key + "'");
    }
    if (key == "alpha") { p.alpha = x; got_a = true; }
    else if (key == "beta") { p.beta = x; got_b = true; }
    else if (key == "gamma") { p.gamma = x; got_g = true; }
  }
  if (!got_a || !got_b || !got_g)
    throw Error(ErrorCode::BadInput, "parameter file must define alpha, beta and gamma");
  p.validate();
  return p;
}

VariantSet variants(const LatticeParams& params) {
  params.validate();
  const double b = params.beta;
  const double p = (params.alpha + params.gamma) / 2.0;
  const double q = (params.alpha - params.gamma) / 2.0;

  Mat3 u1 = Mat3::from_rows({b, 0, 0}, {0, p, q}, {0, q, p});
  Mat3 u2 = Mat3::from_rows({b, 0, 0}, {0, p, -q}, {0, -q, p});
  Mat3 u3 = Mat3::from_rows({p, 0, q}, {0, b, 0}, {q, 0, p});
  Mat3 u4 = Mat3::from_rows({p, 0, -q}, {0, b, 0}, {-q, 0, p});
  Mat3 u5 = Mat3::from_rows({p, q, 0}, {q, p, 0}, {0, 0, b});
  Mat3 u6 = Mat3::from_rows({p, -q, 0}, {-q, p, 0}, {0, 0, b});

  return VariantSet{{SymMat3(u1), SymMat3(u2), SymMat3(u3), SymMat3(u4), SymMat3(u5), SymMat3(u6)},
                    params};
}

AssumptionReport check_assumptions(const LatticeParams& params) {
  params.validate();
  const double a2 = params.alpha * params.alpha;
  const double b2 = params.beta * params.beta;
  const double g2 = params.gamma * params.gamma;

  AssumptionReport r;
  r.norm_check = 2 * a2 + b2;
  r.cof_norm = a2 * g2 + a2 * b2 + b2 * g2;
  r.A = a2 * g2 - b2 * (a2 + g2) / 2.0;
  r.B = b2 * (a2 - g2);
  r.a_minus_b = r.A - r.B;
  r.N = (a2 + g2) / 2.0 - b2;
  r.P = a2 - g2;
  r.det_u = params.alpha * params.beta * params.gamma;
  r.lam_max_cof = params.alpha * params.gamma;

  r.a1 = params.beta <= 1.0 && 1.0 <= params.gamma && params.gamma < params.alpha;
  r.a2 = r.norm_check >= 3.0;
  r.a3 = r.cof_norm >= 3.0;
  r.a4 = r.a_minus_b > 0.0;
  r.det_le_one = r.det_u <= 1.0;
  r.cof_max_ge_one = r.lam_max_cof >= 1.0;

  double a1_slack = std::min({1.0 - params.beta, params.gamma - 1.0, params.alpha - params.gamma});
  r.boundary[0] = std::abs(a1_slack) <= Tol::set;
  r.boundary[1] = std::abs(r.norm_check - 3.0) <= Tol::set;
  r.boundary[2] = std::abs(r.cof_norm - 3.0) <= Tol::set;
  r.boundary[3] = std::abs(r.a_minus_b) <= Tol::set;
  return r;
}

}  // namespace otw
