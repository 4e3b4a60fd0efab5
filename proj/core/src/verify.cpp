#include "orthotwin/verify.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>

#include "orthotwin/habit.hpp"
#include "orthotwin/json_io.hpp"
#include "orthotwin/maxdirs.hpp"
#include "orthotwin/nucleation.hpp"
#include "orthotwin/reference_data.hpp"
#include "orthotwin/specimen.hpp"
#include "orthotwin/symmetry.hpp"
#include "orthotwin/twinning.hpp"

namespace otw {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Suite {
  std::vector<RegressionResult> results;

  void add(const std::string& name, const std::string& source, double expected,
           const std::function<double()>& compute, double tol, bool known_erratum = false) {
    RegressionResult r;
    r.name = name;
    r.source = source;
    r.expected = expected;
    r.tolerance = tol;
    r.known_erratum = known_erratum;
    try {
      r.computed = compute();
      r.pass = std::isfinite(r.computed) && std::abs(r.computed - r.expected) <= tol;
    } catch (const Error& e) {
      r.computed = kNaN;
      r.pass = false;
      r.note = e.what();
    }
    results.push_back(std::move(r));
  }
};

std::array<const std::array<ref::HabitRow, 24>*, 4> habit_tables() {
  return {&ref::habit_rows_plus_small(), &ref::habit_rows_minus_small(),
          &ref::habit_rows_plus_large(), &ref::habit_rows_minus_large()};
}

}  // namespace

std::vector<RegressionResult> verify_paper(const LatticeParams& params) {
  Suite suite;
  const char* pub = "published-table";
  const char* ident = "identity";
  const char* count = "exact-count";

  // Twin element constants. The printed Type-I shear block is inconsistent
  // with the closed forms and the twinning equation (it duplicates the
  // Type-II block); those three checks are expected to fail and are marked.
  suite.add("twin.u1 vs printed block", pub, ref::printed_u[0],
            [&] { return twin_constants(params).u1; }, 5e-6, /*known_erratum=*/true);
  suite.add("twin.u2 vs printed block", pub, ref::printed_u[1],
            [&] { return twin_constants(params).u2; }, 5e-6, /*known_erratum=*/true);
  suite.add("twin.u3 vs printed block", pub, ref::printed_u[2],
            [&] { return twin_constants(params).u3; }, 5e-6, /*known_erratum=*/true);
  suite.add("twin.t1", pub, ref::printed_t[0], [&] { return twin_constants(params).t1; }, 5e-6);
  suite.add("twin.t2", pub, ref::printed_t[1], [&] { return twin_constants(params).t2; }, 5e-6);
  suite.add("twin.v1", pub, ref::printed_v[0], [&] { return twin_constants(params).v1; }, 5e-6);
  suite.add("twin.v2", pub, ref::printed_v[1], [&] { return twin_constants(params).v2; }, 5e-6);
  suite.add("twin.v3", pub, ref::printed_v[2], [&] { return twin_constants(params).v3; }, 5e-6);

  // Closed-form elements satisfy the twinning equation for every row.
  suite.add("twin.residual.max(both types, 24 rows)", ident, 0.0, [&] {
    double worst = 0;
    for (int l = 1; l <= 6; ++l)
      for (int s = 1; s <= 6; ++s) {
        if (s == l || is_compound_pair(s, l)) continue;
        worst = std::max(worst, type1_twin(params, {l, s}).residual);
        worst = std::max(worst, type2_twin(params, {l, s}).residual);
      }
    return worst;
  }, 1e-9);

  // Assumption scalars.
  suite.add("assumptions.2a^2+b^2", pub, ref::norm_check,
            [&] { return check_assumptions(params).norm_check; }, 1e-4);
  suite.add("assumptions.|cofU|^2", pub, ref::cof_norm,
            [&] { return check_assumptions(params).cof_norm; }, 1e-4);
  suite.add("assumptions.A-B", pub, ref::a_minus_b,
            [&] { return check_assumptions(params).a_minus_b; }, 1e-4);
  suite.add("assumptions.detU<=1 and cof max>=1", count, 1.0, [&] {
    AssumptionReport r = check_assumptions(params);
    return (r.det_le_one && r.cof_max_ge_one) ? 1.0 : 0.0;
  }, 0.0);

  // Symmetry table.
  suite.add("symmetry.table matches (144 entries)", count, 144.0, [&] {
    SymmetryTable t = build_symmetry_table(variants(params));
    int hits = 0;
    for (int s = 0; s < 6; ++s)
      for (int q = 0; q < 24; ++q)
        if (t.entry[s][q] == ref::symmetry_table().entry[s][q]) ++hits;
    return double(hits);
  }, 0.0);
  suite.add("symmetry.example (U3,Q14)->5", count, 5.0, [&] {
    return double(build_symmetry_table(variants(params)).entry[2][14]);
  }, 0.0);

  // Habit invariants.
  suite.add("habit.lambda_star (pair row (1,3))", pub, ref::lambda_star, [&] {
    VariantSet vs = variants(params);
    return solve_volume_fractions(type2_twin(params, {1, 3}), vs).lambda_star;
  }, 1e-5);
  suite.add("habit.lambda_star.spread(24 pairs)", ident, 0.0, [&] {
    VariantSet vs = variants(params);
    double lo = 1, hi = 0;
    for (int l = 1; l <= 6; ++l)
      for (int s = 1; s <= 6; ++s) {
        if (s == l || is_compound_pair(s, l)) continue;
        double lam = solve_volume_fractions(type2_twin(params, {l, s}), vs).lambda_star;
        lo = std::min(lo, lam);
        hi = std::max(hi, lam);
      }
    return hi - lo;
  }, 1e-10);
  suite.add("habit.delta", pub, ref::delta, [&] {
    VariantSet vs = variants(params);
    return solve_volume_fractions(type2_twin(params, {1, 3}), vs).delta;
  }, 1e-4);

  // All 96 habit rows as tensors (each row matched against the solution pair
  // at its branch; the published +/- labels follow their own eigenvector
  // convention), plus the residual identities.
  suite.add("habit.tables.tensor.maxdev(96 rows)", pub, 0.0, [&] {
    VariantSet vs = variants(params);
    double worst = 0;
    auto tables = habit_tables();
    Branch branches[4] = {Branch::Small, Branch::Small, Branch::Large, Branch::Large};
    for (int t = 0; t < 4; ++t) {
      for (const ref::HabitRow& row : *tables[t]) {
        TwinSystem twin = type2_twin(params, {row.l, row.s});
        auto mref = ref::habit_m(row);
        auto bref = ref::habit_b(row);
        Mat3 want = Mat3::outer(Vec3{bref[0], bref[1], bref[2]}, Vec3{mref[0], mref[1], mref[2]});
        double best = 1e30;
        for (int kappa : {+1, -1}) {
          HabitSolution sol = habit_solution(twin, vs, branches[t], kappa);
          best = std::min(best, (Mat3::outer(sol.b, sol.m.vec()) - want).norm());
        }
        worst = std::max(worst, best);
      }
    }
    return worst;
  }, 5e-6);
  suite.add("habit.residual.equation.max(96)", ident, 0.0, [&] {
    VariantSet vs = variants(params);
    double worst = 0;
    for (int l = 1; l <= 6; ++l)
      for (int s = 1; s <= 6; ++s) {
        if (s == l || is_compound_pair(s, l)) continue;
        TwinSystem twin = type2_twin(params, {l, s});
        for (Branch br : {Branch::Small, Branch::Large})
          for (int k : {+1, -1}) {
            HabitSolution sol = habit_solution(twin, vs, br, k);
            worst = std::max(worst, verify_habit(sol, twin, vs).equation);
          }
      }
    return worst;
  }, 1e-8);
  suite.add("habit.residual.identity.max(96)", ident, 0.0, [&] {
    VariantSet vs = variants(params);
    double worst = 0;
    for (int l = 1; l <= 6; ++l)
      for (int s = 1; s <= 6; ++s) {
        if (s == l || is_compound_pair(s, l)) continue;
        TwinSystem twin = type2_twin(params, {l, s});
        for (Branch br : {Branch::Small, Branch::Large})
          for (int k : {+1, -1}) {
            HabitSolution sol = habit_solution(twin, vs, br, k);
            worst = std::max(worst, verify_habit(sol, twin, vs).identity);
          }
      }
    return worst;
  }, 1e-8);

  // Corner candidates: the injectivity constant and the octant verdicts.
  suite.add("corner.inj_sign.maxdev(all candidates)", pub, 0.0, [&] {
    double worst = 0;
    int seen = 0;
    for (int s = 1; s <= 6; ++s)
      for (const CornerCandidate& c : enumerate_candidates(s, params))
        if (c.valid) {
          worst = std::max(worst, std::abs(c.inj_sign - ref::injectivity_constant));
          ++seen;
        }
    if (seen == 0) throw Error(ErrorCode::NoHabitPlane, "no valid corner candidates");
    return worst;
  }, 1e-5);
  suite.add("corner.octants match (6 variants)", count, 6.0, [&] {
    int hits = 0;
    for (int s = 1; s <= 6; ++s) {
      OctantVerdict v = nucleating_octants(s, params);
      const auto& want = ref::nucleating_octants[s - 1];
      if (v.octants.size() == 4 && std::equal(v.octants.begin(), v.octants.end(), want.begin()))
        ++hits;
    }
    return double(hits);
  }, 0.0);
  suite.add("corner.octants antipode-closed (6 variants)", count, 6.0, [&] {
    int hits = 0;
    for (int s = 1; s <= 6; ++s) {
      OctantVerdict v = nucleating_octants(s, params);
      bool ok = v.octants.size() == 4;
      for (int o : v.octants) {
        int anti = o <= 4 ? o + 4 : o - 4;
        ok = ok && std::find(v.octants.begin(), v.octants.end(), anti) != v.octants.end();
      }
      if (ok) ++hits;
    }
    return double(hits);
  }, 0.0);

  // Maximal-direction closed forms against the defining max conditions on a
  // deterministic sphere sample, excluding the 1e-9 boundary band.
  suite.add("maxdirs.oracle.mismatches(6 x 1e5)", count, 0.0, [&] {
    VariantSet vs = variants(params);
    long bad = 0;
    for (int s = 1; s <= 6; ++s) {
      SpherePointCloud cloud = classify_sphere(s, params, 100000, 0);
      for (const SpherePoint& p : cloud.points) {
        DirectionVerdict v = classify_direction(s, p.dir, vs);
        if (std::abs(v.margin) <= 1e-9) continue;
        if (v.in_M != v.in_M_oracle || v.in_UinvSqMinv != v.in_Minv_oracle_preimage) ++bad;
      }
    }
    return double(bad);
  }, 0.0);
  suite.add("maxdirs.disjointness violations", count, 0.0, [&] {
    long both = 0;
    for (int s = 1; s <= 6; ++s) {
      SpherePointCloud cloud = classify_sphere(s, params, 100000, 0);
      for (const SpherePoint& p : cloud.points)
        if (p.label == SphereLabel::Both) ++both;
    }
    return double(both);
  }, 0.0);
  suite.add("maxdirs.witness.direction uncovered (s=1)", count, 0.0, [&] {
    auto [dir, normal] = coverage_witness(1, params);
    bool covered = in_M(1, dir, params) || in_UinvSq_Minv(1, dir, params);
    (void)normal;
    return covered ? 1.0 : 0.0;
  }, 0.0);
  suite.add("maxdirs.witness.normal uncovered (s=1)", count, 0.0, [&] {
    auto [dir, normal] = coverage_witness(1, params);
    (void)dir;
    NormalVerdict v = classify_normal(1, normal, params);
    return (v.in_N || v.in_UsqNinv) ? 1.0 : 0.0;
  }, 0.0);

  // Specimen verdicts.
  suite.add("specimen.axis cut admissible (6 variants)", count, 6.0, [&] {
    Parallelepiped box = Parallelepiped::axis_aligned();
    int hits = 0;
    for (int s = 1; s <= 6; ++s)
      if (classify_specimen(s, box, params).domain_admissible) ++hits;
    return double(hits);
  }, 0.0);
  suite.add("specimen.skew cut inadmissible (s=1)", count, 0.0, [&] {
    double isq = 1.0 / std::sqrt(2.0);
    Parallelepiped box({0, 0, 0}, {Vec3{1, 0, 0}, Vec3{0, isq, -isq}, Vec3{0, isq, isq}});
    return classify_specimen(1, box, params).domain_admissible ? 1.0 : 0.0;
  }, 0.0);

  return suite.results;
}

void print_results(const std::vector<RegressionResult>& results, std::ostream& os) {
  os << std::left << std::setw(44) << "check" << std::setw(17) << "source" << std::setw(15)
     << "expected" << std::setw(15) << "computed" << std::setw(10) << "tol"
     << "status\n";
  for (const RegressionResult& r : results) {
    os << std::left << std::setw(44) << r.name << std::setw(17) << r.source;
    os << std::setw(15) << std::setprecision(8) << r.expected;
    os << std::setw(15) << std::setprecision(8) << r.computed;
    os << std::setw(10) << std::setprecision(2) << r.tolerance;
    os << (r.pass ? "PASS" : (r.known_erratum ? "FAIL (known upstream erratum)" : "FAIL"));
    if (!r.note.empty()) os << "  [" << r.note << "]";
    os << '\n';
  }
  os << count_failures(results) << " of " << results.size() << " checks failed\n";
}

int count_failures(const std::vector<RegressionResult>& results) {
  int n = 0;
  for (const RegressionResult& r : results)
    if (!r.pass) ++n;
  return n;
}

int count_unexpected_failures(const std::vector<RegressionResult>& results) {
  int n = 0;
  for (const RegressionResult& r : results)
    if (!r.pass && !r.known_erratum) ++n;
  return n;
}

int verify_exit_code(const std::vector<RegressionResult>& results) {
  return count_failures(results) == 0 ? 0 : 2;
}

}  // namespace otw
