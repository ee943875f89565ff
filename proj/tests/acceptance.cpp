// One line per acceptance criterion. Tolerances are fixed here and compared
// against the raw measured values, not against the suites' own verdicts.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "twistform/verify.hpp"

using namespace twistform;

namespace {

int failures = 0;

void line(int n, const std::string& what, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s  [%s]\n", n, ok ? "PASS" : "FAIL", what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

struct Values {
  std::map<std::string, double> v;
  double get(const std::string& name) const {
    auto it = v.find(name);
    if (it == v.end()) throw std::runtime_error("missing check " + name);
    return it->second;
  }
};

Values collect(const Report& r) {
  Values out;
  for (const auto& c : r.checks) out.v[c.name] = c.value;
  return out;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

int run(const std::string& cmd) {
  const int rc = std::system((cmd + " > /dev/null 2>&1").c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool failing_check(const std::string& report, const std::string& name) {
  const json j = json::parse(slurp(report), nullptr, false);
  if (j.is_discarded() || !j.contains("checks")) return false;
  for (const auto& c : j["checks"])
    if (c["name"] == name && c["pass"] == false) return true;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::fprintf(stderr, "usage: acceptance <cli> <data-dir> <work-dir>\n");
    return 2;
  }
  const std::string cli = argv[1], data = argv[2], work = argv[3];

  VerifyConfig cfg;
  cfg.seed = 42;
  cfg.c_light = 1.0;
  cfg.quad_order = 8;
  cfg.tol_algebra = 1e-12;
  cfg.tol_quad = 1e-6;
  cfg.dim_lo = 2;
  cfg.dim_hi = 5;

  const auto t0 = std::chrono::steady_clock::now();
  const Values minors = collect(run_suite("lemma1", cfg));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  {
    const double d = minors.get("weyl_map_vs_minor_expansion");
    line(1, "weyl_map == minor_expansion, 1000 inputs, m=2..5", d < 1e-12 && secs < 30.0,
         "max dev " + fmt("%.2e", d) + ", " + fmt("%.2f", secs) + " s");
  }

  VerifyConfig all_dims = cfg;
  all_dims.dim_lo = 1;
  const Values weyl = collect(run_suite("weyl", all_dims));
  {
    const double shape = weyl.get("weyl_matrix_shape_errors");
    const double det = weyl.get("weyl_matrix_min_abs_det_normalized");
    line(2, "Weyl matrices square and invertible, m<=5", shape == 0.0 && det > 1e-9,
         "min |det| " + fmt("%.3e", det));
  }
  {
    const double l2 = weyl.get("contraction_identity"), l3 = weyl.get("linear_map_representation");
    const double p2 = std::max(weyl.get("bilinear_representation_first"), weyl.get("bilinear_representation_second"));
    line(3, "contraction, linear and bilinear representations, 500 each",
         l2 < 1e-12 && l3 < 1e-12 && p2 < 1e-12,
         fmt("%.2e", l2) + " / " + fmt("%.2e", l3) + " / " + fmt("%.2e", p2));
  }

  const Values stokes = collect(run_suite("stokes", cfg));
  {
    const double res = stokes.get("stokes_residual_max"), inc = stokes.get("stokes_convergence_increases");
    line(4, "Stokes on 100 cells at order 8, monotone in order", res < 1e-6 && inc == 0.0,
         "max residual " + fmt("%.2e", res) + ", increases " + fmt("%.0f", inc));
  }

  const Values variation = collect(run_suite("variation", cfg));
  {
    const double cube = variation.get("dk_cube_relative_error"), dirac = variation.get("dk_dirac_relative_error");
    const double steps = variation.get("dk_fd_step_agreement");
    line(5, "Dk analytic vs finite differences", cube < 1e-6 && dirac < 1e-10 && steps < 1e-10,
         "cube " + fmt("%.2e", cube) + ", dirac " + fmt("%.2e", dirac) + ", steps " + fmt("%.2e", steps));
  }

  const Values dynamics = collect(run_suite("dynamics", cfg));
  {
    const double d = dynamics.get("el_equals_maxwell_of_constitutive");
    line(6, "Euler-Lagrange residual == Maxwell residual of Lambda dA", d < 1e-12, fmt("%.2e", d));
  }
  {
    bool ok = true;
    double worst_solution = 0.0, weakest_detection = 1e300;
    for (const char* fam : {"constant_field", "plane_wave", "coulomb", "sourced_polynomial"}) {
      const std::string f = fam;
      const double va = dynamics.get("virtual_action." + f);
      worst_solution = std::max(worst_solution, va);
      ok = ok && va < 1e-6 && dynamics.get("interior_euler_lagrange." + f) <= 1e-8 &&
           dynamics.get("boundary_constitutive." + f) <= 1e-8;
    }
    for (const char* fam : {"boundary_perturbed", "source_mismatch"})
      weakest_detection = std::min(weakest_detection, dynamics.get(std::string("virtual_action_detects.") + fam));
    ok = ok && weakest_detection > 1e-3;
    ok = ok && dynamics.get("boundary_constitutive.boundary_perturbed") > 1e-8 &&
         dynamics.get("interior_euler_lagrange.boundary_perturbed") <= 1e-8;
    ok = ok && dynamics.get("interior_euler_lagrange.source_mismatch") > 1e-8 &&
         dynamics.get("boundary_constitutive.source_mismatch") <= 1e-8;
    line(7, "solutions pass, counterexamples fail their own clause", ok,
         "worst solution " + fmt("%.2e", worst_solution) + ", weakest detection " + fmt("%.2e", weakest_detection));
  }
  {
    const double dis = dynamics.get("lagrangian_hamiltonian_disagreements");
    const double sat = dynamics.get("agreement_sample_satisfying"), vio = dynamics.get("agreement_sample_violating");
    line(8, "Lagrangian and Hamiltonian point checks agree, 200 pairs", dis == 0.0 && sat > 0 && vio > 0,
         fmt("%.0f", dis) + " disagreements, " + fmt("%.0f", sat) + " satisfying, " + fmt("%.0f", vio) + " violating");
  }

  const Values legendre = collect(run_suite("legendre", cfg));
  {
    const double f = legendre.get("legendre_after_inverse_identity"), b = legendre.get("inverse_after_legendre_identity");
    const double h = legendre.get("hamiltonian_equals_energy_at_sigma");
    const double de = legendre.get("energy_variation_vs_central_difference");
    line(9, "Legendre duality, H = E o sigma, DE vs finite differences",
         f < 1e-12 && b < 1e-12 && h < 1e-12 && de < 1e-8,
         fmt("%.1e", f) + " / " + fmt("%.1e", b) + " / " + fmt("%.1e", h) + " / " + fmt("%.1e", de));
  }
  {
    const double pw = dynamics.get("plane_wave_el_residual"), cl = dynamics.get("coulomb_maxwell_residual");
    const double exact = dynamics.get("charge_conservation_dyadic"), dj = dynamics.get("charge_conservation");
    line(10, "plane wave, Coulomb, charge conservation", pw < 1e-9 && cl < 1e-8 && exact == 0.0 && dj < 1e-12,
         "pw " + fmt("%.1e", pw) + ", coulomb " + fmt("%.1e", cl) + ", d(dG) " + fmt("%.1e", exact) + ", dJ " +
             fmt("%.1e", dj));
  }

  {
    const std::string a = work + "/all_a.json", b = work + "/all_b.json";
    const int rc1 = run(cli + " verify all --seed 42 --out " + a);
    const int rc2 = run(cli + " verify all --seed 42 --out " + b);
    const bool same = !slurp(a).empty() && slurp(a) == slurp(b);
    const std::string bp = work + "/bp.json", sm = work + "/sm.json";
    const int rc3 = run(cli + " residual " + data + "/boundary_perturbed.json --mode compact --out " + bp);
    const int rc4 = run(cli + " residual " + data + "/source_mismatch.json --mode compact --out " + sm);
    const bool named = failing_check(bp, "boundary_constitutive") && failing_check(sm, "interior_euler_lagrange");
    line(11, "CLI exit codes, byte-identical reruns, named failing clauses",
         rc1 == 0 && rc2 == 0 && same && rc3 == 1 && rc4 == 1 && named,
         "exits " + std::to_string(rc1) + "," + std::to_string(rc2) + "," + std::to_string(rc3) + "," +
             std::to_string(rc4) + (same ? ", identical" : ", reports differ"));
  }

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
