// twistform: verification suites, constitutive map and trajectory residuals.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "twistform/random.hpp"
#include "twistform/sampling.hpp"
#include "twistform/serialization.hpp"
#include "twistform/verify.hpp"

using namespace twistform;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const json& report, const std::string& out) {
  const std::string text = report.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

void summarize(const Report& r) {
  for (const auto& c : r.checks)
    std::printf("%s  %-58s %.3e  (tol %.1e)\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.value,
                c.tolerance);
  std::printf("%s: %s\n", r.suite.c_str(), r.pass() ? "PASS" : "FAIL");
}

std::pair<int, int> parse_dims(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int m = std::stoi(s);
      return {m, m};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--dims expects lo..hi, got \"" + s + "\"");
  }
}

// ---- residual ----------------------------------------------------------

struct Region {
  std::optional<CubeDomain> box;
  std::optional<DiracCurrent> dirac;
};

Region region_from(const std::string& path, const MinkowskiStructure& ms) {
  Region r;
  if (path.empty()) {
    r.box = CubeDomain{AffinePoint::Zero(4), AffinePoint::Ones(4)};
    return r;
  }
  const json j = parse_json_text(read_file(path), path);
  if (j.is_object() && j.contains("box")) {
    r.box = cube_from_json(j["box"], 4, "/box");
  } else if (j.is_object() && j.contains("dirac")) {
    r.dirac = dirac_from_json(j["dirac"], ms.space(), "/dirac");
  } else {
    throw SerializationError("/", "region needs a \"box\" or a \"dirac\" member");
  }
  return r;
}

std::vector<AffinePoint> sample_points(const CubeDomain& box, const SampleOptions& opt) {
  std::vector<AffinePoint> pts;
  const int n = opt.lattice;
  int total = 1;
  for (int k = 0; k < 4; ++k) total *= n;
  for (int i = 0; i < total; ++i) {
    AffinePoint x(4);
    int rest = i;
    for (int k = 0; k < 4; ++k) {
      x[k] = box.min[k] + (box.max[k] - box.min[k]) * ((rest % n) + 0.5) / n;
      rest /= n;
    }
    pts.push_back(x);
  }
  Rng rng(opt.seed);
  for (int i = 0; i < opt.random_points; ++i) pts.push_back(random_point(rng, box.min, box.max));
  return pts;
}

Report residual_report(const std::string& mode, const Trajectory& t, const Region& region,
                       const MinkowskiStructure& ms, const SampleOptions& opt, json config,
                       json& extra) {
  Report r{"residual:" + mode, std::move(config), {}};
  std::vector<std::pair<AffinePoint, GradedElement>> points;
  if (region.dirac) {
    points.emplace_back(region.dirac->point, region.dirac->w);
  } else {
    for (const auto& x : sample_points(*region.box, opt)) points.emplace_back(x, unit_volume_dual(ms.space()));
  }

  if (mode == "el" || mode == "maxwell") {
    const SmoothForm res = mode == "el" ? euler_lagrange_residual(ms, t.a, t.j) : maxwell_residual(ms, t.g, t.j);
    double worst = 0.0;
    for (const auto& [x, w] : points) worst = std::max(worst, res(x).max_abs());
    r.checks.push_back(at_most(mode == "el" ? "euler_lagrange_residual" : "maxwell_residual", worst, opt.tolerance));
  } else if (mode == "compact") {
    if (!region.box) throw UsageError("mode compact needs a box region");
    const Verdict v = compact_domain_check(ms, t, *region.box, opt);
    r.checks.push_back(at_most("interior_euler_lagrange", v.interior_residual, opt.tolerance));
    r.checks.push_back(at_most("boundary_constitutive", v.boundary_residual, opt.tolerance));
    extra["verdict"] = to_json(v);
  } else {
    const bool ham = mode == "hamilton";
    double cons = 0.0, maxw = 0.0, principle = 0.0;
    int failures = 0;
    for (const auto& [x, w] : points) {
      const PointVerdict v = ham ? hamilton_check(ms, t, x, w, opt.tolerance)
                                 : infinitesimal_check(ms, t, x, w, opt.tolerance);
      cons = std::max(cons, v.constitutive_residual);
      maxw = std::max(maxw, v.maxwell_residual);
      principle = std::max(principle, v.principle_residual);
      if (!v.pass) ++failures;
    }
    r.checks.push_back(at_most("constitutive_relation", cons, opt.tolerance));
    r.checks.push_back(at_most("maxwell_equation", maxw, opt.tolerance));
    r.checks.push_back(at_most(ham ? "hamilton_clauses" : "pointwise_principle", principle, opt.tolerance));
    extra["failing_points"] = failures;
    extra["points"] = points.size();
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted exterior calculus and variational electrodynamics checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  VerifyConfig cfg;
  std::string out, dims = "2..5";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--c-light", cfg.c_light, "Speed of light")->envname("TWISTFORM_C_LIGHT");
    sub->add_option("--seed", cfg.seed, "RNG seed")->envname("TWISTFORM_SEED");
    sub->add_option("--out", out, "Write the JSON report here instead of stdout")->envname("TWISTFORM_OUT");
  };

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "lemma1|weyl|stokes|variation|dynamics|legendre|all")->required();
  verify->add_option("--dims", dims, "Dimension range lo..hi for the algebra suites")->envname("TWISTFORM_DIMS");
  verify->add_option("--quad-order", cfg.quad_order, "Gauss-Legendre points per axis")->envname("TWISTFORM_QUAD_ORDER");
  verify->add_option("--tol-algebra", cfg.tol_algebra, "Tolerance for exact identities")->envname("TWISTFORM_TOL_ALGEBRA");
  verify->add_option("--tol-quad", cfg.tol_quad, "Tolerance for quadrature-based checks")->envname("TWISTFORM_TOL_QUAD");
  add_common(verify);

  std::string input;
  bool inverse = false;
  auto* cons = app.add_subcommand("constitutive", "Map F to G (or G to F with --inverse)");
  cons->add_option("file", input, "GradedElement JSON")->required();
  cons->add_flag("--inverse", inverse, "Apply the inverse map")->envname("TWISTFORM_INVERSE");
  add_common(cons);

  std::string mode, region_path;
  double tolerance = 1e-8;
  auto* residual = app.add_subcommand("residual", "Check a trajectory");
  residual->add_option("file", input, "Trajectory JSON")->required();
  residual->add_option("--mode", mode, "el|maxwell|compact|infinitesimal|hamilton")
      ->required()
      ->check(CLI::IsMember({"el", "maxwell", "compact", "infinitesimal", "hamilton"}))
      ->envname("TWISTFORM_MODE");
  residual->add_option("--region", region_path, "Region JSON: {\"box\":…} or {\"dirac\":…}")->envname("TWISTFORM_REGION");
  residual->add_option("--tolerance", tolerance, "Residual tolerance")->envname("TWISTFORM_TOLERANCE");
  add_common(residual);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) {
      std::tie(cfg.dim_lo, cfg.dim_hi) = parse_dims(dims);
      const Report r = run_suite(suite, cfg);
      summarize(r);
      emit(to_json(r), out);
      return r.pass() ? kPass : kFail;
    }

    const MinkowskiStructure ms(cfg.c_light);
    const json j = parse_json_text(read_file(input), input);

    if (*cons) {
      const GradedElement x = graded_from_json(j, ms.space().first_label, "");
      const GradedElement y = inverse ? constitutive_inverse(ms, x) : constitutive(ms, x);
      std::cout << (inverse ? "F" : "G") << " =";
      const auto tuples = combinations(4, y.grade());
      for (std::size_t i = 0; i < tuples.size(); ++i) {
        std::cout << "  [";
        for (int k : mask_indices(tuples[i])) std::cout << k;
        std::cout << "] " << y[static_cast<int>(i)];
      }
      std::cout << "\n";
      emit(to_json(y), out);
      return kPass;
    }

    SampleOptions opt;
    opt.seed = cfg.seed;
    opt.tolerance = tolerance;
    const Trajectory t = trajectory_from_json(j, ms, "");
    const Region region = region_from(region_path, ms);
    json config = {{"input", input},     {"mode", mode},        {"region", region_path},
                   {"seed", cfg.seed},   {"c_light", cfg.c_light}, {"tolerance", tolerance}};
    json extra = json::object();
    const Report r = residual_report(mode, t, region, ms, opt, config, extra);
    summarize(r);
    json rep = to_json(r);
    for (auto it = extra.begin(); it != extra.end(); ++it) rep[it.key()] = it.value();
    emit(rep, out);
    return r.pass() ? kPass : kFail;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // Input validation errors from every module derive from invalid_argument.
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
