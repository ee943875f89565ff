#include "twistform/electrodynamics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "twistform/random.hpp"

namespace twistform {

namespace {

constexpr double kPi = std::numbers::pi;

GradedElement covector_basis(SpaceDescriptor space, Parity p, IndexMask mask) {
  return GradedElement::basis(Kind::Covector, p, space, mask_indices(mask));
}

void require_type(const GradedElement& x, Kind k, Parity p, int grade, const char* what) {
  if (x.kind() != k || x.parity() != p || x.grade() != grade || x.dim() != 4)
    throw ElectrodynamicsError(std::string(what) + ": expected " + (p == Parity::Even ? "an even " : "an odd ") +
                               std::to_string(grade) + "-" +
                               (k == Kind::Covector ? "covector" : "vector") + " on m = 4");
}

GradedElement const_value(const SmoothForm& f, const AffinePoint& x) { return f(x); }

double max_abs(const GradedElement& x) { return x.max_abs(); }

}  // namespace

Eigen::MatrixXd wedge2_matrix(const Eigen::MatrixXd& g) {
  const int m = static_cast<int>(g.rows());
  const auto pairs = combinations(m, 2);
  const int n = static_cast<int>(pairs.size());
  Eigen::MatrixXd w(n, n);
  for (int r = 0; r < n; ++r) {
    const auto mn = mask_indices(pairs[r]);
    for (int c = 0; c < n; ++c) {
      const auto ab = mask_indices(pairs[c]);
      w(r, c) = g(mn[0], ab[0]) * g(mn[1], ab[1]) - g(mn[0], ab[1]) * g(mn[1], ab[0]);
    }
  }
  return w;
}

MinkowskiStructure::MinkowskiStructure(double c_light)
    : MinkowskiStructure(Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal().toDenseMatrix(),
                         c_light) {}

MinkowskiStructure::MinkowskiStructure(Eigen::Matrix4d metric, double c_light)
    : space_(SpaceDescriptor::minkowski()),
      g_(std::move(metric)),
      c_light_(c_light),
      sqrt_g_(Kind::Covector, Parity::Odd, 4, space_),
      sqrt_g_inv_(Kind::Vector, Parity::Odd, 4, space_) {
  if (!(c_light > 0.0) || !std::isfinite(c_light))
    throw ElectrodynamicsError("speed of light must be a positive finite number");
  if ((g_ - g_.transpose()).cwiseAbs().maxCoeff() > 1e-14 * std::max(1.0, g_.cwiseAbs().maxCoeff()))
    throw ElectrodynamicsError("metric must be symmetric");
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(g_);
  int positive = 0, negative = 0;
  for (int i = 0; i < 4; ++i) (eig.eigenvalues()[i] > 0 ? positive : negative)++;
  const double smallest = eig.eigenvalues().cwiseAbs().minCoeff();
  if (positive != 1 || negative != 3 || smallest == 0.0)
    throw ElectrodynamicsError("metric must be non-degenerate of signature (1, 3)");
  g_inv_ = g_.inverse();
  w2_g_ = wedge2_matrix(g_);
  w2_g_inv_ = wedge2_matrix(g_inv_);
  const double root = std::sqrt(std::abs(g_.determinant()));
  sqrt_g_ = root * unit_volume(space_);
  sqrt_g_inv_ = (1.0 / root) * unit_volume_dual(space_);
}

MinkowskiStructure MinkowskiStructure::with_c_light(double c) const { return MinkowskiStructure(g_, c); }

GradedElement MinkowskiStructure::raise2(const GradedElement& f) const {
  require_type(f, Kind::Covector, Parity::Even, 2, "raise2");
  return GradedElement(Kind::Vector, Parity::Even, 2, space_, w2_g_inv_ * f.coeffs());
}

GradedElement MinkowskiStructure::lower2(const GradedElement& w) const {
  require_type(w, Kind::Vector, Parity::Even, 2, "lower2");
  return GradedElement(Kind::Covector, Parity::Even, 2, space_, w2_g_ * w.coeffs());
}

GradedElement lagrangian_density(const MinkowskiStructure& ms, const GradedElement& f) {
  const double c = ms.c_light();
  return (-1.0 / (8.0 * kPi * c) * pair(f, ms.raise2(f))) * ms.sqrt_g();
}

GradedElement lagrangian_density(const MinkowskiStructure& ms, const GradedElement& a,
                                 const GradedElement& f) {
  require_type(a, Kind::Covector, Parity::Even, 1, "lagrangian_density");
  return lagrangian_density(ms, f);
}

QuadraticDensity lagrangian_kappa(const MinkowskiStructure& ms) {
  const double c = ms.c_light();
  const double root = ms.sqrt_g()[0];
  Eigen::MatrixXd nu = (-root / (4.0 * kPi * c)) * ms.wedge2_inverse();
  // Exact symmetry; the product formula can differ in the last bit.
  nu = 0.5 * (nu + nu.transpose()).eval();
  return QuadraticDensity(ms.space(), Eigen::MatrixXd::Zero(4, 4), Eigen::MatrixXd::Zero(4, 6),
                          nu);
}

double action(const MinkowskiStructure& ms, const SmoothForm& a, const Current& current) {
  return k_eval(lagrangian_kappa(ms), FieldRep(a, current));
}

GradedElement constitutive(const MinkowskiStructure& ms, const GradedElement& f) {
  return interior_left(ms.raise2(f), ms.sqrt_g());
}

GradedElement constitutive_inverse(const MinkowskiStructure& ms, const GradedElement& g) {
  require_type(g, Kind::Covector, Parity::Odd, 2, "constitutive_inverse");
  return ms.lower2(interior_right(ms.sqrt_g_inv(), g));
}

GradedElement legendre(const MinkowskiStructure& ms, const GradedElement& lambda) {
  require_type(lambda, Kind::Covector, Parity::Even, 2, "legendre");
  const GradedElement raised(Kind::Vector, Parity::Even, 2, ms.space(),
                             ms.wedge2_inverse() * lambda.coeffs());
  return interior_left(raised, ms.sqrt_g());
}

SmoothForm constitutive_form(const MinkowskiStructure& ms, const SmoothForm& f) {
  if (f.parity() != Parity::Even || f.grade() != 2 || f.dim() != 4)
    throw ElectrodynamicsError("constitutive_form: expected an even 2-form on m = 4");
  return map_linear(f, {Parity::Odd, 2, ms.space()},
                    [ms](const GradedElement& v) { return constitutive(ms, v); });
}

GradedElement energy_density(const MinkowskiStructure& ms, const GradedElement& a,
                             const GradedElement& g_mom, const GradedElement& f) {
  require_type(g_mom, Kind::Covector, Parity::Odd, 2, "energy_density");
  const double c = ms.c_light();
  return (-1.0 / (4.0 * kPi * c)) * wedge(g_mom, f) - lagrangian_density(ms, a, f);
}

std::vector<GradedElement> energy_density_forms(const MinkowskiStructure& ms,
                                                const GradedElement& a,
                                                const GradedElement& g_mom,
                                                const GradedElement& f) {
  require_type(g_mom, Kind::Covector, Parity::Odd, 2, "energy_density");
  require_type(a, Kind::Covector, Parity::Even, 1, "energy_density");
  const double k4 = 1.0 / (4.0 * kPi * ms.c_light());
  const double k8 = 1.0 / (8.0 * kPi * ms.c_light());
  const GradedElement gf = wedge(g_mom, f);
  const GradedElement lambda_f = interior_left(ms.raise2(f), ms.sqrt_g());
  return {
      -k4 * gf - lagrangian_density(ms, a, f),
      -k4 * gf + (k8 * pair(f, ms.raise2(f))) * ms.sqrt_g(),
      -k4 * gf + k8 * wedge(f, lambda_f),
      -k8 * wedge(2.0 * g_mom - lambda_f, f),
  };
}

GradedElement energy_variation(const MinkowskiStructure& ms, const GradedElement& g_mom,
                               const GradedElement& lambda, const GradedElement& d_g,
                               const GradedElement& d_lambda) {
  require_type(g_mom, Kind::Covector, Parity::Odd, 2, "energy_variation");
  require_type(d_g, Kind::Covector, Parity::Odd, 2, "energy_variation");
  const double k4 = 1.0 / (4.0 * kPi * ms.c_light());
  return -k4 * (wedge(d_g, lambda) + wedge(g_mom - legendre(ms, lambda), d_lambda));
}

GradedElement hamiltonian_density(const MinkowskiStructure& ms, const GradedElement& a,
                                  const GradedElement& g_mom) {
  require_type(a, Kind::Covector, Parity::Even, 1, "hamiltonian_density");
  const double k8 = 1.0 / (8.0 * kPi * ms.c_light());
  return -k8 * wedge(g_mom, constitutive_inverse(ms, g_mom));
}

SmoothForm euler_lagrange_residual(const MinkowskiStructure& ms, const SmoothForm& a,
                                   const SmoothForm& j) {
  if (j.parity() != Parity::Odd || j.grade() != 3)
    throw ElectrodynamicsError("source must be an odd 3-form");
  const double c = ms.c_light();
  const DkTerms t = dk_terms(lagrangian_kappa(ms), a);
  return (-4.0 * kPi * c) * (t.x + exterior_derivative(t.y)) - (4.0 * kPi / c) * j;
}

SmoothForm maxwell_residual(const MinkowskiStructure& ms, const SmoothForm& g, const SmoothForm& j) {
  if (g.parity() != Parity::Odd || g.grade() != 2)
    throw ElectrodynamicsError("induction must be an odd 2-form");
  if (j.parity() != Parity::Odd || j.grade() != 3)
    throw ElectrodynamicsError("source must be an odd 3-form");
  return exterior_derivative(g) - (4.0 * kPi / ms.c_light()) * j;
}

Trajectory::Trajectory(SmoothForm a_, SmoothForm g_, SmoothForm j_)
    : a(std::move(a_)), g(std::move(g_)), j(std::move(j_)) {
  if (a.parity() != Parity::Even || a.grade() != 1 || a.dim() != 4)
    throw ElectrodynamicsError("trajectory potential must be an even 1-form on m = 4");
  if (g.parity() != Parity::Odd || g.grade() != 2 || g.dim() != 4)
    throw ElectrodynamicsError("trajectory induction must be an odd 2-form on m = 4");
  if (j.parity() != Parity::Odd || j.grade() != 3 || j.dim() != 4)
    throw ElectrodynamicsError("trajectory source must be an odd 3-form on m = 4");
}

Trajectory Trajectory::from_potential(const MinkowskiStructure& ms, const SmoothForm& a,
                                      const std::optional<GradedElement>& g_offset,
                                      const std::optional<GradedElement>& j_offset) {
  SmoothForm g = constitutive_form(ms, exterior_derivative(a));
  if (g_offset) g = g + SmoothForm::constant(*g_offset);
  SmoothForm j = (ms.c_light() / (4.0 * kPi)) * exterior_derivative(g);
  if (j_offset) j = j + SmoothForm::constant(*j_offset);
  return Trajectory(a, g, j);
}

Trajectory Trajectory::vacuum(const MinkowskiStructure& ms, const SmoothForm& a,
                              const std::optional<GradedElement>& g_offset,
                              const std::optional<GradedElement>& j_offset) {
  SmoothForm g = constitutive_form(ms, exterior_derivative(a));
  if (g_offset) g = g + SmoothForm::constant(*g_offset);
  SmoothForm j = j_offset ? SmoothForm::constant(*j_offset)
                          : SmoothForm::zero({Parity::Odd, 3, ms.space()});
  return Trajectory(a, g, j);
}

Domain Trajectory::domain() const {
  return Domain::intersect(a.domain(), Domain::intersect(g.domain(), j.domain()));
}

PhaseDelta phase_delta(const MinkowskiStructure& ms, const Trajectory& t, const AffinePoint& x) {
  if (!t.domain().contains(x)) throw ElectrodynamicsError("point outside the trajectory's domain");
  return {const_value(t.a, x), exterior_derivative(t.a)(x), const_value(t.g, x),
          maxwell_residual(ms, t.g, t.j)(x)};
}

double virtual_action_residual(const MinkowskiStructure& ms, const Trajectory& t,
                               const SmoothForm& delta_a, const Current& current) {
  const double dw = dk_analytic(lagrangian_kappa(ms), FieldRep(t.a, current), delta_a);
  const double paired = covector_pairing(CovectorRep(t.g, t.j, current, ms.c_light()), delta_a);
  return dw - paired;
}

Verdict compact_domain_check(const MinkowskiStructure& ms, const Trajectory& t,
                             const CubeDomain& box, const SampleOptions& opt) {
  if (box.min.size() != 4 || box.max.size() != 4)
    throw ElectrodynamicsError("compact domain must be a box in m = 4");
  if (!t.domain().contains_box(box.min, box.max))
    throw ElectrodynamicsError("compact domain is not inside the trajectory's domain");
  if (opt.lattice < 1 || opt.face_lattice < 1 || opt.random_points < 0)
    throw ElectrodynamicsError("sample counts must be positive");

  const AffinePoint span = box.max - box.min;
  std::vector<AffinePoint> interior;
  const int n = opt.lattice;
  int total = 1;
  for (int i = 0; i < 4; ++i) total *= n;
  for (int k = 0; k < total; ++k) {
    AffinePoint x(4);
    int rest = k;
    for (int axis = 3; axis >= 0; --axis) {
      x[axis] = box.min[axis] + span[axis] * ((rest % n) + 0.5) / n;
      rest /= n;
    }
    interior.push_back(x);
  }
  Rng rng(opt.seed);
  for (int k = 0; k < opt.random_points; ++k) {
    AffinePoint x(4);
    for (int axis = 0; axis < 4; ++axis) x[axis] = box.min[axis] + span[axis] * rng.unit();
    interior.push_back(x);
  }

  std::vector<AffinePoint> faces;
  const int nf = opt.face_lattice;
  for (int axis = 0; axis < 4; ++axis) {
    for (int side = 0; side < 2; ++side) {
      for (int k = 0; k < nf * nf * nf; ++k) {
        AffinePoint x(4);
        x[axis] = side ? box.max[axis] : box.min[axis];
        int rest = k;
        for (int other = 3; other >= 0; --other) {
          if (other == axis) continue;
          x[other] = box.min[other] + span[other] * ((rest % nf) + 0.5) / nf;
          rest /= nf;
        }
        faces.push_back(x);
      }
    }
  }

  const SmoothForm el = euler_lagrange_residual(ms, t.a, t.j);
  const SmoothForm mismatch = t.g - constitutive_form(ms, exterior_derivative(t.a));
  const auto interior_values = kernels::evaluate(
      interior.size(), [&](std::size_t k) { return max_abs(el(interior[k])); },
      kernels::default_execution());
  const auto face_values = kernels::evaluate(
      faces.size(), [&](std::size_t k) { return max_abs(mismatch(faces[k])); },
      kernels::default_execution());

  Verdict v;
  for (double r : interior_values) v.interior_residual = std::max(v.interior_residual, r);
  for (double r : face_values) v.boundary_residual = std::max(v.boundary_residual, r);
  v.pass = v.interior_residual <= opt.tolerance && v.boundary_residual <= opt.tolerance;
  return v;
}

namespace {

void require_nonzero_w(const GradedElement& w) {
  if (w.kind() != Kind::Vector || w.parity() != Parity::Odd || w.grade() != 4 || w.dim() != 4)
    throw ElectrodynamicsError("Dirac weight must be an odd 4-vector");
  if (w.is_zero()) throw ElectrodynamicsError("Dirac weight w must be nonzero");
}

double scale_of(const PhaseDelta& ph) {
  return 1.0 + std::max({ph.f.max_abs(), ph.g.max_abs(), ph.r.max_abs()});
}

}  // namespace

PointVerdict infinitesimal_check(const MinkowskiStructure& ms, const Trajectory& t,
                                 const AffinePoint& x, const GradedElement& w, double tolerance) {
  require_nonzero_w(w);
  const PhaseDelta ph = phase_delta(ms, t, x);
  const GradedElement mismatch = ph.g - constitutive(ms, ph.f);
  PointVerdict v;
  v.constitutive_residual = mismatch.max_abs();
  v.maxwell_residual = ph.r.max_abs();
  // <r ∧ δa + (G - Λ F) ∧ δf, w> on independent basis variations.
  const double wn = w.max_abs();
  for (IndexMask mask : combinations(4, 1))
    v.principle_residual = std::max(
        v.principle_residual,
        std::abs(pair(wedge(ph.r, covector_basis(ms.space(), Parity::Even, mask)), w)) / wn);
  for (IndexMask mask : combinations(4, 2))
    v.principle_residual = std::max(
        v.principle_residual,
        std::abs(pair(wedge(mismatch, covector_basis(ms.space(), Parity::Even, mask)), w)) / wn);
  const double tol = tolerance * scale_of(ph);
  v.pass = v.constitutive_residual <= tol && v.maxwell_residual <= tol &&
           v.principle_residual <= tol;
  return v;
}

PointVerdict hamilton_check(const MinkowskiStructure& ms, const Trajectory& t,
                            const AffinePoint& x, const GradedElement& w, double tolerance) {
  require_nonzero_w(w);
  const PhaseDelta ph = phase_delta(ms, t, x);
  PointVerdict v;
  v.constitutive_residual = (ph.f - constitutive_inverse(ms, ph.g)).max_abs();
  v.maxwell_residual = ph.r.max_abs();
  v.principle_residual = hamiltonian_dynamics_residual(ms, ph);
  const double tol = tolerance * scale_of(ph);
  v.pass = v.constitutive_residual <= tol && v.maxwell_residual <= tol &&
           v.principle_residual <= tol;
  return v;
}

double lagrangian_dynamics_residual(const MinkowskiStructure& ms, const PhaseDelta& ph) {
  // DL(a, f, δa, δf) = -(1/4πc)(r ∧ δa + g ∧ δf) for all (δa, δf).
  const QuadraticDensity l = lagrangian_kappa(ms);
  const AffinePoint origin = AffinePoint::Zero(4);
  const double k4 = 1.0 / (4.0 * kPi * ms.c_light());
  const GradedElement zero_a(Kind::Covector, Parity::Even, 1, ms.space());
  const GradedElement zero_f(Kind::Covector, Parity::Even, 2, ms.space());
  double worst = 0.0;
  for (IndexMask mask : combinations(4, 1)) {
    const GradedElement da = covector_basis(ms.space(), Parity::Even, mask);
    const GradedElement clause = l.derivative(origin, ph.a, ph.f, da, zero_f) + k4 * wedge(ph.r, da);
    worst = std::max(worst, clause.max_abs() / k4);
  }
  for (IndexMask mask : combinations(4, 2)) {
    const GradedElement df = covector_basis(ms.space(), Parity::Even, mask);
    const GradedElement clause = l.derivative(origin, ph.a, ph.f, zero_a, df) + k4 * wedge(ph.g, df);
    worst = std::max(worst, clause.max_abs() / k4);
  }
  return worst;
}

double energy_dynamics_residual(const MinkowskiStructure& ms, const PhaseDelta& ph) {
  // DE(a, g, λ; δa, δg, δλ) = (1/4πc)(r ∧ δa - f ∧ δg) for some λ and all
  // variations. The δg clauses are linear in λ and fix it.
  const double k4 = 1.0 / (4.0 * kPi * ms.c_light());
  const auto pairs = combinations(4, 2);
  Eigen::MatrixXd m(6, 6);
  Eigen::VectorXd rhs(6);
  for (int j = 0; j < 6; ++j) {
    const GradedElement dg = covector_basis(ms.space(), Parity::Odd, pairs[j]);
    for (int i = 0; i < 6; ++i)
      m(j, i) = wedge(dg, covector_basis(ms.space(), Parity::Even, pairs[i]))[0];
    rhs[j] = wedge(ph.f, dg)[0];
  }
  const Eigen::VectorXd lam = m.fullPivLu().solve(rhs);
  Coeffs lc(6);
  for (int i = 0; i < 6; ++i) lc[i] = lam[i];
  const GradedElement lambda(Kind::Covector, Parity::Even, 2, ms.space(), lc);

  const GradedElement zero_g(Kind::Covector, Parity::Odd, 2, ms.space());
  const GradedElement zero_l(Kind::Covector, Parity::Even, 2, ms.space());
  double worst = 0.0;
  // DE does not depend on δa, so those clauses read 0 = (1/4πc) r ∧ δa.
  for (IndexMask mask : combinations(4, 1)) {
    const GradedElement da = covector_basis(ms.space(), Parity::Even, mask);
    worst = std::max(worst, wedge(ph.r, da).max_abs());
  }
  for (IndexMask mask : pairs) {
    const GradedElement dg = covector_basis(ms.space(), Parity::Odd, mask);
    const GradedElement clause = energy_variation(ms, ph.g, lambda, dg, zero_l) + k4 * wedge(ph.f, dg);
    worst = std::max(worst, clause.max_abs() / k4);
    const GradedElement dl = covector_basis(ms.space(), Parity::Even, mask);
    worst = std::max(worst, energy_variation(ms, ph.g, lambda, zero_g, dl).max_abs() / k4);
  }
  return worst;
}

double hamiltonian_dynamics_residual(const MinkowskiStructure& ms, const PhaseDelta& ph) {
  // H is quadratic, so the central difference quotient is exact up to rounding.
  const double k4 = 1.0 / (4.0 * kPi * ms.c_light());
  const double s = 0.5;
  auto dh = [&](const GradedElement& da, const GradedElement& dg) {
    return (1.0 / (2.0 * s)) * (hamiltonian_density(ms, ph.a + s * da, ph.g + s * dg) -
                                hamiltonian_density(ms, ph.a - s * da, ph.g - s * dg));
  };
  const GradedElement zero_a(Kind::Covector, Parity::Even, 1, ms.space());
  const GradedElement zero_g(Kind::Covector, Parity::Odd, 2, ms.space());
  double worst = 0.0;
  for (IndexMask mask : combinations(4, 1)) {
    const GradedElement da = covector_basis(ms.space(), Parity::Even, mask);
    worst = std::max(worst, (dh(da, zero_g) - k4 * wedge(ph.r, da)).max_abs() / k4);
  }
  for (IndexMask mask : combinations(4, 2)) {
    const GradedElement dg = covector_basis(ms.space(), Parity::Odd, mask);
    worst = std::max(worst, (dh(zero_a, dg) + k4 * wedge(ph.f, dg)).max_abs() / k4);
  }
  return worst;
}

}  // namespace twistform
