#include "twistform/variational.hpp"

#include <cmath>
#include <numbers>

namespace twistform {

namespace {

QuadraticDensity::BlockFn constant_block(Eigen::MatrixXd m) {
  return [m = std::move(m)](const AffinePoint&) { return m; };
}

void require_potential(const SmoothForm& a, const char* what) {
  if (a.parity() != Parity::Even || a.grade() != 1)
    throw VariationalError(std::string(what) + ": potential must be an even 1-form");
}

}  // namespace

QuadraticDensity::QuadraticDensity(SpaceDescriptor space, BlockFn lambda, BlockFn mu, BlockFn nu,
                                   OffsetFn offset, bool constant)
    : space_(space),
      lambda_(std::move(lambda)),
      mu_(std::move(mu)),
      nu_(std::move(nu)),
      offset_(std::move(offset)),
      constant_(constant) {
  if (space.dim < 2) throw VariationalError("quadratic density needs m >= 2");
  if (!offset_) offset_ = [](const AffinePoint&) { return 0.0; };
}

QuadraticDensity::QuadraticDensity(SpaceDescriptor space, Eigen::MatrixXd lambda,
                                   Eigen::MatrixXd mu, Eigen::MatrixXd nu, double offset)
    : QuadraticDensity(space, constant_block(std::move(lambda)), constant_block(std::move(mu)),
                       constant_block(std::move(nu)),
                       [offset](const AffinePoint&) { return offset; }, true) {
  // Validate shapes and symmetry once.
  const AffinePoint origin = AffinePoint::Zero(space.dim);
  (void)this->lambda(origin);
  (void)this->mu(origin);
  (void)this->nu(origin);
}

QuadraticDensity QuadraticDensity::point_dependent(SpaceDescriptor space, BlockFn lambda,
                                                   BlockFn mu, BlockFn nu, OffsetFn offset) {
  return QuadraticDensity(space, std::move(lambda), std::move(mu), std::move(nu),
                          std::move(offset), false);
}

QuadraticDensity QuadraticDensity::constant_form(SpaceDescriptor space, double value) {
  const int n1 = binomial(space.dim, 1), n2 = binomial(space.dim, 2);
  return QuadraticDensity(space, Eigen::MatrixXd::Zero(n1, n1), Eigen::MatrixXd::Zero(n1, n2),
                          Eigen::MatrixXd::Zero(n2, n2), value);
}

QuadraticDensity QuadraticDensity::zero(SpaceDescriptor space) { return constant_form(space, 0.0); }

BilinearMap QuadraticDensity::block(const BlockFn& fn, const AffinePoint& x, int q, int q2,
                                    bool symmetric, const char* name) const {
  Eigen::MatrixXd m = fn(x);
  if (m.rows() != binomial(space_.dim, q) || m.cols() != binomial(space_.dim, q2))
    throw VariationalError(std::string("block ") + name + " has the wrong shape");
  if (symmetric) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
      throw VariationalError(std::string("block ") + name + " must be symmetric");
  }
  return BilinearMap(space_, q, q2, std::move(m));
}

BilinearMap QuadraticDensity::lambda(const AffinePoint& x) const {
  return block(lambda_, x, 1, 1, true, "lambda");
}
BilinearMap QuadraticDensity::mu(const AffinePoint& x) const {
  return block(mu_, x, 1, 2, false, "mu");
}
BilinearMap QuadraticDensity::nu(const AffinePoint& x) const {
  return block(nu_, x, 2, 2, true, "nu");
}
double QuadraticDensity::offset(const AffinePoint& x) const { return offset_(x); }

GradedElement QuadraticDensity::operator()(const AffinePoint& x, const GradedElement& a,
                                           const GradedElement& f) const {
  const double s = 0.5 * lambda(x).scalar(a, a) + mu(x).scalar(a, f) + 0.5 * nu(x).scalar(f, f) +
                   offset(x);
  return s * unit_volume(space_);
}

GradedElement QuadraticDensity::polarization(const AffinePoint& x, const GradedElement& a,
                                             const GradedElement& f, const GradedElement& a2,
                                             const GradedElement& f2) const {
  const BilinearMap m = mu(x);
  return lambda(x)(a, a2) + m(a, f2) + m(a2, f) + nu(x)(f, f2);
}

GradedElement QuadraticDensity::derivative(const AffinePoint& x, const GradedElement& a,
                                           const GradedElement& f, const GradedElement& da,
                                           const GradedElement& df) const {
  // Db(a, f; δa, δf) = b(δa, f) + b(a, δf) for each block.
  const BilinearMap l = lambda(x), m = mu(x), n = nu(x);
  return 0.5 * (l(da, a) + l(a, da)) + m(da, f) + m(a, df) + 0.5 * (n(df, f) + n(f, df));
}

GradedElement eval_kappa(const QuadraticDensity& kappa, const AffinePoint& x,
                         const GradedElement& a, const GradedElement& f) {
  return kappa(x, a, f);
}

FieldRep::FieldRep(SmoothForm a, Current c) : potential(std::move(a)), current(std::move(c)) {
  require_potential(potential, "field");
  require_support(potential, current);
}

CovectorRep::CovectorRep(SmoothForm g, SmoothForm j, Current c, double c_light_)
    : induction(std::move(g)), source(std::move(j)), current(std::move(c)), c_light(c_light_) {
  if (induction.parity() != Parity::Odd || induction.grade() != 2)
    throw VariationalError("induction must be an odd 2-form");
  if (source.parity() != Parity::Odd || source.grade() != 3)
    throw VariationalError("source must be an odd 3-form");
  if (!(c_light > 0.0)) throw VariationalError("speed of light must be positive");
}

SmoothForm kappa_form(const QuadraticDensity& kappa, const SmoothForm& a) {
  require_potential(a, "kappa_form");
  const SpaceDescriptor space = a.space();
  return map_pointwise({a, exterior_derivative(a)}, {Parity::Odd, space.dim, space},
                       [kappa](const AffinePoint& x, std::span<const GradedElement> v) {
                         return kappa(x, v[0], v[1]);
                       });
}

DkTerms dk_terms(const QuadraticDensity& kappa, const SmoothForm& a) {
  require_potential(a, "dk_terms");
  const SpaceDescriptor space = a.space();
  const int m = space.dim;
  const SmoothForm f = exterior_derivative(a);
  auto x_value = [kappa](const AffinePoint& x, std::span<const GradedElement> v) {
    const BilinearRepresentation l(kappa.lambda(x)), mu(kappa.mu(x));
    return weyl_map(l.first(v[0]) + mu.second(v[1]));
  };
  auto y_value = [kappa](const AffinePoint& x, std::span<const GradedElement> v) {
    const BilinearRepresentation mu(kappa.mu(x)), nu(kappa.nu(x));
    return weyl_map(mu.first(v[0]) + nu.first(v[1]));
  };
  const FormType x_type{Parity::Odd, m - 1, space}, y_type{Parity::Odd, m - 2, space};
  if (kappa.is_constant()) {
    // Blocks do not depend on x, so X and Y are linear in (A, dA) with
    // constant coefficients and their jets stay analytic.
    const AffinePoint origin = AffinePoint::Zero(m);
    auto at_origin = [origin](auto fn) {
      return [fn, origin](std::span<const GradedElement> v) { return fn(origin, v); };
    };
    return {map_linear_multi({a, f}, x_type, at_origin(x_value)),
            map_linear_multi({a, f}, y_type, at_origin(y_value))};
  }
  return {map_pointwise({a, f}, x_type, x_value), map_pointwise({a, f}, y_type, y_value)};
}

double k_eval(const QuadraticDensity& kappa, const FieldRep& q) {
  return integrate_current(kappa_form(kappa, q.potential), q.current);
}

double dk_analytic(const QuadraticDensity& kappa, const FieldRep& q, const SmoothForm& delta_a) {
  require_potential(delta_a, "dk_analytic variation");
  require_support(delta_a, q.current);
  const DkTerms t = dk_terms(kappa, q.potential);
  const SmoothForm interior = -1.0 * wedge(t.x + exterior_derivative(t.y), delta_a);
  const SmoothForm exact = wedge(t.y, delta_a);
  return integrate_current(interior, q.current) + integrate_boundary(exact, q.current);
}

double dk_fd(const QuadraticDensity& kappa, const FieldRep& q, const SmoothForm& delta_a,
             double step) {
  require_potential(delta_a, "dk_fd variation");
  if (!(step > 0.0)) throw VariationalError("finite-difference step must be positive");
  const FieldRep plus(q.potential + step * delta_a, q.current);
  const FieldRep minus(q.potential - step * delta_a, q.current);
  return (k_eval(kappa, plus) - k_eval(kappa, minus)) / (2.0 * step);
}

double covector_pairing(const CovectorRep& p, const SmoothForm& delta_a) {
  require_potential(delta_a, "covector_pairing variation");
  const double c = p.c_light;
  const double volume_part = integrate_current(wedge(p.source, delta_a), p.current);
  const double boundary_part = integrate_boundary(wedge(p.induction, delta_a), p.current);
  return volume_part / (c * c) - boundary_part / (4.0 * std::numbers::pi * c);
}

double covector_pairing_direct(const CovectorRep& p, const SmoothForm& delta_a) {
  require_potential(delta_a, "covector_pairing variation");
  const double c = p.c_light;
  const double k = 1.0 / (4.0 * std::numbers::pi * c);
  const SmoothForm r = exterior_derivative(p.induction) - (4.0 * std::numbers::pi / c) * p.source;
  const SmoothForm integrand =
      -k * (wedge(r, delta_a) + wedge(p.induction, exterior_derivative(delta_a)));
  return integrate_current(integrand, p.current);
}

}  // namespace twistform
