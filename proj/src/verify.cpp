#include "twistform/verify.hpp"

#include <Eigen/Geometry>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "twistform/sampling.hpp"

namespace twistform {

namespace {

constexpr double kPi = std::numbers::pi;

GradedElement random_volume(Rng& rng, SpaceDescriptor space) {
  const double s = rng.uniform(0.5, 2.0) * (rng.unit() < 0.5 ? -1.0 : 1.0);
  return s * unit_volume(space);
}

GradedElement random_odd_top_vector(Rng& rng, SpaceDescriptor space) {
  const double s = rng.uniform(0.5, 2.0) * (rng.unit() < 0.5 ? -1.0 : 1.0);
  return s * unit_volume_dual(space);
}

Eigen::MatrixXd random_matrix(Rng& rng, int r, int c) {
  Eigen::MatrixXd m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = rng.uniform(-1.0, 1.0);
  return m;
}

std::vector<int> dims_of(const VerifyConfig& cfg) {
  std::vector<int> d;
  for (int m = cfg.dim_lo; m <= cfg.dim_hi; ++m) d.push_back(m);
  return d;
}

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-12}); }

// Central differences of a quadratic are exact at any step, so two steps
// differ only by cancellation noise of order eps |k| / step.
double step_gap(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

GradedElement basis_covector(SpaceDescriptor space, Parity p, IndexMask mask) {
  return GradedElement::basis(Kind::Covector, p, space, mask_indices(mask));
}

// ---- minor expansion ---------------------------------------------------

std::vector<Check> suite_minor_expansion(const VerifyConfig& cfg) {
  Rng rng(cfg.seed * 0x9E3779B97F4A7C15ull + 1);
  const auto dims = dims_of(cfg);
  const int nd = static_cast<int>(dims.size());
  double dev = 0.0, dev_simple = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int m = dims[i % nd];
    const int q = (i / nd) % (m + 1);
    const SpaceDescriptor space(m);
    const GradedElement w = random_element(rng, Kind::Vector, Parity::Even, q, space);
    const GradedElement e = random_volume(rng, space);
    dev = std::max(dev, max_abs_diff(weyl_map(TensorQM(w, e)), minor_expansion(w, e)));
    std::vector<Eigen::VectorXd> factors;
    for (int k = 0; k < q; ++k) factors.push_back(random_vector(rng, m));
    const GradedElement simple = simple_multivector(space, factors);
    dev_simple = std::max(dev_simple, max_abs_diff(weyl_map(TensorQM(simple, e)),
                                                   minor_expansion(factors, e)));
  }
  return {at_most("weyl_map_vs_minor_expansion", dev, cfg.tol_algebra),
          at_most("simple_factor_minor_determinants", dev_simple, cfg.tol_algebra)};
}

// ---- weyl (includes the exterior algebra invariants) --------------------

std::vector<Check> suite_weyl(const VerifyConfig& cfg) {
  Rng rng(cfg.seed * 0x9E3779B97F4A7C15ull + 2);
  const auto dims = dims_of(cfg);
  std::vector<Check> out;

  double commut = 0.0, assoc = 0.0, left_adj = 0.0, right_adj = 0.0, gram = 0.0;
  int parity_errors = 0;
  for (int i = 0; i < 200; ++i) {
    const int m = dims[i % dims.size()];
    const SpaceDescriptor space(m);
    const int q1 = rng.integer(0, m), q2 = rng.integer(0, m - q1), q3 = rng.integer(0, m - q1 - q2);
    const Parity p1 = rng.unit() < 0.5 ? Parity::Even : Parity::Odd;
    const Parity p2 = rng.unit() < 0.5 ? Parity::Even : Parity::Odd;
    const GradedElement x = random_element(rng, Kind::Covector, p1, q1, space);
    const GradedElement y = random_element(rng, Kind::Covector, p2, q2, space);
    const GradedElement z = random_element(rng, Kind::Covector, Parity::Even, q3, space);
    const double sign = (q1 * q2) % 2 == 0 ? 1.0 : -1.0;
    commut = std::max(commut, max_abs_diff(wedge(x, y), sign * wedge(y, x)));
    assoc = std::max(assoc, max_abs_diff(wedge(wedge(x, y), z), wedge(x, wedge(y, z))));
    if (wedge(x, y).parity() != p1 * p2) ++parity_errors;

    // Left: <w ⌟ a, w'> = <a, w ∧ w'> on all basis w'.
    const int qa = rng.integer(0, m), qw = rng.integer(0, qa);
    const GradedElement a = random_element(rng, Kind::Covector, p1, qa, space);
    const GradedElement w = random_element(rng, Kind::Vector, p2, qw, space);
    const GradedElement left = interior_left(w, a);
    if (left.parity() != p1 * p2) ++parity_errors;
    for (IndexMask mask : combinations(m, qa - qw)) {
      const GradedElement wp =
          GradedElement::basis(Kind::Vector, p1 * p2, space, mask_indices(mask));
      left_adj = std::max(left_adj, std::abs(pair(left, wp) - pair(a, wedge(w, wp))));
    }
    // Right: <a', w ⌞ a> = <a' ∧ a, w> on all basis a'.
    const int qw2 = rng.integer(0, m), qa2 = rng.integer(0, qw2);
    const GradedElement w2 = random_element(rng, Kind::Vector, p1, qw2, space);
    const GradedElement a2 = random_element(rng, Kind::Covector, p2, qa2, space);
    const GradedElement right = interior_right(w2, a2);
    if (right.parity() != p1 * p2) ++parity_errors;
    for (IndexMask mask : combinations(m, qw2 - qa2)) {
      const GradedElement ap = basis_covector(space, p1 * p2, mask);
      right_adj = std::max(right_adj, std::abs(pair(ap, right) - pair(wedge(ap, a2), w2)));
    }
  }
  for (int m : dims) {
    const SpaceDescriptor space(m);
    for (int q = 0; q <= m; ++q) {
      const auto basis = combinations(m, q);
      for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c) {
          const double v = pair(basis_covector(space, Parity::Odd, basis[r]),
                                GradedElement::basis(Kind::Vector, Parity::Odd, space,
                                                     mask_indices(basis[c])));
          gram = std::max(gram, std::abs(v - (r == c ? 1.0 : 0.0)));
        }
    }
  }
  out.push_back(at_most("algebra_graded_commutativity", commut, cfg.tol_algebra));
  out.push_back(at_most("algebra_associativity", assoc, cfg.tol_algebra));
  out.push_back(at_most("algebra_parity_table_errors", parity_errors, 0.0));
  out.push_back(at_most("algebra_left_interior_adjunction", left_adj, cfg.tol_algebra));
  out.push_back(at_most("algebra_right_interior_adjunction", right_adj, cfg.tol_algebra));
  out.push_back(at_most("algebra_pairing_gram_identity", gram, 0.0));

  // Weyl matrix is square and invertible.
  double min_det = 1e300;
  int shape_errors = 0;
  for (int m : dims) {
    for (int q = 0; q <= m; ++q) {
      Eigen::MatrixXd mat = weyl_matrix(SpaceDescriptor(m), q);
      if (mat.rows() != binomial(m, q) || mat.cols() != binomial(m, q)) {
        ++shape_errors;
        continue;
      }
      for (int c = 0; c < mat.cols(); ++c) mat.col(c).normalize();
      min_det = std::min(min_det, std::abs(mat.determinant()));
    }
  }
  out.push_back(at_most("weyl_matrix_shape_errors", shape_errors, 0.0));
  out.push_back(above("weyl_matrix_min_abs_det_normalized", min_det, 1e-9));

  double contraction = 0.0, linear_rep = 0.0, roundtrip = 0.0, bilinear_first = 0.0, bilinear_second = 0.0;
  for (int i = 0; i < 500; ++i) {
    const int m = dims[i % dims.size()];
    const SpaceDescriptor space(m);
    const int q = rng.integer(0, m);
    const GradedElement a = random_element(rng, Kind::Covector, Parity::Even, q, space);
    const GradedElement w = random_element(rng, Kind::Vector, Parity::Even, q, space);
    const GradedElement e = random_volume(rng, space);
    contraction = std::max(contraction, max_abs_diff(pair(a, w) * e, wedge(a, weyl_map(TensorQM(w, e)))));

    const HomQM l(space, q, random_matrix(rng, 1, binomial(m, q)));
    linear_rep = std::max(linear_rep, max_abs_diff(l(a), wedge(a, weyl_map(iq_forward(l)))));
    roundtrip = std::max(roundtrip, (iq_inverse(iq_forward(l)).row() - l.row()).cwiseAbs().maxCoeff());

    const int q2 = rng.integer(0, m);
    const BilinearMap b(space, q, q2, random_matrix(rng, binomial(m, q), binomial(m, q2)));
    const BilinearRepresentation rep = represent_bilinear(b);
    const GradedElement a2 = random_element(rng, Kind::Covector, Parity::Even, q2, space);
    const GradedElement direct = b(a, a2);
    bilinear_first = std::max(bilinear_first, max_abs_diff(direct, wedge(a2, weyl_map(rep.first(a)))));
    bilinear_second = std::max(bilinear_second, max_abs_diff(direct, wedge(a, weyl_map(rep.second(a2)))));
  }
  out.push_back(at_most("contraction_identity", contraction, cfg.tol_algebra));
  out.push_back(at_most("linear_map_representation", linear_rep, cfg.tol_algebra));
  out.push_back(at_most("iq_roundtrip", roundtrip, cfg.tol_algebra));
  out.push_back(at_most("bilinear_representation_first", bilinear_first, cfg.tol_algebra));
  out.push_back(at_most("bilinear_representation_second", bilinear_second, cfg.tol_algebra));
  return out;
}

// ---- stokes ------------------------------------------------------------

SmoothForm stokes_form(Rng& rng, int grade, Parity parity, SpaceDescriptor space) {
  const FormType t{parity, grade, space};
  return random_trig(rng, t, 3, 1.5) + random_polynomial(rng, t, 3, 3);
}

std::vector<Check> suite_stokes(const VerifyConfig& cfg) {
  Rng rng(cfg.seed * 0x9E3779B97F4A7C15ull + 3);
  const SpaceDescriptor space(4, 0);
  std::vector<Check> out;

  struct Instance {
    SmoothForm a;
    Chain chain;
  };
  std::vector<Instance> instances;
  for (int i = 0; i < 100; ++i) {
    const int q = 1 + i % 3;
    const Parity p = rng.unit() < 0.5 ? Parity::Even : Parity::Odd;
    const Orientation o = rng.unit() < 0.5 ? Orientation::reference() : Orientation::opposite();
    Cell cell = random_affine_cell(rng, q, space, o);
    instances.push_back({stokes_form(rng, q - 1, p, space), Chain::of(cell, 1.0, p)});
  }
  double worst = 0.0;
  for (const auto& inst : instances)
    worst = std::max(worst, stokes_residual(inst.a, inst.chain, cfg.quad_order));
  out.push_back(at_most("stokes_residual_max", worst, cfg.tol_quad));

  // Convergence on the first ten instances: the summed residual may not
  // grow with the order until it reaches the rounding floor.
  constexpr double kFloor = 1e-13;
  const int top = std::max(cfg.quad_order, 2);
  std::vector<double> series;
  for (int n = 1; n <= top; ++n) {
    double s = 0.0;
    for (int i = 0; i < 10; ++i) s += stokes_residual(instances[i].a, instances[i].chain, n);
    series.push_back(s);
  }
  int increases = 0;
  for (std::size_t n = 1; n < series.size(); ++n)
    if (series[n] > series[n - 1] && series[n] > kFloor) ++increases;
  out.push_back(at_most("stokes_convergence_increases", increases, 0.0));

  // ∂∂C integrates to zero.
  double bb = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int q = 2 + i % 2;
    const Parity p = rng.unit() < 0.5 ? Parity::Even : Parity::Odd;
    const Chain c = Chain::of(random_affine_cell(rng, q, space, Orientation::reference()), 1.0, p);
    const SmoothForm a = stokes_form(rng, q - 2, p, space);
    bb = std::max(bb, std::abs(integrate_chain(a, boundary_chain(boundary_chain(c)), cfg.quad_order)));
  }
  out.push_back(at_most("boundary_of_boundary", bb, cfg.tol_algebra));

  // Box current: ∫_{∂K} A = ∫_K dA for odd 3-forms.
  double cube = 0.0;
  for (int i = 0; i < 10; ++i) {
    const CubeDomain box = random_box(rng, 4, -1.0, 1.0);
    const Current k = Current::cube(space, box, cfg.quad_order);
    const SmoothForm a = stokes_form(rng, 3, Parity::Odd, space);
    cube = std::max(cube, std::abs(integrate_current(exterior_derivative(a), k) - integrate_boundary(a, k)));
  }
  out.push_back(at_most("cube_boundary_vs_interior", cube, cfg.tol_quad));

  // Odd forms change sign with the orientation of the cell.
  double flip = 0.0;
  for (int i = 0; i < 10; ++i) {
    const int q = 1 + i % 3;
    const Cell cell = random_affine_cell(rng, q, space, Orientation::reference());
    const SmoothForm a = stokes_form(rng, q, Parity::Odd, space);
    flip = std::max(flip, std::abs(integrate_cell(a, cell, cfg.quad_order) +
                                   integrate_cell(a, cell.with_orientation(Orientation::opposite()),
                                                  cfg.quad_order)));
  }
  out.push_back(at_most("odd_orientation_flip", flip, 0.0));
  return out;
}

// ---- variation ---------------------------------------------------------

std::vector<Check> suite_variation(const VerifyConfig& cfg) {
  Rng rng(cfg.seed * 0x9E3779B97F4A7C15ull + 4);
  const SpaceDescriptor space(4, 0);
  const FormType one{Parity::Even, 1, space};
  std::vector<Check> out;

  double cube_err = 0.0, dirac_err = 0.0, chain_err = 0.0, steps = 0.0;
  for (int i = 0; i < 50; ++i) {
    const QuadraticDensity kappa = random_density(rng, space);
    const SmoothForm a = random_polynomial(rng, one, 4, 2);
    const SmoothForm da = random_polynomial(rng, one, 4, 2);
    const Current k = Current::cube(space, random_box(rng, 4, -1.0, 1.0), cfg.quad_order);
    const FieldRep q(a, k);
    const double fd = dk_fd(kappa, q, da, 1e-1);
    cube_err = std::max(cube_err, rel(dk_analytic(kappa, q, da), fd));
    steps = std::max(steps, step_gap(fd, dk_fd(kappa, q, da, 1e-3)));

    const SmoothForm at = random_trig(rng, one, 3, 1.0) + random_polynomial(rng, one, 3, 2);
    const Current d = Current::dirac(random_vector(rng, 4), random_odd_top_vector(rng, space));
    const FieldRep qd(at, d);
    const double fdd = dk_fd(kappa, qd, da, 1e-1);
    dirac_err = std::max(dirac_err, rel(dk_analytic(kappa, qd, da), fdd));
    steps = std::max(steps, step_gap(fdd, dk_fd(kappa, qd, da, 1e-3)));
  }
  for (int i = 0; i < 5; ++i) {
    const QuadraticDensity kappa = random_density(rng, space);
    const SmoothForm a = random_polynomial(rng, one, 4, 2);
    const SmoothForm da = random_polynomial(rng, one, 4, 2);
    Chain chain(4, Parity::Odd);
    for (int c = 0; c < 2; ++c)
      chain.add(rng.uniform(-1.0, 1.0), random_affine_cell(rng, 4, space, Orientation::reference()));
    const FieldRep q(a, Current::chain(space, chain, cfg.quad_order));
    chain_err = std::max(chain_err, rel(dk_analytic(kappa, q, da), dk_fd(kappa, q, da, 1e-1)));
  }
  out.push_back(at_most("dk_cube_relative_error", cube_err, cfg.tol_quad));
  out.push_back(at_most("dk_dirac_relative_error", dirac_err, 1e-10));
  out.push_back(at_most("dk_chain_relative_error", chain_err, cfg.tol_quad));
  out.push_back(at_most("dk_fd_step_agreement", steps, 1e-10));

  double polar = 0.0, blocks = 0.0, chain_rule = 0.0;
  for (int i = 0; i < 200; ++i) {
    const QuadraticDensity kappa = random_density(rng, space, rng.uniform(-1.0, 1.0));
    const AffinePoint x = random_vector(rng, 4);
    const GradedElement a = random_element(rng, Kind::Covector, Parity::Even, 1, space);
    const GradedElement f = random_element(rng, Kind::Covector, Parity::Even, 2, space);
    const GradedElement da = random_element(rng, Kind::Covector, Parity::Even, 1, space);
    const GradedElement df = random_element(rng, Kind::Covector, Parity::Even, 2, space);
    const GradedElement quad = kappa(x, a, f) - kappa.offset(x) * unit_volume(space);
    polar = std::max(polar, max_abs_diff(quad, 0.5 * kappa.polarization(x, a, f, a, f)));
    // Each block: D b(a, f; δa, δf) = b(a, δf) + b(δa, f), by an exact
    // central difference of the quadratic t ↦ b(a + tδa, f + tδf).
    const BilinearMap mu = kappa.mu(x);
    const GradedElement d_mu = 0.5 * (mu(a + da, f + df) - mu(a - da, f - df));
    blocks = std::max(blocks, max_abs_diff(d_mu, mu(a, df) + mu(da, f)));
    const BilinearMap nu = kappa.nu(x);
    const GradedElement d_nu = 0.5 * (nu(f + df, f + df) - nu(f - df, f - df));
    blocks = std::max(blocks, max_abs_diff(d_nu, nu(f, df) + nu(df, f)));
    const GradedElement fd = 0.5 * (kappa(x, a + da, f + df) - kappa(x, a - da, f - df));
    chain_rule = std::max(chain_rule, max_abs_diff(kappa.derivative(x, a, f, da, df), fd));
  }
  out.push_back(at_most("polarization_identity", polar, cfg.tol_algebra));
  out.push_back(at_most("block_derivative_bilinearity", blocks, cfg.tol_algebra));
  out.push_back(at_most("density_chain_rule", chain_rule, cfg.tol_algebra));

  // Constant odd 4-form probes ignore the potential.
  double probe = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double value = rng.uniform(-2.0, 2.0);
    const QuadraticDensity kappa = QuadraticDensity::constant_form(space, value);
    const CubeDomain box = random_box(rng, 4, -1.0, 1.0);
    const Current k = Current::cube(space, box, cfg.quad_order);
    const double k1 = k_eval(kappa, FieldRep(random_polynomial(rng, one, 4, 2), k));
    const double k2 = k_eval(kappa, FieldRep(random_trig(rng, one, 3, 1.0), k));
    probe = std::max({probe, rel(k1, value * box.volume()), rel(k2, value * box.volume())});
    const GradedElement w = random_odd_top_vector(rng, space);
    const Current d = Current::dirac(random_vector(rng, 4), w);
    probe = std::max(probe, rel(k_eval(kappa, FieldRep(random_polynomial(rng, one, 3, 2), d)),
                                value * w[0]));
  }
  out.push_back(at_most("constant_probe_separation", probe, cfg.tol_algebra));

  double routes_cube = 0.0, routes_dirac = 0.0;
  for (int i = 0; i < 10; ++i) {
    const SmoothForm g = random_polynomial(rng, {Parity::Odd, 2, space}, 4, 2);
    const SmoothForm j = random_polynomial(rng, {Parity::Odd, 3, space}, 4, 2);
    const SmoothForm da = random_polynomial(rng, one, 4, 2);
    const Current k = Current::cube(space, random_box(rng, 4, -1.0, 1.0), cfg.quad_order);
    const CovectorRep pk(g, j, k, cfg.c_light);
    routes_cube = std::max(routes_cube, rel(covector_pairing(pk, da), covector_pairing_direct(pk, da)));
    const Current d = Current::dirac(random_vector(rng, 4), random_odd_top_vector(rng, space));
    const CovectorRep pd(g, j, d, cfg.c_light);
    routes_dirac = std::max(routes_dirac, rel(covector_pairing(pd, da), covector_pairing_direct(pd, da)));
  }
  out.push_back(at_most("pairing_routes_cube", routes_cube, cfg.tol_quad));
  out.push_back(at_most("pairing_routes_dirac", routes_dirac, cfg.tol_algebra));
  return out;
}

// ---- dynamics ----------------------------------------------------------

struct Family {
  std::string name;
  bool solution;
  Trajectory trajectory;
  CubeDomain box;
};

CubeDomain unit_box() {
  CubeDomain b{AffinePoint::Zero(4), AffinePoint::Ones(4)};
  return b;
}

SmoothForm null_plane_wave(Rng& rng, SpaceDescriptor space) {
  Eigen::Vector3d n = random_vector(rng, 3);
  n.normalize();
  Eigen::Vector3d p = n.cross(Eigen::Vector3d(random_vector(rng, 3)));
  p.normalize();
  const double omega = rng.uniform(0.5, 2.0);
  Eigen::VectorXd k(4), pol(4);
  k << omega, omega * n[0], omega * n[1], omega * n[2];
  pol << 0.0, p[0], p[1], p[2];
  return plane_wave(space, k, pol, rng.uniform(0.5, 1.5), rng.uniform(0.0, 6.0));
}

CubeDomain coulomb_box() {
  CubeDomain b{AffinePoint(4), AffinePoint(4)};
  b.min << 0.0, 0.5, 0.5, 0.5;
  b.max << 1.0, 1.5, 1.5, 1.5;
  return b;
}

std::vector<Family> builtin_families(Rng& rng, const MinkowskiStructure& ms) {
  const SpaceDescriptor space = ms.space();
  const FormType one{Parity::Even, 1, space};
  std::vector<Family> out;
  out.push_back({"constant_field", true,
                 Trajectory::vacuum(ms, constant_field_potential(random_element(
                                            rng, Kind::Covector, Parity::Even, 2, space))),
                 unit_box()});
  out.push_back({"plane_wave", true, Trajectory::vacuum(ms, null_plane_wave(rng, space)), unit_box()});
  out.push_back({"coulomb", true,
                 Trajectory::vacuum(ms, coulomb(space, rng.uniform(0.5, 2.0), AffinePoint::Zero(4))),
                 coulomb_box()});
  out.push_back({"sourced_polynomial", true,
                 Trajectory::from_potential(ms, random_polynomial(rng, one, 6, 3)), unit_box()});
  out.push_back({"boundary_perturbed", false,
                 Trajectory::from_potential(ms, random_polynomial(rng, one, 6, 3),
                                            random_element(rng, Kind::Covector, Parity::Odd, 2, space)),
                 unit_box()});
  out.push_back({"source_mismatch", false,
                 Trajectory::from_potential(ms, random_polynomial(rng, one, 6, 3), std::nullopt,
                                            random_element(rng, Kind::Covector, Parity::Odd, 3, space)),
                 unit_box()});
  return out;
}

std::vector<Check> suite_dynamics(const VerifyConfig& cfg) {
  Rng rng(cfg.seed * 0x9E3779B97F4A7C15ull + 5);
  const MinkowskiStructure ms(cfg.c_light);
  const SpaceDescriptor space = ms.space();
  const FormType one{Parity::Even, 1, space};
  std::vector<Check> out;

  // Euler-Lagrange residual vs Maxwell residual of the constitutive induction.
  double prop5 = 0.0;
  for (int i = 0; i < 50; ++i) {
    const SmoothForm a = random_polynomial(rng, one, 6, 3);
    const SmoothForm j = random_polynomial(rng, {Parity::Odd, 3, space}, 4, 2);
    const SmoothForm el = euler_lagrange_residual(ms, a, j);
    const SmoothForm mx = maxwell_residual(ms, constitutive_form(ms, exterior_derivative(a)), j);
    for (int s = 0; s < 4; ++s) {
      const AffinePoint x = random_vector(rng, 4);
      const GradedElement ve = el(x), vm = mx(x);
      prop5 = std::max(prop5, max_abs_diff(ve, vm) / std::max(1.0, vm.max_abs()));
    }
  }
  out.push_back(at_most("el_equals_maxwell_of_constitutive", prop5, cfg.tol_algebra));

  // Solution and counterexample families.
  const SampleOptions sample{3, 3, 16, cfg.seed, 1e-8};
  for (const Family& fam : builtin_families(rng, ms)) {
    const Current k = Current::cube(space, fam.box, cfg.quad_order);
    double worst = 0.0;
    for (int p = 0; p < 10; ++p)
      worst = std::max(worst, std::abs(virtual_action_residual(
                                  ms, fam.trajectory, random_polynomial(rng, one, 4, 2), k)));
    const Verdict v = compact_domain_check(ms, fam.trajectory, fam.box, sample);
    int point_failures = 0;
    for (int s = 0; s < 8; ++s) {
      const AffinePoint x = random_point(rng, fam.box.min, fam.box.max);
      if (!infinitesimal_check(ms, fam.trajectory, x, random_odd_top_vector(rng, space)).pass)
        ++point_failures;
    }
    const std::string n = fam.name;
    if (fam.solution) {
      out.push_back(at_most("virtual_action." + n, worst, cfg.tol_quad));
      out.push_back(at_most("interior_euler_lagrange." + n, v.interior_residual, sample.tolerance));
      out.push_back(at_most("boundary_constitutive." + n, v.boundary_residual, sample.tolerance));
      out.push_back(at_most("infinitesimal_failures." + n, point_failures, 0.0));
    } else {
      out.push_back(above("virtual_action_detects." + n, worst, 1e-3));
      const bool boundary = n == "boundary_perturbed";
      out.push_back(boundary ? at_most("interior_euler_lagrange." + n, v.interior_residual, sample.tolerance)
                             : above("interior_euler_lagrange." + n, v.interior_residual, sample.tolerance));
      out.push_back(boundary ? above("boundary_constitutive." + n, v.boundary_residual, sample.tolerance)
                             : at_most("boundary_constitutive." + n, v.boundary_residual, sample.tolerance));
      out.push_back(above("infinitesimal_failures." + n, point_failures, 0.0));
    }
  }

  // Lagrangian and Hamiltonian pointwise checks agree.
  int disagreements = 0, satisfied = 0, violated = 0;
  for (int i = 0; i < 200; ++i) {
    const auto fams = builtin_families(rng, ms);
    const Family& fam = fams[rng.integer(0, static_cast<int>(fams.size()) - 1)];
    const AffinePoint x = random_point(rng, fam.box.min, fam.box.max);
    const GradedElement w = random_odd_top_vector(rng, space);
    const bool lag = infinitesimal_check(ms, fam.trajectory, x, w).pass;
    const bool ham = hamilton_check(ms, fam.trajectory, x, w).pass;
    if (lag != ham) ++disagreements;
    (lag ? satisfied : violated)++;
  }
  out.push_back(at_most("lagrangian_hamiltonian_disagreements", disagreements, 0.0));
  out.push_back(above("agreement_sample_satisfying", satisfied, 0.0));
  out.push_back(above("agreement_sample_violating", violated, 0.0));

  // Physics spot checks.
  double pw = 0.0;
  {
    const SmoothForm a = null_plane_wave(rng, space);
    const SmoothForm el = euler_lagrange_residual(ms, a, SmoothForm::zero({Parity::Odd, 3, space}));
    for (int i = 0; i < 64; ++i) {
      AffinePoint x(4);
      x << (i % 2 + 0.5) / 2.0, ((i / 2) % 2 + 0.5) / 2.0, ((i / 4) % 4 + 0.5) / 4.0,
          ((i / 16) % 4 + 0.5) / 4.0;
      pw = std::max(pw, el(x).max_abs());
    }
  }
  out.push_back(at_most("plane_wave_el_residual", pw, 1e-9));

  double cl = 0.0;
  {
    const Trajectory t = Trajectory::vacuum(ms, coulomb(space, 1.0, AffinePoint::Zero(4)));
    const SmoothForm r = maxwell_residual(ms, t.g, t.j);
    const CubeDomain box = coulomb_box();
    for (int i = 0; i < 64; ++i) cl = std::max(cl, r(random_point(rng, box.min, box.max)).max_abs());
  }
  out.push_back(at_most("coulomb_maxwell_residual", cl, 1e-8));

  // dJ = (c/4π) d(dG): bit-exact on dyadic data, rounding level otherwise.
  double exact = 0.0, rounding = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Trajectory t = Trajectory::from_potential(ms, random_dyadic_polynomial(rng, one, 6, 3));
    const SmoothForm ddg = exterior_derivative(exterior_derivative(t.g));
    AffinePoint x(4);
    for (int k = 0; k < 4; ++k) x[k] = rng.integer(-8, 8) / 8.0;
    exact = std::max(exact, ddg(x).max_abs());
  }
  for (const Family& fam : builtin_families(rng, ms)) {
    const Trajectory t = Trajectory::from_potential(ms, fam.trajectory.a);
    const SmoothForm dj = exterior_derivative(t.j);
    for (int s = 0; s < 8; ++s) {
      const AffinePoint x = random_point(rng, fam.box.min, fam.box.max);
      rounding = std::max(rounding, dj(x).max_abs() / (1.0 + exterior_derivative(t.g)(x).max_abs()));
    }
  }
  out.push_back(at_most("charge_conservation_dyadic", exact, 0.0));
  out.push_back(at_most("charge_conservation", rounding, cfg.tol_algebra));
  return out;
}

// ---- legendre ----------------------------------------------------------

std::vector<Check> suite_legendre(const VerifyConfig& cfg) {
  Rng rng(cfg.seed * 0x9E3779B97F4A7C15ull + 6);
  const MinkowskiStructure ms(cfg.c_light);
  const SpaceDescriptor space = ms.space();
  std::vector<Check> out;
  const auto pairs = combinations(4, 2);

  Eigen::MatrixXd forward(6, 6), backward(6, 6);
  for (int i = 0; i < 6; ++i) {
    const GradedElement g = basis_covector(space, Parity::Odd, pairs[i]);
    const GradedElement f = basis_covector(space, Parity::Even, pairs[i]);
    const GradedElement lg = legendre(ms, constitutive_inverse(ms, g));
    const GradedElement il = constitutive_inverse(ms, legendre(ms, f));
    for (int r = 0; r < 6; ++r) {
      forward(r, i) = lg[r];
      backward(r, i) = il[r];
    }
  }
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(6, 6);
  out.push_back(at_most("legendre_after_inverse_identity", (forward - id).cwiseAbs().maxCoeff(), cfg.tol_algebra));
  out.push_back(at_most("inverse_after_legendre_identity", (backward - id).cwiseAbs().maxCoeff(), cfg.tol_algebra));

  double roundtrip = 0.0, same = 0.0, hamiltonian = 0.0, hamiltonian_f = 0.0, forms = 0.0, de = 0.0,
         critical = 0.0, scaling = 0.0;
  double off_critical = 1e300;
  const double k4 = 1.0 / (4.0 * kPi * cfg.c_light);
  for (int i = 0; i < 100; ++i) {
    const GradedElement a = random_element(rng, Kind::Covector, Parity::Even, 1, space);
    const GradedElement f = random_element(rng, Kind::Covector, Parity::Even, 2, space);
    const GradedElement g = random_element(rng, Kind::Covector, Parity::Odd, 2, space);
    roundtrip = std::max(roundtrip, max_abs_diff(constitutive_inverse(ms, constitutive(ms, f)), f));
    roundtrip = std::max(roundtrip, max_abs_diff(constitutive(ms, constitutive_inverse(ms, g)), g));
    same = std::max(same, max_abs_diff(legendre(ms, f), constitutive(ms, f)));
    hamiltonian = std::max(hamiltonian, max_abs_diff(hamiltonian_density(ms, a, g),
                                                     energy_density(ms, a, g, constitutive_inverse(ms, g))));
    const GradedElement gf = constitutive(ms, f);
    hamiltonian_f = std::max(hamiltonian_f, max_abs_diff(hamiltonian_density(ms, a, gf),
                                                         energy_density(ms, a, gf, f)));
    const auto e = energy_density_forms(ms, a, g, f);
    for (std::size_t k = 1; k < e.size(); ++k) forms = std::max(forms, max_abs_diff(e[0], e[k]));

    // DE vs an exact central difference of the quadratic E.
    const GradedElement dg = random_element(rng, Kind::Covector, Parity::Odd, 2, space);
    const GradedElement dl = random_element(rng, Kind::Covector, Parity::Even, 2, space);
    const GradedElement da = random_element(rng, Kind::Covector, Parity::Even, 1, space);
    const double s = 0.5;
    const GradedElement fd = (1.0 / (2.0 * s)) * (energy_density(ms, a + s * da, g + s * dg, f + s * dl) -
                                                 energy_density(ms, a - s * da, g - s * dg, f - s * dl));
    de = std::max(de, max_abs_diff(energy_variation(ms, g, f, dg, dl), fd));

    // Criticality in λ holds exactly at g = legendre(λ).
    const GradedElement zero_g(Kind::Covector, Parity::Odd, 2, space);
    double off = 0.0;
    for (IndexMask mask : pairs) {
      const GradedElement b = basis_covector(space, Parity::Even, mask);
      critical = std::max(critical, energy_variation(ms, legendre(ms, f), f, zero_g, b).max_abs());
      off = std::max(off, energy_variation(ms, g, f, zero_g, b).max_abs());
    }
    off_critical = std::min(off_critical, off / std::max(k4, 1e-300) / (g - legendre(ms, f)).max_abs());

    const MinkowskiStructure ms2 = ms.with_c_light(2.0 * cfg.c_light);
    scaling = std::max({scaling, max_abs_diff(lagrangian_density(ms2, a, f), 0.5 * lagrangian_density(ms, a, f)),
                        max_abs_diff(energy_density(ms2, a, g, f), 0.5 * energy_density(ms, a, g, f)),
                        max_abs_diff(hamiltonian_density(ms2, a, g), 0.5 * hamiltonian_density(ms, a, g))});
  }
  out.push_back(at_most("constitutive_roundtrip", roundtrip, cfg.tol_algebra));
  out.push_back(at_most("legendre_equals_constitutive", same, 0.0));
  out.push_back(at_most("hamiltonian_equals_energy_at_sigma", hamiltonian, cfg.tol_algebra));
  out.push_back(at_most("hamiltonian_equals_energy_at_critical_point", hamiltonian_f, cfg.tol_algebra));
  out.push_back(at_most("energy_display_forms_agree", forms, cfg.tol_algebra));
  out.push_back(at_most("energy_variation_vs_central_difference", de, 1e-8));
  out.push_back(at_most("criticality_at_legendre_image", critical, cfg.tol_algebra));
  out.push_back(above("criticality_fails_off_image", off_critical, 1e-3));
  out.push_back(at_most("c_light_scaling", scaling, cfg.tol_algebra));

  // The three descriptions of the pointwise dynamics select the same records.
  int disagree = 0, members = 0, non_members = 0;
  for (int i = 0; i < 200; ++i) {
    PhaseDelta ph{random_element(rng, Kind::Covector, Parity::Even, 1, space),
                  random_element(rng, Kind::Covector, Parity::Even, 2, space),
                  random_element(rng, Kind::Covector, Parity::Odd, 2, space),
                  random_element(rng, Kind::Covector, Parity::Odd, 3, space)};
    const int kind = i % 4;
    if (kind != 1) ph.g = constitutive(ms, ph.f);
    if (kind != 2) ph.r = 0.0 * ph.r;
    const double tol = 1e-10;
    const bool closed = (ph.f - constitutive_inverse(ms, ph.g)).max_abs() <= tol && ph.r.max_abs() <= tol;
    const bool lag = lagrangian_dynamics_residual(ms, ph) <= tol;
    const bool energy = energy_dynamics_residual(ms, ph) <= tol;
    const bool ham = hamiltonian_dynamics_residual(ms, ph) <= tol;
    if (lag != energy || lag != ham || lag != closed) ++disagree;
    (lag ? members : non_members)++;
  }
  out.push_back(at_most("dynamics_descriptions_disagreements", disagree, 0.0));
  out.push_back(above("dynamics_sample_members", members, 0.0));
  out.push_back(above("dynamics_sample_non_members", non_members, 0.0));
  return out;
}

using SuiteFn = std::function<std::vector<Check>(const VerifyConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"lemma1", suite_minor_expansion},       {"weyl", suite_weyl},         {"stokes", suite_stokes},
      {"variation", suite_variation}, {"dynamics", suite_dynamics}, {"legendre", suite_legendre},
  };
  return table;
}

}  // namespace

Check at_most(std::string name, double value, double tolerance) {
  return {std::move(name), value, tolerance, value <= tolerance};
}

Check above(std::string name, double value, double tolerance) {
  return {std::move(name), value, tolerance, value > tolerance};
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"pass", c.pass}});
  return json{{"suite", r.suite},
              {"tool_version", kToolVersion},
              {"config", r.config},
              {"checks", checks},
              {"pass", r.pass()}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : suites()) n.push_back(s.first);
    return n;
  }();
  return names;
}

json config_to_json(const VerifyConfig& cfg) {
  return json{{"seed", cfg.seed},         {"c_light", cfg.c_light},   {"quad_order", cfg.quad_order},
              {"tol_algebra", cfg.tol_algebra}, {"tol_quad", cfg.tol_quad},
              {"dims", std::to_string(cfg.dim_lo) + ".." + std::to_string(cfg.dim_hi)}};
}

Report run_suite(const std::string& name, const VerifyConfig& cfg) {
  if (cfg.dim_lo < 1 || cfg.dim_hi > kMaxDim || cfg.dim_lo > cfg.dim_hi)
    throw std::invalid_argument("dimension range must satisfy 1 <= lo <= hi <= " + std::to_string(kMaxDim));
  if (!(cfg.c_light > 0.0)) throw std::invalid_argument("--c-light must be positive");
  if (cfg.quad_order < 1 || cfg.quad_order > 128) throw std::invalid_argument("--quad-order must lie in 1..128");
  Report r{name, config_to_json(cfg), {}};
  bool found = false;
  for (const auto& [suite, fn] : suites()) {
    if (name != "all" && name != suite) continue;
    found = true;
    for (Check c : fn(cfg)) {
      if (name == "all") c.name = suite + "." + c.name;
      r.checks.push_back(std::move(c));
    }
  }
  if (!found) throw std::invalid_argument("unknown suite \"" + name + "\"");
  return r;
}

}  // namespace twistform
