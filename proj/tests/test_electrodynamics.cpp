#include <numbers>

#include "doctest.h"
#include "helpers.hpp"

using namespace twistform;
using testing_util::table_diff;
using testing_util::table_of;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix4d lorentz_metric(Rng& rng) {
  Eigen::Matrix4d eta = Eigen::Vector4d(1, -1, -1, -1).asDiagonal();
  Eigen::Matrix4d l = Eigen::Matrix4d::Identity();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) l(i, j) += 0.3 * rng.uniform(-1, 1);
  return l.transpose() * eta * l;
}

// Fully antisymmetric F_{μν} from increasing-pair coefficients.
Eigen::Matrix4d full(const GradedElement& f) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  for (const auto& [idx, v] : table_of(f)) {
    m(idx[0], idx[1]) = v;
    m(idx[1], idx[0]) = -v;
  }
  return m;
}

// G_{ρσ} = sqrt|g| Σ_{μ<ν} F^{μν} ε_{μνρσ}.
oracle::Table hodge(const Eigen::Matrix4d& g, const GradedElement& f) {
  const Eigen::Matrix4d gi = g.inverse();
  const Eigen::Matrix4d up = gi * full(f) * gi.transpose();
  const double s = std::sqrt(std::abs(g.determinant()));
  oracle::Table out;
  for (const auto& rs : oracle::subsets(4, 2)) {
    double v = 0.0;
    for (const auto& mn : oracle::subsets(4, 2)) v += up(mn[0], mn[1]) * oracle::epsilon4(mn[0], mn[1], rs[0], rs[1]);
    out[rs] = s * v;
  }
  return out;
}

}  // namespace

TEST_CASE("constitutive map against the index formula") {
  Rng rng(61);
  for (int i = 0; i < 20; ++i) {
    const Eigen::Matrix4d g = i == 0 ? Eigen::Matrix4d(Eigen::Vector4d(1, -1, -1, -1).asDiagonal()) : lorentz_metric(rng);
    const MinkowskiStructure ms(g, rng.uniform(0.5, 3.0));
    const auto f = random_element(rng, Kind::Covector, Parity::Even, 2, ms.space());
    const auto gg = constitutive(ms, f);
    CHECK(gg.parity() == Parity::Odd);
    CHECK(table_diff(gg, hodge(g, f)) < 1e-12);
    CHECK(max_abs_diff(constitutive_inverse(ms, gg), f) < 1e-12);
  }
}

TEST_CASE("electric field example") {
  const MinkowskiStructure ms;
  const auto f = 2.0 * GradedElement::basis(Kind::Covector, Parity::Even, ms.space(), {0, 1});
  const auto g = constitutive(ms, f);
  CHECK(g.coeff({2, 3}) == -2.0);
  CHECK(g.max_abs() == 2.0);
  CHECK(lagrangian_density(ms, f)[0] == doctest::Approx(4.0 / (8.0 * kPi)));
}

TEST_CASE("Lagrangian density against -F_{μν}F^{μν}/16πc") {
  Rng rng(62);
  for (int i = 0; i < 10; ++i) {
    const Eigen::Matrix4d g = lorentz_metric(rng);
    const double c = rng.uniform(0.5, 3.0);
    const MinkowskiStructure ms(g, c);
    const auto f = random_element(rng, Kind::Covector, Parity::Even, 2, ms.space());
    const Eigen::Matrix4d lo = full(f), gi = g.inverse();
    const double contraction = (lo.cwiseProduct(gi * lo * gi.transpose())).sum();
    const double expect = -std::sqrt(std::abs(g.determinant())) * contraction / (16.0 * kPi * c);
    CHECK(lagrangian_density(ms, f)[0] == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("Hamiltonian density in terms of E and B") {
  Rng rng(63);
  const MinkowskiStructure ms;
  for (int i = 0; i < 10; ++i) {
    const Eigen::Vector3d e = random_vector(rng, 3), b = random_vector(rng, 3);
    // F = E_i e^0 ∧ e^i - B_1 e^2∧e^3 - B_2 e^3∧e^1 - B_3 e^1∧e^2
    Coeffs c(6);
    c << e[0], e[1], e[2], -b[2], b[1], -b[0];
    const GradedElement f(Kind::Covector, Parity::Even, 2, ms.space(), c);
    const auto a = random_element(rng, Kind::Covector, Parity::Even, 1, ms.space());
    // The covariant transform gives H(a, Λf) = <Λf, f>/4πc - L(f) = L(f).
    const double expect = (e.squaredNorm() - b.squaredNorm()) / (8.0 * kPi);
    CHECK(lagrangian_density(ms, f)[0] == doctest::Approx(expect).epsilon(1e-12));
    CHECK(hamiltonian_density(ms, a, constitutive(ms, f))[0] == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("structure validation") {
  CHECK_THROWS_AS(MinkowskiStructure(0.0), ElectrodynamicsError);
  CHECK_THROWS_AS(MinkowskiStructure(Eigen::Matrix4d::Identity(), 1.0), ElectrodynamicsError);
  Eigen::Matrix4d asym = Eigen::Vector4d(1, -1, -1, -1).asDiagonal();
  asym(0, 1) = 0.5;
  CHECK_THROWS_AS(MinkowskiStructure(asym, 1.0), ElectrodynamicsError);
  const MinkowskiStructure ms;
  const auto odd = GradedElement::basis(Kind::Covector, Parity::Odd, ms.space(), {0, 1});
  CHECK_THROWS(constitutive(ms, odd));
  CHECK_THROWS(constitutive_inverse(ms, GradedElement::basis(Kind::Covector, Parity::Even, ms.space(), {0, 1})));
}

TEST_CASE("plane wave solves the vacuum equations") {
  const MinkowskiStructure ms;
  Eigen::VectorXd k(4), pol(4);
  k << 1.5, 0.0, 1.5, 0.0;
  pol << 0.0, 0.0, 0.0, 1.0;
  const SmoothForm a = plane_wave(ms.space(), k, pol, 1.0, 0.2);
  const Trajectory t = Trajectory::vacuum(ms, a);
  Rng rng(64);
  const SmoothForm el = euler_lagrange_residual(ms, a, t.j);
  for (int i = 0; i < 10; ++i) CHECK(el(random_vector(rng, 4)).max_abs() < 1e-12);
  const Verdict v = compact_domain_check(ms, t, {AffinePoint::Zero(4), AffinePoint::Ones(4)});
  CHECK(v.pass);
  // A massive wave vector is not a vacuum solution.
  k << 2.0, 0.0, 1.0, 0.0;
  const SmoothForm bad = plane_wave(ms.space(), k, pol, 1.0, 0.2);
  CHECK_FALSE(compact_domain_check(ms, Trajectory::vacuum(ms, bad), {AffinePoint::Zero(4), AffinePoint::Ones(4)}).pass);
}

TEST_CASE("counterexamples trip their own clause") {
  Rng rng(65);
  const MinkowskiStructure ms;
  const SmoothForm a = random_polynomial(rng, {Parity::Even, 1, ms.space()}, 5, 3);
  const CubeDomain box{AffinePoint::Zero(4), AffinePoint::Ones(4)};
  const auto g_off = 0.1 * GradedElement::basis(Kind::Covector, Parity::Odd, ms.space(), {1, 3});
  const auto j_off = 0.1 * GradedElement::basis(Kind::Covector, Parity::Odd, ms.space(), {0, 1, 2});

  const Verdict ok = compact_domain_check(ms, Trajectory::from_potential(ms, a), box);
  CHECK(ok.pass);
  const Verdict boundary = compact_domain_check(ms, Trajectory::from_potential(ms, a, g_off), box);
  CHECK_FALSE(boundary.pass);
  CHECK(boundary.interior_residual < 1e-10);
  CHECK(boundary.boundary_residual == doctest::Approx(0.1));
  const Verdict source = compact_domain_check(ms, Trajectory::from_potential(ms, a, std::nullopt, j_off), box);
  CHECK_FALSE(source.pass);
  CHECK(source.boundary_residual < 1e-12);
  CHECK(source.interior_residual == doctest::Approx(4.0 * kPi * 0.1));
}

TEST_CASE("Lagrangian and Hamiltonian point checks") {
  const MinkowskiStructure ms(2.0);
  const SmoothForm a = coulomb(ms.space(), 1.0, AffinePoint::Zero(4));
  AffinePoint x(4);
  x << 0.3, 1.0, -0.5, 0.7;
  const auto w = unit_volume_dual(ms.space());
  const Trajectory good = Trajectory::vacuum(ms, a);
  CHECK(infinitesimal_check(ms, good, x, w).pass);
  CHECK(hamilton_check(ms, good, x, w).pass);
  const Trajectory bad = Trajectory::vacuum(
      ms, a, std::nullopt, GradedElement::basis(Kind::Covector, Parity::Odd, ms.space(), {1, 2, 3}));
  const PointVerdict lv = infinitesimal_check(ms, bad, x, w);
  CHECK_FALSE(lv.pass);
  CHECK(lv.maxwell_residual == doctest::Approx(4.0 * kPi / 2.0));
  CHECK_FALSE(hamilton_check(ms, bad, x, w).pass);
  CHECK_THROWS(infinitesimal_check(ms, good, x, 0.0 * w));
  AffinePoint origin = AffinePoint::Zero(4);
  CHECK_THROWS(infinitesimal_check(ms, good, origin, w));
}

TEST_CASE("virtual action on a cube") {
  Rng rng(66);
  const MinkowskiStructure ms;
  const SmoothForm a = random_polynomial(rng, {Parity::Even, 1, ms.space()}, 5, 3);
  const Current k = Current::cube(ms.space(), {AffinePoint::Zero(4), AffinePoint::Ones(4)});
  const auto g_off = GradedElement::basis(Kind::Covector, Parity::Odd, ms.space(), {0, 2});
  double solution = 0.0, perturbed = 0.0;
  for (int i = 0; i < 5; ++i) {
    const SmoothForm probe = random_polynomial(rng, {Parity::Even, 1, ms.space()}, 3, 2);
    solution = std::max(solution, std::abs(virtual_action_residual(ms, Trajectory::from_potential(ms, a), probe, k)));
    perturbed = std::max(perturbed, std::abs(virtual_action_residual(ms, Trajectory::from_potential(ms, a, g_off), probe, k)));
  }
  CHECK(solution < 1e-12);
  CHECK(perturbed > 1e-3);
}
