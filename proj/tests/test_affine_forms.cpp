#include "doctest.h"
#include "helpers.hpp"

using namespace twistform;
using testing_util::table_diff;
using testing_util::table_of;

namespace {

// Fourth-order central difference of the coefficient table along axis mu.
oracle::Table fd_partial(const SmoothForm& a, const AffinePoint& x, int mu, double h = 1e-3) {
  auto at = [&](double s) {
    AffinePoint y = x;
    y[mu] += s;
    return table_of(a(y));
  };
  const auto p1 = at(h), m1 = at(-h), p2 = at(2 * h), m2 = at(-2 * h);
  oracle::Table out;
  for (const auto& [k, v] : p1) out[k] = (8.0 * (v - m1.at(k)) - (p2.at(k) - m2.at(k))) / (12.0 * h);
  return out;
}

}  // namespace

TEST_CASE("exterior derivative against finite differences") {
  Rng rng(31);
  const SpaceDescriptor space(4, 0);
  for (int q = 0; q < 4; ++q)
    for (Parity p : {Parity::Even, Parity::Odd}) {
      const FormType t{p, q, space};
      const SmoothForm a = random_trig(rng, t, 3, 1.0) + random_polynomial(rng, t, 4, 3);
      const AffinePoint x = random_vector(rng, 4);
      oracle::Table expect;
      for (int mu = 0; mu < 4; ++mu)
        for (const auto& [k, v] : oracle::wedge({{{mu}, 1.0}}, fd_partial(a, x, mu))) expect[k] += v;
      const SmoothForm da = exterior_derivative(a);
      CHECK(da.parity() == p);
      CHECK(table_diff(da(x), expect) < 1e-8);
    }
}

TEST_CASE("d of d vanishes") {
  Rng rng(32);
  const SpaceDescriptor space(4, 0);
  const SmoothForm a = random_trig(rng, {Parity::Even, 1, space}, 3, 1.0);
  const SmoothForm dda = exterior_derivative(exterior_derivative(a));
  CHECK(dda(random_vector(rng, 4)).max_abs() < 1e-13);
  CHECK_THROWS_AS(exterior_derivative(random_polynomial(rng, {Parity::Odd, 4, space}, 2, 2)), FormError);
}

TEST_CASE("Stokes on the unit square by hand") {
  // A = x^2 y dy, dA = 2xy dx∧dy; both sides are 1/2.
  const SpaceDescriptor space(2);
  const SmoothForm a =
      polynomial_form({Parity::Even, 1, space}, {Monomial{1.0, {1}, {2, 1}}});
  const Cell square = Cell::affine(AffinePoint::Zero(2), {Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 1)}, space);
  CHECK(integrate_cell(exterior_derivative(a), square) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(integrate_chain(a, boundary_chain(Chain::of(square))) == doctest::Approx(0.5).epsilon(1e-14));
  // Only the face x = 1 contributes: ∫_0^1 y dy.
  CHECK(integrate_cell(a, square.face(1, 1)) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(integrate_cell(a, square.face(1, 0)) == doctest::Approx(0.0));
}

TEST_CASE("cell integral against a hand quadrature of the pullback") {
  Rng rng(33);
  const SpaceDescriptor space(3);
  const SmoothForm a = random_polynomial(rng, {Parity::Odd, 2, space}, 4, 3);
  const AffinePoint o = random_vector(rng, 3);
  const Eigen::VectorXd u = random_vector(rng, 3), v = random_vector(rng, 3);
  const double expect = oracle::gauss5([&](double s) {
    return oracle::gauss5([&](double t) {
      return oracle::evaluate(table_of(a(o + s * u + t * v)), {u, v});
    });
  });
  const Cell cell = Cell::affine(o, {u, v}, space);
  CHECK(integrate_cell(a, cell) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(integrate_cell(a, cell.with_orientation(Orientation::opposite())) ==
        doctest::Approx(-expect).epsilon(1e-12));
}

TEST_CASE("boundary of a boundary cancels") {
  Rng rng(34);
  const SpaceDescriptor space(4);
  const Cell cell = random_affine_cell(rng, 3, space, Orientation::reference());
  const Chain bb = boundary_chain(boundary_chain(Chain::of(cell)));
  const SmoothForm a = random_trig(rng, {Parity::Even, 1, space}, 3, 1.0);
  CHECK(std::abs(integrate_chain(a, bb)) < 1e-13);
  CHECK(boundary_chain(Chain::of(cell)).terms().size() == 6);
}

TEST_CASE("point cells evaluate the 0-form") {
  const SpaceDescriptor space(2);
  const SmoothForm a = polynomial_form({Parity::Odd, 0, space}, {Monomial{3.0, {}, {1, 1}}});
  AffinePoint x(2);
  x << 2.0, 0.5;
  CHECK(integrate_cell(a, Cell::point(x, space)) == 3.0);
  CHECK(integrate_cell(a, Cell::point(x, space, Orientation::opposite())) == -3.0);
}

TEST_CASE("Stokes rejects mismatched chains") {
  const SpaceDescriptor space(3);
  const Cell cell = Cell::affine(AffinePoint::Zero(3), {Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0)}, space);
  const SmoothForm a = SmoothForm::zero({Parity::Even, 0, space});
  CHECK_THROWS(stokes_residual(a, Chain::of(cell)));
  CHECK_THROWS(stokes_residual(SmoothForm::zero({Parity::Odd, 1, space}), Chain::of(cell, 1.0, Parity::Even)));
}

TEST_CASE("Dirac and box currents") {
  Rng rng(35);
  const SpaceDescriptor space(4, 0);
  const SmoothForm a = random_polynomial(rng, {Parity::Odd, 4, space}, 3, 2);
  const AffinePoint x = random_vector(rng, 4);
  const GradedElement w = 2.5 * unit_volume_dual(space);
  CHECK(integrate_current(a, Current::dirac(x, w)) == doctest::Approx(2.5 * a(x)[0]).epsilon(1e-15));
  CHECK_THROWS(Current::dirac(x, GradedElement(Kind::Vector, Parity::Even, 4, space)));

  // Box: ∫_K x0 x1^2 e_o e^{0123} over [0,1]^4 = 1/2 * 1/3.
  const SmoothForm p = polynomial_form({Parity::Odd, 4, space}, {Monomial{1.0, {0, 1, 2, 3}, {1, 2, 0, 0}}});
  const Current box = Current::cube(space, {AffinePoint::Zero(4), AffinePoint::Ones(4)});
  CHECK(integrate_current(p, box) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK_THROWS(integrate_current(random_polynomial(rng, {Parity::Even, 4, space}, 2, 1), box));

  const SmoothForm c = coulomb(space, 1.0, AffinePoint::Zero(4));
  const Current around = Current::cube(space, {-AffinePoint::Ones(4), AffinePoint::Ones(4)});
  CHECK_THROWS(integrate_boundary(wedge(c, SmoothForm::zero({Parity::Odd, 2, space})), around));
}
