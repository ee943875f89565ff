#include "twistform/sampling.hpp"

namespace twistform {

GradedElement random_element(Rng& rng, Kind kind, Parity parity, int grade, SpaceDescriptor space,
                             double scale) {
  Coeffs c(binomial(space.dim, grade));
  for (int i = 0; i < c.size(); ++i) c[i] = scale * rng.uniform(-1.0, 1.0);
  return GradedElement(kind, parity, grade, space, c);
}

GradedElement random_dyadic_element(Rng& rng, Kind kind, Parity parity, int grade,
                                    SpaceDescriptor space, int range, int denominator) {
  Coeffs c(binomial(space.dim, grade));
  for (int i = 0; i < c.size(); ++i)
    c[i] = static_cast<double>(rng.integer(-range, range)) / denominator;
  return GradedElement(kind, parity, grade, space, c);
}

Eigen::VectorXd random_vector(Rng& rng, int n, double lo, double hi) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.uniform(lo, hi);
  return v;
}

AffinePoint random_point(Rng& rng, const AffinePoint& lo, const AffinePoint& hi) {
  AffinePoint x(lo.size());
  for (int i = 0; i < lo.size(); ++i) x[i] = rng.uniform(lo[i], hi[i]);
  return x;
}

namespace {

std::vector<int> random_positions(Rng& rng, int m, int q) {
  const auto all = combinations(m, q);
  return mask_indices(all[rng.integer(0, static_cast<int>(all.size()) - 1)]);
}

std::vector<int> random_powers(Rng& rng, int m, int max_degree) {
  std::vector<int> p(static_cast<std::size_t>(m), 0);
  const int degree = rng.integer(0, max_degree);
  for (int k = 0; k < degree; ++k) ++p[rng.integer(0, m - 1)];
  return p;
}

}  // namespace

SmoothForm random_polynomial(Rng& rng, FormType type, int terms, int max_degree) {
  std::vector<Monomial> out;
  for (int t = 0; t < terms; ++t)
    out.push_back({rng.uniform(-1.0, 1.0), random_positions(rng, type.space.dim, type.grade),
                   random_powers(rng, type.space.dim, max_degree)});
  return polynomial_form(type, std::move(out));
}

SmoothForm random_dyadic_polynomial(Rng& rng, FormType type, int terms, int max_degree) {
  std::vector<Monomial> out;
  for (int t = 0; t < terms; ++t)
    out.push_back({rng.integer(-8, 8) / 8.0, random_positions(rng, type.space.dim, type.grade),
                   random_powers(rng, type.space.dim, max_degree)});
  return polynomial_form(type, std::move(out));
}

SmoothForm random_trig(Rng& rng, FormType type, int terms, double k_max) {
  std::vector<TrigTerm> out;
  for (int t = 0; t < terms; ++t)
    out.push_back({rng.uniform(-1.0, 1.0), random_positions(rng, type.space.dim, type.grade),
                   random_vector(rng, type.space.dim, -k_max, k_max), rng.uniform(0.0, 6.0)});
  return trig_form(type, std::move(out));
}

Cell random_affine_cell(Rng& rng, int q, SpaceDescriptor space, Orientation o) {
  std::vector<Eigen::VectorXd> edges;
  for (int i = 0; i < q; ++i) edges.push_back(random_vector(rng, space.dim));
  AffinePoint origin = random_vector(rng, space.dim);
  return Cell::affine(origin, std::move(edges), space, o);
}

CubeDomain random_box(Rng& rng, int m, double lo, double hi, double min_side) {
  CubeDomain box{AffinePoint(m), AffinePoint(m)};
  for (int i = 0; i < m; ++i) {
    const double a = rng.uniform(lo, hi - min_side);
    box.min[i] = a;
    box.max[i] = rng.uniform(a + min_side, hi);
  }
  return box;
}

QuadraticDensity random_density(Rng& rng, SpaceDescriptor space, double offset) {
  const int n1 = binomial(space.dim, 1), n2 = binomial(space.dim, 2);
  auto random_matrix = [&](int r, int c) {
    Eigen::MatrixXd m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = rng.uniform(-1.0, 1.0);
    return m;
  };
  Eigen::MatrixXd lambda = random_matrix(n1, n1);
  lambda = (0.5 * (lambda + lambda.transpose())).eval();
  Eigen::MatrixXd mu = random_matrix(n1, n2);
  Eigen::MatrixXd nu = random_matrix(n2, n2);
  nu = (0.5 * (nu + nu.transpose())).eval();
  return QuadraticDensity(space, lambda, mu, nu, offset);
}

}  // namespace twistform
