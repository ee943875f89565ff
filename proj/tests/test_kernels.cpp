#include <omp.h>

#include <cstring>

#include "doctest.h"
#include "helpers.hpp"
#include "twistform/kernels.hpp"
#include "twistform/quadrature.hpp"

using namespace twistform;

TEST_CASE("parallel kernels are bit-identical to the serial reference") {
  Rng rng(41);
  const SpaceDescriptor space(4);
  const SmoothForm a = random_trig(rng, {Parity::Odd, 4, space}, 5, 2.0);
  const GaussLegendreRule rule(7);
  auto f = [&](std::span<const double> s) {
    AffinePoint x(4);
    for (int i = 0; i < 4; ++i) x[i] = s[i];
    return a(x)[0];
  };
  const double serial = kernels::tensor_quadrature_serial(rule.nodes, rule.weights, 4, f);
  auto g = [&](std::size_t i) { return std::sin(0.37 * static_cast<double>(i)) * 1e3 + 1e-7 * i; };
  const std::vector<double> ref = kernels::evaluate_serial(1000, g);
  const double ref_sum = kernels::ordered_sum(ref);

  const int saved = omp_get_max_threads();
  for (int threads : {1, 2, 3, 4, 8}) {
    omp_set_num_threads(threads);
    const double par = kernels::tensor_quadrature_parallel(rule.nodes, rule.weights, 4, f);
    CHECK(std::memcmp(&par, &serial, sizeof(double)) == 0);
    const std::vector<double> got = kernels::evaluate_parallel(1000, g);
    CHECK(got == ref);
    const double s = kernels::ordered_sum(got);
    CHECK(std::memcmp(&s, &ref_sum, sizeof(double)) == 0);
  }
  omp_set_num_threads(saved);
}

TEST_CASE("Gauss-Legendre rule integrates polynomials exactly") {
  for (int n = 1; n <= 12; ++n) {
    const GaussLegendreRule rule(n);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-14));
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], k);
      CHECK(s == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
    }
  }
  CHECK_THROWS(GaussLegendreRule(0));
}

TEST_CASE("cell integrals do not depend on the execution mode") {
  Rng rng(42);
  const SpaceDescriptor space(4);
  const SmoothForm a = random_trig(rng, {Parity::Even, 3, space}, 4, 1.5);
  const Cell cell = random_affine_cell(rng, 3, space, Orientation::reference());
  const double s = integrate_cell(a, cell, 8, kernels::Execution::Serial);
  const double p = integrate_cell(a, cell, 8, kernels::Execution::Parallel);
  CHECK(std::memcmp(&s, &p, sizeof(double)) == 0);
}
