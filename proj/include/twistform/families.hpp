#pragma once

// Built-in field families with analytic jets.

#include <vector>

#include "twistform/affine_forms.hpp"

namespace twistform {

/// coeff · Π x_i^{powers[i]} · e^{positions}.
struct Monomial {
  double coeff = 0.0;
  std::vector<int> positions;  // 0-based, any order
  std::vector<int> powers;     // one entry per coordinate
};

/// Polynomial-coefficient form of any parity and grade; all derivatives exact.
SmoothForm polynomial_form(FormType type, std::vector<Monomial> terms);

/// coeff · cos(<k, x> + phase) · e^{positions}.
struct TrigTerm {
  double coeff = 0.0;
  std::vector<int> positions;
  Eigen::VectorXd k;
  double phase = 0.0;
};

/// Sum of trigonometric terms; any parity and grade, all derivatives exact.
SmoothForm trig_form(FormType type, std::vector<TrigTerm> terms);

/// A(x) = amp · cos(<k, x> + phase) · pol, an even 1-form. `k` and `pol`
/// are covector components.
SmoothForm plane_wave(SpaceDescriptor space, Eigen::VectorXd k, Eigen::VectorXd pol, double amp,
                      double phase = 0.0);

/// A(x) = charge / r · e^0 with r the distance from `center` in the spatial
/// coordinates 1..m-1. Defined off the line r = 0; jets analytic through
/// third order.
SmoothForm coulomb(SpaceDescriptor space, double charge, AffinePoint center);

/// The linear potential A_ν(x) = ½ Σ_μ F_{μν} x^μ with dA = F.
SmoothForm constant_field_potential(const GradedElement& f);

}  // namespace twistform
