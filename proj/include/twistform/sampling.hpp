#pragma once

// Seeded random instances for property checks.

#include "twistform/families.hpp"
#include "twistform/random.hpp"
#include "twistform/variational.hpp"

namespace twistform {

GradedElement random_element(Rng& rng, Kind kind, Parity parity, int grade, SpaceDescriptor space,
                             double scale = 1.0);

/// Coefficients k/denominator with |k| <= range; exact in binary when the
/// denominator is a power of two.
GradedElement random_dyadic_element(Rng& rng, Kind kind, Parity parity, int grade,
                                    SpaceDescriptor space, int range = 8, int denominator = 8);

Eigen::VectorXd random_vector(Rng& rng, int n, double lo = -1.0, double hi = 1.0);
AffinePoint random_point(Rng& rng, const AffinePoint& lo, const AffinePoint& hi);

/// Polynomial form with `terms` monomials of total degree <= max_degree.
SmoothForm random_polynomial(Rng& rng, FormType type, int terms, int max_degree);
/// Integer/8 coefficients for bit-exact arithmetic at dyadic points.
SmoothForm random_dyadic_polynomial(Rng& rng, FormType type, int terms, int max_degree);
/// Trigonometric form with wave components in [-k_max, k_max].
SmoothForm random_trig(Rng& rng, FormType type, int terms, double k_max);

/// Affine q-cell with origin in [-1,1]^m and edges in [-1,1]^m.
Cell random_affine_cell(Rng& rng, int q, SpaceDescriptor space, Orientation o);

/// Box with corners in [lo, hi] and every side at least min_side.
CubeDomain random_box(Rng& rng, int m, double lo, double hi, double min_side = 0.3);

/// Constant λ, μ, ν with entries in [-1,1]; λ and ν symmetrized.
QuadraticDensity random_density(Rng& rng, SpaceDescriptor space, double offset = 0.0);

}  // namespace twistform
