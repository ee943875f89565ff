#pragma once

// Quadratic densities κ(x, a, f) and the functions k they induce on
// potentials paired with currents, with the derivative Dk in closed form and
// as a central difference.

#include <functional>
#include <optional>

#include "twistform/currents.hpp"
#include "twistform/weyl.hpp"

namespace twistform {

class VariationalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// κ_x(a, f) = ½λ_x(a,a) + μ_x(a,f) + ½ν_x(f,f) + offset(x) vol, with a an
/// even 1-covector and f an even 2-covector. λ and ν must be symmetric. The
/// offset carries the constant odd m-forms used as probes.
class QuadraticDensity {
 public:
  using BlockFn = std::function<Eigen::MatrixXd(const AffinePoint&)>;
  using OffsetFn = std::function<double(const AffinePoint&)>;

  QuadraticDensity(SpaceDescriptor space, Eigen::MatrixXd lambda, Eigen::MatrixXd mu,
                   Eigen::MatrixXd nu, double offset = 0.0);
  static QuadraticDensity point_dependent(SpaceDescriptor space, BlockFn lambda, BlockFn mu,
                                          BlockFn nu, OffsetFn offset = {});
  /// λ = μ = ν = 0 and a constant odd m-form.
  static QuadraticDensity constant_form(SpaceDescriptor space, double value);
  static QuadraticDensity zero(SpaceDescriptor space);

  const SpaceDescriptor& space() const { return space_; }
  bool is_constant() const { return constant_; }

  BilinearMap lambda(const AffinePoint& x) const;
  BilinearMap mu(const AffinePoint& x) const;
  BilinearMap nu(const AffinePoint& x) const;
  double offset(const AffinePoint& x) const;

  GradedElement operator()(const AffinePoint& x, const GradedElement& a,
                           const GradedElement& f) const;

  /// δ²κ_x((a,f), (a2,f2)) of the quadratic part.
  GradedElement polarization(const AffinePoint& x, const GradedElement& a, const GradedElement& f,
                             const GradedElement& a2, const GradedElement& f2) const;

  /// Dκ_x(a, f, δa, δf) assembled from the block derivatives.
  GradedElement derivative(const AffinePoint& x, const GradedElement& a, const GradedElement& f,
                           const GradedElement& da, const GradedElement& df) const;

 private:
  QuadraticDensity(SpaceDescriptor space, BlockFn lambda, BlockFn mu, BlockFn nu, OffsetFn offset,
                   bool constant);
  BilinearMap block(const BlockFn& fn, const AffinePoint& x, int q, int q2, bool symmetric,
                    const char* name) const;

  SpaceDescriptor space_;
  BlockFn lambda_, mu_, nu_;
  OffsetFn offset_;
  bool constant_;
};

GradedElement eval_kappa(const QuadraticDensity& kappa, const AffinePoint& x,
                         const GradedElement& a, const GradedElement& f);

/// Potential A (even 1-form) paired with a current.
struct FieldRep {
  SmoothForm potential;
  Current current;

  FieldRep(SmoothForm a, Current c);
};

/// Induction G (odd 2-form), source J (odd 3-form), the current, and the
/// speed of light.
struct CovectorRep {
  SmoothForm induction;
  SmoothForm source;
  Current current;
  double c_light = 1.0;

  CovectorRep(SmoothForm g, SmoothForm j, Current c, double c_light);
};

/// x ↦ κ(x, A(x), dA(x)).
SmoothForm kappa_form(const QuadraticDensity& kappa, const SmoothForm& a);

/// The forms X = We_1(λ̄(A) + μ̿(dA)) and Y = We_2(μ̄(A) + ν̄(dA)) with
/// Dκ = -X ∧ δA + Y ∧ δF.
struct DkTerms {
  SmoothForm x;
  SmoothForm y;
};
DkTerms dk_terms(const QuadraticDensity& kappa, const SmoothForm& a);

double k_eval(const QuadraticDensity& kappa, const FieldRep& q);

/// -∫_c (X + dY) ∧ δA + ∫_c d(Y ∧ δA).
double dk_analytic(const QuadraticDensity& kappa, const FieldRep& q, const SmoothForm& delta_a);

/// [k(A + sδA) - k(A - sδA)] / 2s.
double dk_fd(const QuadraticDensity& kappa, const FieldRep& q, const SmoothForm& delta_a,
             double step = 1e-3);

/// ∫_c (1/c²) J ∧ δA - (1/4πc) ∫_{∂c} G ∧ δA.
double covector_pairing(const CovectorRep& p, const SmoothForm& delta_a);

/// The same pairing with d(G ∧ δA) expanded as dG ∧ δA + G ∧ dδA and
/// integrated over c itself; for wδ(x) this is
/// -(1/4πc) <(dG - (4π/c)J) ∧ δA + G ∧ δF, w>.
double covector_pairing_direct(const CovectorRep& p, const SmoothForm& delta_a);

}  // namespace twistform
