#pragma once

// Vacuum electrodynamics on Minkowski space: Lagrangian, constitutive law,
// field equations, and the energy and Hamiltonian densities, together with
// the checks that decide whether a trajectory (A, G, J) is a solution.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistform/variational.hpp"

namespace twistform {

class ElectrodynamicsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MinkowskiStructure {
 public:
  /// diag(1, -1, -1, -1) on the 0..3 reference basis.
  explicit MinkowskiStructure(double c_light = 1.0);
  /// Any symmetric 4x4 metric of signature (1, 3).
  MinkowskiStructure(Eigen::Matrix4d metric, double c_light);

  const SpaceDescriptor& space() const { return space_; }
  const Eigen::Matrix4d& metric() const { return g_; }
  const Eigen::Matrix4d& inverse_metric() const { return g_inv_; }
  double c_light() const { return c_light_; }
  MinkowskiStructure with_c_light(double c) const;

  /// Matrices of ∧²g and ∧²g⁻¹ on increasing index pairs.
  const Eigen::MatrixXd& wedge2_metric() const { return w2_g_; }
  const Eigen::MatrixXd& wedge2_inverse() const { return w2_g_inv_; }

  /// ∧²g⁻¹ : even 2-covector -> even 2-vector.
  GradedElement raise2(const GradedElement& f) const;
  /// ∧²g : even 2-vector -> even 2-covector.
  GradedElement lower2(const GradedElement& w) const;

  /// √|g| = sqrt|det g| e_o ∧ e^0 ∧ ... ∧ e^3.
  const GradedElement& sqrt_g() const { return sqrt_g_; }
  /// The odd 4-vector with <√|g|, √|g⁻¹|> = 1.
  const GradedElement& sqrt_g_inv() const { return sqrt_g_inv_; }

 private:
  SpaceDescriptor space_;
  Eigen::Matrix4d g_, g_inv_;
  double c_light_;
  Eigen::MatrixXd w2_g_, w2_g_inv_;
  GradedElement sqrt_g_, sqrt_g_inv_;
};

/// (∧²G)_{(μν),(αβ)} = G_{μα}G_{νβ} - G_{μβ}G_{να} on increasing pairs.
Eigen::MatrixXd wedge2_matrix(const Eigen::MatrixXd& g);

/// L(a, f) = -(1/8πc) <f, ∧²g⁻¹ f> √|g|; `a` is accepted and ignored.
GradedElement lagrangian_density(const MinkowskiStructure& ms, const GradedElement& f);
GradedElement lagrangian_density(const MinkowskiStructure& ms, const GradedElement& a,
                                 const GradedElement& f);

/// L as a quadratic density: λ = μ = 0, ν(f, f') = -(1/4πc) <f, ∧²g⁻¹ f'> √|g|.
QuadraticDensity lagrangian_kappa(const MinkowskiStructure& ms);

/// W = ∫_c L(A, dA).
double action(const MinkowskiStructure& ms, const SmoothForm& a, const Current& current);

/// G = (∧²g⁻¹ F) ⌟ √|g|.
GradedElement constitutive(const MinkowskiStructure& ms, const GradedElement& f);
/// F = ∧²g(√|g⁻¹| ⌞ G).
GradedElement constitutive_inverse(const MinkowskiStructure& ms, const GradedElement& g);
/// The Legendre map λ ↦ (∧²g⁻¹ λ) ⌟ √|g|.
GradedElement legendre(const MinkowskiStructure& ms, const GradedElement& lambda);

/// Pointwise constitutive law applied to a field form.
SmoothForm constitutive_form(const MinkowskiStructure& ms, const SmoothForm& f);

/// E(a, g, f) = -(1/4πc) g ∧ f - L(a, f).
GradedElement energy_density(const MinkowskiStructure& ms, const GradedElement& a,
                             const GradedElement& g_mom, const GradedElement& f);
/// The four equivalent expressions for E, in display order.
std::vector<GradedElement> energy_density_forms(const MinkowskiStructure& ms,
                                                const GradedElement& a,
                                                const GradedElement& g_mom,
                                                const GradedElement& f);
/// DE(a, g, λ; δa, δg, δλ) = -(1/4πc)(δg ∧ λ + (g - Λ(λ)) ∧ δλ).
GradedElement energy_variation(const MinkowskiStructure& ms, const GradedElement& g_mom,
                               const GradedElement& lambda, const GradedElement& d_g,
                               const GradedElement& d_lambda);
/// H(a, g) = -(1/8πc) g ∧ ∧²g(√|g⁻¹| ⌞ g).
GradedElement hamiltonian_density(const MinkowskiStructure& ms, const GradedElement& a,
                                  const GradedElement& g_mom);

/// d((∧²g⁻¹ dA) ⌟ √|g|) - (4π/c) J, assembled from the variational
/// derivative of the Lagrangian: -4πc (X + dY) - (4π/c) J.
SmoothForm euler_lagrange_residual(const MinkowskiStructure& ms, const SmoothForm& a,
                                   const SmoothForm& j);
/// dG - (4π/c) J.
SmoothForm maxwell_residual(const MinkowskiStructure& ms, const SmoothForm& g,
                            const SmoothForm& j);

/// Phase space trajectory (A, G, J).
struct Trajectory {
  SmoothForm a;
  SmoothForm g;
  SmoothForm j;

  Trajectory(SmoothForm a, SmoothForm g, SmoothForm j);
  /// G = constitutive(dA) + g_offset, J = (c/4π) dG + j_offset.
  static Trajectory from_potential(const MinkowskiStructure& ms, const SmoothForm& a,
                                   const std::optional<GradedElement>& g_offset = std::nullopt,
                                   const std::optional<GradedElement>& j_offset = std::nullopt);
  /// G = constitutive(dA) + g_offset, J = j_offset (zero by default).
  static Trajectory vacuum(const MinkowskiStructure& ms, const SmoothForm& a,
                           const std::optional<GradedElement>& g_offset = std::nullopt,
                           const std::optional<GradedElement>& j_offset = std::nullopt);

  Domain domain() const;
};

/// A point (a, f, g, r) of the infinitesimal phase space, with
/// r = dG(x) - (4π/c) J(x).
struct PhaseDelta {
  GradedElement a, f, g, r;
};
PhaseDelta phase_delta(const MinkowskiStructure& ms, const Trajectory& t, const AffinePoint& x);

/// <dW(q), δq> - <p, δq>_c.
double virtual_action_residual(const MinkowskiStructure& ms, const Trajectory& t,
                               const SmoothForm& delta_a, const Current& current);

struct Verdict {
  double interior_residual = 0.0;
  double boundary_residual = 0.0;
  bool pass = false;
};

struct SampleOptions {
  int lattice = 3;         // points per axis inside K
  int face_lattice = 3;    // points per axis on each face
  int random_points = 16;  // extra interior points
  std::uint64_t seed = 0;
  double tolerance = 1e-8;
};

/// Interior Euler-Lagrange residual and boundary constitutive mismatch on K.
Verdict compact_domain_check(const MinkowskiStructure& ms, const Trajectory& t,
                             const CubeDomain& box, const SampleOptions& opt = {});

struct PointVerdict {
  double constitutive_residual = 0.0;  // |G - Λ F| or |F - Λ⁻¹ G|
  double maxwell_residual = 0.0;       // |dG - (4π/c) J|
  double principle_residual = 0.0;     // largest clause of the pointwise principle
  bool pass = false;
};

/// Lagrangian-side membership of the infinitesimal phase at x; w must be nonzero.
PointVerdict infinitesimal_check(const MinkowskiStructure& ms, const Trajectory& t,
                                 const AffinePoint& x, const GradedElement& w,
                                 double tolerance = 1e-8);
/// Hamiltonian-side membership: F = ∧²g(√|g⁻¹| ⌞ G), r = 0, and the clauses
/// DH(δg) = -(1/4πc) f ∧ δg with DH from central differences of H.
PointVerdict hamilton_check(const MinkowskiStructure& ms, const Trajectory& t,
                            const AffinePoint& x, const GradedElement& w,
                            double tolerance = 1e-8);

/// Membership of (a, f, g, r) in the set defined through DL, and in the set
/// defined through DE with λ solved from the δg clauses.
double lagrangian_dynamics_residual(const MinkowskiStructure& ms, const PhaseDelta& ph);
double energy_dynamics_residual(const MinkowskiStructure& ms, const PhaseDelta& ph);
/// Largest clause of DH(a, g; δa, δg) = (1/4πc)(r ∧ δa - f ∧ δg) over basis
/// variations, in units of 1/4πc, with DH from central differences of H.
double hamiltonian_dynamics_residual(const MinkowskiStructure& ms, const PhaseDelta& ph);

}  // namespace twistform
