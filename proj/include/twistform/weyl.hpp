#pragma once

// The Weyl isomorphism ∧_e^q V ⊗ ∧_o^m V* -> ∧_o^{m-q} V*, the i_q
// isomorphism, and the representation of bilinear maps into odd m-covectors
// by exterior products.

#include <Eigen/Core>

#include <span>

#include "twistform/exterior_algebra.hpp"

namespace twistform {

/// e_o ∧ e^1 ∧ ... ∧ e^m.
GradedElement unit_volume(SpaceDescriptor space);
/// The odd m-vector u with <unit_volume, u> = 1.
GradedElement unit_volume_dual(SpaceDescriptor space);

/// w ⊗ e in normal form: e is rescaled to unit_volume and the scale is
/// absorbed into w. The zero tensor is (0, unit_volume).
class TensorQM {
 public:
  TensorQM(const GradedElement& w, const GradedElement& e);
  static TensorQM zero(SpaceDescriptor space, int q);

  const GradedElement& w() const { return w_; }
  GradedElement e() const { return unit_volume(w_.space()); }
  int grade() const { return w_.grade(); }
  const SpaceDescriptor& space() const { return w_.space(); }

  friend TensorQM operator+(const TensorQM& a, const TensorQM& b);
  friend TensorQM operator*(double s, const TensorQM& t);

 private:
  explicit TensorQM(const GradedElement& normalized_w) : w_(normalized_w) {}
  GradedElement w_;
};

/// We_q(w ⊗ e) = w ⌟ e.
GradedElement weyl_map(const TensorQM& t);

/// Sum over ν1 < ... < νq of (-1)^{Σ(νi - i)} <e^ν, w> e_o ∧ e^{complement},
/// scaled by e's coefficient.
GradedElement minor_expansion(const GradedElement& w, const GradedElement& e);

/// Same expansion for a simple w = w1 ∧ ... ∧ wq, with <e^ν, w> computed as
/// the determinant minor det(<e^{νr}, ws>).
GradedElement minor_expansion(std::span<const Eigen::VectorXd> factors, const GradedElement& e);

/// Matrix of We_q in the canonical bases (rows: (m-q)-tuples, columns: q-tuples).
Eigen::MatrixXd weyl_matrix(SpaceDescriptor space, int q);

/// Pairing <w ⊗ e, a ⊗ u> = <a, w><e, u>.
double tensor_pairing(const TensorQM& t, const GradedElement& a, const GradedElement& u);

/// Linear map from even q-covectors to odd m-covectors: l(a) = (row · a) vol.
class HomQM {
 public:
  HomQM(SpaceDescriptor space, int q, Eigen::RowVectorXd row);

  GradedElement operator()(const GradedElement& a) const;
  const Eigen::RowVectorXd& row() const { return row_; }
  int grade() const { return q_; }
  const SpaceDescriptor& space() const { return space_; }

 private:
  SpaceDescriptor space_;
  int q_;
  Eigen::RowVectorXd row_;
};

/// <i_q(l), a' ⊗ u> = <l(a'), u>.
TensorQM iq_forward(const HomQM& l);
HomQM iq_inverse(const TensorQM& t);

/// b(a, a') = (a^T B a') vol for even q- and q'-covectors a, a'.
class BilinearMap {
 public:
  BilinearMap(SpaceDescriptor space, int q, int q2, Eigen::MatrixXd coeffs);

  GradedElement operator()(const GradedElement& a, const GradedElement& a2) const;
  double scalar(const GradedElement& a, const GradedElement& a2) const;

  const Eigen::MatrixXd& matrix() const { return coeffs_; }
  int first_grade() const { return q_; }
  int second_grade() const { return q2_; }
  const SpaceDescriptor& space() const { return space_; }

 private:
  SpaceDescriptor space_;
  int q_, q2_;
  Eigen::MatrixXd coeffs_;
};

/// The pair of linear maps associated with a bilinear map:
/// first(a) = i_{q'}(b(a, ·)), second(a') = i_q(b(·, a')).
class BilinearRepresentation {
 public:
  explicit BilinearRepresentation(BilinearMap b) : b_(std::move(b)) {}

  TensorQM first(const GradedElement& a) const;
  TensorQM second(const GradedElement& a2) const;
  const BilinearMap& map() const { return b_; }

 private:
  BilinearMap b_;
};

BilinearRepresentation represent_bilinear(const BilinearMap& b);

}  // namespace twistform
