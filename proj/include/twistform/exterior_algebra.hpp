#pragma once

// Even/odd multivectors and multicovectors over a finite-dimensional real
// vector space with a fixed reference basis and reference orientation.
//
// Coefficients are kept on strictly increasing index tuples in lexicographic
// order. Odd elements are stored as their value at the reference orientation;
// `reorient` reconstructs the value at the opposite one. With that convention
// every product below is ordinary exterior algebra on the coefficient tables
// and parity is carried as a Z2 tag.

#include <Eigen/Core>

#include <span>
#include <stdexcept>
#include <string>

#include "twistform/combinatorics.hpp"

namespace twistform {

inline constexpr int kMaxCoeffs = 70;  // C(8, 4)
using Coeffs = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxCoeffs, 1>;

enum class Kind { Covector, Vector };
enum class Parity { Even, Odd };

/// e -> +1, o -> -1, multiplied.
constexpr Parity operator*(Parity a, Parity b) { return a == b ? Parity::Even : Parity::Odd; }
constexpr int parity_sign(Parity p) { return p == Parity::Even ? 1 : -1; }

const char* to_string(Kind k);
const char* to_string(Parity p);

struct SpaceDescriptor {
  int dim = 0;
  int first_label = 1;  // labels are first_label .. first_label + dim - 1

  SpaceDescriptor() = default;
  explicit SpaceDescriptor(int m, int first = 1);

  static SpaceDescriptor minkowski() { return SpaceDescriptor(4, 0); }

  bool operator==(const SpaceDescriptor&) const = default;
};

/// One of the two orientations of V, relative to the reference orientation.
class Orientation {
 public:
  static Orientation reference() { return Orientation(1); }
  static Orientation opposite() { return Orientation(-1); }

  /// The parity action P.
  Orientation flipped() const { return Orientation(-sign_); }
  int sign() const { return sign_; }
  bool is_reference() const { return sign_ == 1; }
  bool operator==(const Orientation&) const = default;

 private:
  explicit Orientation(int s) : sign_(s) {}
  int sign_;
};

class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class KindMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};
class GradeMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};
class ParityMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};
class DimensionMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};
class GradeOverflow : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class GradedElement {
 public:
  /// The zero element of the given type.
  GradedElement(Kind kind, Parity parity, int grade, SpaceDescriptor space);
  GradedElement(Kind kind, Parity parity, int grade, SpaceDescriptor space, const Coeffs& coeffs);

  /// Basis element e^{i1} ∧ ... ∧ e^{iq} (or e_{i1} ∧ ...) for 0-based
  /// positions in any order; the permutation sign is absorbed.
  static GradedElement basis(Kind kind, Parity parity, SpaceDescriptor space,
                             std::span<const int> positions);
  static GradedElement basis(Kind kind, Parity parity, SpaceDescriptor space,
                             std::initializer_list<int> positions);

  /// Grade-0 element with the given value at the reference orientation
  /// (e_e for Even, e_o for Odd when value = 1).
  static GradedElement scalar(Parity parity, SpaceDescriptor space, double value = 1.0,
                              Kind kind = Kind::Covector);

  /// Grade-1 element from its components.
  static GradedElement from_components(Kind kind, Parity parity, SpaceDescriptor space,
                                       std::span<const double> components);

  Kind kind() const { return kind_; }
  Parity parity() const { return parity_; }
  int grade() const { return grade_; }
  int dim() const { return space_.dim; }
  const SpaceDescriptor& space() const { return space_; }
  int size() const { return static_cast<int>(coeffs_.size()); }

  const Coeffs& coeffs() const { return coeffs_; }
  double operator[](int rank) const { return coeffs_[rank]; }

  /// Coefficient at an increasing tuple of 0-based positions.
  double coeff(std::span<const int> positions) const;
  double coeff(std::initializer_list<int> positions) const;

  /// Same type, new coefficients.
  GradedElement with_coeffs(const Coeffs& c) const;

  double max_abs() const;
  bool is_zero() const { return max_abs() == 0.0; }

  friend GradedElement operator+(const GradedElement& a, const GradedElement& b);
  friend GradedElement operator-(const GradedElement& a, const GradedElement& b);
  friend GradedElement operator-(const GradedElement& a);
  friend GradedElement operator*(double s, const GradedElement& a);
  friend GradedElement operator*(const GradedElement& a, double s) { return s * a; }

 private:
  Kind kind_;
  Parity parity_;
  int grade_;
  SpaceDescriptor space_;
  Coeffs coeffs_;
};

/// Throws unless a and b have identical kind, parity, grade, and dimension.
void require_same_type(const GradedElement& a, const GradedElement& b, const char* what);

/// Largest coefficient difference; throws on type mismatch.
double max_abs_diff(const GradedElement& a, const GradedElement& b);

/// <a, w> for a q-covector a and a q-vector w of the same parity.
double pair(const GradedElement& a, const GradedElement& w);

/// Exterior product of two elements of the same kind.
GradedElement wedge(const GradedElement& x, const GradedElement& y);

/// w ⌟ a : <w ⌟ a, w'> = <a, w ∧ w'>; a (q'-q)-covector, q <= q'.
GradedElement interior_left(const GradedElement& w, const GradedElement& a);

/// w ⌞ a : <a', w ⌞ a> = <a' ∧ a, w>; the adjunction makes this a
/// (q-q')-vector, q >= q'.
GradedElement interior_right(const GradedElement& w, const GradedElement& a);

/// Coefficient table at orientation o.
GradedElement reorient(const GradedElement& x, Orientation o);

/// Simple even q-vector v1 ∧ ... ∧ vq from component vectors.
GradedElement simple_multivector(SpaceDescriptor space, std::span<const Eigen::VectorXd> vectors,
                                 Parity parity = Parity::Even);

/// a(v1, ..., vq, o).
double evaluate(const GradedElement& a, std::span<const Eigen::VectorXd> vectors, Orientation o);

}  // namespace twistform
