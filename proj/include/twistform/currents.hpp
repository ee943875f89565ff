#pragma once

// de Rham currents of top dimension: a box, a chain of m-cells, or a Dirac
// current wδ(x). All of them are odd, so they integrate odd m-forms, and
// their boundaries integrate odd (m-1)-forms.

#include <variant>

#include "twistform/affine_forms.hpp"

namespace twistform {

/// Axis-aligned box K = [min, max].
struct CubeDomain {
  AffinePoint min;
  AffinePoint max;

  /// The m-cell χ(s) = min + Σ s_i (max_i - min_i) e_i at the reference orientation.
  Cell cell(SpaceDescriptor space) const;
  double volume() const;
};

/// wδ(x) for an odd m-vector w.
struct DiracCurrent {
  AffinePoint point;
  GradedElement w;
};

struct ChainCurrent {
  Chain chain;  // odd chain of m-cells
};

class CurrentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Current {
 public:
  using Variant = std::variant<CubeDomain, DiracCurrent, ChainCurrent>;

  static Current cube(SpaceDescriptor space, CubeDomain box,
                      int quadrature_order = kDefaultQuadratureOrder);
  static Current dirac(AffinePoint x, GradedElement w);
  static Current chain(SpaceDescriptor space, Chain c,
                       int quadrature_order = kDefaultQuadratureOrder);

  const Variant& value() const { return value_; }
  const SpaceDescriptor& space() const { return space_; }
  int quadrature_order() const { return order_; }
  Current with_quadrature_order(int order) const;

  bool is_cube() const { return std::holds_alternative<CubeDomain>(value_); }
  bool is_dirac() const { return std::holds_alternative<DiracCurrent>(value_); }
  bool is_chain() const { return std::holds_alternative<ChainCurrent>(value_); }

  /// Whether the compact support lies in `domain`.
  bool support_in(const Domain& domain) const;

 private:
  Current(SpaceDescriptor space, Variant v, int order);
  SpaceDescriptor space_;
  Variant value_;
  int order_;
};

/// ∫_c A for an odd m-form A.
double integrate_current(const SmoothForm& a, const Current& c,
                         kernels::Execution exec = kernels::default_execution());

/// ∫_{∂c} A for an odd (m-1)-form A; for wδ(x) this is <d̃A(x), w>.
double integrate_boundary(const SmoothForm& a, const Current& c,
                          kernels::Execution exec = kernels::default_execution());

/// Throws CurrentError unless the support of c lies in A's domain.
void require_support(const SmoothForm& a, const Current& c);

}  // namespace twistform
