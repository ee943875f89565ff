#pragma once

// Differential forms on an affine space, presented as covector fields.
//
// A SmoothForm carries a "jet" evaluator: given a point and a sorted list of
// coordinate directions D it returns the coefficient table of ∂_D A at that
// point. Leaf forms supply jets analytically up to `analytic_order`; beyond
// that the form falls back to central differences of the highest analytic
// order. Combinators (sum, wedge, d, pointwise linear maps) build jets for the
// result from the jets of their inputs, so d(dA) or d((∧²g⁻¹ dA) ⌟ vol) need
// nothing but analytic partial derivatives of the leaves.

#include <Eigen/Core>

#include <climits>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "twistform/exterior_algebra.hpp"
#include "twistform/kernels.hpp"
#include "twistform/quadrature.hpp"

namespace twistform {

using AffinePoint = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1>;

inline constexpr double kFiniteDifferenceStep = 1e-5;

struct FormType {
  Parity parity = Parity::Even;
  int grade = 0;
  SpaceDescriptor space;

  bool operator==(const FormType&) const = default;
};

/// Open set on which a local form is defined.
class Domain {
 public:
  using PointTest = std::function<bool(const AffinePoint&)>;
  using BoxTest = std::function<bool(const AffinePoint&, const AffinePoint&)>;

  static Domain whole_space();
  Domain(PointTest contains_point, BoxTest contains_box)
      : point_(std::move(contains_point)), box_(std::move(contains_box)) {}

  bool contains(const AffinePoint& x) const { return point_(x); }
  /// Whether the closed box [lo, hi] lies inside the domain.
  bool contains_box(const AffinePoint& lo, const AffinePoint& hi) const { return box_(lo, hi); }

  static Domain intersect(const Domain& a, const Domain& b);

 private:
  PointTest point_;
  BoxTest box_;
};

class SmoothForm {
 public:
  using Jet = std::function<GradedElement(const AffinePoint&, std::span<const int>)>;
  static constexpr int kUnbounded = INT_MAX;

  SmoothForm(FormType type, Jet jet, int analytic_order = kUnbounded,
             Domain domain = Domain::whole_space());

  static SmoothForm constant(const GradedElement& value);
  static SmoothForm zero(FormType type);

  GradedElement operator()(const AffinePoint& x) const;
  /// ∂_D of the coefficient field; D need not be sorted.
  GradedElement partial(const AffinePoint& x, std::span<const int> dirs) const;
  GradedElement partial(const AffinePoint& x, std::initializer_list<int> dirs) const;

  const FormType& type() const { return type_; }
  Parity parity() const { return type_.parity; }
  int grade() const { return type_.grade; }
  int dim() const { return type_.space.dim; }
  const SpaceDescriptor& space() const { return type_.space; }
  int analytic_order() const { return analytic_order_; }
  const Domain& domain() const { return domain_; }

  /// Copy whose derivatives above `order` use central differences.
  SmoothForm with_analytic_order(int order) const;

 private:
  FormType type_;
  std::shared_ptr<const Jet> jet_;
  int analytic_order_;
  Domain domain_;
};

class FormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// d A; rejects grade-m forms.
SmoothForm exterior_derivative(const SmoothForm& a);

SmoothForm operator+(const SmoothForm& a, const SmoothForm& b);
SmoothForm operator-(const SmoothForm& a, const SmoothForm& b);
SmoothForm operator*(double s, const SmoothForm& a);
SmoothForm wedge(const SmoothForm& a, const SmoothForm& b);

/// Pointwise application of a point-independent linear map.
SmoothForm map_linear(const SmoothForm& a, FormType out,
                      std::function<GradedElement(const GradedElement&)> map);

/// Pointwise map of several forms that may depend on x and is not assumed
/// linear; only values are analytic, derivatives come from finite differences.
SmoothForm map_pointwise(std::vector<SmoothForm> inputs, FormType out,
                         std::function<GradedElement(const AffinePoint&,
                                                     std::span<const GradedElement>)> map);

/// Pointwise map that is linear in the inputs with point-independent
/// coefficients; derivatives pass through analytically.
SmoothForm map_linear_multi(std::vector<SmoothForm> inputs, FormType out,
                            std::function<GradedElement(std::span<const GradedElement>)> map);

/// A q-cell (χ, o) with χ defined on [0,1]^q.
struct Cell {
  using Map = std::function<AffinePoint(std::span<const double>)>;
  using Tangent = std::function<Eigen::VectorXd(std::span<const double>, int)>;

  int grade = 0;
  SpaceDescriptor space;
  Map map;
  Tangent tangent;  // D_i χ(s)
  Orientation orientation = Orientation::reference();

  static Cell point(const AffinePoint& x, SpaceDescriptor space,
                    Orientation o = Orientation::reference());
  /// χ(s) = origin + Σ s_i edges[i].
  static Cell affine(const AffinePoint& origin, std::vector<Eigen::VectorXd> edges,
                     SpaceDescriptor space, Orientation o = Orientation::reference());

  /// χ^{(i, side)} for 1-based i.
  Cell face(int i, int side) const;
  Cell with_orientation(Orientation o) const;
};

struct ChainTerm {
  double weight;
  Cell cell;
};

/// Formal combination of q-cells, read as an even or odd chain.
class Chain {
 public:
  explicit Chain(int grade, Parity parity = Parity::Even) : grade_(grade), parity_(parity) {}
  Chain(int grade, std::vector<ChainTerm> terms, Parity parity = Parity::Even);
  static Chain of(const Cell& cell, double weight = 1.0, Parity parity = Parity::Even);

  void add(double weight, Cell cell);
  int grade() const { return grade_; }
  Parity parity() const { return parity_; }
  const std::vector<ChainTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

 private:
  int grade_;
  Parity parity_;
  std::vector<ChainTerm> terms_;
};

/// Σ (-1)^{i-1} (face(i,1) - face(i,0)); the empty chain of grade -1 for q = 0.
Chain boundary_chain(const Chain& c);

double integrate_cell(const SmoothForm& a, const Cell& cell, int order = kDefaultQuadratureOrder,
                      kernels::Execution exec = kernels::default_execution());
double integrate_chain(const SmoothForm& a, const Chain& c, int order = kDefaultQuadratureOrder,
                       kernels::Execution exec = kernels::default_execution());

/// |∫_C dA - ∫_{∂C} A|; form and chain must share parity.
double stokes_residual(const SmoothForm& a, const Chain& c, int order = kDefaultQuadratureOrder);

}  // namespace twistform
