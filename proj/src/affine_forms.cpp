#include "twistform/affine_forms.hpp"

#include <algorithm>
#include <cmath>

namespace twistform {

namespace {

// Sorted copy of a direction list; derivative orders stay small.
std::vector<int> sorted_dirs(std::span<const int> dirs) {
  std::vector<int> d(dirs.begin(), dirs.end());
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<int> with_direction(std::span<const int> dirs, int mu) {
  std::vector<int> d(dirs.begin(), dirs.end());
  d.insert(std::upper_bound(d.begin(), d.end(), mu), mu);
  return d;
}

void require_same_form_type(const SmoothForm& a, const SmoothForm& b, const char* what) {
  if (!(a.type() == b.type())) throw FormError(std::string(what) + ": form types differ");
}

Domain common_domain(const std::vector<SmoothForm>& forms) {
  Domain d = Domain::whole_space();
  for (const auto& f : forms) d = Domain::intersect(d, f.domain());
  return d;
}

}  // namespace

Domain Domain::whole_space() {
  return Domain([](const AffinePoint&) { return true; },
                [](const AffinePoint&, const AffinePoint&) { return true; });
}

Domain Domain::intersect(const Domain& a, const Domain& b) {
  return Domain([a, b](const AffinePoint& x) { return a.contains(x) && b.contains(x); },
                [a, b](const AffinePoint& lo, const AffinePoint& hi) {
                  return a.contains_box(lo, hi) && b.contains_box(lo, hi);
                });
}

SmoothForm::SmoothForm(FormType type, Jet jet, int analytic_order, Domain domain)
    : type_(type),
      jet_(std::make_shared<const Jet>(std::move(jet))),
      analytic_order_(analytic_order),
      domain_(std::move(domain)) {
  if (type.grade < 0 || type.grade > type.space.dim)
    throw FormError("form grade outside 0..m");
  if (analytic_order < 0) throw FormError("analytic order must be >= 0");
}

SmoothForm SmoothForm::constant(const GradedElement& value) {
  if (value.kind() != Kind::Covector) throw FormError("forms take covector values");
  const GradedElement zero = 0.0 * value;
  return SmoothForm({value.parity(), value.grade(), value.space()},
                    [value, zero](const AffinePoint&, std::span<const int> dirs) {
                      return dirs.empty() ? value : zero;
                    });
}

SmoothForm SmoothForm::zero(FormType type) {
  return constant(GradedElement(Kind::Covector, type.parity, type.grade, type.space));
}

GradedElement SmoothForm::operator()(const AffinePoint& x) const { return partial(x, {}); }

GradedElement SmoothForm::partial(const AffinePoint& x, std::initializer_list<int> dirs) const {
  return partial(x, std::span<const int>(dirs.begin(), dirs.size()));
}

GradedElement SmoothForm::partial(const AffinePoint& x, std::span<const int> dirs) const {
  if (x.size() != dim()) throw DimensionMismatch("point has the wrong number of coordinates");
  const std::vector<int> d = sorted_dirs(dirs);
  for (int mu : d)
    if (mu < 0 || mu >= dim()) throw std::out_of_range("derivative direction outside 0..m-1");
  if (static_cast<int>(d.size()) <= analytic_order_) {
    GradedElement v = (*jet_)(x, d);
    if (v.kind() != Kind::Covector || v.parity() != parity() || v.grade() != grade() ||
        v.dim() != dim())
      throw FormError("form evaluator returned a value of the wrong type");
    return v;
  }
  // Central difference in the last direction of the highest analytic order.
  const int mu = d.back();
  const std::span<const int> rest(d.data(), d.size() - 1);
  AffinePoint xp = x, xm = x;
  xp[mu] += kFiniteDifferenceStep;
  xm[mu] -= kFiniteDifferenceStep;
  return (1.0 / (2.0 * kFiniteDifferenceStep)) * (partial(xp, rest) - partial(xm, rest));
}

SmoothForm SmoothForm::with_analytic_order(int order) const {
  SmoothForm copy = *this;
  copy.analytic_order_ = std::min(order, analytic_order_);
  if (copy.analytic_order_ < 0) throw FormError("analytic order must be >= 0");
  return copy;
}

SmoothForm exterior_derivative(const SmoothForm& a) {
  if (a.grade() >= a.dim())
    throw FormError("exterior derivative of a top-degree form (grade " +
                    std::to_string(a.grade()) + ")");
  const FormType out{a.parity(), a.grade() + 1, a.space()};
  return SmoothForm(
      out,
      [a](const AffinePoint& x, std::span<const int> dirs) {
        GradedElement sum(Kind::Covector, a.parity(), a.grade() + 1, a.space());
        for (int mu = 0; mu < a.dim(); ++mu) {
          const GradedElement e_mu = GradedElement::basis(Kind::Covector, Parity::Even, a.space(), {mu});
          sum = sum + wedge(e_mu, a.partial(x, with_direction(dirs, mu)));
        }
        return sum;
      },
      SmoothForm::kUnbounded, a.domain());
}

SmoothForm operator+(const SmoothForm& a, const SmoothForm& b) {
  require_same_form_type(a, b, "form sum");
  return SmoothForm(
      a.type(),
      [a, b](const AffinePoint& x, std::span<const int> dirs) {
        return a.partial(x, dirs) + b.partial(x, dirs);
      },
      SmoothForm::kUnbounded, Domain::intersect(a.domain(), b.domain()));
}

SmoothForm operator-(const SmoothForm& a, const SmoothForm& b) { return a + (-1.0) * b; }

SmoothForm operator*(double s, const SmoothForm& a) {
  return SmoothForm(
      a.type(),
      [s, a](const AffinePoint& x, std::span<const int> dirs) { return s * a.partial(x, dirs); },
      SmoothForm::kUnbounded, a.domain());
}

SmoothForm wedge(const SmoothForm& a, const SmoothForm& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("wedge of forms on different spaces");
  if (a.grade() + b.grade() > a.dim()) throw GradeOverflow("wedge of forms exceeds dimension");
  const FormType out{a.parity() * b.parity(), a.grade() + b.grade(), a.space()};
  return SmoothForm(
      out,
      [a, b, out](const AffinePoint& x, std::span<const int> dirs) {
        // Leibniz rule over all splits of the direction list.
        const std::size_t n = dirs.size();
        GradedElement sum(Kind::Covector, out.parity, out.grade, out.space);
        std::vector<int> left, right;
        for (std::size_t subset = 0; subset < (std::size_t{1} << n); ++subset) {
          left.clear();
          right.clear();
          for (std::size_t k = 0; k < n; ++k)
            ((subset >> k) & 1u ? left : right).push_back(dirs[k]);
          sum = sum + wedge(a.partial(x, left), b.partial(x, right));
        }
        return sum;
      },
      SmoothForm::kUnbounded, Domain::intersect(a.domain(), b.domain()));
}

SmoothForm map_linear(const SmoothForm& a, FormType out,
                      std::function<GradedElement(const GradedElement&)> map) {
  return SmoothForm(
      out,
      [a, map = std::move(map)](const AffinePoint& x, std::span<const int> dirs) {
        return map(a.partial(x, dirs));
      },
      SmoothForm::kUnbounded, a.domain());
}

SmoothForm map_linear_multi(std::vector<SmoothForm> inputs, FormType out,
                            std::function<GradedElement(std::span<const GradedElement>)> map) {
  Domain domain = common_domain(inputs);
  return SmoothForm(
      out,
      [inputs = std::move(inputs), map = std::move(map)](const AffinePoint& x,
                                                         std::span<const int> dirs) {
        std::vector<GradedElement> values;
        values.reserve(inputs.size());
        for (const auto& f : inputs) values.push_back(f.partial(x, dirs));
        return map(values);
      },
      SmoothForm::kUnbounded, std::move(domain));
}

SmoothForm map_pointwise(std::vector<SmoothForm> inputs, FormType out,
                         std::function<GradedElement(const AffinePoint&,
                                                     std::span<const GradedElement>)> map) {
  Domain domain = common_domain(inputs);
  return SmoothForm(
      out,
      [inputs = std::move(inputs), map = std::move(map)](const AffinePoint& x,
                                                         std::span<const int>) {
        std::vector<GradedElement> values;
        values.reserve(inputs.size());
        for (const auto& f : inputs) values.push_back(f(x));
        return map(x, values);
      },
      0, std::move(domain));
}

Cell Cell::point(const AffinePoint& x, SpaceDescriptor space, Orientation o) {
  Cell c;
  c.grade = 0;
  c.space = space;
  c.map = [x](std::span<const double>) { return x; };
  c.tangent = [](std::span<const double>, int) -> Eigen::VectorXd {
    throw FormError("a zero-cell has no tangent vectors");
  };
  c.orientation = o;
  return c;
}

Cell Cell::affine(const AffinePoint& origin, std::vector<Eigen::VectorXd> edges,
                  SpaceDescriptor space, Orientation o) {
  if (origin.size() != space.dim) throw DimensionMismatch("cell origin has the wrong dimension");
  for (const auto& e : edges)
    if (e.size() != space.dim) throw DimensionMismatch("cell edge has the wrong dimension");
  if (static_cast<int>(edges.size()) > space.dim) throw GradeOverflow("cell grade exceeds m");
  Cell c;
  c.grade = static_cast<int>(edges.size());
  c.space = space;
  c.map = [origin, edges](std::span<const double> s) {
    AffinePoint x = origin;
    for (std::size_t i = 0; i < edges.size(); ++i) x += s[i] * edges[i];
    return x;
  };
  c.tangent = [edges](std::span<const double>, int i) { return edges[i]; };
  c.orientation = o;
  return c;
}

Cell Cell::face(int i, int side) const {
  if (grade < 1) throw FormError("a zero-cell has no faces");
  if (i < 1 || i > grade) throw std::out_of_range("face index outside 1..q");
  const double fixed = side ? 1.0 : 0.0;
  const int pos = i - 1;
  const Cell parent = *this;
  auto lift = [pos, fixed](std::span<const double> s) {
    std::vector<double> full(s.begin(), s.end());
    full.insert(full.begin() + pos, fixed);
    return full;
  };
  Cell f;
  f.grade = grade - 1;
  f.space = space;
  f.orientation = orientation;
  f.map = [parent, lift](std::span<const double> s) { return parent.map(lift(s)); };
  f.tangent = [parent, lift, pos](std::span<const double> s, int j) {
    return parent.tangent(lift(s), j < pos ? j : j + 1);
  };
  return f;
}

Cell Cell::with_orientation(Orientation o) const {
  Cell c = *this;
  c.orientation = o;
  return c;
}

Chain::Chain(int grade, std::vector<ChainTerm> terms, Parity parity)
    : grade_(grade), parity_(parity), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.cell.grade != grade_) throw GradeMismatch("chain mixes cells of different grades");
}

Chain Chain::of(const Cell& cell, double weight, Parity parity) {
  return Chain(cell.grade, {ChainTerm{weight, cell}}, parity);
}

void Chain::add(double weight, Cell cell) {
  if (cell.grade != grade_) throw GradeMismatch("chain mixes cells of different grades");
  terms_.push_back({weight, std::move(cell)});
}

Chain boundary_chain(const Chain& c) {
  Chain out(c.grade() - 1, c.parity());
  if (c.grade() <= 0) return out;
  for (const auto& term : c.terms()) {
    for (int i = 1; i <= c.grade(); ++i) {
      const double sign = (i % 2 == 1) ? 1.0 : -1.0;
      out.add(sign * term.weight, term.cell.face(i, 1));
      out.add(-sign * term.weight, term.cell.face(i, 0));
    }
  }
  return out;
}

double integrate_cell(const SmoothForm& a, const Cell& cell, int order, kernels::Execution exec) {
  if (a.grade() != cell.grade)
    throw GradeMismatch("integrate_cell: form grade " + std::to_string(a.grade()) +
                        " vs cell grade " + std::to_string(cell.grade));
  if (a.dim() != cell.space.dim) throw DimensionMismatch("integrate_cell: spaces differ");
  if (cell.grade == 0) {
    const GradedElement v = reorient(a(cell.map({})), cell.orientation);
    return v[0];
  }
  const GaussLegendreRule rule(order);
  const int q = cell.grade;
  return kernels::tensor_quadrature(
      rule.nodes, rule.weights, q,
      [&](std::span<const double> s) {
        const AffinePoint x = cell.map(s);
        std::vector<Eigen::VectorXd> tangents;
        tangents.reserve(q);
        for (int i = 0; i < q; ++i) tangents.push_back(cell.tangent(s, i));
        return evaluate(a(x), tangents, cell.orientation);
      },
      exec);
}

double integrate_chain(const SmoothForm& a, const Chain& c, int order, kernels::Execution exec) {
  double sum = 0.0;
  for (const auto& t : c.terms()) sum += t.weight * integrate_cell(a, t.cell, order, exec);
  return sum;
}

double stokes_residual(const SmoothForm& a, const Chain& c, int order) {
  if (a.parity() != c.parity())
    throw ParityMismatch("stokes_residual: form and chain parities differ");
  if (a.grade() != c.grade() - 1) throw GradeMismatch("stokes_residual: need grade(A) = grade(C) - 1");
  const double interior = integrate_chain(exterior_derivative(a), c, order);
  const double boundary = integrate_chain(a, boundary_chain(c), order);
  return std::abs(interior - boundary);
}

}  // namespace twistform
