#include "twistform/currents.hpp"

#include <cmath>

namespace twistform {

namespace {

void require_top_odd(const SmoothForm& a, int grade, const char* what) {
  if (a.parity() != Parity::Odd)
    throw ParityMismatch(std::string(what) + ": top-dimensional currents are odd; got an even form");
  if (a.grade() != grade)
    throw GradeMismatch(std::string(what) + ": form has grade " + std::to_string(a.grade()) +
                        ", expected " + std::to_string(grade));
}

// Bounding box of the corners of a cell; exact for affine cells.
std::pair<AffinePoint, AffinePoint> corner_box(const Cell& cell) {
  const int q = cell.grade;
  std::vector<double> s(static_cast<std::size_t>(q));
  AffinePoint lo = cell.map(s), hi = lo;
  for (unsigned corner = 1; corner < (1u << q); ++corner) {
    for (int i = 0; i < q; ++i) s[i] = (corner >> i) & 1u ? 1.0 : 0.0;
    const AffinePoint x = cell.map(s);
    lo = lo.cwiseMin(x);
    hi = hi.cwiseMax(x);
  }
  return {lo, hi};
}

}  // namespace

Cell CubeDomain::cell(SpaceDescriptor space) const {
  if (min.size() != space.dim || max.size() != space.dim)
    throw DimensionMismatch("box corners have the wrong dimension");
  std::vector<Eigen::VectorXd> edges;
  for (int i = 0; i < space.dim; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(space.dim);
    e[i] = max[i] - min[i];
    edges.push_back(e);
  }
  return Cell::affine(min, std::move(edges), space);
}

double CubeDomain::volume() const { return (max - min).prod(); }

Current::Current(SpaceDescriptor space, Variant v, int order)
    : space_(space), value_(std::move(v)), order_(order) {
  if (order < 1) throw CurrentError("quadrature order must be >= 1");
}

Current Current::cube(SpaceDescriptor space, CubeDomain box, int quadrature_order) {
  if (box.min.size() != space.dim || box.max.size() != space.dim)
    throw DimensionMismatch("box corners have the wrong dimension");
  for (int i = 0; i < space.dim; ++i)
    if (!(box.min[i] < box.max[i])) throw CurrentError("box must satisfy min < max on every axis");
  return Current(space, std::move(box), quadrature_order);
}

Current Current::dirac(AffinePoint x, GradedElement w) {
  if (w.kind() != Kind::Vector || w.parity() != Parity::Odd || w.grade() != w.dim())
    throw CurrentError("Dirac current needs an odd m-vector");
  if (x.size() != w.dim()) throw DimensionMismatch("Dirac point has the wrong dimension");
  const SpaceDescriptor space = w.space();
  return Current(space, DiracCurrent{std::move(x), std::move(w)}, 1);
}

Current Current::chain(SpaceDescriptor space, Chain c, int quadrature_order) {
  if (c.grade() != space.dim) throw CurrentError("chain current needs m-cells");
  if (c.parity() != Parity::Odd) throw CurrentError("chain current needs an odd chain");
  return Current(space, ChainCurrent{std::move(c)}, quadrature_order);
}

Current Current::with_quadrature_order(int order) const {
  return Current(space_, value_, order);
}

bool Current::support_in(const Domain& domain) const {
  if (const auto* box = std::get_if<CubeDomain>(&value_)) return domain.contains_box(box->min, box->max);
  if (const auto* d = std::get_if<DiracCurrent>(&value_)) return domain.contains(d->point);
  for (const auto& t : std::get<ChainCurrent>(value_).chain.terms()) {
    const auto [lo, hi] = corner_box(t.cell);
    if (!domain.contains_box(lo, hi)) return false;
  }
  return true;
}

void require_support(const SmoothForm& a, const Current& c) {
  if (a.dim() != c.space().dim) throw DimensionMismatch("form and current live on different spaces");
  if (!c.support_in(a.domain())) throw CurrentError("support of the current is not inside the form's domain");
}

double integrate_current(const SmoothForm& a, const Current& c, kernels::Execution exec) {
  require_top_odd(a, c.space().dim, "integrate_current");
  require_support(a, c);
  if (const auto* d = std::get_if<DiracCurrent>(&c.value())) return pair(a(d->point), d->w);
  if (const auto* box = std::get_if<CubeDomain>(&c.value()))
    return integrate_cell(a, box->cell(c.space()), c.quadrature_order(), exec);
  return integrate_chain(a, std::get<ChainCurrent>(c.value()).chain, c.quadrature_order(), exec);
}

double integrate_boundary(const SmoothForm& a, const Current& c, kernels::Execution exec) {
  require_top_odd(a, c.space().dim - 1, "integrate_boundary");
  require_support(a, c);
  if (const auto* d = std::get_if<DiracCurrent>(&c.value()))
    return pair(exterior_derivative(a)(d->point), d->w);
  if (const auto* box = std::get_if<CubeDomain>(&c.value()))
    return integrate_chain(a, boundary_chain(Chain::of(box->cell(c.space()), 1.0, Parity::Odd)),
                           c.quadrature_order(), exec);
  return integrate_chain(a, boundary_chain(std::get<ChainCurrent>(c.value()).chain),
                         c.quadrature_order(), exec);
}

}  // namespace twistform
