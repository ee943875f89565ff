#include "twistform/exterior_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace twistform {

const char* to_string(Kind k) { return k == Kind::Covector ? "covector" : "vector"; }
const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

SpaceDescriptor::SpaceDescriptor(int m, int first) : dim(m), first_label(first) {
  if (m < 1 || m > kMaxDim)
    throw std::out_of_range("dimension must lie in 1.." + std::to_string(kMaxDim));
}

namespace {

void require_dim(const GradedElement& a, const GradedElement& b, const char* what) {
  if (a.dim() != b.dim())
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a.dim()) +
                            " vs " + std::to_string(b.dim()));
}

void require_kind(const GradedElement& a, Kind k, const char* what) {
  if (a.kind() != k)
    throw KindMismatch(std::string(what) + ": expected a " + to_string(k) + ", got a " +
                       to_string(a.kind()));
}

}  // namespace

GradedElement::GradedElement(Kind kind, Parity parity, int grade, SpaceDescriptor space)
    : kind_(kind), parity_(parity), grade_(grade), space_(space) {
  if (space.dim < 1) throw std::invalid_argument("graded element needs a space of dimension >= 1");
  if (grade < 0 || grade > space.dim)
    throw GradeOverflow("grade " + std::to_string(grade) + " outside 0.." +
                        std::to_string(space.dim));
  coeffs_ = Coeffs::Zero(binomial(space.dim, grade));
}

GradedElement::GradedElement(Kind kind, Parity parity, int grade, SpaceDescriptor space,
                             const Coeffs& coeffs)
    : GradedElement(kind, parity, grade, space) {
  if (coeffs.size() != coeffs_.size())
    throw std::invalid_argument("coefficient table has " + std::to_string(coeffs.size()) +
                                " entries, expected " + std::to_string(coeffs_.size()));
  coeffs_ = coeffs;
}

GradedElement GradedElement::basis(Kind kind, Parity parity, SpaceDescriptor space,
                                   std::span<const int> positions) {
  const int q = static_cast<int>(positions.size());
  GradedElement out(kind, parity, q, space);
  std::vector<int> sorted(positions.begin(), positions.end());
  int sign = 1;
  // Insertion sort, counting transpositions.
  for (std::size_t i = 1; i < sorted.size(); ++i)
    for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
      std::swap(sorted[j - 1], sorted[j]);
      sign = -sign;
    }
  for (int p : sorted)
    if (p < 0 || p >= space.dim) throw std::out_of_range("basis position outside the space");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return out;
  out.coeffs_[rank_of(space.dim, indices_mask(sorted))] = sign;
  return out;
}

GradedElement GradedElement::basis(Kind kind, Parity parity, SpaceDescriptor space,
                                   std::initializer_list<int> positions) {
  return basis(kind, parity, space, std::span<const int>(positions.begin(), positions.size()));
}

GradedElement GradedElement::scalar(Parity parity, SpaceDescriptor space, double value, Kind kind) {
  GradedElement out(kind, parity, 0, space);
  out.coeffs_[0] = value;
  return out;
}

GradedElement GradedElement::from_components(Kind kind, Parity parity, SpaceDescriptor space,
                                             std::span<const double> components) {
  if (static_cast<int>(components.size()) != space.dim)
    throw DimensionMismatch("component count does not match the dimension");
  GradedElement out(kind, parity, 1, space);
  for (int i = 0; i < space.dim; ++i) out.coeffs_[i] = components[i];
  return out;
}

double GradedElement::coeff(std::span<const int> positions) const {
  if (static_cast<int>(positions.size()) != grade_) throw GradeMismatch("tuple length != grade");
  for (std::size_t i = 1; i < positions.size(); ++i)
    if (positions[i - 1] >= positions[i])
      throw std::invalid_argument("coefficient tuple must be strictly increasing");
  return coeffs_[rank_of(dim(), indices_mask(positions))];
}

double GradedElement::coeff(std::initializer_list<int> positions) const {
  return coeff(std::span<const int>(positions.begin(), positions.size()));
}

GradedElement GradedElement::with_coeffs(const Coeffs& c) const {
  return GradedElement(kind_, parity_, grade_, space_, c);
}

double GradedElement::max_abs() const {
  return coeffs_.size() == 0 ? 0.0 : coeffs_.cwiseAbs().maxCoeff();
}

void require_same_type(const GradedElement& a, const GradedElement& b, const char* what) {
  require_dim(a, b, what);
  if (a.kind() != b.kind()) throw KindMismatch(std::string(what) + ": kind mismatch");
  if (a.grade() != b.grade()) throw GradeMismatch(std::string(what) + ": grade mismatch");
  if (a.parity() != b.parity()) throw ParityMismatch(std::string(what) + ": parity mismatch");
}

GradedElement operator+(const GradedElement& a, const GradedElement& b) {
  require_same_type(a, b, "sum");
  GradedElement out = a;
  out.coeffs_ += b.coeffs_;
  return out;
}

GradedElement operator-(const GradedElement& a, const GradedElement& b) {
  require_same_type(a, b, "difference");
  GradedElement out = a;
  out.coeffs_ -= b.coeffs_;
  return out;
}

GradedElement operator-(const GradedElement& a) {
  GradedElement out = a;
  out.coeffs_ = -out.coeffs_;
  return out;
}

GradedElement operator*(double s, const GradedElement& a) {
  GradedElement out = a;
  out.coeffs_ *= s;
  return out;
}

double max_abs_diff(const GradedElement& a, const GradedElement& b) { return (a - b).max_abs(); }

double pair(const GradedElement& a, const GradedElement& w) {
  require_kind(a, Kind::Covector, "pair");
  require_kind(w, Kind::Vector, "pair");
  require_dim(a, w, "pair");
  if (a.grade() != w.grade())
    throw GradeMismatch("pair: grades " + std::to_string(a.grade()) + " and " +
                        std::to_string(w.grade()));
  if (a.parity() != w.parity()) throw ParityMismatch("pair: parities differ");
  return a.coeffs().dot(w.coeffs());
}

GradedElement wedge(const GradedElement& x, const GradedElement& y) {
  require_dim(x, y, "wedge");
  if (x.kind() != y.kind()) throw KindMismatch("wedge: factors must be of the same kind");
  const int m = x.dim();
  const int q = x.grade() + y.grade();
  if (q > m)
    throw GradeOverflow("wedge: grade " + std::to_string(q) + " exceeds dimension " +
                        std::to_string(m));
  Coeffs c = Coeffs::Zero(binomial(m, q));
  const auto xs = combinations(m, x.grade());
  const auto ys = combinations(m, y.grade());
  for (int i = 0; i < static_cast<int>(xs.size()); ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    for (int j = 0; j < static_cast<int>(ys.size()); ++j) {
      const int s = concat_sign(xs[i], ys[j]);
      if (s != 0) c[rank_of(m, xs[i] | ys[j])] += s * xi * y[j];
    }
  }
  return GradedElement(x.kind(), x.parity() * y.parity(), q, x.space(), c);
}

GradedElement interior_left(const GradedElement& w, const GradedElement& a) {
  require_kind(w, Kind::Vector, "interior_left");
  require_kind(a, Kind::Covector, "interior_left");
  require_dim(w, a, "interior_left");
  if (w.grade() > a.grade())
    throw GradeMismatch("interior_left: vector grade " + std::to_string(w.grade()) +
                        " exceeds covector grade " + std::to_string(a.grade()));
  const int m = w.dim();
  const int q = a.grade() - w.grade();
  Coeffs c = Coeffs::Zero(binomial(m, q));
  const auto ws = combinations(m, w.grade());
  const auto as = combinations(m, a.grade());
  for (int i = 0; i < static_cast<int>(ws.size()); ++i) {
    if (w[i] == 0.0) continue;
    for (int k = 0; k < static_cast<int>(as.size()); ++k) {
      if ((as[k] & ws[i]) != ws[i]) continue;
      const IndexMask rest = as[k] & ~ws[i];
      c[rank_of(m, rest)] += concat_sign(ws[i], rest) * w[i] * a[k];
    }
  }
  return GradedElement(Kind::Covector, w.parity() * a.parity(), q, a.space(), c);
}

GradedElement interior_right(const GradedElement& w, const GradedElement& a) {
  require_kind(w, Kind::Vector, "interior_right");
  require_kind(a, Kind::Covector, "interior_right");
  require_dim(w, a, "interior_right");
  if (w.grade() < a.grade())
    throw GradeMismatch("interior_right: covector grade " + std::to_string(a.grade()) +
                        " exceeds vector grade " + std::to_string(w.grade()));
  const int m = w.dim();
  const int q = w.grade() - a.grade();
  Coeffs c = Coeffs::Zero(binomial(m, q));
  const auto ws = combinations(m, w.grade());
  const auto as = combinations(m, a.grade());
  for (int k = 0; k < static_cast<int>(ws.size()); ++k) {
    if (w[k] == 0.0) continue;
    for (int j = 0; j < static_cast<int>(as.size()); ++j) {
      if ((ws[k] & as[j]) != as[j]) continue;
      const IndexMask rest = ws[k] & ~as[j];
      c[rank_of(m, rest)] += concat_sign(rest, as[j]) * w[k] * a[j];
    }
  }
  return GradedElement(Kind::Vector, w.parity() * a.parity(), q, w.space(), c);
}

GradedElement reorient(const GradedElement& x, Orientation o) {
  if (x.parity() == Parity::Odd && !o.is_reference()) return -x;
  return x;
}

GradedElement simple_multivector(SpaceDescriptor space, std::span<const Eigen::VectorXd> vectors,
                                 Parity parity) {
  GradedElement out = GradedElement::scalar(parity, space, 1.0, Kind::Vector);
  for (const auto& v : vectors) {
    if (v.size() != space.dim) throw DimensionMismatch("vector length != dimension");
    std::vector<double> comps(v.data(), v.data() + v.size());
    out = wedge(out, GradedElement::from_components(Kind::Vector, Parity::Even, space, comps));
  }
  return out;
}

double evaluate(const GradedElement& a, std::span<const Eigen::VectorXd> vectors, Orientation o) {
  require_kind(a, Kind::Covector, "evaluate");
  if (static_cast<int>(vectors.size()) != a.grade())
    throw GradeMismatch("evaluate: number of vector arguments != grade");
  const GradedElement w = simple_multivector(a.space(), vectors, a.parity());
  return pair(reorient(a, o), w);
}

}  // namespace twistform
