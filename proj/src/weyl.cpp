#include "twistform/weyl.hpp"

#include <Eigen/LU>

#include <vector>

namespace twistform {

namespace {

void require_even_covector(const GradedElement& a, int q, const char* what) {
  if (a.kind() != Kind::Covector) throw KindMismatch(std::string(what) + ": expected a covector");
  if (a.parity() != Parity::Even) throw ParityMismatch(std::string(what) + ": expected even");
  if (a.grade() != q) throw GradeMismatch(std::string(what) + ": grade mismatch");
}

void require_volume_form(const GradedElement& e, const char* what) {
  if (e.kind() != Kind::Covector || e.parity() != Parity::Odd || e.grade() != e.dim())
    throw AlgebraError(std::string(what) + ": expected an odd m-covector");
}

}  // namespace

GradedElement unit_volume(SpaceDescriptor space) {
  GradedElement vol(Kind::Covector, Parity::Odd, space.dim, space);
  Coeffs c(1);
  c[0] = 1.0;
  return vol.with_coeffs(c);
}

GradedElement unit_volume_dual(SpaceDescriptor space) {
  GradedElement u(Kind::Vector, Parity::Odd, space.dim, space);
  Coeffs c(1);
  c[0] = 1.0;
  return u.with_coeffs(c);
}

TensorQM::TensorQM(const GradedElement& w, const GradedElement& e) : w_(w) {
  if (w.kind() != Kind::Vector || w.parity() != Parity::Even)
    throw AlgebraError("tensor factor w must be an even multivector");
  require_volume_form(e, "tensor factor e");
  if (w.dim() != e.dim()) throw DimensionMismatch("tensor factors live in different spaces");
  w_ = e[0] * w;
}

TensorQM TensorQM::zero(SpaceDescriptor space, int q) {
  return TensorQM(GradedElement(Kind::Vector, Parity::Even, q, space));
}

TensorQM operator+(const TensorQM& a, const TensorQM& b) { return TensorQM(a.w_ + b.w_); }
TensorQM operator*(double s, const TensorQM& t) { return TensorQM(s * t.w_); }

GradedElement weyl_map(const TensorQM& t) { return interior_left(t.w(), t.e()); }

GradedElement minor_expansion(const GradedElement& w, const GradedElement& e) {
  if (w.kind() != Kind::Vector || w.parity() != Parity::Even)
    throw AlgebraError("minor_expansion: w must be an even multivector");
  require_volume_form(e, "minor_expansion");
  if (w.dim() != e.dim()) throw DimensionMismatch("minor_expansion: spaces differ");

  const int m = w.dim();
  const int q = w.grade();
  GradedElement out(Kind::Covector, Parity::Odd, m - q, w.space());
  Coeffs c = out.coeffs();
  for (IndexMask nu : combinations(m, q)) {
    const std::vector<int> pos = mask_indices(nu);
    // With 1-based ν_i = pos[i] + 1 and i = 1..q, ν_i - i = pos[i] - i (0-based i).
    int exponent = 0;
    for (int i = 0; i < q; ++i) exponent += pos[i] - i;
    const double sign = (exponent % 2 == 0) ? 1.0 : -1.0;
    std::vector<int> complement;
    for (int k = 0; k < m; ++k)
      if (!(nu & (IndexMask{1} << k))) complement.push_back(k);
    c[rank_of(m, indices_mask(complement))] += sign * w.coeff(pos) * e[0];
  }
  return out.with_coeffs(c);
}

GradedElement minor_expansion(std::span<const Eigen::VectorXd> factors, const GradedElement& e) {
  require_volume_form(e, "minor_expansion");
  const int m = e.dim();
  const int q = static_cast<int>(factors.size());
  if (q > m) throw GradeOverflow("minor_expansion: more factors than dimensions");
  Coeffs minors = Coeffs::Zero(binomial(m, q));
  const auto nus = combinations(m, q);
  for (int r = 0; r < static_cast<int>(nus.size()); ++r) {
    const std::vector<int> pos = mask_indices(nus[r]);
    Eigen::MatrixXd block(q, q);
    for (int i = 0; i < q; ++i)
      for (int s = 0; s < q; ++s) block(i, s) = factors[s][pos[i]];
    minors[r] = q == 0 ? 1.0 : block.determinant();
  }
  GradedElement w(Kind::Vector, Parity::Even, q, e.space(), minors);
  return minor_expansion(w, e);
}

Eigen::MatrixXd weyl_matrix(SpaceDescriptor space, int q) {
  const int m = space.dim;
  const auto cols = combinations(m, q);
  Eigen::MatrixXd mat(binomial(m, m - q), cols.size());
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    const auto pos = mask_indices(cols[j]);
    const GradedElement basis = GradedElement::basis(Kind::Vector, Parity::Even, space, pos);
    const GradedElement image = weyl_map(TensorQM(basis, unit_volume(space)));
    for (int i = 0; i < image.size(); ++i) mat(i, j) = image[i];
  }
  return mat;
}

double tensor_pairing(const TensorQM& t, const GradedElement& a, const GradedElement& u) {
  return pair(a, t.w()) * pair(t.e(), u);
}

HomQM::HomQM(SpaceDescriptor space, int q, Eigen::RowVectorXd row)
    : space_(space), q_(q), row_(std::move(row)) {
  if (row_.size() != binomial(space.dim, q))
    throw AlgebraError("HomQM row must have C(m, q) entries");
}

GradedElement HomQM::operator()(const GradedElement& a) const {
  require_even_covector(a, q_, "HomQM");
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i) s += row_[i] * a[i];
  return s * unit_volume(space_);
}

TensorQM iq_forward(const HomQM& l) {
  const SpaceDescriptor space = l.space();
  const GradedElement u = unit_volume_dual(space);
  const auto basis = combinations(space.dim, l.grade());
  Coeffs w(basis.size());
  // <i_q(l), e^I ⊗ u> = <e^I, w> <vol, u> = w^I.
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
    const auto pos = mask_indices(basis[i]);
    w[i] = pair(l(GradedElement::basis(Kind::Covector, Parity::Even, space, pos)), u);
  }
  return TensorQM(GradedElement(Kind::Vector, Parity::Even, l.grade(), space, w),
                  unit_volume(space));
}

HomQM iq_inverse(const TensorQM& t) {
  const SpaceDescriptor space = t.space();
  const GradedElement u = unit_volume_dual(space);
  const auto basis = combinations(space.dim, t.grade());
  Eigen::RowVectorXd row(basis.size());
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
    const auto pos = mask_indices(basis[i]);
    row[i] = tensor_pairing(t, GradedElement::basis(Kind::Covector, Parity::Even, space, pos), u);
  }
  return HomQM(space, t.grade(), row);
}

BilinearMap::BilinearMap(SpaceDescriptor space, int q, int q2, Eigen::MatrixXd coeffs)
    : space_(space), q_(q), q2_(q2), coeffs_(std::move(coeffs)) {
  if (coeffs_.rows() != binomial(space.dim, q) || coeffs_.cols() != binomial(space.dim, q2))
    throw AlgebraError("bilinear map: coefficient tensor has shape " +
                       std::to_string(coeffs_.rows()) + "x" + std::to_string(coeffs_.cols()) +
                       ", expected " + std::to_string(binomial(space.dim, q)) + "x" +
                       std::to_string(binomial(space.dim, q2)));
}

double BilinearMap::scalar(const GradedElement& a, const GradedElement& a2) const {
  require_even_covector(a, q_, "bilinear map (first argument)");
  require_even_covector(a2, q2_, "bilinear map (second argument)");
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; j < a2.size(); ++j) s += a[i] * coeffs_(i, j) * a2[j];
  }
  return s;
}

GradedElement BilinearMap::operator()(const GradedElement& a, const GradedElement& a2) const {
  return scalar(a, a2) * unit_volume(space_);
}

TensorQM BilinearRepresentation::first(const GradedElement& a) const {
  require_even_covector(a, b_.first_grade(), "bilinear representation");
  Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(b_.matrix().cols());
  for (int i = 0; i < a.size(); ++i) row += a[i] * b_.matrix().row(i);
  return iq_forward(HomQM(b_.space(), b_.second_grade(), row));
}

TensorQM BilinearRepresentation::second(const GradedElement& a2) const {
  require_even_covector(a2, b_.second_grade(), "bilinear representation");
  Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(b_.matrix().rows());
  for (int j = 0; j < a2.size(); ++j) row += a2[j] * b_.matrix().col(j).transpose();
  return iq_forward(HomQM(b_.space(), b_.first_grade(), row));
}

BilinearRepresentation represent_bilinear(const BilinearMap& b) { return BilinearRepresentation(b); }

}  // namespace twistform
