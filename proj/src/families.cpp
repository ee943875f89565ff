#include "twistform/families.hpp"

#include <cmath>

namespace twistform {

namespace {

double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

struct PreparedMonomial {
  double coeff;  // includes the sorting sign
  int rank;
  std::vector<int> powers;
};

// ∂^n of cos at θ.
double cos_derivative(double theta, std::size_t n) {
  switch (n % 4) {
    case 0: return std::cos(theta);
    case 1: return -std::sin(theta);
    case 2: return -std::cos(theta);
    default: return std::sin(theta);
  }
}

}  // namespace

SmoothForm polynomial_form(FormType type, std::vector<Monomial> terms) {
  const int m = type.space.dim;
  std::vector<PreparedMonomial> prepared;
  for (const auto& t : terms) {
    if (static_cast<int>(t.positions.size()) != type.grade)
      throw FormError("monomial index length differs from the form grade");
    if (static_cast<int>(t.powers.size()) != m)
      throw FormError("monomial needs one power per coordinate");
    for (int p : t.powers)
      if (p < 0) throw FormError("monomial powers must be non-negative");
    for (int pos : t.positions)
      if (pos < 0 || pos >= m) throw FormError("monomial index outside the basis");
    const GradedElement e = GradedElement::basis(Kind::Covector, type.parity, type.space, t.positions);
    if (e.is_zero()) continue;
    int rank = 0;
    while (e[rank] == 0.0) ++rank;
    prepared.push_back({t.coeff * e[rank], rank, t.powers});
  }
  const GradedElement zero(Kind::Covector, type.parity, type.grade, type.space);
  return SmoothForm(type, [prepared, zero, m](const AffinePoint& x, std::span<const int> dirs) {
    std::vector<int> order(static_cast<std::size_t>(m), 0);
    for (int d : dirs) ++order[d];
    Coeffs c = zero.coeffs();
    for (const auto& t : prepared) {
      double v = t.coeff;
      for (int i = 0; i < m && v != 0.0; ++i) {
        const int p = t.powers[i];
        const int n = order[i];
        if (n > p) {
          v = 0.0;
          break;
        }
        for (int k = 0; k < n; ++k) v *= p - k;
        v *= ipow(x[i], p - n);
      }
      c[t.rank] += v;
    }
    return zero.with_coeffs(c);
  });
}

SmoothForm trig_form(FormType type, std::vector<TrigTerm> terms) {
  const int m = type.space.dim;
  struct Prepared {
    double coeff;
    int rank;
    Eigen::VectorXd k;
    double phase;
  };
  std::vector<Prepared> prepared;
  for (const auto& t : terms) {
    if (static_cast<int>(t.positions.size()) != type.grade)
      throw FormError("trig term index length differs from the form grade");
    if (t.k.size() != m) throw FormError("trig term needs m wave components");
    for (int pos : t.positions)
      if (pos < 0 || pos >= m) throw FormError("trig term index outside the basis");
    const GradedElement e = GradedElement::basis(Kind::Covector, type.parity, type.space, t.positions);
    if (e.is_zero()) continue;
    int rank = 0;
    while (e[rank] == 0.0) ++rank;
    prepared.push_back({t.coeff * e[rank], rank, t.k, t.phase});
  }
  const GradedElement zero(Kind::Covector, type.parity, type.grade, type.space);
  return SmoothForm(type, [prepared, zero](const AffinePoint& x, std::span<const int> dirs) {
    Coeffs c = zero.coeffs();
    for (const auto& t : prepared) {
      double v = t.coeff * cos_derivative(t.k.dot(x) + t.phase, dirs.size());
      for (int d : dirs) v *= t.k[d];
      c[t.rank] += v;
    }
    return zero.with_coeffs(c);
  });
}

SmoothForm plane_wave(SpaceDescriptor space, Eigen::VectorXd k, Eigen::VectorXd pol, double amp,
                      double phase) {
  if (k.size() != space.dim || pol.size() != space.dim)
    throw FormError("plane wave: k and pol need m components");
  const GradedElement polarization =
      amp * GradedElement::from_components(Kind::Covector, Parity::Even, space,
                                           std::span<const double>(pol.data(), pol.size()));
  return SmoothForm({Parity::Even, 1, space},
                    [k, polarization, phase](const AffinePoint& x, std::span<const int> dirs) {
                      double scale = cos_derivative(k.dot(x) + phase, dirs.size());
                      for (int d : dirs) scale *= k[d];
                      return scale * polarization;
                    });
}

SmoothForm coulomb(SpaceDescriptor space, double charge, AffinePoint center) {
  const int m = space.dim;
  if (m < 2) throw FormError("coulomb: needs at least one spatial axis");
  if (center.size() != m) throw FormError("coulomb: center needs m components");
  const GradedElement e0 = GradedElement::basis(Kind::Covector, Parity::Even, space, {0});
  Domain domain(
      [center, m](const AffinePoint& x) {
        double r2 = 0.0;
        for (int i = 1; i < m; ++i) r2 += (x[i] - center[i]) * (x[i] - center[i]);
        return r2 > 0.0;
      },
      [center, m](const AffinePoint& lo, const AffinePoint& hi) {
        for (int i = 1; i < m; ++i)
          if (lo[i] > center[i] || hi[i] < center[i]) return true;
        return false;
      });
  auto jet = [charge, center, e0, m](const AffinePoint& x, std::span<const int> dirs) {
    for (int d : dirs)
      if (d == 0) return 0.0 * e0;
    Eigen::VectorXd y = Eigen::VectorXd::Zero(m);
    double r2 = 0.0;
    for (int i = 1; i < m; ++i) {
      y[i] = x[i] - center[i];
      r2 += y[i] * y[i];
    }
    const double r = std::sqrt(r2);
    auto delta = [](int a, int b) { return a == b ? 1.0 : 0.0; };
    double v = 0.0;
    switch (dirs.size()) {
      case 0: v = 1.0 / r; break;
      case 1: v = -y[dirs[0]] / (r2 * r); break;
      case 2: {
        const int i = dirs[0], j = dirs[1];
        v = 3.0 * y[i] * y[j] / (r2 * r2 * r) - delta(i, j) / (r2 * r);
        break;
      }
      case 3: {
        const int i = dirs[0], j = dirs[1], k = dirs[2];
        const double r5 = r2 * r2 * r;
        v = -15.0 * y[i] * y[j] * y[k] / (r5 * r2) +
            3.0 * (delta(i, j) * y[k] + delta(i, k) * y[j] + delta(j, k) * y[i]) / r5;
        break;
      }
      default: throw FormError("coulomb: analytic jets stop at third order");
    }
    return (charge * v) * e0;
  };
  return SmoothForm({Parity::Even, 1, space}, jet, 3, std::move(domain));
}

SmoothForm constant_field_potential(const GradedElement& f) {
  if (f.kind() != Kind::Covector || f.parity() != Parity::Even || f.grade() != 2)
    throw FormError("constant field potential needs an even 2-covector");
  const int m = f.dim();
  std::vector<Monomial> terms;
  for (IndexMask mask : combinations(m, 2)) {
    const auto pos = mask_indices(mask);
    const double v = f.coeff(pos);
    if (v == 0.0) continue;
    // F_{μν} e^μ∧e^ν from ½F_{μν}(x^μ e^ν - x^ν e^μ).
    std::vector<int> pw(static_cast<std::size_t>(m), 0);
    pw[pos[0]] = 1;
    terms.push_back({0.5 * v, {pos[1]}, pw});
    pw[pos[0]] = 0;
    pw[pos[1]] = 1;
    terms.push_back({-0.5 * v, {pos[0]}, pw});
  }
  return polynomial_form({Parity::Even, 1, f.space()}, std::move(terms));
}

}  // namespace twistform
