#pragma once

#include <vector>

namespace twistform {

/// n-point Gauss–Legendre rule mapped to [0, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendreRule(int n);
  int order() const { return static_cast<int>(nodes.size()); }
};

inline constexpr int kDefaultQuadratureOrder = 8;

}  // namespace twistform
