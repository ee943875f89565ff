#pragma once

#include "oracles.hpp"
#include "twistform/electrodynamics.hpp"
#include "twistform/sampling.hpp"

namespace testing_util {

using namespace twistform;

// Coefficient rank i is the i-th increasing tuple in lexicographic order.
inline oracle::Table table_of(const GradedElement& x) {
  const auto tuples = oracle::subsets(x.dim(), x.grade());
  oracle::Table t;
  for (std::size_t i = 0; i < tuples.size(); ++i) t[tuples[i]] = x[static_cast<int>(i)];
  return t;
}

inline double table_diff(const GradedElement& x, const oracle::Table& t) {
  double worst = 0.0;
  const auto tx = table_of(x);
  for (const auto& [k, v] : tx) {
    auto it = t.find(k);
    worst = std::max(worst, std::abs(v - (it == t.end() ? 0.0 : it->second)));
  }
  for (const auto& [k, v] : t)
    if (!tx.count(k)) worst = std::max(worst, std::abs(v));
  return worst;
}

}  // namespace testing_util
