#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's combinatorics or products.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

namespace oracle {

using Tuple = std::vector<int>;
using Table = std::map<Tuple, double>;  // increasing tuple -> coefficient

inline std::vector<Tuple> subsets(int m, int q) {
  std::vector<Tuple> out;
  Tuple cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == q) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < m; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Sign of the permutation that sorts seq, by counting inversions; 0 on repeats.
inline int sort_sign(const Tuple& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) ++inv;
    }
  return inv % 2 == 0 ? 1 : -1;
}

inline Table wedge(const Table& a, const Table& b) {
  Table out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      Tuple cat = i;
      cat.insert(cat.end(), j.begin(), j.end());
      const int s = sort_sign(cat);
      if (s == 0) continue;
      std::sort(cat.begin(), cat.end());
      out[cat] += s * x * y;
    }
  return out;
}

// a(v1, ..., vq) = Σ_I a_I det(V restricted to rows I).
inline double evaluate(const Table& a, const std::vector<Eigen::VectorXd>& vs) {
  const int q = static_cast<int>(vs.size());
  double s = 0.0;
  for (const auto& [idx, c] : a) {
    if (q == 0) {
      s += c;
      continue;
    }
    Eigen::MatrixXd m(q, q);
    for (int r = 0; r < q; ++r)
      for (int k = 0; k < q; ++k) m(r, k) = vs[k][idx[r]];
    s += c * m.determinant();
  }
  return s;
}

inline double pairing(const Table& a, const Table& w) {
  double s = 0.0;
  for (const auto& [i, x] : a) {
    auto it = w.find(i);
    if (it != w.end()) s += x * it->second;
  }
  return s;
}

// x with a ∧ x = <a, w> vol for every basis q-covector a, by a dense solve.
inline Table weyl_solve(const Table& w, int m, int q, double vol) {
  const auto rows = subsets(m, q);
  const auto cols = subsets(m, m - q);
  Tuple top(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) top[i] = i;
  Eigen::MatrixXd mat(rows.size(), cols.size());
  Eigen::VectorXd rhs(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Table prod = wedge(Table{{rows[r], 1.0}}, Table{{cols[c], 1.0}});
      auto it = prod.find(top);
      mat(r, c) = it == prod.end() ? 0.0 : it->second;
    }
    auto it = w.find(rows[r]);
    rhs[r] = (it == w.end() ? 0.0 : it->second) * vol;
  }
  const Eigen::VectorXd x = mat.fullPivLu().solve(rhs);
  Table out;
  for (std::size_t c = 0; c < cols.size(); ++c) out[cols[c]] = x[c];
  return out;
}

// Five-point Gauss-Legendre on [0, 1].
inline double gauss5(const std::function<double(double)>& f) {
  static const double x[5] = {0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                              0.9061798459386640};
  static const double w[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                              0.2369268850561891, 0.2369268850561891};
  double s = 0.0;
  for (int i = 0; i < 5; ++i) s += 0.5 * w[i] * f(0.5 * (x[i] + 1.0));
  return s;
}

// Levi-Civita symbol on four indices.
inline int epsilon4(int a, int b, int c, int d) { return sort_sign({a, b, c, d}); }

}  // namespace oracle
