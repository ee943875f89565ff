#include "twistform/kernels.hpp"

#include <omp.h>

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>

namespace twistform::kernels {

namespace {

std::atomic<Execution> g_default{Execution::Parallel};

std::size_t node_count(std::size_t per_axis, int q) {
  std::size_t n = 1;
  for (int i = 0; i < q; ++i) n *= per_axis;
  return n;
}

// Decodes flat node index k into coordinates and the product weight.
double decode_node(std::size_t k, std::span<const double> nodes, std::span<const double> weights,
                   int q, double* s) {
  const std::size_t n = nodes.size();
  double axis_weight[32];
  for (int axis = q - 1; axis >= 0; --axis) {
    const std::size_t i = k % n;
    k /= n;
    s[axis] = nodes[i];
    axis_weight[axis] = weights[i];
  }
  // Product taken in axis order so both kernels round identically.
  double w = 1.0;
  for (int axis = 0; axis < q; ++axis) w *= axis_weight[axis];
  return w;
}

void check_rule(std::span<const double> nodes, std::span<const double> weights, int q) {
  if (nodes.size() != weights.size() || nodes.empty())
    throw std::invalid_argument("quadrature rule: nodes and weights must be non-empty and match");
  if (q < 0 || q > 32) throw std::invalid_argument("quadrature rule: cube dimension out of range");
}

}  // namespace

Execution default_execution() { return g_default.load(); }
void set_default_execution(Execution e) { g_default.store(e); }

int max_threads() { return omp_get_max_threads(); }

std::vector<double> evaluate_serial(std::size_t n, const IndexFn& f) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = f(k);
  return out;
}

std::vector<double> evaluate_parallel(std::size_t n, const IndexFn& f) {
  std::vector<double> out(n);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long k = 0; k < count; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = f(static_cast<std::size_t>(k));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<double> evaluate(std::size_t n, const IndexFn& f, Execution e) {
  return e == Execution::Serial ? evaluate_serial(n, f) : evaluate_parallel(n, f);
}

double ordered_sum(std::span<const double> values) {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

double tensor_quadrature_serial(std::span<const double> nodes, std::span<const double> weights,
                                int q, const CubeFn& f) {
  check_rule(nodes, weights, q);
  const std::size_t total = node_count(nodes.size(), q);
  std::vector<double> s(static_cast<std::size_t>(q));
  double sum = 0.0;
  for (std::size_t k = 0; k < total; ++k) {
    const double w = decode_node(k, nodes, weights, q, s.data());
    sum += w * f(s);
  }
  return sum;
}

double tensor_quadrature_parallel(std::span<const double> nodes, std::span<const double> weights,
                                  int q, const CubeFn& f) {
  check_rule(nodes, weights, q);
  const std::size_t total = node_count(nodes.size(), q);
  const std::vector<double> terms = evaluate_parallel(total, [&](std::size_t k) {
    std::vector<double> s(static_cast<std::size_t>(q));
    const double w = decode_node(k, nodes, weights, q, s.data());
    return w * f(s);
  });
  return ordered_sum(terms);
}

double tensor_quadrature(std::span<const double> nodes, std::span<const double> weights, int q,
                         const CubeFn& f, Execution e) {
  return e == Execution::Serial ? tensor_quadrature_serial(nodes, weights, q, f)
                                : tensor_quadrature_parallel(nodes, weights, q, f);
}

}  // namespace twistform::kernels
