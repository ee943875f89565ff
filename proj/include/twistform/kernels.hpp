#pragma once

// Data-parallel inner loops. Every parallel kernel has a serial reference
// twin; the parallel version evaluates independent items concurrently into a
// buffer and reduces it in the same left-to-right order as the serial one, so
// the two return bit-identical results for any thread count.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace twistform::kernels {

enum class Execution { Serial, Parallel };

/// Process-wide default used when callers do not pass an Execution.
Execution default_execution();
void set_default_execution(Execution e);

using IndexFn = std::function<double(std::size_t)>;
using CubeFn = std::function<double(std::span<const double>)>;

std::vector<double> evaluate_serial(std::size_t n, const IndexFn& f);
std::vector<double> evaluate_parallel(std::size_t n, const IndexFn& f);
std::vector<double> evaluate(std::size_t n, const IndexFn& f, Execution e);

/// Left-to-right sum.
double ordered_sum(std::span<const double> values);

/// Σ_k W_k f(s_k) over the tensor-product rule on [0,1]^q built from the
/// 1-D nodes/weights, nodes visited in lexicographic order (last axis fastest).
double tensor_quadrature_serial(std::span<const double> nodes, std::span<const double> weights,
                                int q, const CubeFn& f);
double tensor_quadrature_parallel(std::span<const double> nodes, std::span<const double> weights,
                                  int q, const CubeFn& f);
double tensor_quadrature(std::span<const double> nodes, std::span<const double> weights, int q,
                         const CubeFn& f, Execution e);

int max_threads();

}  // namespace twistform::kernels
