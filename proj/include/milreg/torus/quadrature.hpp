#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "milreg/torus/torus.hpp"

namespace milreg::torus {

struct QuadratureGrid {
  int N = 128;          // cells per real direction
  double delta = 1e-3;  // cells with center this close to a singular point are skipped
  int threads = 0;      // 0: hardware concurrency

  // Throws DomainError(InvalidGrid) unless N >= 8 and delta >= 0.
  void validate() const;
};

// Cell centers z = (i + 1/2)/N + (j + 1/2)/N * tau, stored at index j*N + i.
struct GridSamples {
  int N = 0;
  double cell_area = 0.0;  // Im(tau) / N^2
  std::vector<cplx> z;
  std::vector<char> masked;
};

GridSamples sample_grid(const Torus& T, int N, double delta, const std::vector<cplx>& singular_points);

struct QuadResult {
  cplx value;
  double error = 0.0;  // |value(N) - value(N/2)|
};

// Sum of f(k) * cell_area over unmasked cells. Rows are summed in parallel,
// then added in row order, so the result does not depend on the thread count.
cplx grid_sum(const GridSamples& g, const std::function<cplx(std::size_t)>& f, int threads);

// Integral over the fundamental domain against Lebesgue measure dx dy.
QuadResult quad_integrate(const Torus& T, const QuadratureGrid& G, const std::vector<cplx>& singular_points,
                          const std::function<cplx(cplx)>& integrand);
cplx quad_value(const Torus& T, int N, double delta, const std::vector<cplx>& singular_points,
                const std::function<cplx(cplx)>& integrand, int threads = 0);

// On E1 x E2: the factory sees both sample sets (to precompute per-factor
// values) and returns the integrand on a pair of cell indices. A cell pair is
// skipped when either factor cell is masked.
using ProductIntegrand = std::function<cplx(std::size_t, std::size_t)>;
using ProductFactory = std::function<ProductIntegrand(const GridSamples&, const GridSamples&)>;

QuadResult quad_integrate_product(const Torus& T1, const Torus& T2, const QuadratureGrid& G,
                                  const std::vector<cplx>& singular1, const std::vector<cplx>& singular2,
                                  const ProductFactory& factory);
cplx quad_value_product(const Torus& T1, const Torus& T2, int N, double delta, const std::vector<cplx>& singular1,
                        const std::vector<cplx>& singular2, const ProductFactory& factory, int threads = 0);

int resolve_threads(int requested);

// Runs body(k) for k in [0, n) on worker threads. Each k is handled exactly
// once; exceptions from body are rethrown on the caller.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

}  // namespace milreg::torus
