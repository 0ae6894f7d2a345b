#include "milreg/torus/quadrature.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "milreg/error.hpp"

namespace milreg::torus {

void QuadratureGrid::validate() const {
  if (N < 8) throw DomainError(ErrorKind::InvalidGrid, "grid N must be at least 8");
  if (!(delta >= 0.0)) throw DomainError(ErrorKind::InvalidGrid, "mask radius must be non-negative");
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t rows, int threads, const std::function<void(std::size_t)>& body) {
  const int workers = std::min<int>(resolve_threads(threads), static_cast<int>(std::max<std::size_t>(rows, 1)));
  if (workers <= 1) {
    for (std::size_t r = 0; r < rows; ++r) body(r);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mu;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      try {
        for (std::size_t r = next++; r < rows; r = next++) body(r);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = rows;
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

GridSamples sample_grid(const Torus& T, int N, double delta, const std::vector<cplx>& singular_points) {
  GridSamples g;
  g.N = N;
  g.cell_area = T.tau.imag() / (static_cast<double>(N) * N);
  g.z.resize(static_cast<std::size_t>(N) * N);
  g.masked.assign(g.z.size(), 0);
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i) {
      const std::size_t k = static_cast<std::size_t>(j) * N + i;
      g.z[k] = (i + 0.5) / N + (j + 0.5) / N * T.tau;
      for (const auto& p : singular_points)
        if (torus_distance(g.z[k], p, T) < delta) g.masked[k] = 1;
    }
  return g;
}

cplx grid_sum(const GridSamples& g, const std::function<cplx(std::size_t)>& f, int threads) {
  const auto N = static_cast<std::size_t>(g.N);
  std::vector<cplx> rows(N);
  parallel_for(N, threads, [&](std::size_t j) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const std::size_t k = j * N + i;
      if (!g.masked[k]) acc += f(k);
    }
    rows[j] = acc;
  });
  cplx total = 0.0;
  for (const auto& r : rows) total += r;
  return total * g.cell_area;
}

cplx quad_value(const Torus& T, int N, double delta, const std::vector<cplx>& singular_points,
                const std::function<cplx(cplx)>& integrand, int threads) {
  const auto g = sample_grid(T, N, delta, singular_points);
  return grid_sum(g, [&](std::size_t k) { return integrand(g.z[k]); }, threads);
}

QuadResult quad_integrate(const Torus& T, const QuadratureGrid& G, const std::vector<cplx>& singular_points,
                          const std::function<cplx(cplx)>& integrand) {
  G.validate();
  const cplx fine = quad_value(T, G.N, G.delta, singular_points, integrand, G.threads);
  const cplx coarse = quad_value(T, G.N / 2, G.delta, singular_points, integrand, G.threads);
  return {fine, std::abs(fine - coarse)};
}

cplx quad_value_product(const Torus& T1, const Torus& T2, int N, double delta, const std::vector<cplx>& singular1,
                        const std::vector<cplx>& singular2, const ProductFactory& factory, int threads) {
  const auto g1 = sample_grid(T1, N, delta, singular1);
  const auto g2 = sample_grid(T2, N, delta, singular2);
  const auto f = factory(g1, g2);
  const std::size_t n1 = g1.z.size();
  const std::size_t n2 = g2.z.size();
  std::vector<cplx> rows(n1);
  parallel_for(n1, threads, [&](std::size_t a) {
    cplx acc = 0.0;
    if (!g1.masked[a])
      for (std::size_t b = 0; b < n2; ++b)
        if (!g2.masked[b]) acc += f(a, b);
    rows[a] = acc;
  });
  cplx total = 0.0;
  for (const auto& r : rows) total += r;
  return total * (g1.cell_area * g2.cell_area);
}

QuadResult quad_integrate_product(const Torus& T1, const Torus& T2, const QuadratureGrid& G,
                                  const std::vector<cplx>& singular1, const std::vector<cplx>& singular2,
                                  const ProductFactory& factory) {
  G.validate();
  const cplx fine = quad_value_product(T1, T2, G.N, G.delta, singular1, singular2, factory, G.threads);
  const cplx coarse = quad_value_product(T1, T2, G.N / 2, G.delta, singular1, singular2, factory, G.threads);
  return {fine, std::abs(fine - coarse)};
}

}  // namespace milreg::torus
