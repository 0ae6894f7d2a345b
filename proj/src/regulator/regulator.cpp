#include "milreg/regulator/regulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "milreg/error.hpp"

namespace milreg::regulator {

using torus::GridSamples;

namespace {

constexpr double kPi = std::numbers::pi;

struct CurveSample {
  double log_abs;
  cplx phi;
};

FunctionSample expand(const CurveSample& c) { return {c.log_abs, Form::one_form(1, c.phi, 0.0)}; }

std::vector<cplx> divisor_support(const std::vector<EllipticFunction>& fs) {
  std::vector<cplx> pts;
  for (const auto& f : fs)
    for (const auto& p : f.divisor().points()) pts.push_back(p.z);
  return pts;
}

using IntegrandFn = Form (*)(const std::vector<FunctionSample>&, const Form&);

// Integrates integrand(samples, w) over E at resolution N for every basis form.
std::vector<cplx> torus_pairings(const std::vector<EllipticFunction>& fs, const std::vector<HarmonicForm>& basis,
                                 int N, double delta, int threads, IntegrandFn integrand) {
  const Torus& T = fs.front().torus();
  const GridSamples g = torus::sample_grid(T, N, delta, divisor_support(fs));
  const std::size_t m = fs.size();
  std::vector<CurveSample> cache(g.z.size() * m);
  torus::parallel_for(g.z.size(), threads, [&](std::size_t k) {
    if (g.masked[k]) return;
    for (std::size_t i = 0; i < m; ++i) cache[k * m + i] = {fs[i].log_abs(g.z[k]), fs[i].dlog(g.z[k])};
  });
  std::vector<cplx> out;
  for (const auto& w : basis) {
    out.push_back(torus::grid_sum(
        g,
        [&](std::size_t k) {
          std::vector<FunctionSample> s;
          s.reserve(m);
          for (std::size_t i = 0; i < m; ++i) s.push_back(expand(cache[k * m + i]));
          return top_density(integrand(s, w.form), 1);
        },
        threads));
  }
  return out;
}

void check_torus_degrees(const TorusCarrier& tc, const std::vector<HarmonicForm>& basis) {
  if (tc.functions.empty()) throw DomainError(ErrorKind::DegreeMismatch, "a cycle needs at least one function");
  const auto& T = tc.functions.front().torus();
  for (const auto& f : tc.functions)
    if (f.torus().tau != T.tau || f.torus().R != T.R)
      throw DomainError(ErrorKind::InvalidTorus, "all functions must live on the carrier torus");
  const int m = static_cast<int>(tc.functions.size());
  for (const auto& w : basis)
    if (w.degree() < 0 || (m - 1) + w.degree() != 2)
      throw DomainError(ErrorKind::DegreeMismatch, "form '" + w.label + "' has the wrong degree for m = " +
                                                       std::to_string(m) + " on a curve");
}

RegulatorValue pair_torus(const CycleWithFunctions& c, const TorusCarrier& tc, const std::vector<HarmonicForm>& basis,
                          const QuadratureGrid& G, IntegrandFn integrand, cplx normalization) {
  G.validate();
  check_torus_degrees(tc, basis);
  const auto fine = torus_pairings(tc.functions, basis, G.N, G.delta, G.threads, integrand);
  const auto coarse = torus_pairings(tc.functions, basis, G.N / 2, G.delta, G.threads, integrand);
  RegulatorValue out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const cplx v = normalization * static_cast<double>(c.coefficient) * fine[i];
    const cplx v2 = normalization * static_cast<double>(c.coefficient) * coarse[i];
    out.pairings.push_back({basis[i].label, v.real(), v.imag(), std::abs(v - v2)});
  }
  return out;
}

RegulatorValue pair_points(const CycleWithFunctions& c, const PointCarrier& pc,
                           const std::vector<HarmonicForm>& basis) {
  for (const auto& w : basis)
    if (w.degree() != 0)
      throw DomainError(ErrorKind::DegreeMismatch, "a point carrier pairs with functions (degree-0 forms)");
  RegulatorValue out;
  for (const auto& w : basis) {
    cplx acc = 0.0;
    for (const auto& p : pc.points) {
      if (p.values.size() != 1)
        throw DomainError(ErrorKind::DegreeMismatch, "a point carrier supports exactly one function (m = 1)");
      if (p.values[0] == cplx(0.0)) throw DomainError(ErrorKind::OnDivisor, "function value 0 at a carrier point");
      acc += static_cast<double>(p.coefficient) * std::log(std::abs(p.values[0])) * p.weight * w.form[0];
    }
    acc *= static_cast<double>(c.coefficient);
    out.pairings.push_back({w.label, acc.real(), acc.imag(), 0.0});
  }
  return out;
}

}  // namespace

HarmonicForm HarmonicForm::curve(std::string label, cplx a, cplx b) {
  return {std::move(label), Form::one_form(1, a, b)};
}

bool HarmonicForm::is_real(double tol) const { return (form - form.conj()).max_abs() <= tol; }

int HarmonicForm::degree() const {
  for (int d = 0; d <= 4; ++d)
    if (form.is_homogeneous(d) && form.max_abs(d) > 0.0) return d;
  return -1;
}

std::vector<HarmonicForm> real_basis_curve() {
  return {HarmonicForm::curve("dz+dzb", 1.0, 1.0), HarmonicForm::curve("i(dz-dzb)", cplx(0, 1), cplx(0, -1))};
}

HarmonicForm j_operator(const HarmonicForm& w) {
  if (w.degree() != 1 || w.form.restrict_away(1).max_abs() > 0.0)
    throw DomainError(ErrorKind::DegreeMismatch, "J acts on degree-1 forms on a curve");
  return {"J(" + w.label + ")", Form::one_form(1, cplx(0, 1) * w.form[Form::dz1], cplx(0, -1) * w.form[Form::dzb1])};
}

int CycleWithFunctions::arity() const {
  if (const auto* t = std::get_if<TorusCarrier>(&carrier)) return static_cast<int>(t->functions.size());
  const auto& pc = std::get<PointCarrier>(carrier);
  return pc.points.empty() ? 0 : static_cast<int>(pc.points.front().values.size());
}

Form r_log_integrand(const std::vector<FunctionSample>& s, const Form& w) {
  Form theta;
  for (std::size_t l = 0; l < s.size(); ++l) {
    Form term = Form::scalar((l % 2 == 0 ? 1.0 : -1.0) * s[l].log_abs);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (i != l) term = wedge(term, pi_p(s[i].dlog, 0));
    theta += term;
  }
  return wedge(theta, w);
}

Form r_beilinson_integrand(const std::vector<FunctionSample>& s, const Form& w) { return wedge(xi_closed(s), w); }

RegulatorValue r_log(const CycleWithFunctions& c, const std::vector<HarmonicForm>& basis, const QuadratureGrid& G) {
  if (const auto* tc = std::get_if<TorusCarrier>(&c.carrier))
    return pair_torus(c, *tc, basis, G, &r_log_integrand, 1.0);
  return pair_points(c, std::get<PointCarrier>(c.carrier), basis);
}

RegulatorValue r_beilinson(const CycleWithFunctions& c, const std::vector<HarmonicForm>& basis,
                           const QuadratureGrid& G) {
  if (c.arity() > 4 || c.arity() < 1)
    throw DomainError(ErrorKind::UnsupportedArity, "xi is available for 1 <= m <= 4");
  if (const auto* tc = std::get_if<TorusCarrier>(&c.carrier))
    return pair_torus(c, *tc, basis, G, &r_beilinson_integrand, 1.0 / cplx(0.0, 2.0 * kPi));
  return pair_points(c, std::get<PointCarrier>(c.carrier), basis);
}

std::vector<FunctionSample> sample_functions(const std::vector<EllipticFunction>& fs, cplx z) {
  std::vector<FunctionSample> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back({f.log_abs(z), Form::one_form(1, f.dlog(z), 0.0)});
  return out;
}

Form xi_form(const std::vector<EllipticFunction>& fs, cplx z) {
  if (fs.empty() || fs.size() > 4)
    throw DomainError(ErrorKind::UnsupportedArity, "xi is available for 1 <= m <= 4, got m = " + std::to_string(fs.size()));
  return xi_closed(sample_functions(fs, z));
}

JComparison compare_j(const std::vector<CycleWithFunctions>& panel, const std::vector<HarmonicForm>& basis,
                      const QuadratureGrid& G) {
  std::vector<HarmonicForm> jbasis;
  for (const auto& w : basis) jbasis.push_back(j_operator(w));
  JComparison out;
  out.candidate = 1.0 / cplx(0.0, 2.0 * kPi);
  for (std::size_t n = 0; n < panel.size(); ++n) {
    if (panel[n].complex_dim() != 1) throw DomainError(ErrorKind::DegreeMismatch, "compare_j needs torus carriers");
    const auto rb = r_beilinson(panel[n], basis, G);
    const auto rl = r_log(panel[n], jbasis, G);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& b = rb.pairings[i];
      const auto& l = rl.pairings[i];
      if (std::abs(l.value) < 1e-12) continue;
      const double ratio = b.value / l.value;
      const double err = std::abs(ratio) * (b.error_estimate / std::max(std::abs(b.value), 1e-300) +
                                            l.error_estimate / std::abs(l.value));
      out.entries.push_back({n, basis[i].label, b.value, b.error_estimate, l.value, l.error_estimate, ratio, err});
    }
  }
  if (out.entries.empty()) return out;
  double lo = out.entries.front().ratio, hi = lo, sum = 0.0;
  for (const auto& e : out.entries) {
    lo = std::min(lo, e.ratio);
    hi = std::max(hi, e.ratio);
    sum += e.ratio;
  }
  out.constant = sum / static_cast<double>(out.entries.size());
  out.relative_spread = (hi - lo) / std::abs(out.constant);
  out.within_errors = true;
  for (const auto& e : out.entries)
    if (std::abs(e.ratio - out.constant) > e.ratio_error) out.within_errors = false;
  return out;
}

std::vector<ConvergenceRow> convergence_rlog(const CycleWithFunctions& c, const std::vector<HarmonicForm>& basis,
                                             const std::vector<int>& Ns, double delta_finest, int threads) {
  if (Ns.empty()) return {};
  for (std::size_t i = 1; i < Ns.size(); ++i)
    if (Ns[i] <= Ns[i - 1]) throw DomainError(ErrorKind::InvalidGrid, "convergence N sequence must increase");
  const int n_max = Ns.back();
  std::vector<ConvergenceRow> rows;
  for (int N : Ns) {
    const double delta = delta_finest * static_cast<double>(n_max) / static_cast<double>(N);
    const auto v = r_log(c, basis, QuadratureGrid{N, delta, threads});
    for (const auto& p : v.pairings) rows.push_back({p.form_label, N, delta, p.value, p.error_estimate});
  }
  return rows;
}

bool strictly_decreasing(const std::vector<ConvergenceRow>& rows, const std::string& form_label) {
  double last = -1.0;
  for (const auto& r : rows) {
    if (r.form_label != form_label) continue;
    if (last >= 0.0 && std::abs(r.value) >= last) return false;
    last = std::abs(r.value);
  }
  return true;
}

double descent_defect(const EllipticFunction& f1, const EllipticFunction& f2, double c) {
  const auto& T = f1.torus();
  for (const auto& a : f1.divisor().points())
    for (const auto& b : f2.divisor().points())
      if (torus::torus_distance(a.z, b.z, T) < 1e-9)
        throw DomainError(ErrorKind::OverlappingDivisors, "the divisors of f1 and f2 share a point");
  double acc = 0.0;
  for (const auto& d : f2.divisor().points()) acc += d.n * f1.log_abs(d.z);
  for (const auto& d : f1.divisor().points()) acc -= d.n * f2.log_abs(d.z);
  return c * acc;
}

EllipticFunction one_minus(const EllipticFunction& f, double tol) {
  const Torus& T = f.torus();
  int pole_order = 0;
  std::vector<torus::DivisorPoint> pts;
  for (const auto& p : f.divisor().points())
    if (p.n < 0) {
      pole_order -= p.n;
      pts.push_back(p);
    }
  if (pole_order == 0) throw DomainError(ErrorKind::FixtureFailure, "f is constant; 1 - f has no divisor data");

  // Newton sweep for f(z) = 1 from a grid of seeds.
  std::vector<cplx> roots;
  constexpr int kSeeds = 16;
  for (int i = 0; i < kSeeds; ++i)
    for (int j = 0; j < kSeeds; ++j) {
      cplx z = (i + 0.37) / kSeeds + (j + 0.61) / kSeeds * T.tau;
      bool converged = false;
      try {
        for (int it = 0; it < 60 && !converged; ++it) {
          const cplx v = f.value(z);
          const cplx step = (v - 1.0) / (v * f.dlog(z));
          z -= step;
          converged = std::abs(step) < 1e-14 * std::max(1.0, std::abs(z));
        }
      } catch (const DomainError&) {
        continue;
      }
      if (!converged || !std::isfinite(z.real()) || !std::isfinite(z.imag())) continue;
      auto [s, t] = torus::lattice_coords(z, T);
      z -= std::floor(s) + std::floor(t) * T.tau;
      bool seen = false;
      for (const auto& r : roots)
        if (torus::torus_distance(r, z, T) < 1e-7) seen = true;
      if (!seen) roots.push_back(z);
    }
  if (static_cast<int>(roots.size()) != pole_order)
    throw DomainError(ErrorKind::FixtureFailure, "found " + std::to_string(roots.size()) + " zeros of f - 1, expected " +
                                                     std::to_string(pole_order));

  // Lattice representatives with sum n z = 0.
  cplx moment = 0.0;
  for (const auto& r : roots) moment += r;
  for (const auto& p : pts) moment += static_cast<double>(p.n) * p.z;
  auto [ms, mt] = torus::lattice_coords(moment, T);
  const double ls = std::round(ms);
  const double lt = std::round(mt);
  if (std::abs(ms - ls) > tol || std::abs(mt - lt) > tol)
    throw DomainError(ErrorKind::FixtureFailure, "zeros and poles of 1 - f do not sum to a lattice point");
  roots.back() -= ls + lt * T.tau;
  cplx residual = 0.0;
  for (const auto& r : roots) residual += r;
  for (const auto& p : pts) residual += static_cast<double>(p.n) * p.z;
  if (std::abs(residual) > tol)
    throw DomainError(ErrorKind::FixtureFailure, "divisor moment residual exceeds tolerance");
  roots.back() -= residual;  // snap
  for (const auto& r : roots) pts.push_back({r, 1});

  const EllipticFunction g(torus::EllDivisor(pts), T, 1.0);
  const cplx z0 = 0.113 + 0.271 * T.tau;
  const cplx constant = (1.0 - f.value(z0)) / g.value(z0);
  const EllipticFunction out = g.scaled(constant);
  const cplx probes[] = {0.71 + 0.19 * T.tau, 0.29 + 0.83 * T.tau, 0.52 + 0.44 * T.tau, 0.91 + 0.63 * T.tau};
  for (const auto& z : probes) {
    const cplx want = 1.0 - f.value(z);
    if (std::abs(out.value(z) - want) > tol * std::max(1.0, std::abs(want)))
      throw DomainError(ErrorKind::FixtureFailure, "1 - f does not match its divisor presentation");
  }
  return out;
}

}  // namespace milreg::regulator
