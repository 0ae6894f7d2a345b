#pragma once

#include <string>
#include <variant>
#include <vector>

#include "milreg/regulator/cochain.hpp"
#include "milreg/regulator/forms.hpp"
#include "milreg/torus/quadrature.hpp"
#include "milreg/torus/torus.hpp"

namespace milreg::regulator {

using torus::EllipticFunction;
using torus::QuadratureGrid;
using torus::Torus;

// Constant-coefficient test form with a label.
struct HarmonicForm {
  std::string label;
  Form form;

  // a dz + b dzb on a curve.
  static HarmonicForm curve(std::string label, cplx a, cplx b);
  bool is_real(double tol = 1e-14) const;
  int degree() const;
};

// dz + dzb and i(dz - dzb): the real basis of harmonic 1-forms on E.
std::vector<HarmonicForm> real_basis_curve();

// i on the dz part, -i on the dzb part. Degree-1 forms on a curve only;
// throws DomainError(DegreeMismatch) otherwise.
HarmonicForm j_operator(const HarmonicForm& w);

// Zero-dimensional carrier: sum of coefficient * [point], each point carrying
// the values f_j(point) and the value of the test function there.
struct PointCarrier {
  struct Point {
    int coefficient = 1;
    std::vector<cplx> values;
    double weight = 1.0;
  };
  std::vector<Point> points;
};

struct TorusCarrier {
  std::vector<EllipticFunction> functions;
};

struct CycleWithFunctions {
  std::variant<TorusCarrier, PointCarrier> carrier;
  int coefficient = 1;

  int arity() const;
  int complex_dim() const { return std::holds_alternative<TorusCarrier>(carrier) ? 1 : 0; }
};

struct Pairing {
  std::string form_label;
  double value = 0.0;
  double imag_residual = 0.0;
  double error_estimate = 0.0;
};

struct RegulatorValue {
  std::vector<Pairing> pairings;
};

// Pointwise integrands (top forms on E).
Form r_log_integrand(const std::vector<FunctionSample>& samples, const Form& w);
Form r_beilinson_integrand(const std::vector<FunctionSample>& samples, const Form& w);

// sum_l (-1)^{l-1} int log|f_l| (dlog|f_1| ^ ..^l.. ^ dlog|f_m|) ^ w.
// Throws DomainError(DegreeMismatch) unless (m - 1) + deg w = 2 dim Z.
RegulatorValue r_log(const CycleWithFunctions& c, const std::vector<HarmonicForm>& basis, const QuadratureGrid& G);

// (2 pi i)^{-dim Z} int xi(f_1, .., f_m) ^ w.
RegulatorValue r_beilinson(const CycleWithFunctions& c, const std::vector<HarmonicForm>& basis,
                           const QuadratureGrid& G);

struct JComparisonEntry {
  std::size_t input = 0;
  std::string form_label;
  double r_beilinson = 0.0, r_beilinson_error = 0.0;
  double r_log_j = 0.0, r_log_j_error = 0.0;
  double ratio = 0.0, ratio_error = 0.0;
};

struct JComparison {
  std::vector<JComparisonEntry> entries;
  double constant = 0.0;         // mean ratio
  double relative_spread = 0.0;  // (max - min) / |constant|
  bool within_errors = false;    // every |ratio - constant| <= its ratio_error
  cplx candidate;                // 1 / (2 pi i)^{dim Z}
};

// r_beilinson(c, w) / r_log(c, J w) over a panel of torus cycles. Pairs whose
// r_log(c, J w) is below 1e-12 are skipped.
JComparison compare_j(const std::vector<CycleWithFunctions>& panel, const std::vector<HarmonicForm>& basis,
                      const QuadratureGrid& G);

struct ConvergenceRow {
  std::string form_label;
  int N = 0;
  double delta = 0.0;
  double value = 0.0;
  double error = 0.0;
};

// r_log at each N of an increasing sequence, with the mask halved as N
// doubles: delta_N = delta_finest * N_max / N.
std::vector<ConvergenceRow> convergence_rlog(const CycleWithFunctions& c, const std::vector<HarmonicForm>& basis,
                                             const std::vector<int>& Ns, double delta_finest, int threads = 0);
// |value| strictly decreasing along the rows of one form.
bool strictly_decreasing(const std::vector<ConvergenceRow>& rows, const std::string& form_label);

// Samples of the functions of a torus carrier at z.
std::vector<FunctionSample> sample_functions(const std::vector<EllipticFunction>& fs, cplx z);

// xi(f_1, .., f_m)(z) for functions on one torus.
Form xi_form(const std::vector<EllipticFunction>& fs, cplx z);

// c * sum_D [nu_D(f2) log|f1(D)| - nu_D(f1) log|f2(D)|].
// Throws DomainError(OverlappingDivisors) if the supports meet.
double descent_defect(const EllipticFunction& f1, const EllipticFunction& f2, double c = 1.0);

// 1 - f realised as a divisor-presented function: zeros of f - 1 located by
// Newton's method, lattice representatives chosen so that sum n z = 0, and
// the constant fitted at one point and checked at others.
// Throws DomainError(FixtureFailure) when any check exceeds tol.
EllipticFunction one_minus(const EllipticFunction& f, double tol = 1e-8);

}  // namespace milreg::regulator
