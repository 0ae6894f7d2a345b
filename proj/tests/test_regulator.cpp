#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "milreg/error.hpp"
#include "milreg/fixtures.hpp"
#include "milreg/regulator/cochain.hpp"
#include "milreg/regulator/ddbar.hpp"
#include "milreg/regulator/forms.hpp"
#include "milreg/regulator/regulator.hpp"

using namespace milreg;
using namespace milreg::regulator;
using torus::EllDivisor;

namespace {

const Torus kSquare = Torus::make({0.0, 1.0});

EllipticFunction fn2(cplx a, cplx b, cplx c, const Torus& T = kSquare, cplx k = 1.0) {
  return EllipticFunction(EllDivisor({{a, 1}, {b, 1}, {c, -1}, {a + b - c, -1}}), T, k);
}

const EllipticFunction kF = fn2({0.13, 0.21}, {0.58, 0.34}, {0.36, 0.72});
const EllipticFunction kG = fn2({0.22, 0.41}, {0.68, 0.69}, {0.45, 0.55});

CycleWithFunctions cyc(std::vector<EllipticFunction> fs) { return {TorusCarrier{std::move(fs)}, 1}; }

std::vector<FunctionSample> random_samples(std::mt19937_64& rng, int m) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<FunctionSample> s;
  for (int i = 0; i < m; ++i) {
    Form d;
    d[Form::dz1] = {n(rng), n(rng)};
    d[Form::dz2] = {n(rng), n(rng)};
    s.push_back({n(rng), d});
  }
  return s;
}

}  // namespace

TEST_CASE("forms: wedge signs and conjugation") {
  CHECK(wedge_sign(Form::dz1, Form::dzb1) == 1);
  CHECK(wedge_sign(Form::dzb1, Form::dz1) == -1);
  CHECK(wedge_sign(Form::dz1, Form::dz1) == 0);
  const Form a = Form::one_form(1, {1.0, 2.0}, {0.5, -1.0});
  const Form b = Form::one_form(2, {0.3, 0.0}, {0.0, 1.0});
  const Form ab = wedge(a, b), ba = wedge(b, a);
  for (unsigned m = 0; m < 16; ++m) CHECK(std::abs(ab[m] + ba[m]) < 1e-15);
  CHECK((a.conj().conj() - a).max_abs() == 0.0);
  // conj(dz ^ dzb) = dzb ^ dz = -dz ^ dzb
  CHECK(Form::monomial(Form::dz1 | Form::dzb1, 1.0).conj()[Form::dz1 | Form::dzb1] == cplx(-1.0));
  CHECK(top_density(Form::monomial(Form::dz1 | Form::dzb1, 1.0), 1) == cplx(0.0, -2.0));
}

TEST_CASE("forms: pi_p splits real and imaginary parts") {
  const Form w = Form::one_form(1, {1.0, 2.0}, {0.5, -1.0});
  CHECK((pi_p(w, 0) + pi_p(w, 1) - w).max_abs() < 1e-15);
  CHECK((pi_p(w, 0) - pi_p(w, 0).conj()).max_abs() < 1e-15);
  CHECK((pi_p(w, 1) + pi_p(w, 1).conj()).max_abs() < 1e-15);
}

TEST_CASE("iterated cup product matches the closed xi formulas") {
  std::mt19937_64 rng(7);
  for (int m = 2; m <= 4; ++m) {
    const auto c = iterated_cup(m);
    for (int it = 0; it < 20; ++it) {
      const auto s = random_samples(rng, m);
      CHECK((evaluate_s(c, s) - xi_closed(s)).max_abs() < 1e-10);
    }
  }
  CHECK_THROWS_AS(xi_closed(std::vector<FunctionSample>(5)), DomainError);
}

TEST_CASE("J operator") {
  const auto w = HarmonicForm::curve("w", {1.0, 2.0}, {0.5, -1.0});
  const auto jw = j_operator(w);
  CHECK(jw.form[Form::dz1] == cplx(0, 1) * cplx(1.0, 2.0));
  CHECK(jw.form[Form::dzb1] == cplx(0, -1) * cplx(0.5, -1.0));
  CHECK((j_operator(jw).form + w.form).max_abs() < 1e-15);
  for (const auto& b : real_basis_curve()) {
    CHECK(b.is_real());
    CHECK(j_operator(b).is_real());
  }
}

TEST_CASE("r_log: exact identities on one grid") {
  const QuadratureGrid G{64, 0.0, 0};
  const auto basis = real_basis_curve();
  const auto zero = r_log(cyc({kF, kF.scaled(-1.0)}), basis, G);
  for (const auto& p : zero.pairings) CHECK(p.value == 0.0);

  const auto fg = r_log(cyc({kF, kG}), basis, G);
  const auto gf = r_log(cyc({kG, kF}), basis, G);
  for (std::size_t i = 0; i < basis.size(); ++i) CHECK(std::abs(fg.pairings[i].value + gf.pairings[i].value) < 1e-9);

  const EllipticFunction f2 = fn2({0.71, 0.12}, {0.31, 0.88}, {0.09, 0.44});
  const auto prod = r_log(cyc({torus::ell_multiply(kF, f2), kG}), basis, G);
  const auto f2g = r_log(cyc({f2, kG}), basis, G);
  for (std::size_t i = 0; i < basis.size(); ++i)
    CHECK(std::abs(prod.pairings[i].value - fg.pairings[i].value - f2g.pairings[i].value) < 1e-9);
}

TEST_CASE("r_log and r_beilinson are real on real forms") {
  const QuadratureGrid G{64, 1e-3, 0};
  for (const auto& v : {r_log(cyc({kF, kG}), real_basis_curve(), G), r_beilinson(cyc({kF, kG}), real_basis_curve(), G)})
    for (const auto& p : v.pairings) CHECK(std::abs(p.imag_residual) <= p.error_estimate + 1e-12);
}

TEST_CASE("r_beilinson: {f, -f} vanishes and the pairing is linear in w") {
  const QuadratureGrid G{64, 1e-3, 0};
  const auto z = r_beilinson(cyc({kF, kF.scaled(-1.0)}), real_basis_curve(), G);
  for (const auto& p : z.pairings) CHECK(std::abs(p.value) <= 10.0 * p.error_estimate + 1e-12);
  const auto w1 = HarmonicForm::curve("w1", 1.0, 1.0), w2 = HarmonicForm::curve("w2", {0, 1}, {0, -1});
  const auto sum = HarmonicForm{"w1+w2", w1.form + w2.form};
  const auto v = r_beilinson(cyc({kF, kG}), {w1, w2, sum}, G);
  CHECK(std::abs(v.pairings[2].value - v.pairings[0].value - v.pairings[1].value) < 1e-9);
}

TEST_CASE("degree and arity checks") {
  const QuadratureGrid G{32, 1e-3, 0};
  CHECK_THROWS_AS(r_log(cyc({kF, kG, kF}), real_basis_curve(), G), DomainError);
  CHECK_THROWS_AS(r_log(cyc({kF, kG}), {{"1", Form::scalar(1.0)}}, G), DomainError);
  CHECK_THROWS_AS(j_operator({"1", Form::scalar(1.0)}), DomainError);
}

TEST_CASE("point carriers: r_beilinson equals r_log for m = 1") {
  PointCarrier pc;
  pc.points.push_back({1, {{2.0, 1.0}}, 1.0});
  pc.points.push_back({-2, {{0.3, -0.2}}, 0.5});
  const CycleWithFunctions c{pc, 1};
  const std::vector<HarmonicForm> one{{"1", Form::scalar(1.0)}};
  const double b = r_beilinson(c, one, {}).pairings[0].value;
  const double l = r_log(c, one, {}).pairings[0].value;
  CHECK(b == l);
  CHECK(std::abs(l - (std::log(std::sqrt(5.0)) - 2.0 * 0.5 * std::log(std::sqrt(0.13)))) < 1e-14);
}

TEST_CASE("descent defect: Weil reciprocity on the torus") {
  const EllipticFunction c(EllDivisor(), kSquare, 3.0);
  CHECK(std::abs(descent_defect(kF, c)) < 1e-12);
  CHECK(std::abs(descent_defect(kF, kG)) < 1e-5);
  CHECK_THROWS_AS(descent_defect(kF, kF), DomainError);
}

TEST_CASE("one_minus realises 1 - f by divisor data") {
  const auto f = fixtures::steinberg_f(kSquare);
  const auto g = one_minus(f);
  for (cplx z : {cplx(0.05, 0.5), cplx(0.9, 0.1), cplx(0.45, 0.95)}) CHECK(std::abs(g.value(z) - (1.0 - f.value(z))) < 1e-8);
  CHECK_THROWS_AS(one_minus(EllipticFunction(EllDivisor(), kSquare, 2.0)), DomainError);
}

TEST_CASE("convergence harness halves the mask as N doubles") {
  const auto rows = convergence_rlog(cyc({kF, kG}), real_basis_curve(), {16, 32}, 1e-3, 0);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].delta == doctest::Approx(2e-3));
  CHECK(rows[2].delta == doctest::Approx(1e-3));
  CHECK_THROWS_AS(convergence_rlog(cyc({kF, kG}), real_basis_curve(), {32, 16}, 1e-3, 0), DomainError);
}

TEST_CASE("ddbar: trivial cases and the Stokes cross-check") {
  const auto panel = fixtures::ddbar_panel();
  const QuadratureGrid G{16, 5e-3, 0};
  const auto& t = panel.front();
  const auto empty = ddbar_defect(t.f, t.g, SplitEta{}, G);
  CHECK(empty.lhs == 0.0);
  CHECK(empty.rhs == 0.0);
  const EllipticFunction one(EllDivisor(), t.f.torus(), 1.0);
  const auto flat = ddbar_defect(one, t.g, t.eta, G);
  CHECK(flat.lhs == 0.0);
  CHECK(flat.rhs == 0.0);
  SplitEta bad = t.eta;
  bad.terms.front().slot = 3;
  CHECK_THROWS_AS(ddbar_defect(t.f, t.g, bad, G), DomainError);

  // The operator form is real, and lhs agrees with its Stokes rewrite.
  const Form w = ddbar_form(t.eta, t.f.torus(), t.g.torus(), {0.1, 0.2}, {0.3, 0.4});
  CHECK((w - w.conj()).max_abs() < 1e-12);
  const auto r = ddbar_defect(t.f, t.g, t.eta, QuadratureGrid{24, 5e-3, 0});
  CHECK(std::abs(r.lhs - r.lhs_stokes) <= r.lhs_error + r.lhs_stokes_error);
}
