#include "milreg/regulator/ddbar.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include "milreg/error.hpp"

namespace milreg::regulator {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr unsigned kTop = 15u;

unsigned hol(int k) { return k == 1 ? Form::dz1 : Form::dz2; }
unsigned anti(int k) { return k == 1 ? Form::dzb1 : Form::dzb2; }

// Coefficient of a ^ b on dz1 dzb1 dz2 dzb2, complementary monomials only.
cplx top_coefficient(const Form& a, const Form& b) {
  cplx acc = 0.0;
  for (unsigned m = 0; m < 16; ++m) {
    if (a[m] == cplx(0.0)) continue;
    acc += static_cast<double>(wedge_sign(m, kTop ^ m)) * a[m] * b[kTop ^ m];
  }
  return acc;
}

// x ^ y ^ z for single generators, as (mask, sign).
std::pair<unsigned, int> triple(unsigned x, unsigned y, unsigned z) {
  const int s = wedge_sign(x, y) * wedge_sign(x | y, z);
  return {x | y | z, s};
}

struct TermJets {
  TrigPoly::Jet a, b;
};

// Mixed derivatives of u = A(z1) B(z2).
cplx u_zj_zbi(const TermJets& t, int j, int i) {
  if (j == 1 && i == 1) return t.a.zzb * t.b.v;
  if (j == 1 && i == 2) return t.a.z * t.b.zb;
  if (j == 2 && i == 1) return t.a.zb * t.b.z;
  return t.a.v * t.b.zzb;
}

cplx u_zj(const TermJets& t, int j) { return j == 1 ? t.a.z * t.b.v : t.a.v * t.b.z; }

Form ddbar_from_jets(const SplitEta& eta, const std::vector<TermJets>& jets) {
  Form out;
  for (std::size_t n = 0; n < eta.terms.size(); ++n) {
    const int k = eta.terms[n].slot;
    const int j = 3 - k;  // dz_k ^ dz_k = 0
    for (int i = 1; i <= 2; ++i) {
      const auto [mask, s] = triple(anti(i), hol(j), hol(k));
      out[mask] += static_cast<double>(s) * u_zj_zbi(jets[n], j, i);
    }
  }
  return out + out.conj();
}

// d' eta + conj: sum u_{z_j} dz_j ^ dz_k + conj.
Form dprime_from_jets(const SplitEta& eta, const std::vector<TermJets>& jets) {
  Form out;
  for (std::size_t n = 0; n < eta.terms.size(); ++n) {
    const int k = eta.terms[n].slot;
    const int j = 3 - k;
    out[hol(j) | hol(k)] += static_cast<double>(wedge_sign(hol(j), hol(k))) * u_zj(jets[n], j);
  }
  return out + out.conj();
}

std::vector<TermJets> jets_at(const SplitEta& eta, const Torus& T1, const Torus& T2, cplx z1, cplx z2) {
  std::vector<TermJets> out;
  out.reserve(eta.terms.size());
  for (const auto& t : eta.terms) out.push_back({t.A.jet(T1, z1), t.B.jet(T2, z2)});
  return out;
}

// dlog|h| (darg = false) or d arg h (darg = true) on factor k.
Form log_form(cplx phi, int k, bool darg) {
  if (darg) return Form::one_form(k, phi / cplx(0.0, 2.0), -std::conj(phi) / cplx(0.0, 2.0));
  return Form::one_form(k, 0.5 * phi, 0.5 * std::conj(phi));
}

std::vector<cplx> support(const EllipticFunction& h) {
  std::vector<cplx> out;
  for (const auto& p : h.divisor().points()) out.push_back(p.z);
  return out;
}

struct Side {
  cplx value;
  double error = 0.0;
};

// Residue side: -sum_p n_p int_{p x E2} L(g) ^ (eta + etabar)
//               +sum_q n_q int_{E1 x q} L(f) ^ (eta + etabar).
Side residue_side(const EllipticFunction& f, const EllipticFunction& g, const SplitEta& eta, const QuadratureGrid& G,
                  bool darg) {
  const Torus& T1 = f.torus();
  const Torus& T2 = g.torus();
  Side out;
  if (!f.divisor().empty()) {
    auto on_e2 = [&](cplx z2) {
      const Form lg = log_form(g.dlog(z2), 2, darg);
      cplx acc = 0.0;
      for (const auto& p : f.divisor().points()) {
        const Form e = eta_form(eta, T1, T2, p.z, z2);
        const Form w = wedge(lg, (e + e.conj()).restrict_away(1));
        acc -= static_cast<double>(p.n) * w[Form::dz2 | Form::dzb2];
      }
      return cplx(0.0, -2.0) * acc;
    };
    const auto r = torus::quad_integrate(T2, G, support(g), on_e2);
    out.value += r.value;
    out.error += r.error;
  }
  if (!g.divisor().empty()) {
    auto on_e1 = [&](cplx z1) {
      const Form lf = log_form(f.dlog(z1), 1, darg);
      cplx acc = 0.0;
      for (const auto& q : g.divisor().points()) {
        const Form e = eta_form(eta, T1, T2, z1, q.z);
        const Form w = wedge(lf, (e + e.conj()).restrict_away(2));
        acc += static_cast<double>(q.n) * w[Form::dz1 | Form::dzb1];
      }
      return cplx(0.0, -2.0) * acc;
    };
    const auto r = torus::quad_integrate(T1, G, support(f), on_e1);
    out.value += r.value;
    out.error += r.error;
  }
  return out;
}

struct FactorData {
  std::vector<double> L;
  std::vector<cplx> phi;
  std::vector<std::vector<TrigPoly::Jet>> jets;  // [term][cell]
};

FactorData factor_data(const EllipticFunction& h, const SplitEta& eta, bool first, const torus::GridSamples& s) {
  FactorData d;
  const std::size_t n = s.z.size();
  const bool constant = h.divisor().empty();
  d.L.assign(n, 0.0);
  d.phi.assign(n, 0.0);
  d.jets.assign(eta.terms.size(), std::vector<TrigPoly::Jet>(n));
  for (std::size_t k = 0; k < n; ++k) {
    if (s.masked[k]) continue;
    if (!constant) {
      d.L[k] = h.log_abs(s.z[k]);
      d.phi[k] = h.dlog(s.z[k]);
    } else {
      d.L[k] = std::log(std::abs(h.constant()));
    }
    for (std::size_t t = 0; t < eta.terms.size(); ++t)
      d.jets[t][k] = (first ? eta.terms[t].A : eta.terms[t].B).jet(h.torus(), s.z[k]);
  }
  return d;
}

}  // namespace

TrigPoly::Jet TrigPoly::jet(const Torus& T, cplx z) const {
  const auto [s, t] = torus::lattice_coords(z, T);
  const double im = T.tau.imag();
  const double re = T.tau.real();
  Jet out{0.0, 0.0, 0.0, 0.0};
  for (const auto& m : modes) {
    const cplx e = m.c * std::exp(cplx(0.0, kTwoPi * (m.a * s + m.b * t)));
    const cplx dx = cplx(0.0, kTwoPi * m.a);
    const cplx dy = -(re / im) * dx + cplx(0.0, kTwoPi * m.b) / im;
    const cplx dz = 0.5 * (dx - cplx(0.0, 1.0) * dy);
    const cplx dzb = 0.5 * (dx + cplx(0.0, 1.0) * dy);
    out.v += e;
    out.z += dz * e;
    out.zb += dzb * e;
    out.zzb += dz * dzb * e;
  }
  return out;
}

void SplitEta::validate() const {
  for (const auto& t : terms)
    if (t.slot != 1 && t.slot != 2)
      throw DomainError(ErrorKind::DegreeMismatch, "eta term slot must be 1 or 2, got " + std::to_string(t.slot));
}

Form eta_form(const SplitEta& eta, const Torus& T1, const Torus& T2, cplx z1, cplx z2) {
  Form out;
  for (const auto& t : eta.terms) out[hol(t.slot)] += t.A.jet(T1, z1).v * t.B.jet(T2, z2).v;
  return out;
}

Form ddbar_form(const SplitEta& eta, const Torus& T1, const Torus& T2, cplx z1, cplx z2) {
  return ddbar_from_jets(eta, jets_at(eta, T1, T2, z1, z2));
}

DdbarResult ddbar_defect(const EllipticFunction& f, const EllipticFunction& g, const SplitEta& eta,
                         const QuadratureGrid& G) {
  eta.validate();
  G.validate();
  const Torus& T1 = f.torus();
  const Torus& T2 = g.torus();
  DdbarResult out;
  if (eta.terms.empty()) return out;

  // stokes = false: theta ^ ddbar(eta); true: 2 dlog|f| ^ dlog|g| ^ (d' eta + conj).
  auto factory_for = [&](bool stokes) -> torus::ProductFactory {
    return [&, stokes](const torus::GridSamples& s1, const torus::GridSamples& s2) -> torus::ProductIntegrand {
      auto d1 = std::make_shared<FactorData>(factor_data(f, eta, true, s1));
      auto d2 = std::make_shared<FactorData>(factor_data(g, eta, false, s2));
      return [d1, d2, &eta, stokes](std::size_t i1, std::size_t i2) -> cplx {
        std::vector<TermJets> jets(eta.terms.size());
        for (std::size_t t = 0; t < jets.size(); ++t) jets[t] = {d1->jets[t][i1], d2->jets[t][i2]};
        const Form lf = log_form(d1->phi[i1], 1, false);
        const Form lg = log_form(d2->phi[i2], 2, false);
        cplx top;
        if (stokes) {
          top = 2.0 * top_coefficient(wedge(lf, lg), dprime_from_jets(eta, jets));
        } else {
          const Form theta = d1->L[i1] * lg - d2->L[i2] * lf;
          top = top_coefficient(theta, ddbar_from_jets(eta, jets));
        }
        return -4.0 * top;  // dz1 dzb1 dz2 dzb2 = -4 dA1 dA2
      };
    };
  };

  const auto s1 = support(f);
  const auto s2 = support(g);
  const auto lhs = torus::quad_integrate_product(T1, T2, G, s1, s2, factory_for(false));
  const auto stokes = torus::quad_integrate_product(T1, T2, G, s1, s2, factory_for(true));
  const auto rhs = residue_side(f, g, eta, G, false);
  const auto darg = residue_side(f, g, eta, G, true);

  out.lhs = lhs.value.real();
  out.lhs_error = lhs.error;
  out.lhs_stokes = stokes.value.real();
  out.lhs_stokes_error = stokes.error;
  out.rhs = rhs.value.real();
  out.rhs_error = rhs.error;
  out.rhs_darg = darg.value.real();
  out.rhs_darg_error = darg.error;
  out.imag_residual = std::max({std::abs(lhs.value.imag()), std::abs(stokes.value.imag()),
                                std::abs(rhs.value.imag()), std::abs(darg.value.imag())});
  return out;
}

}  // namespace milreg::regulator
