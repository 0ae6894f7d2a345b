#include "milreg/regulator/cochain.hpp"

#include "milreg/error.hpp"

namespace milreg::regulator {

namespace {

Form wedge_dlogs(const std::vector<int>& idx, const std::vector<FunctionSample>& samples) {
  Form acc = Form::scalar(1.0);
  for (int i : idx) acc = wedge(acc, samples.at(static_cast<std::size_t>(i)).dlog);
  return acc;
}

std::string indices_str(const std::vector<int>& idx) {
  std::string s;
  for (int i : idx) s += (s.empty() ? "" : "^") + std::string("dlog f") + std::to_string(i + 1);
  return s.empty() ? "1" : s;
}

}  // namespace

std::string DeligneCochain::str() const {
  std::string s = "(" + (f_part ? indices_str(*f_part) : std::string("0")) + ", ";
  if (s_part.empty()) s += "0";
  bool first = true;
  for (const auto& t : s_part) {
    s += (t.coef < 0 ? " - " : (first ? "" : " + "));
    s += "log|f" + std::to_string(t.log_index + 1) + "|";
    for (const auto& w : t.factors) s += " pi" + std::to_string(w.p) + "(" + indices_str(w.indices) + ")";
    first = false;
  }
  return s + ")";
}

DeligneCochain singleton(int index) { return {1, std::vector<int>{index}, {STerm{1, index, {}}}}; }

DeligneCochain s_only(int weight, std::vector<STerm> s) { return {weight, std::nullopt, std::move(s)}; }

DeligneCochain cup(const DeligneCochain& x, const DeligneCochain& y) {
  DeligneCochain out;
  out.weight = x.weight + y.weight;
  if (x.f_part && y.f_part) {
    std::vector<int> f = *x.f_part;
    f.insert(f.end(), y.f_part->begin(), y.f_part->end());
    out.f_part = std::move(f);
  }
  if (x.f_part) {
    const int sign = x.f_degree() % 2 == 0 ? 1 : -1;
    for (const auto& t : y.s_part) {
      STerm nt{sign * t.coef, t.log_index, {ProjectedWedge{x.weight, *x.f_part}}};
      nt.factors.insert(nt.factors.end(), t.factors.begin(), t.factors.end());
      out.s_part.push_back(std::move(nt));
    }
  }
  if (y.f_part) {
    for (const auto& t : x.s_part) {
      STerm nt = t;
      nt.factors.push_back(ProjectedWedge{y.weight, *y.f_part});
      out.s_part.push_back(std::move(nt));
    }
  }
  return out;
}

DeligneCochain iterated_cup(int m) {
  DeligneCochain acc = singleton(0);
  for (int i = 1; i < m; ++i) acc = cup(acc, singleton(i));
  return acc;
}

Form evaluate_f(const DeligneCochain& c, const std::vector<FunctionSample>& samples) {
  if (!c.f_part) return Form();
  return wedge_dlogs(*c.f_part, samples);
}

Form evaluate_s(const DeligneCochain& c, const std::vector<FunctionSample>& samples) {
  Form acc;
  for (const auto& t : c.s_part) {
    Form term = Form::scalar(static_cast<double>(t.coef) * samples.at(static_cast<std::size_t>(t.log_index)).log_abs);
    for (const auto& w : t.factors) term = wedge(term, pi_p(wedge_dlogs(w.indices, samples), w.p));
    acc += term;
  }
  return acc;
}

Form xi_closed(const std::vector<FunctionSample>& s) {
  const auto m = s.size();
  if (m < 1 || m > 4)
    throw DomainError(ErrorKind::UnsupportedArity, "xi is available for 1 <= m <= 4, got m = " + std::to_string(m));
  auto L = [&](std::size_t i) { return s[i].log_abs; };
  auto p1 = [&](std::size_t i) { return pi_p(s[i].dlog, 1); };
  if (m == 1) return Form::scalar(L(0));
  if (m == 2) return L(0) * p1(1) - L(1) * p1(0);
  const Form p2_12 = pi_p(wedge(s[0].dlog, s[1].dlog), 2);
  if (m == 3) return L(0) * wedge(p1(1), p1(2)) - L(1) * wedge(p1(0), p1(2)) + L(2) * p2_12;
  const Form p3_123 = pi_p(wedge(wedge(s[0].dlog, s[1].dlog), s[2].dlog), 3);
  return L(0) * wedge(wedge(p1(1), p1(2)), p1(3)) - L(1) * wedge(wedge(p1(0), p1(2)), p1(3)) +
         L(2) * wedge(p2_12, p1(3)) - L(3) * p3_123;
}

}  // namespace milreg::regulator
