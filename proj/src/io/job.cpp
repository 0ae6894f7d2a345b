#include "milreg/io/job.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "milreg/error.hpp"
#include "milreg/fixtures.hpp"

#ifndef MILREG_VERSION
#define MILREG_VERSION "0.0.0"
#endif

namespace milreg::io {

namespace {

using milnor::Field;
using regulator::CycleWithFunctions;
using regulator::HarmonicForm;
using torus::EllipticFunction;
using torus::Torus;

const std::string kPayload = "/payload";

struct Context {
  Overrides over;
  torus::QuadratureGrid grid;
  std::optional<int> R_used;

  Torus torus(const Json& j, const std::string& path) {
    Torus T = torus_from_json(j, path);
    if (over.R) T = Torus::make(T.tau, *over.R);
    R_used = R_used.value_or(T.R);
    return T;
  }
  Torus torus_tau(const Json& tau, const std::string& path) {
    const Torus T = Torus::make(as_cplx(tau, path), over.R.value_or(60));
    R_used = R_used.value_or(T.R);
    return T;
  }
};

std::string sub(const std::string& path, const std::string& key) { return path + "/" + key; }

// {divisor, constant?} or {one_minus: k} referring to an earlier entry.
std::vector<EllipticFunction> functions_from_json(const Json& j, const Torus& T, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  std::vector<EllipticFunction> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    if (j[i].is_object() && j[i].contains("one_minus")) {
      check_object(j[i], p, {"one_minus"});
      const long long k = as_int(j[i].at("one_minus"), sub(p, "one_minus"));
      if (k < 0 || static_cast<std::size_t>(k) >= out.size())
        throw SchemaError(sub(p, "one_minus"), "must refer to an earlier function");
      out.push_back(regulator::one_minus(out[static_cast<std::size_t>(k)]));
    } else {
      out.push_back(function_from_json(j[i], T, p));
    }
  }
  return out;
}

std::vector<HarmonicForm> forms_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  std::vector<HarmonicForm> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    if (j[i].is_object() && j[i].contains("scalar")) {
      check_object(j[i], p, {"label", "scalar"});
      out.push_back({as_string(j[i].at("label"), sub(p, "label")),
                     regulator::Form::scalar(as_cplx(j[i].at("scalar"), sub(p, "scalar")))});
    } else {
      check_object(j[i], p, {"label", "a", "b"});
      out.push_back(HarmonicForm::curve(as_string(j[i].at("label"), sub(p, "label")),
                                        as_cplx(j[i].at("a"), sub(p, "a")), as_cplx(j[i].at("b"), sub(p, "b"))));
    }
  }
  return out;
}

regulator::PointCarrier points_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  regulator::PointCarrier pc;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    check_object(j[i], p, {"values"}, {"coefficient", "weight"});
    regulator::PointCarrier::Point pt;
    if (j[i].contains("coefficient")) pt.coefficient = static_cast<int>(as_int(j[i].at("coefficient"), sub(p, "coefficient")));
    if (j[i].contains("weight")) pt.weight = as_double(j[i].at("weight"), sub(p, "weight"));
    const auto& vs = j[i].at("values");
    if (!vs.is_array()) throw SchemaError(sub(p, "values"), "expected an array");
    for (std::size_t k = 0; k < vs.size(); ++k) pt.values.push_back(as_cplx(vs[k], sub(p, "values") + "/" + std::to_string(k)));
    pc.points.push_back(std::move(pt));
  }
  return pc;
}

// Torus or point cycle plus its forms, from an rlog / rbeilinson payload.
std::pair<CycleWithFunctions, std::vector<HarmonicForm>> cycle_from_payload(const Json& p, Context& ctx) {
  check_object(p, kPayload, {}, {"torus", "functions", "points", "forms", "coefficient"});
  CycleWithFunctions c;
  if (p.contains("coefficient")) c.coefficient = static_cast<int>(as_int(p.at("coefficient"), sub(kPayload, "coefficient")));
  const bool on_points = p.contains("points");
  if (on_points == p.contains("functions")) throw SchemaError(kPayload, "give exactly one of 'functions' and 'points'");
  std::vector<HarmonicForm> forms;
  if (on_points) {
    if (p.contains("torus")) throw SchemaError(kPayload, "'torus' applies to function carriers only");
    c.carrier = points_from_json(p.at("points"), sub(kPayload, "points"));
    forms = {{"1", regulator::Form::scalar(1.0)}};
  } else {
    const Torus T = ctx.torus(member(p, kPayload, "torus"), sub(kPayload, "torus"));
    c.carrier = regulator::TorusCarrier{functions_from_json(p.at("functions"), T, sub(kPayload, "functions"))};
    forms = regulator::real_basis_curve();
  }
  if (p.contains("forms")) forms = forms_from_json(p.at("forms"), sub(kPayload, "forms"));
  return {c, forms};
}

Json rows_json(const std::vector<regulator::ConvergenceRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back(Json{{"form_label", r.form_label}, {"N", r.N}, {"delta", r.delta}, {"value", r.value}, {"error", r.error}});
  return out;
}

std::string rows_csv(const std::string& test, const std::vector<regulator::ConvergenceRow>& rows) {
  std::ostringstream os;
  os.precision(17);
  os << "test,form,N,delta,value,error\n";
  for (const auto& r : rows) os << test << ',' << r.form_label << ',' << r.N << ',' << r.delta << ',' << r.value << ',' << r.error << '\n';
  return os.str();
}

// --- tasks ---------------------------------------------------------------

Json task_normalize(const Json& p) {
  check_object(p, kPayload, {"element"});
  const auto x = element_from_json(p.at("element"), sub(kPayload, "element"));
  if (x.empty()) return "zero";
  Json out{{"normal_form", to_json(x)}, {"text", x.str()}};
  if (x.field().kind == Field::Kind::Rational) out["vanishes_in_k_theory"] = tame::vanishes_over_q(x);
  return out;
}

Json task_tame(const Json& p) {
  check_object(p, kPayload, {"element"}, {"place", "unit", "prime"});
  const auto x = element_from_json(p.at("element"), sub(kPayload, "element"));
  if (x.field().kind == Field::Kind::Rational) {
    if (!p.contains("prime") || p.contains("place") || p.contains("unit"))
      throw SchemaError(kPayload, "an element over Q takes 'prime' (and no place/unit)");
    const long long prime = as_int(p.at("prime"), sub(kPayload, "prime"));
    if (prime < 2) throw SchemaError(sub(kPayload, "prime"), "expected a prime");
    const auto q = static_cast<std::uint64_t>(prime);
    const auto tame_value = tame::padic_tame(x, q);
    return Json{{"prime", prime},
                {"boundary", to_json(tame::boundary_padic(x, q))},
                {"del_nu", to_json(tame_value)},
                {"text", tame_value.str()}};
  }
  if (x.field().kind != Field::Kind::FunctionField)
    throw DomainError(ErrorKind::MixedFields, "tame symbols are defined over Q and Q(t)");
  if (!p.contains("place") || p.contains("prime"))
    throw SchemaError(kPayload, "an element over Q(t) takes 'place' and optionally 'unit'");
  const auto place = place_from_json(p.at("place"), sub(kPayload, "place"));
  const auto u = p.contains("unit") ? tame::UniformizerChoice::make(place, factored_from_json(p.at("unit"), sub(kPayload, "unit")))
                                    : tame::UniformizerChoice::canonical(place);
  const auto nu = tame::del_nu(x, u);
  return Json{{"place", to_json(place)},
              {"boundary", to_json(tame::boundary_pi(x, u))},
              {"del0", to_json(tame::del0(x, u))},
              {"del_nu", to_json(nu)},
              {"text", nu.str()}};
}

Json task_gersten(const Json& p) {
  check_object(p, kPayload, {"element"});
  const auto x = element_from_json(p.at("element"), sub(kPayload, "element"));
  if (x.field().kind != Field::Kind::FunctionField)
    throw DomainError(ErrorKind::MixedFields, "the Gersten boundary is defined for elements over Q(t)");
  const auto chain = tame::gersten_boundary(x);
  return Json{{"chain", to_json(chain)}, {"text", chain.str()}};
}

Json task_reciprocity(const Json& p) {
  check_object(p, kPayload, {"f", "g"});
  const auto f = factored_from_json(p.at("f"), sub(kPayload, "f"));
  const auto g = factored_from_json(p.at("g"), sub(kPayload, "g"));
  return Json{{"defect", tame::weil_reciprocity_defect(f, g).str()}};
}

Json task_pairing(const Json& p, Context& ctx, bool beilinson) {
  const auto [c, forms] = cycle_from_payload(p, ctx);
  const auto v = beilinson ? regulator::r_beilinson(c, forms, ctx.grid) : regulator::r_log(c, forms, ctx.grid);
  return Json{{"pairings", to_json(v)}};
}

Json task_compare_j(const Json& p, Context& ctx) {
  check_object(p, kPayload, {"torus"}, {"panel", "points"});
  const Torus T = ctx.torus(p.at("torus"), sub(kPayload, "torus"));
  std::vector<CycleWithFunctions> panel;
  if (p.contains("panel")) {
    const auto& pj = p.at("panel");
    if (!pj.is_array()) throw SchemaError(sub(kPayload, "panel"), "expected an array");
    for (std::size_t i = 0; i < pj.size(); ++i)
      panel.push_back({regulator::TorusCarrier{functions_from_json(pj[i], T, sub(kPayload, "panel") + "/" + std::to_string(i))}, 1});
  } else {
    panel = fixtures::j_panel(T);
  }
  const auto cmp = regulator::compare_j(panel, regulator::real_basis_curve(), ctx.grid);
  Json entries = Json::array();
  for (const auto& e : cmp.entries)
    entries.push_back(Json{{"input", e.input},
                           {"form_label", e.form_label},
                           {"r_beilinson", e.r_beilinson},
                           {"r_beilinson_error", e.r_beilinson_error},
                           {"r_log_J", e.r_log_j},
                           {"r_log_J_error", e.r_log_j_error},
                           {"ratio", e.ratio},
                           {"ratio_error", e.ratio_error}});
  Json out{{"entries", entries},
           {"constant", cmp.constant},
           {"relative_spread", cmp.relative_spread},
           {"within_errors", cmp.within_errors},
           {"candidate", cplx_json(cmp.candidate)},
           {"constant_minus_candidate_abs", std::abs(cmp.constant - cmp.candidate)},
           {"abs_constant_minus_abs_candidate", std::abs(std::abs(cmp.constant) - std::abs(cmp.candidate))}};
  if (p.contains("points")) {
    CycleWithFunctions pc{points_from_json(p.at("points"), sub(kPayload, "points")), 1};
    const std::vector<HarmonicForm> one{{"1", regulator::Form::scalar(1.0)}};
    const double b = regulator::r_beilinson(pc, one, ctx.grid).pairings.front().value;
    const double l = regulator::r_log(pc, one, ctx.grid).pairings.front().value;
    out["points"] = Json{{"r_beilinson", b}, {"r_log", l}, {"ratio", l != 0.0 ? Json(b / l) : Json(nullptr)},
                         {"candidate", 1.0}};
  }
  return out;
}

Json task_ddbar(const Json& p, Context& ctx) {
  regulator::DdbarResult r;
  if (p.contains("fixture")) {
    check_object(p, kPayload, {"fixture"});
    const auto panel = fixtures::ddbar_panel();
    const long long k = as_int(p.at("fixture"), sub(kPayload, "fixture"));
    if (k < 0 || static_cast<std::size_t>(k) >= panel.size())
      throw SchemaError(sub(kPayload, "fixture"), "fixture index out of range");
    const auto& t = panel[static_cast<std::size_t>(k)];
    const Torus T1 = ctx.over.R ? Torus::make(t.f.torus().tau, *ctx.over.R) : t.f.torus();
    const Torus T2 = ctx.over.R ? Torus::make(t.g.torus().tau, *ctx.over.R) : t.g.torus();
    ctx.R_used = T1.R;
    r = regulator::ddbar_defect(EllipticFunction(t.f.divisor(), T1, t.f.constant()),
                                EllipticFunction(t.g.divisor(), T2, t.g.constant()), t.eta, ctx.grid);
  } else {
    check_object(p, kPayload, {"torus1", "torus2", "f", "g", "eta"});
    const Torus T1 = ctx.torus(p.at("torus1"), sub(kPayload, "torus1"));
    const Torus T2 = ctx.torus(p.at("torus2"), sub(kPayload, "torus2"));
    r = regulator::ddbar_defect(function_from_json(p.at("f"), T1, sub(kPayload, "f")),
                                function_from_json(p.at("g"), T2, sub(kPayload, "g")),
                                eta_from_json(p.at("eta"), sub(kPayload, "eta")), ctx.grid);
  }
  return to_json(r);
}

Json task_descent(const Json& p, Context& ctx, std::uint64_t seed) {
  check_object(p, kPayload, {"torus"}, {"f1", "f2", "c", "random_pairs"});
  const Torus T = ctx.torus(p.at("torus"), sub(kPayload, "torus"));
  const double c = p.contains("c") ? as_double(p.at("c"), sub(kPayload, "c")) : 1.0;
  if (p.contains("random_pairs")) {
    if (p.contains("f1") || p.contains("f2")) throw SchemaError(kPayload, "give either f1/f2 or random_pairs");
    const long long n = as_int(p.at("random_pairs"), sub(kPayload, "random_pairs"));
    if (n < 0) throw SchemaError(sub(kPayload, "random_pairs"), "must be nonnegative");
    std::mt19937_64 rng(seed);
    Json defects = Json::array();
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      auto [f1, f2] = fixtures::random_disjoint_pair(rng, T);
      const double d = regulator::descent_defect(f1, f2, c);
      worst = std::max(worst, std::abs(d));
      defects.push_back(Json{{"f1", to_json(f1)}, {"f2", to_json(f2)}, {"defect", d}});
    }
    return Json{{"pairs", defects}, {"max_abs_defect", worst}};
  }
  if (!p.contains("f1") || !p.contains("f2")) throw SchemaError(kPayload, "missing f1/f2");
  const auto f1 = function_from_json(p.at("f1"), T, sub(kPayload, "f1"));
  const auto f2 = function_from_json(p.at("f2"), T, sub(kPayload, "f2"));
  return Json{{"defect", regulator::descent_defect(f1, f2, c)}};
}

std::pair<Json, std::string> task_converge(const Json& p, Context& ctx) {
  check_object(p, kPayload, {"test", "Ns"}, {"tau", "torus", "functions", "forms"});
  const std::string test = as_string(p.at("test"), sub(kPayload, "test"));
  if (p.contains("tau") == p.contains("torus")) throw SchemaError(kPayload, "give exactly one of 'tau' and 'torus'");
  const Torus T = p.contains("tau") ? ctx.torus_tau(p.at("tau"), sub(kPayload, "tau"))
                                    : ctx.torus(p.at("torus"), sub(kPayload, "torus"));
  std::vector<int> Ns;
  const auto& nj = p.at("Ns");
  if (!nj.is_array() || nj.empty()) throw SchemaError(sub(kPayload, "Ns"), "expected a nonempty array");
  for (std::size_t i = 0; i < nj.size(); ++i) Ns.push_back(static_cast<int>(as_int(nj[i], sub(kPayload, "Ns") + "/" + std::to_string(i))));
  std::vector<EllipticFunction> fs;
  if (test == "steinberg") {
    if (p.contains("functions")) {
      fs = functions_from_json(p.at("functions"), T, sub(kPayload, "functions"));
      if (fs.size() != 1) throw SchemaError(sub(kPayload, "functions"), "steinberg takes exactly one function f");
    } else {
      fs = {fixtures::steinberg_f(T)};
    }
    fs.push_back(regulator::one_minus(fs.front()));
  } else if (test == "rlog") {
    fs = functions_from_json(member(p, kPayload, "functions"), T, sub(kPayload, "functions"));
  } else {
    throw SchemaError(sub(kPayload, "test"), "unknown test '" + test + "' (steinberg, rlog)");
  }
  const auto forms = p.contains("forms") ? forms_from_json(p.at("forms"), sub(kPayload, "forms")) : regulator::real_basis_curve();
  const CycleWithFunctions c{regulator::TorusCarrier{fs}, 1};
  const auto rows = regulator::convergence_rlog(c, forms, Ns, ctx.grid.delta, ctx.grid.threads);
  Json mono = Json::object();
  for (const auto& w : forms) mono[w.label] = regulator::strictly_decreasing(rows, w.label);
  Json fj = Json::array();
  for (const auto& f : fs) fj.push_back(to_json(f));
  return {Json{{"functions", fj}, {"rows", rows_json(rows)}, {"strictly_decreasing", mono}}, rows_csv(test, rows)};
}

}  // namespace

const char* tool_version() { return MILREG_VERSION; }

Json error_json(const std::string& error, const std::string& detail) { return Json{{"error", error}, {"detail", detail}}; }

Report run_job(const Json& job, const Overrides& overrides) {
  const auto t0 = std::chrono::steady_clock::now();
  check_object(job, "", {"task", "payload"}, {"grid", "seed"});
  const std::string task = as_string(job.at("task"), "/task");
  const Json& p = job.at("payload");
  Context ctx;
  ctx.over = overrides;
  if (job.contains("grid")) ctx.grid = grid_from_json(job.at("grid"), "/grid");
  if (overrides.N) ctx.grid.N = *overrides.N;
  if (overrides.delta) ctx.grid.delta = *overrides.delta;
  if (overrides.threads) ctx.grid.threads = *overrides.threads;
  ctx.grid.validate();
  std::uint64_t seed = 0;
  if (job.contains("seed")) {
    const long long s = as_int(job.at("seed"), "/seed");
    if (s < 0) throw SchemaError("/seed", "must be nonnegative");
    seed = static_cast<std::uint64_t>(s);
  }

  Report rep;
  Json result;
  if (task == "normalize") result = task_normalize(p);
  else if (task == "tame") result = task_tame(p);
  else if (task == "gersten") result = task_gersten(p);
  else if (task == "reciprocity") result = task_reciprocity(p);
  else if (task == "rlog") result = task_pairing(p, ctx, false);
  else if (task == "rbeilinson") result = task_pairing(p, ctx, true);
  else if (task == "compare-j") result = task_compare_j(p, ctx);
  else if (task == "ddbar") result = task_ddbar(p, ctx);
  else if (task == "descent") result = task_descent(p, ctx, seed);
  else if (task == "converge") std::tie(result, rep.csv) = task_converge(p, ctx);
  else throw SchemaError("/task", "unknown task '" + task + "'");

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rep.json = Json{{"tool_version", tool_version()},
                  {"task", task},
                  {"job", job},
                  {"result", result},
                  {"grid", Json{{"N", ctx.grid.N}, {"delta", ctx.grid.delta}, {"R", ctx.R_used.value_or(overrides.R.value_or(60))}}},
                  {"wall_time", wall}};
  return rep;
}

}  // namespace milreg::io
