#include "milreg/io/json.hpp"

#include <algorithm>
#include <cmath>

namespace milreg::io {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& array_of(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

}  // namespace

void check_object(const Json& j, const std::string& path, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  for (const char* k : required)
    if (!j.contains(k)) throw SchemaError(path, std::string("missing field '") + k + "'");
  for (const auto& [key, _] : j.items()) {
    auto same = [&](const char* k) { return key == k; };
    if (std::none_of(required.begin(), required.end(), same) && std::none_of(optional.begin(), optional.end(), same))
      throw SchemaError(path, "unknown field '" + key + "'");
  }
}

const Json& member(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(path, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

long long as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<long long>();
}

double as_double(const Json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SchemaError(path, "expected a finite number");
  return v;
}

torus::cplx as_cplx(const Json& j, const std::string& path) {
  if (j.is_number()) return {as_double(j, path), 0.0};
  if (!j.is_array() || j.size() != 2) throw SchemaError(path, "expected [re, im]");
  return {as_double(j[0], at(path, 0)), as_double(j[1], at(path, 1))};
}

Json cplx_json(torus::cplx z) { return Json::array({z.real(), z.imag()}); }

// --- exact ---------------------------------------------------------------

exact::Rat rat_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return exact::Rat(j.get<long>());
  const std::string s = as_string(j, path);
  try {
    return exact::Rat::parse(s);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, "malformed rational '" + s + "'");
  }
}

Json to_json(const exact::Rat& r) { return r.str(); }

exact::FactoredRational factored_from_json(const Json& j, const std::string& path) {
  check_object(j, path, {"c"}, {"factors"});
  const exact::Rat c = rat_from_json(j.at("c"), at(path, "c"));
  std::vector<exact::Factor> factors;
  if (j.contains("factors")) {
    const auto& fs = array_of(j.at("factors"), at(path, "factors"));
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const std::string p = at(at(path, "factors"), i);
      if (!fs[i].is_array() || fs[i].size() != 2) throw SchemaError(p, "expected [root, exponent]");
      factors.push_back({rat_from_json(fs[i][0], at(p, 0)), static_cast<long>(as_int(fs[i][1], at(p, 1)))});
    }
  }
  if (c.is_zero()) throw SchemaError(at(path, "c"), "constant must be nonzero");
  return exact::FactoredRational::make(c, std::move(factors));
}

Json to_json(const exact::FactoredRational& f) {
  Json fs = Json::array();
  for (const auto& x : f.factors()) fs.push_back(Json::array({x.root.str(), x.exponent}));
  return Json{{"c", f.constant().str()}, {"factors", fs}};
}

exact::Place place_from_json(const Json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "inf") return exact::Place::infinity();
  return exact::Place::finite(rat_from_json(j, path));
}

Json to_json(const exact::Place& p) { return p.str(); }

// --- milnor --------------------------------------------------------------

milnor::SymbolEntry entry_from_json(const Json& j, const std::string& path) {
  if (!j.is_object() || j.size() != 1) throw SchemaError(path, "expected exactly one of q, fn, modp");
  if (j.contains("q")) {
    const exact::Rat r = rat_from_json(j.at("q"), at(path, "q"));
    if (r.is_zero()) throw SchemaError(at(path, "q"), "symbol entries must be nonzero");
    return milnor::SymbolEntry(r);
  }
  if (j.contains("fn")) return milnor::SymbolEntry(factored_from_json(j.at("fn"), at(path, "fn")));
  if (j.contains("modp")) {
    const auto& m = j.at("modp");
    const std::string p = at(path, "modp");
    if (!m.is_array() || m.size() != 2) throw SchemaError(p, "expected [r, p]");
    const long long prime = as_int(m[1], at(p, 1));
    if (prime < 2) throw SchemaError(at(p, 1), "expected a prime");
    // ModP::make checks primality and the residue (DomainError).
    return milnor::SymbolEntry(exact::ModP::make(as_int(m[0], at(p, 0)), static_cast<std::uint64_t>(prime)));
  }
  throw SchemaError(path, "unknown entry tag '" + j.begin().key() + "'");
}

Json to_json(const milnor::SymbolEntry& e) {
  if (e.is_rat()) return Json{{"q", e.rat().str()}};
  if (e.is_fn()) return Json{{"fn", to_json(e.fn())}};
  return Json{{"modp", Json::array({e.modp().r, e.modp().p})}};
}

milnor::FormalSum formal_from_json(const Json& j, const std::string& path) {
  array_of(j, path);
  milnor::FormalSum out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = at(path, i);
    check_object(j[i], p, {"entries"}, {"coef"});
    const std::int64_t coef = j[i].contains("coef") ? as_int(j[i].at("coef"), at(p, "coef")) : 1;
    const auto& es = array_of(j[i].at("entries"), at(p, "entries"));
    milnor::MilnorSymbol s;
    for (std::size_t k = 0; k < es.size(); ++k) s.push_back(entry_from_json(es[k], at(at(p, "entries"), k)));
    out.emplace_back(coef, std::move(s));
  }
  return out;
}

milnor::MilnorElement element_from_json(const Json& j, const std::string& path) {
  const auto raw = formal_from_json(j, path);
  if (raw.empty() || raw.front().second.empty())
    throw SchemaError(path, "element needs at least one term with entries (the field is read from it)");
  return milnor::normalize(raw);
}

Json to_json(const milnor::MilnorElement& x) {
  Json out = Json::array();
  for (const auto& [s, c] : x.terms()) {
    Json es = Json::array();
    for (const auto& e : s) es.push_back(to_json(e));
    out.push_back(Json{{"coef", c}, {"entries", es}});
  }
  return out;
}

Json to_json(const milnor::KappaPiElement& x) {
  return Json{{"plain", to_json(x.plain())}, {"pi", to_json(x.pi_part())}, {"text", x.str()}};
}

Json to_json(const tame::GerstenChain& c) {
  Json out = Json::array();
  for (const auto& [place, el] : c.support) out.push_back(Json{{"place", to_json(place)}, {"element", to_json(el)}});
  return out;
}

// --- torus ---------------------------------------------------------------

torus::Torus torus_from_json(const Json& j, const std::string& path) {
  check_object(j, path, {"tau"}, {"R"});
  const int R = j.contains("R") ? static_cast<int>(as_int(j.at("R"), at(path, "R"))) : 60;
  return torus::Torus::make(as_cplx(j.at("tau"), at(path, "tau")), R);
}

Json to_json(const torus::Torus& T) { return Json{{"tau", cplx_json(T.tau)}, {"R", T.R}}; }

torus::EllDivisor divisor_from_json(const Json& j, const std::string& path) {
  array_of(j, path);
  std::vector<torus::DivisorPoint> pts;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = at(path, i);
    check_object(j[i], p, {"z", "n"});
    pts.push_back({as_cplx(j[i].at("z"), at(p, "z")), static_cast<int>(as_int(j[i].at("n"), at(p, "n")))});
  }
  return torus::EllDivisor(std::move(pts));
}

Json to_json(const torus::EllDivisor& d) {
  Json out = Json::array();
  for (const auto& p : d.points()) out.push_back(Json{{"z", cplx_json(p.z)}, {"n", p.n}});
  return out;
}

torus::EllipticFunction function_from_json(const Json& j, const torus::Torus& T, const std::string& path) {
  check_object(j, path, {"divisor"}, {"constant"});
  const torus::cplx c = j.contains("constant") ? as_cplx(j.at("constant"), at(path, "constant")) : 1.0;
  return torus::EllipticFunction(divisor_from_json(j.at("divisor"), at(path, "divisor")), T, c);
}

Json to_json(const torus::EllipticFunction& f) {
  return Json{{"divisor", to_json(f.divisor())}, {"constant", cplx_json(f.constant())}};
}

torus::QuadratureGrid grid_from_json(const Json& j, const std::string& path) {
  check_object(j, path, {}, {"N", "delta", "threads"});
  torus::QuadratureGrid G;
  if (j.contains("N")) G.N = static_cast<int>(as_int(j.at("N"), at(path, "N")));
  if (j.contains("delta")) G.delta = as_double(j.at("delta"), at(path, "delta"));
  if (j.contains("threads")) G.threads = static_cast<int>(as_int(j.at("threads"), at(path, "threads")));
  return G;
}

Json to_json(const torus::QuadratureGrid& G) { return Json{{"N", G.N}, {"delta", G.delta}}; }

// --- regulator -----------------------------------------------------------

regulator::TrigPoly trig_from_json(const Json& j, const std::string& path) {
  array_of(j, path);
  regulator::TrigPoly out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = at(path, i);
    check_object(j[i], p, {"a", "b", "c"});
    out.modes.push_back({static_cast<int>(as_int(j[i].at("a"), at(p, "a"))),
                         static_cast<int>(as_int(j[i].at("b"), at(p, "b"))), as_cplx(j[i].at("c"), at(p, "c"))});
  }
  return out;
}

regulator::SplitEta eta_from_json(const Json& j, const std::string& path) {
  array_of(j, path);
  regulator::SplitEta out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = at(path, i);
    check_object(j[i], p, {"slot", "A", "B"});
    out.terms.push_back({static_cast<int>(as_int(j[i].at("slot"), at(p, "slot"))), trig_from_json(j[i].at("A"), at(p, "A")),
                         trig_from_json(j[i].at("B"), at(p, "B"))});
  }
  return out;
}

Json to_json(const regulator::RegulatorValue& v) {
  Json out = Json::array();
  for (const auto& p : v.pairings)
    out.push_back(Json{{"form_label", p.form_label},
                       {"value", p.value},
                       {"imag_residual", p.imag_residual},
                       {"error_estimate", p.error_estimate}});
  return out;
}

Json to_json(const regulator::DdbarResult& r) {
  return Json{{"lhs", r.lhs},
              {"lhs_error", r.lhs_error},
              {"rhs", r.rhs},
              {"rhs_error", r.rhs_error},
              {"defect", std::abs(r.lhs - r.rhs)},
              {"rhs_darg", r.rhs_darg},
              {"rhs_darg_error", r.rhs_darg_error},
              {"lhs_stokes", r.lhs_stokes},
              {"lhs_stokes_error", r.lhs_stokes_error},
              {"imag_residual", r.imag_residual}};
}

}  // namespace milreg::io
