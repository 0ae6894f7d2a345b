#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "milreg/exact/factored.hpp"
#include "milreg/milnor/element.hpp"
#include "milreg/milnor/kappa.hpp"
#include "milreg/regulator/ddbar.hpp"
#include "milreg/regulator/regulator.hpp"
#include "milreg/tame/tame.hpp"
#include "milreg/torus/quadrature.hpp"
#include "milreg/torus/torus.hpp"

namespace milreg::io {

using Json = nlohmann::ordered_json;

// Malformed job or payload. `path` is a JSON-pointer-like location.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& detail)
      : std::runtime_error((path.empty() ? std::string("job") : path) + ": " + detail), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Rejects keys outside required + optional and missing required keys.
void check_object(const Json& j, const std::string& path, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {});
const Json& member(const Json& j, const std::string& path, const char* key);
std::string as_string(const Json& j, const std::string& path);
long long as_int(const Json& j, const std::string& path);
double as_double(const Json& j, const std::string& path);
torus::cplx as_cplx(const Json& j, const std::string& path);  // [re, im]
Json cplx_json(torus::cplx z);

exact::Rat rat_from_json(const Json& j, const std::string& path);
Json to_json(const exact::Rat& r);

exact::FactoredRational factored_from_json(const Json& j, const std::string& path);
Json to_json(const exact::FactoredRational& f);

exact::Place place_from_json(const Json& j, const std::string& path);
Json to_json(const exact::Place& p);

milnor::SymbolEntry entry_from_json(const Json& j, const std::string& path);
Json to_json(const milnor::SymbolEntry& e);

// List of {coef, entries}; returned unreduced.
milnor::FormalSum formal_from_json(const Json& j, const std::string& path);
milnor::MilnorElement element_from_json(const Json& j, const std::string& path);
Json to_json(const milnor::MilnorElement& x);
// {plain, pi}: a + b Pi.
Json to_json(const milnor::KappaPiElement& x);
Json to_json(const tame::GerstenChain& c);

torus::Torus torus_from_json(const Json& j, const std::string& path);
Json to_json(const torus::Torus& T);
torus::EllDivisor divisor_from_json(const Json& j, const std::string& path);
Json to_json(const torus::EllDivisor& d);
// {divisor, constant?: [re, im]}.
torus::EllipticFunction function_from_json(const Json& j, const torus::Torus& T, const std::string& path);
Json to_json(const torus::EllipticFunction& f);

torus::QuadratureGrid grid_from_json(const Json& j, const std::string& path);
Json to_json(const torus::QuadratureGrid& G);

regulator::TrigPoly trig_from_json(const Json& j, const std::string& path);
regulator::SplitEta eta_from_json(const Json& j, const std::string& path);
Json to_json(const regulator::RegulatorValue& v);
Json to_json(const regulator::DdbarResult& r);

}  // namespace milreg::io
