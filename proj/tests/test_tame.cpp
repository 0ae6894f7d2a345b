#include <doctest.h>

#include "milreg/error.hpp"
#include "milreg/tame/tame.hpp"
#include "support.hpp"

using namespace milreg;
using namespace milreg::milnor;
using namespace milreg::tame;
using exact::ModP;

namespace {

SymbolEntry q(long a, long b = 1) { return SymbolEntry(Rat(a, b)); }
SymbolEntry fn(const FactoredRational& f) { return SymbolEntry(f); }
MilnorElement ell(const SymbolEntry& e) { return MilnorElement::ell(e); }
const FactoredRational kT = FactoredRational::t();
const Place kZero = Place::finite(Rat(0));
const Field kQ = Field::rational();

}  // namespace

TEST_CASE("d_pi of 5t^2 at 0 is l(5) + 2 Pi") {
  const auto d = d_pi(FactoredRational::make(Rat(5), {{Rat(0), 2}}), UniformizerChoice::canonical(kZero));
  CHECK(d.plain() == ell(q(5)));
  CHECK(d.pi_part() == MilnorElement::integer(kQ, 2));
}

TEST_CASE("d_pi of t at infinity is -Pi") {
  const auto d = d_pi(kT, UniformizerChoice::canonical(Place::infinity()));
  CHECK(d.plain().empty());
  CHECK(d.pi_part() == MilnorElement::integer(kQ, -1));
}

TEST_CASE("d_pi of a unit has no Pi part") {
  const auto f = FactoredRational::make(Rat(3), {{Rat(1), 2}});
  const auto d = d_pi(f, UniformizerChoice::canonical(kZero));
  CHECK(d.pi_part().empty());
  CHECK(d.plain() == ell(q(3)));
}

TEST_CASE("uniformizer units must have valuation zero") {
  CHECK_THROWS_AS(UniformizerChoice::make(kZero, kT), DomainError);
  CHECK_NOTHROW(UniformizerChoice::make(kZero, FactoredRational::linear(Rat(2))));
}

TEST_CASE("del_nu worked examples") {
  const auto u0 = UniformizerChoice::canonical(kZero);
  CHECK(del_nu(symbol({fn(kT), fn(kT)}), u0) == ell(q(-1)));
  // {5 (t-2)^3 (t-1)^-1, 7} at 2 -> -3 l(7)
  const auto f = FactoredRational::make(Rat(5), {{Rat(2), 3}, {Rat(1), -1}});
  const auto x = symbol({fn(f), fn(FactoredRational::constant_fn(Rat(7)))});
  CHECK(del_nu(x, UniformizerChoice::canonical(Place::finite(Rat(2)))) == k_scale(-3, ell(q(7))));
  // units everywhere near 0
  const auto units = symbol({fn(FactoredRational::linear(Rat(1))), fn(FactoredRational::constant_fn(Rat(3)))});
  CHECK(del_nu(units, u0).empty());
}

TEST_CASE("closed residue form for m = 2") {
  // {u pi^k1, v pi^k2} -> k2 l(u) - k1 l(v) + k1 k2 l(-1)
  const auto a = FactoredRational::make(Rat(3), {{Rat(0), 2}});
  const auto b = FactoredRational::make(Rat(5), {{Rat(0), 1}});
  const auto u0 = UniformizerChoice::canonical(kZero);
  const auto expect = k_add(k_sub(ell(q(3)), k_scale(2, ell(q(5)))), k_scale(2, ell(q(-1))));
  CHECK(residue_closed_form({fn(a), fn(b)}, u0) == expect);
  CHECK(del_nu(MilnorSymbol{fn(a), fn(b)}, u0) == expect);
}

TEST_CASE("Gersten boundary") {
  const auto c = gersten_boundary(symbol({fn(kT)}));
  REQUIRE(c.support.size() == 2);
  CHECK(c.support.at(kZero) == MilnorElement::integer(kQ, 1));
  CHECK(c.support.at(Place::infinity()) == MilnorElement::integer(kQ, -1));
  const auto one_minus_t = FactoredRational::make(Rat(-1), {{Rat(1), 1}});
  CHECK(gersten_boundary(symbol({fn(kT), fn(one_minus_t)})).support.empty());
  // {t, 3}: sign from Pi l(3) = -l(3) Pi
  const auto d = gersten_boundary(symbol({fn(kT), fn(FactoredRational::constant_fn(Rat(3)))}));
  CHECK(d.support.at(kZero) == k_scale(-1, ell(q(3))));
  CHECK(d.support.at(Place::infinity()) == ell(q(3)));
}

TEST_CASE("Weil reciprocity worked examples") {
  const auto one_minus_t = FactoredRational::make(Rat(-1), {{Rat(1), 1}});
  CHECK(weil_reciprocity_defect(kT, one_minus_t) == Rat(1));
  CHECK(weil_reciprocity_defect(kT, kT) == Rat(1));
  CHECK(weil_reciprocity_defect(FactoredRational::constant_fn(Rat(5)), kT) == Rat(1));
}

TEST_CASE("p-adic tame symbols") {
  CHECK(padic_tame(symbol({q(5), q(2)}), 5) == ell(SymbolEntry(ModP::make(3, 5))));
  CHECK(padic_tame(symbol({q(5), q(5)}), 5) == ell(SymbolEntry(ModP::make(4, 5))));
  CHECK(padic_tame(symbol({q(2), q(7)}), 5).empty());
}

TEST_CASE("property: classical tame symbol matches the dense oracle") {
  support::Rng r(303);
  for (int it = 0; it < 200; ++it) {
    const auto f = support::small_fn(r), g = support::small_fn(r);
    for (const auto& p : support::places_of({f, g})) {
      const Rat expect = support::tame_oracle(f, g, p);
      CHECK(classical_tame_symbol(f, g, p) == expect);
      CHECK(del_nu(symbol({fn(f), fn(g)}), UniformizerChoice::canonical(p)) == ell(SymbolEntry(expect)));
    }
  }
}

TEST_CASE("property: del_nu is independent of the uniformizer") {
  support::Rng r(404);
  for (int it = 0; it < 60; ++it) {
    const int m = static_cast<int>(r.integer(2, 4));
    MilnorSymbol s;
    std::vector<FactoredRational> fs;
    for (int i = 0; i < m; ++i) fs.push_back(support::small_fn(r));
    for (const auto& f : fs) s.push_back(fn(f));
    const auto places = support::places_of(fs);
    const Place p = places[static_cast<std::size_t>(r.integer(0, static_cast<long>(places.size()) - 1))];
    const auto base = del_nu(normalize({{1, s}}), UniformizerChoice::canonical(p));
    for (int k = 0; k < 5; ++k) {
      const auto u = UniformizerChoice::make(p, support::random_unit(r, p));
      CHECK(del_nu(normalize({{1, s}}), u) == base);
    }
  }
}

TEST_CASE("property: Gersten boundary is additive") {
  support::Rng r(505);
  for (int it = 0; it < 40; ++it) {
    const auto x = normalize({{1, support::random_symbol(r, true, 2)}});
    const auto y = normalize({{1, support::random_symbol(r, true, 2)}});
    CHECK(gersten_boundary(k_add(x, y)) == chain_add(gersten_boundary(x), gersten_boundary(y)));
  }
}
