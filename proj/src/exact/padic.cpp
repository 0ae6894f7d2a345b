#include "milreg/exact/padic.hpp"

#include "milreg/error.hpp"

namespace milreg::exact {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(ErrorKind::InvalidPrime, std::to_string(p) + " is not prime");
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

ModP ModP::make(std::int64_t value, std::uint64_t prime) {
  require_prime(prime);
  const std::int64_t m = static_cast<std::int64_t>(prime);
  const std::int64_t r = ((value % m) + m) % m;
  if (r == 0)
    throw DomainError(ErrorKind::NonInvertibleEntry, "zero class mod " + std::to_string(prime));
  return ModP{static_cast<std::uint64_t>(r), prime};
}

ModP ModP::operator*(const ModP& o) const {
  if (p != o.p) throw DomainError(ErrorKind::MixedFields, "residues modulo different primes");
  return ModP{mulmod(r, o.r, p), p};
}

ModP ModP::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  std::uint64_t base = r, acc = 1;
  auto k = static_cast<std::uint64_t>(e);
  while (k) {
    if (k & 1) acc = mulmod(acc, base, p);
    base = mulmod(base, base, p);
    k >>= 1;
  }
  return ModP{acc, p};
}

ModP ModP::inverse() const { return pow(static_cast<std::int64_t>(p) - 2); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long padic_valuation(const Rat& x, std::uint64_t p) {
  require_prime(p);
  if (x.is_zero()) throw DomainError(ErrorKind::ZeroInput, "p-adic valuation of zero");
  const mpz_class pz(static_cast<unsigned long>(p));
  auto count = [&](mpz_class v) {
    long k = 0;
    while (mpz_divisible_p(v.get_mpz_t(), pz.get_mpz_t())) {
      v /= pz;
      ++k;
    }
    return k;
  };
  return count(x.num()) - count(x.den());
}

ModP padic_residue(const Rat& x, std::uint64_t p) {
  const long v = padic_valuation(x, p);
  const Rat unit = x * Rat(mpz_class(static_cast<unsigned long>(p)), mpz_class(1)).pow(-v);
  const ModP n{reduce(unit.num(), p), p};
  const ModP d{reduce(unit.den(), p), p};
  return n * d.inverse();
}

std::vector<std::pair<mpz_class, long>> factor_integer(const mpz_class& n) {
  std::vector<std::pair<mpz_class, long>> out;
  mpz_class m = abs(n);
  for (mpz_class d = 2; d * d <= m; ++d) {
    long e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
      m /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

}  // namespace milreg::exact
