#include "feitlab/numth.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "feitlab/cyclo.hpp"

namespace feitlab::numth {

namespace {

void require_positive(Int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " must be a positive integer, got " + std::to_string(n));
}

}  // namespace

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return (a / gcd(a, b)) * (b < 0 ? -b : b);
}

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<Int> divisors(Int n) {
  require_positive(n, "divisors: n");
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(Int n) {
  require_positive(n, "mobius: n");
  int result = 1;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

Int totient(Int n) {
  require_positive(n, "totient: n");
  Int result = n;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int valuation(Int n, Int p) {
  require_positive(n, "valuation: n");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

PrimeSet::PrimeSet(std::initializer_list<Int> primes) : PrimeSet(std::vector<Int>(primes)) {}

PrimeSet::PrimeSet(std::vector<Int> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  if (std::adjacent_find(primes_.begin(), primes_.end()) != primes_.end())
    throw std::invalid_argument("PrimeSet: repeated prime");
  for (Int p : primes_)
    if (!is_prime(p)) throw std::invalid_argument("PrimeSet: " + std::to_string(p) + " is not prime");
}

PrimeSet PrimeSet::of(Int n) {
  require_positive(n, "PrimeSet::of: n");
  PrimeSet s;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    s.primes_.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) s.primes_.push_back(n);
  return s;
}

bool PrimeSet::contains(Int p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

bool PrimeSet::is_subset_of(const PrimeSet& other) const {
  return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(), primes_.end());
}

std::vector<PrimeSet> PrimeSet::subsets() const {
  if (primes_.size() >= 20) throw std::length_error("PrimeSet::subsets: too many primes");
  std::vector<PrimeSet> out;
  const std::size_t count = std::size_t{1} << primes_.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    PrimeSet s;
    for (std::size_t i = 0; i < primes_.size(); ++i)
      if (mask & (std::size_t{1} << i)) s.primes_.push_back(primes_[i]);
    out.push_back(std::move(s));
  }
  return out;
}

Int p_part(Int n, const PrimeSet& pi) {
  require_positive(n, "p_part: n");
  Int part = 1;
  for (Int p : pi)
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  return part;
}

Int p_complement_part(Int n, const PrimeSet& pi) {
  return n / p_part(n, pi);
}

Int radical_quotient(Int n) {
  Int q = n;
  for (Int p : PrimeSet::of(n)) q /= p;
  return q;
}

Int n_rho(Int n, Int N, const PrimeSet& rho) {
  require_positive(n, "n_rho: n");
  require_positive(N, "n_rho: N");
  if (N % n != 0)
    throw std::invalid_argument("n_rho: n = " + std::to_string(n) + " does not divide N = " + std::to_string(N));
  if (!rho.is_subset_of(PrimeSet::of(n))) throw std::invalid_argument("n_rho: rho is not a subset of pi(n)");
  return p_part(radical_quotient(n), rho) * p_complement_part(N, rho);
}

DivisorFunction::DivisorFunction(Int modulus)
    : modulus_(modulus), divisors_(numth::divisors(modulus)), values_(divisors_.size(), 0) {}

DivisorFunction::DivisorFunction(Int modulus, std::vector<Int> values)
    : modulus_(modulus), divisors_(numth::divisors(modulus)), values_(std::move(values)) {
  if (values_.size() != divisors_.size())
    throw std::invalid_argument("DivisorFunction: expected one value per divisor of " + std::to_string(modulus));
}

std::size_t DivisorFunction::index_of(Int d) const {
  auto it = std::lower_bound(divisors_.begin(), divisors_.end(), d);
  if (it == divisors_.end() || *it != d)
    throw std::out_of_range("DivisorFunction: " + std::to_string(d) + " is not a divisor of " + std::to_string(modulus_));
  return static_cast<std::size_t>(it - divisors_.begin());
}

Int DivisorFunction::at(Int d) const {
  return values_[index_of(d)];
}

void DivisorFunction::set(Int d, Int value) {
  values_[index_of(d)] = value;
}

Int DivisorFunction::lower_sum(Int n) const {
  index_of(n);
  Int s = 0;
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    if (n % divisors_[i] == 0) s += values_[i];
  return s;
}

Int DivisorFunction::upper_sum(Int n) const {
  index_of(n);
  Int s = 0;
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    if (divisors_[i] % n == 0) s += values_[i];
  return s;
}

Int upper_sum_via_alternating(const DivisorFunction& f, Int n) {
  Int s = 0;
  for (const PrimeSet& rho : PrimeSet::of(n).subsets()) {
    Int term = f.lower_sum(n_rho(n, f.modulus(), rho));
    s += (rho.size() % 2 == 0) ? term : -term;
  }
  return s;
}

Rational trace_root_of_unity(Int k, Int n) {
  require_positive(k, "trace_root_of_unity: k");
  require_positive(n, "trace_root_of_unity: n");
  if (n % k != 0)
    throw std::invalid_argument("trace_root_of_unity: order " + std::to_string(k) + " does not divide " + std::to_string(n));
  return Rational(mobius(k)) * ratio(totient(n), totient(k));
}

namespace {

void check_technical_args(Int N, Int n, Int t) {
  require_positive(N, "N");
  require_positive(n, "n");
  require_positive(t, "t");
  if (N % n != 0) throw std::invalid_argument("alternating Galois sum: n must divide N");
  if (N % t != 0) throw std::invalid_argument("alternating Galois sum: t must divide N");
}

}  // namespace

Int technical_closed_form(Int N, Int n, Int t, Int o_zeta) {
  check_technical_args(N, n, t);
  require_positive(o_zeta, "o_zeta");
  if (N % o_zeta != 0 || t % o_zeta != 0)
    throw std::invalid_argument("alternating Galois sum: the order of zeta must divide gcd(t, N)");

  std::vector<Int> rho1;
  for (Int p : PrimeSet::of(n)) {
    int vo = valuation(o_zeta, p), vn = valuation(n, p);
    if (vo < vn) return 0;  // rho_0 non-empty
    if (vo == vn) rho1.push_back(p);
  }
  Rational sum = 0;
  const Int phi_t = totient(t);
  for (const PrimeSet& rho : PrimeSet(rho1).subsets()) {
    Int denom = 1;
    for (Int p : rho) denom *= p - 1;
    sum += ratio(phi_t, denom);
  }
  if (!is_integer(sum)) throw std::logic_error("technical_closed_form: non-integral total " + sum.get_str());
  return to_int(sum);
}

Int technical_direct(Int N, Int n, Int t, const Cyclotomic& zeta) {
  check_technical_args(N, n, t);
  auto root = zeta.as_root_of_unity();
  if (!root) throw std::invalid_argument("technical_direct: zeta is not a root of unity");
  const Int o = root->order();
  if (N % o != 0 || t % o != 0)
    throw std::invalid_argument("technical_direct: the order of zeta must divide gcd(t, N)");

  Cyclotomic total;
  for (const PrimeSet& rho : PrimeSet::of(n).subsets()) {
    const Int m = n_rho(n, N, rho);
    Cyclotomic inner;
    for (Int k = 1; k <= t; ++k) {
      if (gcd(k, t) != 1) continue;
      inner += root->pow(k * m).to_cyclotomic();
    }
    if (rho.size() % 2 == 0)
      total += inner;
    else
      total -= inner;
  }
  return to_int(total.to_rational());
}

}  // namespace feitlab::numth
