#pragma once

// Number theory on the divisor lattice: Moebius and totient, pi-parts, the
// alternating-subset summatory identity, traces of roots of unity and a closed
// form for alternating Galois sums.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "feitlab/rational.hpp"

namespace feitlab {

class Cyclotomic;

namespace numth {

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);
// Non-negative representative of a mod m (m >= 1).
Int mod(Int a, Int m);
bool is_prime(Int n);

// Strictly increasing list of the positive divisors of n.
std::vector<Int> divisors(Int n);
int mobius(Int n);
Int totient(Int n);
// Exponent of p in n (n >= 1, p prime).
int valuation(Int n, Int p);

/// A finite set of distinct primes, kept sorted.
class PrimeSet {
 public:
  PrimeSet() = default;
  PrimeSet(std::initializer_list<Int> primes);
  explicit PrimeSet(std::vector<Int> primes);

  /// pi(n), the prime divisors of n.
  static PrimeSet of(Int n);

  bool contains(Int p) const;
  bool is_subset_of(const PrimeSet& other) const;
  std::size_t size() const { return primes_.size(); }
  bool empty() const { return primes_.empty(); }
  std::span<const Int> primes() const { return primes_; }
  auto begin() const { return primes_.begin(); }
  auto end() const { return primes_.end(); }

  /// Every subset, enumerated by binary counter (bit i selects primes()[i]).
  std::vector<PrimeSet> subsets() const;

  bool operator==(const PrimeSet&) const = default;
  auto operator<=>(const PrimeSet&) const = default;

 private:
  std::vector<Int> primes_;
};

// n_pi: the largest divisor of n supported on primes of pi.
Int p_part(Int n, const PrimeSet& pi);
// n_{pi'}: n / n_pi.
Int p_complement_part(Int n, const PrimeSet& pi);
// n divided by the product of its distinct prime divisors.
Int radical_quotient(Int n);

/// n(rho) = (radical_quotient(n))_rho * N_{rho'}; a divisor of N.
/// Requires n | N and rho a subset of pi(n).
Int n_rho(Int n, Int N, const PrimeSet& rho);

/// An integer-valued function on the positive divisors of a modulus N.
class DivisorFunction {
 public:
  explicit DivisorFunction(Int modulus);
  DivisorFunction(Int modulus, std::vector<Int> values);

  Int modulus() const { return modulus_; }
  std::span<const Int> divisors() const { return divisors_; }
  std::span<const Int> values() const { return values_; }

  Int at(Int d) const;
  void set(Int d, Int value);

  /// f_+(n) = sum over d | n.
  Int lower_sum(Int n) const;
  /// f^+(n) = sum over divisors d of N with n | d, evaluated directly.
  Int upper_sum(Int n) const;

 private:
  std::size_t index_of(Int d) const;

  Int modulus_;
  std::vector<Int> divisors_;
  std::vector<Int> values_;
};

/// f^+(n) computed as sum_{rho subset pi(n)} (-1)^|rho| f_+(n(rho)).
Int upper_sum_via_alternating(const DivisorFunction& f, Int n);

/// Tr_{Q_n/Q}(zeta) for zeta of order k, from mu(k) phi(n) / phi(k). Requires k | n.
Rational trace_root_of_unity(Int k, Int n);

/// Closed form of sum_rho (-1)^|rho| sum_{k in (Z/t)^x} zeta^{k n(rho)} for a root
/// of unity of order o_zeta: zero when some p | n has v_p(o_zeta) < v_p(n), else
/// sum over rho in rho_1 of phi(t) / prod_{p in rho} (p - 1).
Int technical_closed_form(Int N, Int n, Int t, Int o_zeta);

/// The same double sum evaluated literally in exact cyclotomic arithmetic.
Int technical_direct(Int N, Int n, Int t, const Cyclotomic& zeta);

}  // namespace numth
}  // namespace feitlab
