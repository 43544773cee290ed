#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "feitlab/rational.hpp"

namespace feitlab {

class Cyclotomic;

/// zeta_level^exponent, with the exponent kept in [0, level).
struct RootOfUnity {
  Int level = 1;
  Int exponent = 0;

  RootOfUnity() = default;
  RootOfUnity(Int level, Int exponent);

  /// Multiplicative order level / gcd(level, exponent).
  Int order() const;
  RootOfUnity pow(Int m) const;
  Cyclotomic to_cyclotomic() const;

  bool operator==(const RootOfUnity& other) const;
};

/// An element of the cyclotomic field Q_e, stored in the power basis
/// 1, z, ..., z^(phi(e)-1) of z = exp(2 pi i / e) and reduced modulo the e-th
/// cyclotomic polynomial. Values at different levels compare by embedding into
/// the lcm level; the stored level is never lowered implicitly.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(Int value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Cyclotomic zeta(Int level, Int exponent = 1);
  /// sum of c * z_level^exp over the given terms; exponents may be any integers.
  static Cyclotomic from_terms(Int level, std::span<const std::pair<Int, Rational>> terms);

  Int level() const { return level_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Non-zero power-basis terms (exponent, coefficient), ascending exponent.
  std::vector<std::pair<Int, Rational>> terms() const;

  /// The same value expressed at level L (requires level() | L).
  Cyclotomic at_level(Int L) const;
  /// The same value at level e, if it lies in Q_e (requires e | level()).
  std::optional<Cyclotomic> descend_to(Int e) const;

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error when the value is not rational.
  Rational to_rational() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& q);
  Cyclotomic operator-() const;
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
  friend Cyclotomic operator*(const Rational& q, Cyclotomic a) { return a *= q; }

  /// Multiplication by a root of unity (a permutation of exponents plus one reduction).
  Cyclotomic times(const RootOfUnity& root) const;
  /// Non-negative powers.
  Cyclotomic pow(Int m) const;

  /// sigma_k : z_e -> z_e^k. Requires gcd(k, level()) == 1.
  Cyclotomic galois(Int k) const;
  /// Complex conjugation, i.e. galois(-1).
  Cyclotomic conj() const;
  /// Tr_{Q_e/Q}: the sum of galois(k) over k in (Z/eZ)^x.
  Rational trace() const;

  /// (e', k) with value == z_e'^k, if the value is a root of unity.
  std::optional<RootOfUnity> as_root_of_unity() const;

  /// Terms in ascending exponent, e.g. "-1 + 2*z5 + z5^2".
  std::string to_string() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  /// Lexicographic order on power-basis coefficients at the common level.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(Int level, std::vector<Rational> coeffs);
  // Reduces a dense exponent vector of length `level` (exponents mod level).
  static Cyclotomic reduce(Int level, std::vector<Rational> dense);

  Int level_;
  std::vector<Rational> coeffs_;
};

/// Integer coefficients of the e-th cyclotomic polynomial, constant term first.
std::span<const Int> cyclotomic_polynomial(Int e);

}  // namespace feitlab
