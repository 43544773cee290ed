#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "feitlab/chartab.hpp"
#include "feitlab/numth.hpp"

namespace feitlab {

/// Psi^m chi : c -> chi(class_of_power(c, m)).
ClassFunction adams_operation(const ClassFunction& chi, Int m);

/// An eigenvalue z_t^j of order `order` at class `class_index` (t its element order).
struct Witness {
  int class_index = 0;
  Int j = 0;
  Int order = 1;

  bool operator==(const Witness&) const = default;
};

struct Summand {
  numth::PrimeSet rho;
  Int n_rho = 1;
  /// (Psi^{n(rho)} chi, 1)
  Int multiplicity = 0;
};

struct SReport {
  std::optional<std::size_t> chi;  // row index when chi is an irreducible of the table
  Int n = 1;
  Int value = 0;
  std::optional<Witness> witness;
  std::vector<Summand> summands;  // in PrimeSet::subsets() order
};

struct FeitReport {
  std::optional<std::size_t> chi;
  Int conductor = 1;
  Int value = 0;
  std::optional<Witness> witness;
};

/// S(G, chi, n) = sum over rho in pi(n) of (-1)^|rho| (Psi^{n(rho)} chi, 1), with
/// N = exp(G). Throws std::invalid_argument unless n | exp(G).
SReport s_invariant(const ClassFunction& chi, Int n);
SReport s_invariant(const CharacterTable& table, std::size_t chi, Int n);

/// sum over rho in pi(n) of (-1)^|rho| Psi^{n(rho)} chi.
ClassFunction alternating_adams_character(const ClassFunction& chi, Int n);

/// m_j for j = 0..t-1, the multiplicity of z_t^j as an eigenvalue at class c.
/// Throws TableError("eigenvalues", ...) if some m_j is not a non-negative integer.
std::vector<Int> eigenvalue_multiplicities(const ClassFunction& chi, int c);

/// First (class, j) in table order with m_j > 0 and z_t^j of order n.
std::optional<Witness> eigenvalue_order_witness(const ClassFunction& chi, Int n);

/// F(G, chi) = S(G, chi, c(chi)); chi must be irreducible, i.e. (chi, chi) = 1.
FeitReport feit_indicator(const ClassFunction& chi);
FeitReport feit_indicator(const CharacterTable& table, std::size_t chi);

struct TheoremBCheck {
  Int n = 1;
  Int value = 0;
  std::optional<Witness> witness;
  bool nonnegative = false;
  bool witness_agrees = false;  // value > 0 exactly when a witness exists
  bool passed() const { return nonnegative && witness_agrees; }
};

TheoremBCheck verify_theorem_b(const ClassFunction& chi, Int n);

}  // namespace feitlab
