#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "feitlab/chartab.hpp"
#include "feitlab/groups.hpp"

namespace feitlab {

inline constexpr std::size_t kDefaultOracleBound = 24;
inline constexpr std::size_t kMaxOracleBound = 60;

namespace detail {
struct PosetData;
}

struct OrbitInfo {
  int representative = 0;
  Int orbit_size = 1;
  Int stabilizer_order = 1;
};

/// The monomial poset M(U) of a subgroup U of G (usually U = G), with U acting
/// by conjugation. Pairs are sorted by (|H|, elements of H, exponents of phi);
/// the canonical representative of an orbit is its smallest index.
class MonomialPoset {
 public:
  explicit MonomialPoset(const PermGroup& group, std::size_t bound = kDefaultOracleBound);
  explicit MonomialPoset(const Subgroup& acting, std::size_t bound = kDefaultOracleBound);

  PermGroup group() const;
  const Subgroup& acting_group() const;
  std::size_t size() const;
  const MonomialPair& pair(int i) const;
  std::optional<int> find(const MonomialPair& pair) const;

  /// Strictly greater pairs, ascending.
  std::span<const int> above(int i) const;
  bool less(int i, int j) const;

  /// Index of g(H, phi); g must lie in the acting group.
  int conjugate(int g, int i) const;
  OrbitInfo orbit_of(int i) const;
  std::vector<int> orbit(int i) const;
  /// Canonical orbit representatives, ascending.
  std::span<const int> representatives() const;

  bool same_as(const MonomialPoset& other) const { return data_ == other.data_; }

 private:
  friend struct ChainAccess;
  std::shared_ptr<detail::PosetData> data_;
};

/// A finite integer combination of orbits [H, phi] in M(U), keyed by canonical
/// representative; zero coefficients are dropped.
class RPlusElement {
 public:
  explicit RPlusElement(MonomialPoset poset) : poset_(std::move(poset)) {}

  const MonomialPoset& poset() const { return poset_; }
  const std::map<int, Int>& coefficients() const { return coeffs_; }
  Int coefficient(int pair) const;
  void add(int pair, Int c);

  bool operator==(const RPlusElement& other) const {
    return poset_.same_as(other.poset_) && coeffs_ == other.coeffs_;
  }

 private:
  MonomialPoset poset_;
  std::map<int, Int> coeffs_;
};

/// (chi_H, phi) for every pair; chi is a class function on a table whose classes
/// are those of the poset's group (as produced by compute_table).
std::vector<Int> pair_multiplicities(const MonomialPoset& poset, const ClassFunction& chi);

/// a_U(chi) by summing over all strict chains, weighted |H_0| / |U|.
RPlusElement a_g_chains(const MonomialPoset& poset, const ClassFunction& chi);
/// a_U(chi) by summing over one representative of every U-orbit of chains.
RPlusElement a_g_orbit_chains(const MonomialPoset& poset, const ClassFunction& chi);

/// sum of c * phi^G; requires the poset of the whole group.
ClassFunction b_g(const RPlusElement& element, const CharacterTable& table);

/// Res^V_U via double cosets U \ V / H; target's acting group U must lie in V.
RPlusElement restrict_rplus(const RPlusElement& element, const MonomialPoset& target);
RPlusElement restrict_rplus(const RPlusElement& element, const Subgroup& U);

/// sum of coefficients over orbits [H, phi] with n | o(phi); any n >= 1.
Int s_via_coefficients(const RPlusElement& a, Int n);
Int s_via_coefficients(const MonomialPoset& poset, const ClassFunction& chi, Int n);

struct AdamsIdentityCheck {
  Int lhs = 0;  // sum of coefficients with phi^n = 1
  Int rhs = 0;  // (Psi^n chi, 1)
  bool passed() const { return lhs == rhs; }
};
AdamsIdentityCheck adams_coefficient_identity(const MonomialPoset& poset, const ClassFunction& chi, Int n);

struct MaxSetsCheck {
  std::vector<int> m;             // M(G, chi): (chi_H, phi) > 0
  std::vector<int> m_tilde;       // coefficient of [H, phi] non-zero
  std::vector<int> max_m;
  std::vector<int> max_m_tilde;
  bool subset = false;            // m_tilde within m
  bool max_equal = false;
  bool strict() const { return subset && m_tilde.size() < m.size(); }
  bool passed() const { return subset && max_equal; }
};
MaxSetsCheck check_max_sets(const MonomialPoset& poset, const ClassFunction& chi);

/// Statements (i), (ii), (iii), (iv), (v), (i'), (v') in that order.
struct EquivalenceCheck {
  std::array<bool, 7> statements{};
  bool passed() const;
};
EquivalenceCheck check_equivalences(const MonomialPoset& poset, const ClassFunction& chi, Int n);

}  // namespace feitlab
