#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "feitlab/cyclo.hpp"
#include "feitlab/rational.hpp"

namespace feitlab {

inline constexpr std::size_t kDefaultElementBound = 10080;
inline constexpr std::size_t kDefaultSubgroupBound = 60;

/// Raised when a group is larger than a configured computation bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A permutation of {0, ..., degree-1}; products compose right to left,
/// (a * b)(x) = a(b(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<int> images);

  /// Cycles are given on points 1..degree.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);

  std::size_t degree() const { return images_.size(); }
  int operator[](std::size_t i) const { return images_[i]; }
  std::span<const int> images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;
  Int order() const;
  /// Extends to a larger degree by fixing the new points.
  Perm extended(std::size_t degree) const;
  /// Disjoint-cycle notation on points 1..degree, "()" for the identity.
  std::string to_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

struct ConjugacyClass {
  int representative = 0;  // element index; the lexicographically least member
  Int size = 0;
  Int element_order = 1;
  std::vector<int> elements;  // sorted element indices
};

namespace detail {
struct GroupData;
}

class Subgroup;

/// A finite permutation group with all elements enumerated. Elements are
/// addressed by their index in the lexicographically sorted element list, so
/// index 0 is the identity. Copies share the immutable enumeration.
class PermGroup {
 public:
  PermGroup(std::string name, std::size_t degree, std::vector<Perm> generators,
            std::size_t element_bound = kDefaultElementBound);

  const std::string& name() const;
  std::size_t degree() const;
  Int order() const;
  std::span<const Perm> generators() const;
  std::span<const Perm> elements() const;
  const Perm& element(int i) const;
  std::optional<int> find(const Perm& p) const;
  int index_of(const Perm& p) const;

  int identity() const { return 0; }
  int mul(int a, int b) const;
  int inv(int a) const;
  int pow(int a, Int m) const;
  Int element_order(int a) const;
  /// g x g^-1
  int conjugate(int g, int x) const;
  bool is_abelian() const;

  /// lcm of element orders.
  Int exponent() const;

  /// Classes sorted by (element order, class size, representative).
  std::span<const ConjugacyClass> classes() const;
  int class_of(int x) const;
  /// Class of rep^m for each class.
  std::vector<int> class_power_map(Int m) const;

  Subgroup whole() const;
  Subgroup trivial_subgroup() const;
  /// The subgroup generated by the given element indices.
  Subgroup generate(std::span<const int> generators) const;

 private:
  friend class Subgroup;
  explicit PermGroup(std::shared_ptr<const detail::GroupData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::GroupData> data_;
};

/// A subgroup of a PermGroup, stored as its sorted element indices.
class Subgroup {
 public:
  PermGroup parent() const { return PermGroup(parent_); }
  Int order() const { return static_cast<Int>(elements_.size()); }
  std::span<const int> elements() const { return elements_; }
  std::span<const int> generators() const { return generators_; }
  bool contains(int x) const { return mask_[static_cast<std::size_t>(x)]; }
  /// Position of element x within elements(); x must be a member.
  std::size_t position(int x) const;

  bool is_subgroup_of(const Subgroup& other) const;
  bool is_cyclic() const;
  bool is_abelian() const;
  Int exponent() const;
  Subgroup conjugate(int g) const;
  Subgroup intersection(const Subgroup& other) const;
  Subgroup derived_subgroup() const;

  bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }
  /// Orders by (order, element list).
  bool operator<(const Subgroup& other) const;

 private:
  friend class PermGroup;
  Subgroup(std::shared_ptr<const detail::GroupData> parent, std::vector<int> elements, std::vector<int> generators);

  std::shared_ptr<const detail::GroupData> parent_;
  std::vector<int> elements_;
  std::vector<bool> mask_;
  std::vector<int> generators_;
};

/// Every subgroup exactly once, sorted by (order, element list).
std::vector<Subgroup> all_subgroups(const PermGroup& group, std::size_t bound = kDefaultSubgroupBound);
/// Every subgroup of U, same order.
std::vector<Subgroup> all_subgroups(const Subgroup& U, std::size_t bound = kDefaultSubgroupBound);

/// A linear character of a subgroup H, valued in the roots of unity of order
/// dividing level = exp(G) of the parent group.
class LinearChar {
 public:
  LinearChar(Subgroup domain, Int level, std::vector<Int> exponents);

  const Subgroup& domain() const { return domain_; }
  Int level() const { return level_; }
  /// Exponents modulo level, one per element of domain().elements().
  std::span<const Int> exponents() const { return exponents_; }
  RootOfUnity value(int x) const;
  Int order() const;
  bool is_trivial() const;

  bool operator==(const LinearChar& other) const {
    return domain_ == other.domain_ && exponents_ == other.exponents_;
  }

 private:
  Subgroup domain_;
  Int level_;
  std::vector<Int> exponents_;
};

/// All |H / [H,H]| linear characters of H, trivial first.
std::vector<LinearChar> linear_characters(const Subgroup& H);

struct MonomialPair {
  Subgroup subgroup;
  LinearChar character;

  bool operator==(const MonomialPair& other) const { return character == other.character; }
};

/// g(H, phi) = (gHg^-1, x -> phi(g^-1 x g)).
MonomialPair conjugate_pair(int g, const MonomialPair& pair);

/// phi restricted to K; K must be contained in H.
LinearChar restrict_linear(const MonomialPair& pair, const Subgroup& K);

// Preset groups.
PermGroup trivial_group();
PermGroup cyclic(Int n);
/// Dihedral group of the given order 2n.
PermGroup dihedral(Int order);
PermGroup symmetric(Int n);
PermGroup alternating(Int n);
/// Generalized quaternion group of order 2^k, k >= 3.
PermGroup quaternion(Int order);
/// Elementary abelian group of the given prime-power order.
PermGroup elementary_abelian(Int order);
/// SL(2, p) acting on the non-zero vectors of F_p^2.
PermGroup special_linear_2(Int p);
/// Extraspecial group of order p^3 and exponent p (p odd): the Heisenberg group mod p.
PermGroup extraspecial(Int order);
PermGroup direct_product(std::span<const PermGroup> factors);

/// Parses a group spec: cyclic:12, sym:4, alt:5, dihedral:8, quaternion:8,
/// elementary:8, sl2:3, extraspecial:27, trivial, perm:[(1,2),(1,2,3)],
/// product:sym:3,cyclic:2.
PermGroup parse_group_spec(const std::string& spec, std::size_t element_bound = kDefaultElementBound);

}  // namespace feitlab
