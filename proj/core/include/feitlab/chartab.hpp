#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "feitlab/cyclo.hpp"
#include "feitlab/groups.hpp"

namespace feitlab {

inline constexpr std::size_t kDefaultTableBound = 2000;

/// A character table failed validation; check() names the failed invariant.
class TableError : public std::runtime_error {
 public:
  TableError(std::string check, const std::string& message)
      : std::runtime_error(check + ": " + message), check_(std::move(check)) {}
  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

struct ClassData {
  Int rep_order = 1;
  Int size = 1;
  /// Class of rep^p, for every prime p dividing the exponent.
  std::map<Int, int> powermap;
};

class ClassFunction;

namespace detail {
struct TableData;
}

/// An ordinary character table with prime power maps. Class 0 is the identity
/// class; every value is stored at level exponent(). Construction validates
/// every invariant and throws TableError on the first failure. Copies share
/// the immutable data.
class CharacterTable {
 public:
  CharacterTable(std::string name, Int order, Int exponent, std::vector<ClassData> classes,
                 std::vector<std::vector<Cyclotomic>> irreducibles);

  const std::string& name() const;
  Int order() const;
  Int exponent() const;
  std::size_t num_classes() const;
  std::span<const ClassData> classes() const;
  std::size_t num_characters() const { return num_classes(); }
  const Cyclotomic& value(std::size_t chi, std::size_t c) const;
  Int degree(std::size_t chi) const;

  ClassFunction character(std::size_t chi) const;
  ClassFunction trivial_character() const;
  ClassFunction regular_character() const;
  ClassFunction zero() const;

  /// Class of rep(c)^m, derived from the stored prime power maps (and the
  /// Galois action on columns for primes coprime to the exponent).
  int class_of_power(int c, Int m) const;
  /// The class c' whose column is sigma_k of column c; gcd(k, exponent) = 1.
  int galois_class(int c, Int k) const;

  bool same_as(const CharacterTable& other) const { return data_ == other.data_; }

 private:
  friend class ClassFunction;
  explicit CharacterTable(std::shared_ptr<const detail::TableData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::TableData> data_;
};

/// A class function on a CharacterTable, one value per class.
class ClassFunction {
 public:
  ClassFunction(const CharacterTable& table, std::vector<Cyclotomic> values);

  CharacterTable table() const;
  std::span<const Cyclotomic> values() const { return values_; }
  const Cyclotomic& operator[](std::size_t c) const { return values_[c]; }
  std::size_t size() const { return values_.size(); }
  /// Value at the identity class.
  const Cyclotomic& degree() const { return values_[0]; }

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  /// Pointwise product.
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const Rational& q, const ClassFunction& a);

  bool operator==(const ClassFunction& other) const;

 private:
  void check_same(const ClassFunction& other) const;
  std::shared_ptr<const detail::TableData> table_;
  std::vector<Cyclotomic> values_;
};

/// (1/|G|) sum_c |c| a(c) conj(b(c)).
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);
ClassFunction galois_conjugate(const ClassFunction& chi, Int k);
/// Smallest divisor n of the exponent such that every unit k = 1 (mod n) fixes chi.
Int conductor(const ClassFunction& chi);

/// Computes the table of a permutation group exactly. Classes follow the
/// group's class order; characters are sorted trivial first, then by degree and
/// value tuple.
CharacterTable compute_table(const PermGroup& group, std::size_t bound = kDefaultTableBound);

/// JSON character-table format; load validates every invariant.
CharacterTable load_table(std::string_view json_text);
std::string save_table(const CharacterTable& table);

}  // namespace feitlab
