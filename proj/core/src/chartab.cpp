#include "feitlab/chartab.hpp"

#include <algorithm>

#include "chartab_internal.hpp"
#include "feitlab/numth.hpp"

namespace feitlab {

namespace {

using detail::TableData;

void fail(const std::string& check, const std::string& message) {
  throw TableError(check, message);
}

std::string cls(std::size_t c) { return "class " + std::to_string(c); }

Cyclotomic sum_over_classes(const TableData& d, const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b_conj) {
  Cyclotomic s;
  for (std::size_t c = 0; c < d.classes.size(); ++c) s += (a[c] * b_conj[c]) * Rational(d.classes[c].size);
  return s;
}

void validate(TableData& d) {
  const std::size_t r = d.classes.size();
  if (r == 0) fail("shape", "no classes");
  if (d.irreducibles.size() != r)
    fail("shape", std::to_string(d.irreducibles.size()) + " characters for " + std::to_string(r) + " classes");
  for (std::size_t i = 0; i < r; ++i)
    if (d.irreducibles[i].size() != r) fail("shape", "character " + std::to_string(i) + " has the wrong length");
  if (d.order < 1) fail("class-sizes", "group order must be positive");
  if (d.classes[0].rep_order != 1 || d.classes[0].size != 1) fail("identity-class", "class 0 must be the identity class");

  Int total = 0, lcm = 1;
  for (std::size_t c = 0; c < r; ++c) {
    const auto& k = d.classes[c];
    if (k.size < 1 || d.order % k.size != 0) fail("class-sizes", cls(c) + " has a size not dividing |G|");
    if (k.rep_order < 1 || d.order % k.rep_order != 0) fail("class-sizes", cls(c) + " has an element order not dividing |G|");
    total += k.size;
    lcm = numth::lcm(lcm, k.rep_order);
  }
  if (total != d.order) fail("class-sizes", "class sizes sum to " + std::to_string(total) + ", not |G|");
  if (lcm != d.exponent) fail("exponent", "lcm of element orders is " + std::to_string(lcm));

  const auto primes = numth::PrimeSet::of(d.exponent);
  for (std::size_t c = 0; c < r; ++c) {
    const auto& k = d.classes[c];
    for (const auto& [p, target] : k.powermap)
      if (!primes.contains(p)) fail("powermaps", cls(c) + " has a power map for " + std::to_string(p) + ", which does not divide the exponent");
    for (Int p : primes) {
      auto it = k.powermap.find(p);
      if (it == k.powermap.end()) fail("powermaps", cls(c) + " is missing the power map for p = " + std::to_string(p));
      if (it->second < 0 || static_cast<std::size_t>(it->second) >= r) fail("powermaps", cls(c) + " maps out of range");
      const Int t = k.rep_order;
      if (d.classes[static_cast<std::size_t>(it->second)].rep_order != t / numth::gcd(t, p))
        fail("powermaps", cls(c) + " p = " + std::to_string(p) + " lands on a class of the wrong element order");
    }
  }

  for (auto& row : d.irreducibles)
    for (auto& v : row) {
      if (d.exponent % v.level() == 0) {
        v = v.at_level(d.exponent);
        continue;
      }
      auto down = v.at_level(numth::lcm(v.level(), d.exponent)).descend_to(d.exponent);
      if (!down) fail("value-field", "value " + v.to_string() + " does not lie in Q_" + std::to_string(d.exponent));
      v = *down;
    }

  Int degree_squares = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const Cyclotomic& v = d.irreducibles[i][0];
    if (!v.is_rational() || !is_integer(v.to_rational()) || sgn(v.to_rational()) <= 0)
      fail("degrees", "character " + std::to_string(i) + " has degree " + v.to_string());
    const Int deg = to_int(v.to_rational());
    degree_squares += deg * deg;
  }
  if (degree_squares != d.order) fail("degrees", "sum of squared degrees is " + std::to_string(degree_squares));

  std::vector<std::vector<Cyclotomic>> conj(r);
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& v : d.irreducibles[i]) conj[i].push_back(v.conj());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      const Cyclotomic s = sum_over_classes(d, d.irreducibles[i], conj[j]);
      if (!(s == Cyclotomic(i == j ? d.order : 0)))
        fail("row-orthogonality", "characters " + std::to_string(i) + " and " + std::to_string(j));
    }
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t e = c; e < r; ++e) {
      Cyclotomic s;
      for (std::size_t i = 0; i < r; ++i) s += d.irreducibles[i][c] * conj[i][e];
      const Cyclotomic want = (c == e) ? Cyclotomic(ratio(d.order, d.classes[c].size)) : Cyclotomic(0);
      if (!(s == want)) fail("column-orthogonality", "classes " + std::to_string(c) + " and " + std::to_string(e));
    }

  // Columns permuted by sigma_q, q prime and coprime to the exponent.
  for (Int q = 2; q < d.exponent; ++q) {
    if (!numth::is_prime(q) || d.exponent % q == 0) continue;
    std::vector<int> image(r, -1);
    std::vector<bool> hit(r, false);
    for (std::size_t c = 0; c < r; ++c) {
      for (std::size_t e = 0; e < r && image[c] < 0; ++e) {
        if (d.classes[e].rep_order != d.classes[c].rep_order || d.classes[e].size != d.classes[c].size) continue;
        bool match = true;
        for (std::size_t i = 0; i < r && match; ++i) match = d.irreducibles[i][c].galois(q) == d.irreducibles[i][e];
        if (match) image[c] = static_cast<int>(e);
      }
      if (image[c] < 0 || hit[static_cast<std::size_t>(image[c])])
        fail("galois-columns", "Galois conjugate of " + cls(c) + " under q = " + std::to_string(q) + " is not a column");
      hit[static_cast<std::size_t>(image[c])] = true;
    }
    d.prime_galois.emplace(q, std::move(image));
  }
}

}  // namespace

CharacterTable::CharacterTable(std::string name, Int order, Int exponent, std::vector<ClassData> classes,
                               std::vector<std::vector<Cyclotomic>> irreducibles) {
  auto d = std::make_shared<TableData>();
  d->name = std::move(name);
  d->order = order;
  d->exponent = exponent;
  d->classes = std::move(classes);
  d->irreducibles = std::move(irreducibles);
  validate(*d);
  data_ = std::move(d);

  // Adams images of irreducibles must be virtual characters.
  for (Int p : numth::PrimeSet::of(exponent)) {
    for (std::size_t i = 0; i < num_classes(); ++i) {
      std::vector<Cyclotomic> vals;
      for (std::size_t c = 0; c < num_classes(); ++c)
        vals.push_back(value(i, static_cast<std::size_t>(class_of_power(static_cast<int>(c), p))));
      const ClassFunction psi(*this, std::move(vals));
      for (std::size_t j = 0; j < num_classes(); ++j) {
        const Cyclotomic m = inner_product(psi, character(j));
        if (!m.is_rational() || !is_integer(m.to_rational()))
          throw TableError("powermap-characters", "Psi^" + std::to_string(p) + " of character " + std::to_string(i) +
                                                      " is not a virtual character");
      }
    }
  }
}

const std::string& CharacterTable::name() const { return data_->name; }
Int CharacterTable::order() const { return data_->order; }
Int CharacterTable::exponent() const { return data_->exponent; }
std::size_t CharacterTable::num_classes() const { return data_->classes.size(); }
std::span<const ClassData> CharacterTable::classes() const { return data_->classes; }
const Cyclotomic& CharacterTable::value(std::size_t chi, std::size_t c) const { return data_->irreducibles.at(chi).at(c); }
Int CharacterTable::degree(std::size_t chi) const { return to_int(value(chi, 0).to_rational()); }

ClassFunction CharacterTable::character(std::size_t chi) const {
  return ClassFunction(*this, data_->irreducibles.at(chi));
}

ClassFunction CharacterTable::trivial_character() const {
  return ClassFunction(*this, std::vector<Cyclotomic>(num_classes(), Cyclotomic(1)));
}

ClassFunction CharacterTable::regular_character() const {
  std::vector<Cyclotomic> v(num_classes(), Cyclotomic(0));
  v[0] = Cyclotomic(order());
  return ClassFunction(*this, std::move(v));
}

ClassFunction CharacterTable::zero() const {
  return ClassFunction(*this, std::vector<Cyclotomic>(num_classes(), Cyclotomic(0)));
}

int CharacterTable::class_of_power(int c, Int m) const {
  const Int e = data_->exponent;
  Int mm = numth::mod(m, e);
  if (mm == 0) return 0;
  for (Int p = 2; mm > 1; ++p) {
    while (mm % p == 0) {
      mm /= p;
      if (e % p == 0)
        c = data_->classes[static_cast<std::size_t>(c)].powermap.at(p);
      else
        c = data_->prime_galois.at(p)[static_cast<std::size_t>(c)];
    }
  }
  return c;
}

int CharacterTable::galois_class(int c, Int k) const {
  const Int e = data_->exponent;
  const Int kk = numth::mod(k, e);
  if (numth::gcd(kk, e) != 1) throw std::invalid_argument("galois_class: k is not a unit modulo the exponent");
  return class_of_power(c, kk);
}

// ---------------------------------------------------------------- ClassFunction

ClassFunction::ClassFunction(const CharacterTable& table, std::vector<Cyclotomic> values)
    : table_(table.data_), values_(std::move(values)) {
  if (values_.size() != table_->classes.size())
    throw std::invalid_argument("ClassFunction: expected one value per class");
}

CharacterTable ClassFunction::table() const {
  return CharacterTable(table_);
}

void ClassFunction::check_same(const ClassFunction& other) const {
  if (table_ != other.table_) throw std::invalid_argument("class functions belong to different tables");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  check_same(other);
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] += other.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  check_same(other);
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] -= other.values_[c];
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  a.check_same(b);
  ClassFunction r = a;
  for (std::size_t c = 0; c < r.values_.size(); ++c) r.values_[c] *= b.values_[c];
  return r;
}

ClassFunction operator*(const Rational& q, const ClassFunction& a) {
  ClassFunction r = a;
  for (auto& v : r.values_) v *= q;
  return r;
}

bool ClassFunction::operator==(const ClassFunction& other) const {
  return table_ == other.table_ && values_ == other.values_;
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  const CharacterTable t = a.table();
  if (!t.same_as(b.table())) throw std::invalid_argument("inner_product: class functions on different tables");
  Cyclotomic s;
  for (std::size_t c = 0; c < a.size(); ++c) s += (a[c] * b[c].conj()) * Rational(t.classes()[c].size);
  s *= ratio(1, t.order());
  return s;
}

ClassFunction galois_conjugate(const ClassFunction& chi, Int k) {
  const CharacterTable t = chi.table();
  if (numth::gcd(numth::mod(k, t.exponent()), t.exponent()) != 1)
    throw std::invalid_argument("galois_conjugate: gcd(k, exponent) != 1");
  std::vector<Cyclotomic> vals;
  vals.reserve(chi.size());
  for (const auto& v : chi.values()) vals.push_back(v.at_level(numth::lcm(v.level(), t.exponent())).galois(k));
  return ClassFunction(t, std::move(vals));
}

Int conductor(const ClassFunction& chi) {
  const CharacterTable t = chi.table();
  const Int e = t.exponent();
  std::vector<Cyclotomic> vals;
  for (const auto& v : chi.values()) vals.push_back(v.at_level(numth::lcm(v.level(), e)));
  for (Int n : numth::divisors(e)) {
    bool fixed = true;
    for (Int k = 1; k < e && fixed; k += n) {
      if (numth::gcd(k, e) != 1) continue;
      for (const auto& v : vals)
        if (!(v.galois(k) == v)) {
          fixed = false;
          break;
        }
    }
    if (fixed) return n;
  }
  return e;
}

}  // namespace feitlab
