#include "feitlab/adams.hpp"

#include <nlohmann/json.hpp>

#include "feitlab/serialize.hpp"

namespace feitlab {

namespace {

std::optional<std::size_t> row_index(const ClassFunction& chi) {
  const CharacterTable t = chi.table();
  for (std::size_t i = 0; i < t.num_characters(); ++i)
    if (chi == t.character(i)) return i;
  return std::nullopt;
}

// (Psi^m chi, 1) as an exact rational.
Rational adams_trivial_multiplicity(const ClassFunction& chi, Int m) {
  const CharacterTable t = chi.table();
  Cyclotomic s;
  const auto classes = t.classes();
  for (std::size_t c = 0; c < t.num_classes(); ++c)
    s += chi[static_cast<std::size_t>(t.class_of_power(static_cast<int>(c), m))] * Rational(classes[c].size);
  if (!s.is_rational()) throw std::domain_error("(Psi^m chi, 1) is not rational");
  return s.to_rational() / Rational(t.order());
}


}  // namespace

ClassFunction adams_operation(const ClassFunction& chi, Int m) {
  const CharacterTable t = chi.table();
  std::vector<Cyclotomic> vals;
  vals.reserve(chi.size());
  for (std::size_t c = 0; c < chi.size(); ++c)
    vals.push_back(chi[static_cast<std::size_t>(t.class_of_power(static_cast<int>(c), m))]);
  return ClassFunction(t, std::move(vals));
}

SReport s_invariant(const ClassFunction& chi, Int n) {
  const CharacterTable t = chi.table();
  const Int N = t.exponent();
  if (n < 1 || N % n != 0)
    throw std::invalid_argument("S(G, chi, n) needs n | exp(G); got n = " + std::to_string(n) + ", exp(G) = " +
                                std::to_string(N));
  SReport report;
  report.chi = row_index(chi);
  report.n = n;
  Int total = 0;
  for (const auto& rho : numth::PrimeSet::of(n).subsets()) {
    Summand s;
    s.rho = rho;
    s.n_rho = numth::n_rho(n, N, rho);
    const Rational mult = adams_trivial_multiplicity(chi, s.n_rho);
    if (!is_integer(mult)) throw std::domain_error("(Psi^m chi, 1) = " + to_string(mult) + " is not an integer");
    s.multiplicity = to_int(mult);
    total += (rho.size() % 2 == 0 ? 1 : -1) * s.multiplicity;
    report.summands.push_back(std::move(s));
  }
  report.value = total;
  report.witness = eigenvalue_order_witness(chi, n);
  return report;
}

SReport s_invariant(const CharacterTable& table, std::size_t chi, Int n) {
  return s_invariant(table.character(chi), n);
}

ClassFunction alternating_adams_character(const ClassFunction& chi, Int n) {
  const CharacterTable t = chi.table();
  const Int N = t.exponent();
  ClassFunction out = t.zero();
  for (const auto& rho : numth::PrimeSet::of(n).subsets()) {
    const ClassFunction psi = adams_operation(chi, numth::n_rho(n, N, rho));
    if (rho.size() % 2 == 0)
      out += psi;
    else
      out -= psi;
  }
  return out;
}

std::vector<Int> eigenvalue_multiplicities(const ClassFunction& chi, int c) {
  const CharacterTable table = chi.table();
  const Int t = table.classes()[static_cast<std::size_t>(c)].rep_order;
  std::vector<Cyclotomic> powers;
  powers.reserve(static_cast<std::size_t>(t));
  for (Int a = 0; a < t; ++a) powers.push_back(chi[static_cast<std::size_t>(table.class_of_power(c, a))]);
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(t));
  for (Int j = 0; j < t; ++j) {
    Cyclotomic acc;
    for (Int a = 0; a < t; ++a) acc += powers[static_cast<std::size_t>(a)].times(RootOfUnity(t, -j * a));
    if (!acc.is_rational()) throw TableError("eigenvalues", "non-rational multiplicity at class " + std::to_string(c));
    const Rational m = acc.to_rational() / Rational(t);
    if (!is_integer(m) || sgn(m) < 0)
      throw TableError("eigenvalues", "multiplicity " + to_string(m) + " at class " + std::to_string(c));
    out.push_back(to_int(m));
  }
  return out;
}

std::optional<Witness> eigenvalue_order_witness(const ClassFunction& chi, Int n) {
  const CharacterTable table = chi.table();
  for (std::size_t c = 0; c < table.num_classes(); ++c) {
    const Int t = table.classes()[c].rep_order;
    if (t % n != 0) continue;
    const auto m = eigenvalue_multiplicities(chi, static_cast<int>(c));
    for (Int j = 0; j < t; ++j)
      if (m[static_cast<std::size_t>(j)] > 0 && t / numth::gcd(t, j) == n) return Witness{static_cast<int>(c), j, n};
  }
  return std::nullopt;
}

FeitReport feit_indicator(const ClassFunction& chi) {
  if (!(inner_product(chi, chi) == Cyclotomic(1)))
    throw std::invalid_argument("feit_indicator: chi is not irreducible");
  FeitReport report;
  report.conductor = conductor(chi);
  const SReport s = s_invariant(chi, report.conductor);
  report.chi = s.chi;
  report.value = s.value;
  report.witness = s.witness;
  return report;
}

FeitReport feit_indicator(const CharacterTable& table, std::size_t chi) { return feit_indicator(table.character(chi)); }

TheoremBCheck verify_theorem_b(const ClassFunction& chi, Int n) {
  const SReport s = s_invariant(chi, n);
  TheoremBCheck check;
  check.n = n;
  check.value = s.value;
  check.witness = s.witness;
  check.nonnegative = s.value >= 0;
  check.witness_agrees = (s.value > 0) == s.witness.has_value();
  return check;
}

// ---------------------------------------------------------------- JSON

namespace {

nlohmann::ordered_json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"class", w->class_index}, {"j", w->j}, {"order", w->order}};
}

nlohmann::ordered_json chi_json(const std::optional<std::size_t>& chi) {
  if (!chi) return nullptr;
  return *chi;
}

}  // namespace

nlohmann::ordered_json to_json(const SReport& r) {
  nlohmann::ordered_json summands = nlohmann::ordered_json::array();
  for (const auto& s : r.summands) {
    nlohmann::ordered_json rho = nlohmann::ordered_json::array();
    for (Int p : s.rho) rho.push_back(p);
    summands.push_back({{"rho", rho}, {"n_rho", s.n_rho}, {"multiplicity", s.multiplicity}});
  }
  return {{"chi", chi_json(r.chi)}, {"n", r.n}, {"S", r.value}, {"witness", witness_json(r.witness)},
          {"summands", summands}};
}

nlohmann::ordered_json to_json(const FeitReport& r) {
  return {{"chi", chi_json(r.chi)}, {"conductor", r.conductor}, {"F", r.value}, {"witness", witness_json(r.witness)}};
}

}  // namespace feitlab
