#include <limits>
#include <nlohmann/json.hpp>

#include "feitlab/chartab.hpp"
#include "feitlab/serialize.hpp"

namespace feitlab {

using json = nlohmann::ordered_json;

namespace {

Int checked_int(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("coefficient does not fit in 64 bits");
  return static_cast<Int>(z.get_si());
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<Int>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"num/den\" string");
}

}  // namespace

json cyclotomic_to_json(const Cyclotomic& v) {
  if (v.is_rational()) {
    const Rational q = v.to_rational();
    if (is_integer(q) && q.get_num().fits_slong_p()) return json(to_int(q));
    return json(to_string(q));
  }
  json terms = json::array();
  for (const auto& [exp, c] : v.terms()) terms.push_back(json::array({exp, checked_int(c.get_num()), checked_int(c.get_den())}));
  json out = json::object();
  out["level"] = v.level();
  out["terms"] = std::move(terms);
  return out;
}

Cyclotomic cyclotomic_from_json(const json& j) {
  if (!j.is_object()) return Cyclotomic(rational_from_json(j));
  const Int level = j.at("level").get<Int>();
  if (level < 1) throw std::invalid_argument("level must be positive");
  std::vector<std::pair<Int, Rational>> terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("terms must be [exp, num, den] triples");
    const Int den = t[2].get<Int>();
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational c(mpz_class(static_cast<long>(t[1].get<Int>())), mpz_class(static_cast<long>(den)));
    c.canonicalize();
    terms.emplace_back(t[0].get<Int>(), c);
  }
  return Cyclotomic::from_terms(level, terms);
}

CharacterTable load_table(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw TableError("parse", ex.what());
  }
  std::string name;
  Int order = 0, exponent = 0;
  std::vector<ClassData> classes;
  std::vector<std::vector<Cyclotomic>> irreducibles;
  try {
    name = j.at("name").get<std::string>();
    order = j.at("order").get<Int>();
    exponent = j.at("exponent").get<Int>();
    for (const auto& c : j.at("classes")) {
      ClassData d;
      d.rep_order = c.at("rep_order").get<Int>();
      d.size = c.at("size").get<Int>();
      if (c.contains("powermap"))
        for (const auto& [key, target] : c.at("powermap").items()) {
          std::size_t used = 0;
          const Int p = std::stoll(key, &used);
          if (used != key.size()) throw std::invalid_argument("power map key '" + key + "' is not an integer");
          d.powermap[p] = target.get<int>();
        }
      classes.push_back(std::move(d));
    }
    for (const auto& row : j.at("irreducibles")) {
      std::vector<Cyclotomic> values;
      for (const auto& v : row) values.push_back(cyclotomic_from_json(v));
      irreducibles.push_back(std::move(values));
    }
  } catch (const TableError&) {
    throw;
  } catch (const std::exception& ex) {
    throw TableError("parse", ex.what());
  }
  if (exponent < 1) throw TableError("exponent", "exponent must be positive");
  return CharacterTable(std::move(name), order, exponent, std::move(classes), std::move(irreducibles));
}

json table_to_json(const CharacterTable& table) {
  json out = json::object();
  out["name"] = table.name();
  out["order"] = table.order();
  out["exponent"] = table.exponent();
  json classes = json::array();
  for (const auto& c : table.classes()) {
    json entry = json::object();
    entry["rep_order"] = c.rep_order;
    entry["size"] = c.size;
    json pm = json::object();
    for (const auto& [p, target] : c.powermap) pm[std::to_string(p)] = target;
    entry["powermap"] = std::move(pm);
    classes.push_back(std::move(entry));
  }
  out["classes"] = std::move(classes);
  json rows = json::array();
  for (std::size_t i = 0; i < table.num_characters(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < table.num_classes(); ++c) row.push_back(cyclotomic_to_json(table.value(i, c)));
    rows.push_back(std::move(row));
  }
  out["irreducibles"] = std::move(rows);
  return out;
}

std::string save_table(const CharacterTable& table) { return table_to_json(table).dump(2) + "\n"; }

}  // namespace feitlab
