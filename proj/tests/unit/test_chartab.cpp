#include <doctest.h>

#include <algorithm>
#include <nlohmann/json.hpp>

#include "feitlab/chartab.hpp"
#include "feitlab/numth.hpp"

using namespace feitlab;
using json = nlohmann::ordered_json;

namespace {

std::vector<Int> degrees(const CharacterTable& t) {
  std::vector<Int> d;
  for (std::size_t i = 0; i < t.num_characters(); ++i) d.push_back(t.degree(i));
  return d;
}

std::string check_name(const std::string& text) {
  try {
    load_table(text);
  } catch (const TableError& e) {
    return e.check();
  }
  return "";
}

const CharacterTable& alt5() {
  static const CharacterTable t = compute_table(alternating(5));
  return t;
}

}  // namespace

TEST_CASE("cyclic tables") {
  for (Int n : {1, 2, 5, 6, 12}) {
    const PermGroup g = cyclic(n);
    const CharacterTable t = compute_table(g);
    REQUIRE(t.num_characters() == static_cast<std::size_t>(n));
    // chi_j(x^a) = z_n^(ja) for a generator x.
    const int x = n == 1 ? g.identity() : g.index_of(g.generators()[0]);
    std::vector<std::vector<Cyclotomic>> expected;
    for (Int j = 0; j < n; ++j) {
      std::vector<Cyclotomic> row(static_cast<std::size_t>(n));
      for (Int a = 0; a < n; ++a) row[static_cast<std::size_t>(g.class_of(g.pow(x, a)))] = Cyclotomic::zeta(n, j * a);
      expected.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < t.num_characters(); ++i) {
      std::vector<Cyclotomic> row;
      for (std::size_t c = 0; c < t.num_classes(); ++c) row.push_back(t.value(i, c));
      auto it = std::find(expected.begin(), expected.end(), row);
      REQUIRE(it != expected.end());
      expected.erase(it);
    }
    CHECK(expected.empty());
  }
}

TEST_CASE("computed degrees") {
  CHECK(degrees(compute_table(symmetric(3))) == std::vector<Int>{1, 1, 2});
  CHECK(degrees(alt5()) == std::vector<Int>{1, 3, 3, 4, 5});
  CHECK(degrees(compute_table(symmetric(5))) == std::vector<Int>{1, 1, 4, 4, 5, 5, 6});
  CHECK(degrees(compute_table(special_linear_2(3))) == std::vector<Int>{1, 1, 1, 2, 2, 2, 3});
  CHECK(degrees(compute_table(quaternion(8))) == std::vector<Int>{1, 1, 1, 1, 2});
  CHECK(degrees(compute_table(extraspecial(27))) == std::vector<Int>{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3});
  // Irrationalities of A5 sit in the degree-3 rows on the classes of order 5.
  const CharacterTable& t = alt5();
  for (std::size_t i = 0; i < t.num_characters(); ++i)
    for (std::size_t c = 0; c < t.num_classes(); ++c)
      CHECK(t.value(i, c).is_rational() == !(t.degree(i) == 3 && t.classes()[c].rep_order == 5));
  CHECK_THROWS_AS(compute_table(symmetric(5), 100), BoundExceeded);
}

TEST_CASE("orthogonality and value fields of computed tables") {
  for (const char* spec : {"sym:4", "alt:5", "sl2:3", "dihedral:30", "extraspecial:27", "sym:5", "quaternion:16"}) {
    const PermGroup g = parse_group_spec(spec);
    const CharacterTable t = compute_table(g);
    const std::size_t r = t.num_classes();
    Int squares = 0;
    for (std::size_t i = 0; i < r; ++i) {
      squares += t.degree(i) * t.degree(i);
      for (std::size_t j = 0; j < r; ++j) {
        Cyclotomic s;
        for (std::size_t c = 0; c < r; ++c) s += t.value(i, c) * t.value(j, c).conj() * Rational(t.classes()[c].size);
        CHECK(s == Cyclotomic(i == j ? g.order() : 0));
      }
      for (std::size_t c = 0; c < r; ++c) {
        const Int o = t.classes()[c].rep_order;
        CHECK(t.value(i, c).descend_to(o).has_value());
      }
    }
    CHECK(squares == g.order());
    for (std::size_t c = 0; c < r; ++c)
      for (std::size_t d = 0; d < r; ++d) {
        Cyclotomic s;
        for (std::size_t i = 0; i < r; ++i) s += t.value(i, c) * t.value(i, d).conj();
        CHECK(s == (c == d ? Cyclotomic(ratio(g.order(), t.classes()[c].size)) : Cyclotomic(0)));
      }
  }
}

TEST_CASE("class_of_power") {
  for (const char* spec : {"sym:4", "alt:5", "sl2:3", "dihedral:20", "product:cyclic:3,sym:3"}) {
    const PermGroup g = parse_group_spec(spec);
    const CharacterTable t = compute_table(g);
    const Int e = t.exponent();
    for (int c = 0; c < static_cast<int>(t.num_classes()); ++c) {
      CHECK(t.class_of_power(c, 1) == c);
      CHECK(t.class_of_power(c, e) == 0);
      CHECK(t.class_of_power(c, 0) == 0);
    }
    for (Int m = -e; m <= 2 * e; ++m) {
      const auto direct = g.class_power_map(m);
      for (int c = 0; c < static_cast<int>(t.num_classes()); ++c) {
        CHECK(t.class_of_power(c, m) == direct[static_cast<std::size_t>(c)]);
        CHECK(t.class_of_power(c, m) == t.class_of_power(c, m + e));
        for (Int k = 1; k < 8; ++k) CHECK(t.class_of_power(t.class_of_power(c, m), k) == t.class_of_power(c, m * k));
      }
    }
  }
}

TEST_CASE("inner products") {
  const CharacterTable t = compute_table(symmetric(4));
  for (std::size_t i = 0; i < t.num_characters(); ++i)
    for (std::size_t j = 0; j < t.num_characters(); ++j)
      CHECK(inner_product(t.character(i), t.character(j)) == Cyclotomic(i == j ? 1 : 0));
  CHECK(inner_product(t.regular_character(), t.trivial_character()) == Cyclotomic(1));
  const CharacterTable other = compute_table(symmetric(4));
  CHECK_THROWS(inner_product(t.character(0), other.character(0)));
  CHECK_THROWS(ClassFunction(t, {Cyclotomic(1)}));
}

TEST_CASE("galois conjugation and conductors") {
  const CharacterTable& t = alt5();
  for (std::size_t i = 0; i < t.num_characters(); ++i) CHECK(galois_conjugate(t.character(i), 1) == t.character(i));
  CHECK_THROWS(galois_conjugate(t.character(1), 2));
  // 7 = 2 (mod 5) swaps the two degree-3 characters.
  CHECK(galois_conjugate(t.character(1), 7) == t.character(2));
  CHECK(galois_conjugate(t.character(2), 7) == t.character(1));
  CHECK(galois_conjugate(t.character(3), 7) == t.character(3));
  CHECK(conductor(t.character(1)) == 5);
  CHECK(conductor(t.trivial_character()) == 1);

  const CharacterTable c5 = compute_table(cyclic(5));
  for (std::size_t i = 1; i < 5; ++i) CHECK(conductor(c5.character(i)) == 5);
  const CharacterTable s4 = compute_table(symmetric(4));
  for (std::size_t i = 0; i < s4.num_characters(); ++i) CHECK(conductor(s4.character(i)) == 1);

  // Permutation of Irr and stability of conductors, brute force over divisors.
  for (const char* spec : {"cyclic:12", "sl2:3", "alt:4", "extraspecial:27", "product:cyclic:4,cyclic:3"}) {
    const CharacterTable tab = compute_table(parse_group_spec(spec));
    const Int e = tab.exponent();
    for (std::size_t i = 0; i < tab.num_characters(); ++i) {
      const ClassFunction chi = tab.character(i);
      const Int c = conductor(chi);
      CHECK(e % c == 0);
      Int brute = 0;
      for (Int n : numth::divisors(e)) {
        bool fixed = true;
        for (Int k = 1; k < e; ++k)
          if (numth::gcd(k, e) == 1 && numth::mod(k, n) == 1 % n && !(galois_conjugate(chi, k) == chi)) fixed = false;
        if (fixed) {
          brute = n;
          break;
        }
      }
      CHECK(c == brute);
      for (Int k = 1; k < e; ++k) {
        if (numth::gcd(k, e) != 1) continue;
        const ClassFunction g = galois_conjugate(chi, k);
        CHECK(conductor(g) == c);
        bool found = false;
        for (std::size_t j = 0; j < tab.num_characters(); ++j) found = found || g == tab.character(j);
        CHECK(found);
      }
    }
  }
}

TEST_CASE("json round trip") {
  for (const char* spec : {"cyclic:5", "sym:3", "alt:5", "sl2:3", "sym:5"}) {
    const CharacterTable t = compute_table(parse_group_spec(spec));
    const std::string a = save_table(t);
    const CharacterTable back = load_table(a);
    CHECK(save_table(back) == a);
    REQUIRE(back.num_characters() == t.num_characters());
    for (std::size_t i = 0; i < t.num_characters(); ++i)
      for (std::size_t c = 0; c < t.num_classes(); ++c) CHECK(back.value(i, c) == t.value(i, c));
  }
}

TEST_CASE("json validation") {
  const std::string good = save_table(compute_table(symmetric(3)));
  CHECK(check_name(good).empty());
  CHECK(check_name("{not json") == "parse");
  CHECK(check_name("{}") == "parse");

  json j = json::parse(good);
  SUBCASE("missing power map") {
    j["classes"][1]["powermap"].erase("3");
    CHECK(check_name(j.dump()) == "powermaps");
  }
  SUBCASE("power map for a prime not dividing e") {
    j["classes"][1]["powermap"]["5"] = 1;
    CHECK(check_name(j.dump()) == "powermaps");
  }
  SUBCASE("power map to a class of the wrong order") {
    j["classes"][2]["powermap"]["2"] = 1;
    CHECK(check_name(j.dump()) == "powermaps");
  }
  SUBCASE("tampered value") {
    j["irreducibles"][2][2] = 1;
    CHECK(check_name(j.dump()) == "row-orthogonality");
  }
  SUBCASE("bad degree") {
    j["irreducibles"][2][0] = "3/2";
    CHECK(check_name(j.dump()) == "degrees");
  }
  SUBCASE("class sizes") {
    j["classes"][1]["size"] = 2;
    CHECK(check_name(j.dump()) == "class-sizes");
  }
  SUBCASE("identity class") {
    j["classes"][0]["rep_order"] = 2;
    CHECK(check_name(j.dump()) == "identity-class");
  }
  SUBCASE("shape") {
    j["irreducibles"].erase(1);
    CHECK(check_name(j.dump()) == "shape");
  }
  SUBCASE("exponent") {
    j["exponent"] = 12;
    CHECK(!check_name(j.dump()).empty());
  }
  SUBCASE("value outside Q_e") {
    j["irreducibles"][2][1] = json{{"level", 5}, {"terms", json::array({json::array({1, 1, 1})})}};
    CHECK(check_name(j.dump()) == "value-field");
  }
  SUBCASE("values given at another level") {
    // -1 as z_2^1 and 1 as z_12^0: both lie in Q_6 and are normalized on load.
    j["irreducibles"][1][1] = json{{"level", 2}, {"terms", json::array({json::array({1, 1, 1})})}};
    j["irreducibles"][1][0] = json{{"level", 12}, {"terms", json::array({json::array({0, 2, 2})})}};
    CHECK(check_name(j.dump()).empty());
    CHECK(save_table(load_table(j.dump())) == good);
  }
}

TEST_CASE("tampered power map caught by Adams images") {
  // In A5 the square of a 5-cycle lies in the other class of 5-cycles.
  json j = json::parse(save_table(alt5()));
  int five_a = -1;
  for (std::size_t c = 0; c < j["classes"].size(); ++c)
    if (j["classes"][c]["rep_order"] == 5) {
      five_a = static_cast<int>(c);
      break;
    }
  REQUIRE(five_a >= 0);
  CHECK(j["classes"][five_a]["powermap"]["2"] != five_a);
  j["classes"][five_a]["powermap"]["2"] = five_a;
  const std::string name = check_name(j.dump());
  CHECK(name == "powermap-characters");
}
