#include <doctest.h>

#include <set>

#include "feitlab/adams.hpp"
#include "feitlab/brauer.hpp"
#include "feitlab/numth.hpp"

using namespace feitlab;

namespace {

Int abelianization_sum(const PermGroup& g) {
  Int total = 0;
  for (const Subgroup& h : all_subgroups(g)) total += h.order() / h.derived_subgroup().order();
  return total;
}

// phi^G from the induction formula over all of G.
ClassFunction induce(const CharacterTable& t, const PermGroup& g, const MonomialPair& pair) {
  std::vector<Cyclotomic> values(t.num_classes());
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    const int x = g.classes()[c].representative;
    Cyclotomic s;
    for (int y = 0; y < static_cast<int>(g.order()); ++y) {
      const int z = g.conjugate(y, x);
      if (pair.subgroup.contains(z)) s += pair.character.value(z).to_cyclotomic();
    }
    values[c] = s * ratio(1, pair.subgroup.order());
  }
  return ClassFunction(t, std::move(values));
}

int find_pair(const MonomialPoset& poset, const Subgroup& h, bool trivial_phi) {
  for (int i = 0; i < static_cast<int>(poset.size()); ++i)
    if (poset.pair(i).subgroup == h && poset.pair(i).character.is_trivial() == trivial_phi) return i;
  FAIL("pair not found");
  return -1;
}

const char* const kGroups[] = {"trivial", "cyclic:2", "cyclic:6", "sym:3", "dihedral:8", "quaternion:8",
                               "alt:4", "product:cyclic:2,cyclic:2"};

}  // namespace

TEST_CASE("poset sizes") {
  CHECK(MonomialPoset(trivial_group()).size() == 1);
  CHECK(MonomialPoset(cyclic(2)).size() == 3);
  CHECK(MonomialPoset(symmetric(3)).size() == 12);
  for (const char* spec : {"cyclic:12", "dihedral:8", "alt:4", "sym:4", "sl2:3", "dihedral:12"}) {
    const PermGroup g = parse_group_spec(spec);
    CHECK(MonomialPoset(g).size() == static_cast<std::size_t>(abelianization_sum(g)));
  }
  CHECK_THROWS_AS(MonomialPoset(alternating(5)), BoundExceeded);
  CHECK_THROWS_AS(MonomialPoset(alternating(5), 61), std::invalid_argument);
  CHECK(MonomialPoset(alternating(5), 60).size() == static_cast<std::size_t>(abelianization_sum(alternating(5))));
}

TEST_CASE("order relation and orbits") {
  const PermGroup g = symmetric(4);
  const MonomialPoset poset(g);
  for (int i = 0; i < static_cast<int>(poset.size()); ++i) {
    const MonomialPair& a = poset.pair(i);
    for (int j = 0; j < static_cast<int>(poset.size()); ++j) {
      const MonomialPair& b = poset.pair(j);
      bool below = i != j && a.subgroup.is_subgroup_of(b.subgroup);
      if (below)
        for (int x : a.subgroup.elements()) below = below && a.character.value(x) == b.character.value(x);
      CHECK(poset.less(i, j) == below);
    }
    const OrbitInfo o = poset.orbit_of(i);
    CHECK(o.orbit_size * o.stabilizer_order == g.order());
    CHECK(static_cast<Int>(poset.orbit(i).size()) == o.orbit_size);
    CHECK(o.representative <= i);
    for (int x = 0; x < static_cast<int>(g.order()); x += 5) {
      const int k = poset.conjugate(x, i);
      CHECK(poset.orbit_of(k).representative == o.representative);
      for (int j : poset.above(i)) CHECK(poset.less(k, poset.conjugate(x, j)));
    }
  }
  std::set<int> reps(poset.representatives().begin(), poset.representatives().end());
  for (int i = 0; i < static_cast<int>(poset.size()); ++i) CHECK(reps.count(poset.orbit_of(i).representative) == 1);

  // (G, 1) is fixed; the three (<transposition>, sgn) pairs of S3 form one orbit.
  const PermGroup s3 = symmetric(3);
  const MonomialPoset p3(s3);
  const int top = find_pair(p3, s3.whole(), true);
  CHECK(p3.orbit_of(top).orbit_size == 1);
  std::set<int> transposition_orbit;
  for (int x = 0; x < static_cast<int>(s3.order()); ++x) {
    if (s3.element_order(x) != 2) continue;
    const std::vector<int> gen{x};
    transposition_orbit.insert(p3.orbit_of(find_pair(p3, s3.generate(gen), false)).representative);
  }
  REQUIRE(transposition_orbit.size() == 1);
  CHECK(p3.orbit_of(*transposition_orbit.begin()).orbit_size == 3);
}

TEST_CASE("canonical induction of linear characters") {
  for (const char* spec : kGroups) {
    const PermGroup g = parse_group_spec(spec);
    const CharacterTable t = compute_table(g);
    const MonomialPoset poset(g);
    for (std::size_t i = 0; i < t.num_characters(); ++i) {
      const ClassFunction chi = t.character(i);
      const RPlusElement a = a_g_chains(poset, chi);
      CHECK(a == a_g_orbit_chains(poset, chi));
      CHECK(b_g(a, t) == chi);
      if (t.degree(i) != 1) continue;
      REQUIRE(a.coefficients().size() == 1);
      const auto [rep, c] = *a.coefficients().begin();
      CHECK(c == 1);
      CHECK(poset.pair(rep).subgroup == g.whole());
      for (int x = 0; x < static_cast<int>(g.order()); ++x)
        CHECK(poset.pair(rep).character.value(x).to_cyclotomic() == chi.values()[static_cast<std::size_t>(g.class_of(x))]);
    }
  }
  const PermGroup one = trivial_group();
  const CharacterTable t1 = compute_table(one);
  const RPlusElement a1 = a_g_orbit_chains(MonomialPoset(one), t1.trivial_character());
  CHECK(a1.coefficients() == std::map<int, Int>{{0, 1}});
}

TEST_CASE("induction map") {
  const PermGroup s3 = symmetric(3);
  const CharacterTable t = compute_table(s3);
  const MonomialPoset poset(s3);
  RPlusElement from_trivial(poset);
  from_trivial.add(find_pair(poset, s3.trivial_subgroup(), true), 1);
  CHECK(b_g(from_trivial, t) == t.regular_character());

  Subgroup a3 = s3.whole();
  for (const Subgroup& h : all_subgroups(s3))
    if (h.order() == 3) a3 = h;
  RPlusElement from_a3(poset);
  from_a3.add(find_pair(poset, a3, true), 1);
  CHECK(b_g(from_a3, t) == t.character(0) + t.character(1));

  for (const char* spec : {"dihedral:8", "alt:4", "quaternion:8"}) {
    const PermGroup g = parse_group_spec(spec);
    const CharacterTable tg = compute_table(g);
    const MonomialPoset pg(g);
    for (int i = 0; i < static_cast<int>(pg.size()); ++i) {
      RPlusElement e(pg);
      e.add(i, 2);
      CHECK(b_g(e, tg) == Rational(2) * induce(tg, g, pg.pair(i)));
    }
  }
}

TEST_CASE("restriction") {
  for (const char* spec : {"sym:3", "dihedral:8", "alt:4", "cyclic:6"}) {
    const PermGroup g = parse_group_spec(spec);
    const CharacterTable t = compute_table(g);
    const MonomialPoset poset(g);
    for (std::size_t i = 0; i < t.num_characters(); ++i) {
      const RPlusElement a = a_g_chains(poset, t.character(i));
      CHECK(restrict_rplus(a, g.whole()).coefficients() == a.coefficients());

      const RPlusElement to_one = restrict_rplus(a, g.trivial_subgroup());
      Int expected = 0;
      for (const auto& [rep, c] : a.coefficients()) expected += c * (g.order() / poset.pair(rep).subgroup.order());
      CHECK(to_one.coefficients() == std::map<int, Int>{{0, expected}});
      CHECK(expected == t.degree(i));

      for (const Subgroup& u : all_subgroups(g)) {
        const MonomialPoset pu(u);
        const RPlusElement restricted = restrict_rplus(a, pu);
        CHECK(restricted == a_g_chains(pu, t.character(i)));
        Int total = 0;
        for (const auto& [rep, c] : restricted.coefficients()) total += c * (u.order() / pu.pair(rep).subgroup.order());
        CHECK(total == t.degree(i));
      }
    }
  }
}

TEST_CASE("multiplicities are conjugation invariant") {
  const PermGroup g = symmetric(4);
  const CharacterTable t = compute_table(g);
  const MonomialPoset poset(g);
  for (std::size_t i = 0; i < t.num_characters(); ++i) {
    const std::vector<Int> m = pair_multiplicities(poset, t.character(i));
    for (int p = 0; p < static_cast<int>(poset.size()); ++p)
      for (int x = 0; x < static_cast<int>(g.order()); ++x)
        CHECK(m[static_cast<std::size_t>(poset.conjugate(x, p))] == m[static_cast<std::size_t>(p)]);
  }
}

TEST_CASE("s via coefficients and the Adams identity") {
  for (const char* spec : kGroups) {
    const PermGroup g = parse_group_spec(spec);
    const CharacterTable t = compute_table(g);
    const MonomialPoset poset(g);
    for (Int n : numth::divisors(t.exponent())) {
      for (std::size_t i = 0; i < t.num_characters(); ++i) {
        const ClassFunction chi = t.character(i);
        CHECK(s_via_coefficients(poset, chi, n) == s_invariant(chi, n).value);
        const AdamsIdentityCheck id = adams_coefficient_identity(poset, chi, n);
        CHECK(id.passed());
        if (n == t.exponent()) CHECK(id.rhs == t.degree(i));
        if (n == 1) CHECK(id.rhs == (i == 0 ? 1 : 0));
      }
      Int census = 0;
      for (int x = 0; x < static_cast<int>(g.order()); ++x) census += g.element_order(x) % n == 0;
      CHECK(s_via_coefficients(poset, t.regular_character(), n) == census);
    }
    // n not dividing the exponent: no phi has n | o(phi).
    CHECK(s_via_coefficients(poset, t.regular_character(), t.exponent() + 1) == 0);
  }
}

TEST_CASE("maximal sets and equivalences") {
  bool strict = false;
  for (const char* spec : kGroups) {
    const PermGroup g = parse_group_spec(spec);
    const CharacterTable t = compute_table(g);
    const MonomialPoset poset(g);
    for (std::size_t i = 0; i < t.num_characters(); ++i) {
      const MaxSetsCheck m = check_max_sets(poset, t.character(i));
      CHECK(m.passed());
      strict = strict || m.strict();
      if (t.degree(i) == 1) {
        std::set<int> reps;
        for (int p : m.max_m) reps.insert(poset.orbit_of(p).representative);
        CHECK(reps.size() == 1);
        CHECK(poset.pair(*reps.begin()).subgroup == g.whole());
      }
      for (Int n : numth::divisors(t.exponent())) CHECK(check_equivalences(poset, t.character(i), n).passed());
    }
    const auto one = check_equivalences(poset, t.trivial_character(), 1).statements;
    for (bool b : one) CHECK(b);
    if (t.exponent() % 2 == 0)
      for (bool b : check_equivalences(poset, t.trivial_character(), 2).statements) CHECK(!b);
  }
  CHECK(strict);
}
