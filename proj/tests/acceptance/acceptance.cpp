// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <bit>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "feitlab/adams.hpp"
#include "feitlab/brauer.hpp"
#include "feitlab/chartab.hpp"
#include "feitlab/numth.hpp"

using namespace feitlab;

namespace {

struct Entry {
  std::string spec;
  PermGroup group;
  CharacterTable table;
};

std::vector<std::string> corpus_specs(const std::string& file) {
  std::ifstream in(std::string(FEITLAB_DATA_DIR) + "/" + file);
  if (!in) throw std::runtime_error("cannot open " + file);
  const auto j = nlohmann::json::parse(in);
  return j.at("entries").get<std::vector<std::string>>();
}

std::vector<Entry> load_corpus(const std::string& file) {
  std::vector<Entry> out;
  for (const auto& spec : corpus_specs(file)) {
    PermGroup g = parse_group_spec(spec);
    CharacterTable t = compute_table(g);
    out.push_back({spec, std::move(g), std::move(t)});
  }
  return out;
}

// Collects the first few failure notes of a criterion.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& note) {
    ++cases_;
    if (ok) return;
    if (failures_++ < 5) notes_.push_back(note());
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << cases_ << " cases, " << failures_ << " failures";
    for (const auto& n : notes_) s << "; " << n;
    return s.str();
  }

 private:
  long cases_ = 0;
  long failures_ = 0;
  std::vector<std::string> notes_;
};

std::string where(const Entry& e, std::size_t chi, Int n = 0) {
  std::string s = e.spec + " chi=" + std::to_string(chi);
  if (n) s += " n=" + std::to_string(n);
  return s;
}

bool rational_value(const Cyclotomic& z, Rational& out) {
  if (!z.is_rational()) return false;
  out = z.to_rational();
  return true;
}

// (a, b) summed over elements rather than classes.
Rational element_inner_product(const PermGroup& g, const std::function<Cyclotomic(int)>& a,
                               const std::function<Cyclotomic(int)>& b) {
  Cyclotomic s;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) s += a(x) * b(x).conj();
  s *= ratio(1, g.order());
  Rational q;
  if (!rational_value(s, q)) throw std::logic_error("inner product is not rational");
  return q;
}

Cyclotomic chi_at(const Entry& e, std::size_t i, int x) {
  return e.table.value(i, static_cast<std::size_t>(e.group.class_of(x)));
}

// S from its definition, with every power taken in the group.
Int s_by_elements(const Entry& e, const std::function<Cyclotomic(int)>& chi, Int n) {
  const Int N = e.group.exponent();
  Rational total = 0;
  for (const auto& rho : numth::PrimeSet::of(n).subsets()) {
    const Int m = numth::n_rho(n, N, rho);
    Cyclotomic s;
    for (int x = 0; x < static_cast<int>(e.group.order()); ++x) s += chi(e.group.pow(x, m));
    const Rational q = s.to_rational() / Rational(e.group.order());
    total += rho.size() % 2 ? Rational(-q) : q;
  }
  if (!is_integer(total)) throw std::logic_error("S is not an integer");
  return to_int(total);
}

// Induced character phi^G at class c.
Cyclotomic induced(const Entry& e, const MonomialPair& p, std::size_t c) {
  const int x = e.group.classes()[c].representative;
  Cyclotomic s;
  for (int y = 0; y < static_cast<int>(e.group.order()); ++y) {
    const int z = e.group.conjugate(y, x);
    if (p.subgroup.contains(z)) s += p.character.value(z).to_cyclotomic();
  }
  return s * ratio(1, p.subgroup.order());
}

Int linear_order(const Entry& e, std::size_t i) {
  Int o = 1;
  for (int x = 0; x < static_cast<int>(e.group.order()); ++x) o = std::lcm(o, chi_at(e, i, x).as_root_of_unity()->order());
  return o;
}

struct Context {
  std::vector<Entry> small;
  std::vector<Entry> big;
};

std::pair<bool, std::string> criterion1(const Context& ctx) {
  Tally t;
  for (const Entry& e : ctx.small) {
    const MonomialPoset poset(e.group);
    const auto subgroups = all_subgroups(e.group);
    for (std::size_t i = 0; i < e.table.num_characters(); ++i) {
      const ClassFunction chi = e.table.character(i);
      const RPlusElement a = a_g_chains(poset, chi);
      t.check(a == a_g_orbit_chains(poset, chi), [&] { return where(e, i) + ": chain formulas differ"; });

      std::vector<Cyclotomic> b(e.table.num_classes());
      for (const auto& [rep, c] : a.coefficients())
        for (std::size_t k = 0; k < b.size(); ++k) b[k] += Rational(c) * induced(e, poset.pair(rep), k);
      bool section = true;
      for (std::size_t k = 0; k < b.size(); ++k) section = section && b[k] == e.table.value(i, k);
      t.check(section, [&] { return where(e, i) + ": b(a(chi)) != chi"; });

      for (int p = 0; p < static_cast<int>(poset.size()); ++p) {
        const MonomialPair& pair = poset.pair(p);
        if (!(pair.subgroup == e.group.whole())) continue;
        const Rational m = element_inner_product(
            e.group, [&](int x) { return chi_at(e, i, x); },
            [&](int x) { return pair.character.value(x).to_cyclotomic(); });
        t.check(Rational(a.coefficient(p)) == m, [&] { return where(e, i) + ": normalization"; });
      }
      for (const Subgroup& u : subgroups) {
        const MonomialPoset pu(u);
        t.check(restrict_rplus(a, pu) == a_g_chains(pu, chi),
                [&] { return where(e, i) + ": restriction to |U|=" + std::to_string(u.order()); });
      }
    }
  }
  return {t.ok(), t.summary()};
}

std::pair<bool, std::string> criterion2(const Context& ctx) {
  Tally t;
  for (const Entry& e : ctx.small) {
    const MonomialPoset poset(e.group);
    for (std::size_t i = 0; i < e.table.num_characters(); ++i) {
      const RPlusElement a = a_g_chains(poset, e.table.character(i));
      for (Int n : numth::divisors(e.table.exponent())) {
        // Literal coefficient sum over orbits [H, phi] with n | o(phi).
        Int literal = 0;
        for (const auto& [rep, c] : a.coefficients())
          if (poset.pair(rep).character.order() % n == 0) literal += c;
        const Int s = s_invariant(e.table, i, n).value;
        t.check(literal == s && s_via_coefficients(a, n) == s, [&] { return where(e, i, n); });
      }
    }
  }
  return {t.ok(), t.summary()};
}

std::pair<bool, std::string> criterion3(const Context& ctx) {
  Tally t;
  for (const Entry& e : ctx.big) {
    for (std::size_t i = 0; i < e.table.num_characters(); ++i) {
      const ClassFunction chi = e.table.character(i);
      for (Int n : numth::divisors(e.table.exponent())) {
        const SReport r = s_invariant(chi, n);
        // Eigenvalue of order n, from a DFT over the powers of each class representative.
        bool eigen = false;
        for (const auto& cls : e.group.classes()) {
          const Int o = cls.element_order;
          if (o % n) continue;
          for (Int j = 0; j < o && !eigen; ++j) {
            if (o / std::gcd(o, j) != n) continue;
            Cyclotomic m;
            for (Int a = 0; a < o; ++a)
              m += chi_at(e, i, e.group.pow(cls.representative, a)) * Cyclotomic::zeta(o, -j * a);
            eigen = !m.is_zero();
          }
        }
        t.check(r.value >= 0, [&] { return where(e, i, n) + ": negative"; });
        t.check(r.value == s_by_elements(e, [&](int x) { return chi_at(e, i, x); }, n),
                [&] { return where(e, i, n) + ": S disagrees with the element sum"; });
        t.check((r.value > 0) == eigen && r.witness.has_value() == eigen,
                [&] { return where(e, i, n) + ": witness"; });
      }
    }
  }
  return {t.ok(), t.summary()};
}

std::pair<bool, std::string> criterion4(const Context& ctx) {
  Tally t;
  for (const Entry& e : ctx.big) {
    for (Int n : numth::divisors(e.table.exponent())) {
      t.check(s_invariant(e.table.trivial_character(), n).value == (n == 1 ? 1 : 0),
              [&] { return e.spec + " (a) n=" + std::to_string(n); });
      Int census = 0;
      for (int x = 0; x < static_cast<int>(e.group.order()); ++x) census += e.group.element_order(x) % n == 0;
      t.check(s_invariant(e.table.regular_character(), n).value == census,
              [&] { return e.spec + " (c) n=" + std::to_string(n); });
      for (std::size_t i = 0; i < e.table.num_characters(); ++i) {
        const Int s = s_invariant(e.table, i, n).value;
        if (e.table.degree(i) == 1)
          t.check(s == (linear_order(e, i) % n == 0 ? 1 : 0), [&] { return where(e, i, n) + " (b)"; });
        if (n == 1) t.check(s == e.table.degree(i), [&] { return where(e, i) + " (d)"; });
      }
    }
  }
  return {t.ok(), t.summary()};
}

std::pair<bool, std::string> criterion5() {
  Tally t;
  for (Int p : {2, 3, 5, 7}) {
    const CharacterTable tab = compute_table(cyclic(p));
    for (std::size_t i = 0; i < tab.num_characters(); ++i) {
      if (tab.degree(i) != 1 || i == 0) continue;
      const ClassFunction chi = tab.character(i);
      t.check(alternating_adams_character(chi, p) == tab.trivial_character() - chi,
              [&] { return "C" + std::to_string(p) + " chi=" + std::to_string(i) + ": virtual character"; });
      t.check(s_invariant(chi, p).value == 1, [&] { return "C" + std::to_string(p) + " S != 1"; });
    }
  }
  return {t.ok(), t.summary()};
}

std::pair<bool, std::string> criterion6(const Context& ctx) {
  Tally t;
  Int smallest = -1;
  for (const Entry& e : ctx.big)
    for (std::size_t i = 0; i < e.table.num_characters(); ++i) {
      const FeitReport f = feit_indicator(e.table, i);
      t.check(f.value > 0, [&] { return where(e, i) + ": F = 0"; });
      t.check(f.value == s_by_elements(e, [&](int x) { return chi_at(e, i, x); }, f.conductor),
              [&] { return where(e, i) + ": F disagrees with the element sum"; });
      if (smallest < 0 || f.value < smallest) smallest = f.value;
    }
  return {t.ok(), t.summary() + ", min F = " + std::to_string(smallest)};
}

std::pair<bool, std::string> criterion7() {
  Tally t;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> modulus(1, 10000), value(-1000, 1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const Int N = modulus(rng);
    std::vector<Int> ds;
    for (Int d = 1; d <= N; ++d)
      if (N % d == 0) ds.push_back(d);
    std::vector<Int> vals(ds.size());
    for (auto& v : vals) v = value(rng);
    const numth::DivisorFunction f(N, vals);
    for (std::size_t a = 0; a < ds.size(); ++a) {
      Int direct = 0;
      for (std::size_t b = 0; b < ds.size(); ++b)
        if (ds[b] % ds[a] == 0) direct += vals[b];
      t.check(numth::upper_sum_via_alternating(f, ds[a]) == direct,
              [&] { return "summatory N=" + std::to_string(N) + " n=" + std::to_string(ds[a]); });
    }
  }

  for (Int n = 1; n <= 360; ++n)
    for (Int k = 1; k <= n; ++k) {
      if (n % k) continue;
      // Sum of the conjugates zeta_k^a over a in (Z/n)^x.
      std::map<Int, Int> counts;
      for (Int a = 1; a <= n; ++a)
        if (std::gcd(a, n) == 1) ++counts[a % k];
      std::vector<std::pair<Int, Rational>> terms;
      for (const auto& [x, c] : counts) terms.emplace_back(x, Rational(c));
      const Cyclotomic sum = Cyclotomic::from_terms(k, terms);
      Rational direct;
      const bool rational = rational_value(sum, direct);
      t.check(rational && direct == numth::trace_root_of_unity(k, n) &&
                  Cyclotomic::zeta(k).at_level(n).trace() == direct,
              [&] { return "trace k=" + std::to_string(k) + " n=" + std::to_string(n); });
    }

  long zero_cases = 0;
  for (Int N = 1; N <= 60; ++N)
    for (Int n : numth::divisors(N))
      for (Int t_ : numth::divisors(N))
        for (Int o : numth::divisors(std::gcd(t_, N))) {
          bool rho0 = false;
          for (Int p = 2; p <= n; ++p) {
            if (n % p || !numth::is_prime(p)) continue;
            Int vn = 0, vo = 0;
            for (Int m = n; m % p == 0; m /= p) ++vn;
            for (Int m = o; m % p == 0; m /= p) ++vo;
            rho0 = rho0 || vo < vn;
          }
          const Int closed = numth::technical_closed_form(N, n, t_, o);
          zero_cases += rho0;
          t.check(closed >= 0 && (closed == 0) == rho0, [&] {
            return "technical dichotomy N=" + std::to_string(N) + " n=" + std::to_string(n) + " t=" +
                   std::to_string(t_) + " o=" + std::to_string(o);
          });
          for (Int j = 1; j <= o; ++j) {
            if (std::gcd(j, o) != 1) continue;
            // The double sum again, as exponent counts at level o.
            std::vector<Int> primes;
            for (Int p = 2; p <= n; ++p)
              if (n % p == 0 && numth::is_prime(p)) primes.push_back(p);
            Int rq = n;
            for (Int p : primes) rq /= p;
            std::map<Int, Int> counts;
            for (unsigned mask = 0; mask < (1u << primes.size()); ++mask) {
              Int m = 1, rest = N;
              for (std::size_t b = 0; b < primes.size(); ++b) {
                if (!(mask >> b & 1)) continue;
                for (Int q = rq; q % primes[b] == 0; q /= primes[b]) m *= primes[b];
                while (rest % primes[b] == 0) rest /= primes[b];
              }
              m *= rest;
              const Int sign = std::popcount(mask) % 2 ? -1 : 1;
              for (Int k = 1; k <= t_; ++k)
                if (std::gcd(k, t_) == 1) counts[(j * k * m) % o] += sign;
            }
            std::vector<std::pair<Int, Rational>> terms;
            for (const auto& [x, c] : counts) terms.emplace_back(x, Rational(c));
            const Cyclotomic total = Cyclotomic::from_terms(o, terms);
            Rational direct;
            const bool rational = rational_value(total, direct);
            t.check(rational && direct == Rational(closed) &&
                        numth::technical_direct(N, n, t_, Cyclotomic::zeta(o, j)) == closed,
                    [&] {
                      return "technical N=" + std::to_string(N) + " n=" + std::to_string(n) + " t=" +
                             std::to_string(t_) + " o=" + std::to_string(o) + " j=" + std::to_string(j);
                    });
          }
        }
  return {t.ok(), t.summary() + ", " + std::to_string(zero_cases) + " (N,n,t,o) with rho_0 non-empty"};
}

std::pair<bool, std::string> criterion8(const Context& ctx) {
  Tally t;
  std::string strict;
  Int strict_order = 0;
  for (const Entry& e : ctx.small) {
    const MonomialPoset poset(e.group);
    for (std::size_t i = 0; i < e.table.num_characters(); ++i) {
      const ClassFunction chi = e.table.character(i);
      const MaxSetsCheck m = check_max_sets(poset, chi);
      t.check(m.passed(), [&] { return where(e, i) + ": max sets"; });
      if (m.strict() && (strict.empty() || e.group.order() < strict_order)) {
        strict_order = e.group.order();
        strict = where(e, i) + " (|M~| = " + std::to_string(m.m_tilde.size()) +
                 " < |M| = " + std::to_string(m.m.size()) + ")";
      }
      for (Int n : numth::divisors(e.table.exponent()))
        t.check(check_equivalences(poset, chi, n).passed(), [&] { return where(e, i, n) + ": equivalences"; });
    }
  }
  t.check(!strict.empty(), [] { return std::string("no strict inclusion found"); });
  return {t.ok(), t.summary() + ", strict inclusion at " + (strict.empty() ? "none" : strict)};
}

std::pair<bool, std::string> criterion9(const Context& ctx) {
  Tally t;
  for (const Entry& e : ctx.big) {
    const CharacterTable& tab = e.table;
    const std::size_t r = tab.num_classes();
    Int degree_squares = 0;
    for (std::size_t i = 0; i < r; ++i) degree_squares += tab.degree(i) * tab.degree(i);
    t.check(degree_squares == e.group.order(), [&] { return e.spec + ": degree sum"; });
    bool rows = true, cols = true;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Cyclotomic s, c;
        for (std::size_t k = 0; k < r; ++k) {
          s += tab.value(i, k) * tab.value(j, k).conj() * Rational(tab.classes()[k].size);
          c += tab.value(k, i) * tab.value(k, j).conj();
        }
        rows = rows && s == Cyclotomic(i == j ? e.group.order() : 0);
        cols = cols && c == (i == j ? Cyclotomic(ratio(e.group.order(), tab.classes()[i].size)) : Cyclotomic(0));
      }
    t.check(rows, [&] { return e.spec + ": row orthogonality"; });
    t.check(cols, [&] { return e.spec + ": column orthogonality"; });
    bool powers = true;
    for (std::size_t c = 0; c < r; ++c) {
      const int rep = e.group.classes()[c].representative;
      for (const auto& [p, target] : tab.classes()[c].powermap)
        powers = powers && e.group.class_of(e.group.pow(rep, p)) == target;
      for (Int p : numth::PrimeSet::of(tab.exponent()))
        powers = powers && tab.classes()[c].powermap.count(p) == 1;
    }
    t.check(powers, [&] { return e.spec + ": power maps"; });
    const std::string once = save_table(tab);
    const std::string twice = save_table(load_table(once));
    t.check(once == twice, [&] { return e.spec + ": round trip"; });
  }
  return {t.ok(), t.summary()};
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  Context ctx;
  try {
    ctx.small = load_corpus("corpus_small.json");
    ctx.big = load_corpus("corpus_big.json");
  } catch (const std::exception& ex) {
    std::cout << "corpus setup failed: " << ex.what() << "\n";
    return 1;
  }

  const std::vector<std::function<std::pair<bool, std::string>()>> criteria = {
      [&] { return criterion1(ctx); }, [&] { return criterion2(ctx); }, [&] { return criterion3(ctx); },
      [&] { return criterion4(ctx); }, [] { return criterion5(); },     [&] { return criterion6(ctx); },
      [] { return criterion7(); },     [&] { return criterion8(ctx); }, [&] { return criterion9(ctx); },
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = clock::now();
    std::pair<bool, std::string> result;
    try {
      result = criteria[k]();
    } catch (const std::exception& ex) {
      result = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(clock::now() - start).count();
    all = all && result.first;
    std::cout << "criterion " << k + 1 << ": " << (result.first ? "PASS" : "FAIL") << " (" << result.second << ", "
              << secs << " s)" << std::endl;
  }
  return all ? 0 : 1;
}
