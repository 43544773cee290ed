#include "feitlab/brauer.hpp"

#include <algorithm>
#include <mutex>
#include <nlohmann/json.hpp>

#include "feitlab/adams.hpp"
#include "feitlab/numth.hpp"
#include "feitlab/serialize.hpp"

namespace feitlab {

namespace detail {

struct PosetData {
  PermGroup group;
  Subgroup acting;
  std::vector<MonomialPair> pairs;
  std::map<std::pair<std::vector<int>, std::vector<Int>>, int> index;
  std::vector<std::vector<int>> above;
  std::vector<std::vector<bool>> above_mask;
  // action[u][i]: index of acting.elements()[u] applied to pair i
  std::vector<std::vector<int>> action;
  std::vector<int> rep_of;
  std::vector<int> reps;

  // (start, top) -> signed number of orbit-representative chains, filled on demand.
  std::once_flag chains_once;
  std::vector<std::tuple<int, int, Int>> chain_orbits;

  PosetData(PermGroup g, Subgroup u) : group(std::move(g)), acting(std::move(u)) {}
};

}  // namespace detail

namespace {

using detail::PosetData;

std::pair<std::vector<int>, std::vector<Int>> key_of(const MonomialPair& p) {
  return {std::vector<int>(p.subgroup.elements().begin(), p.subgroup.elements().end()),
          std::vector<Int>(p.character.exponents().begin(), p.character.exponents().end())};
}

std::shared_ptr<PosetData> build(const Subgroup& acting, std::size_t bound) {
  if (bound > kMaxOracleBound)
    throw std::invalid_argument("oracle bound " + std::to_string(bound) + " exceeds the maximum " +
                                std::to_string(kMaxOracleBound));
  if (static_cast<std::size_t>(acting.order()) > bound)
    throw BoundExceeded("monomial poset: |G| = " + std::to_string(acting.order()) + " exceeds the oracle bound " +
                        std::to_string(bound));
  auto d = std::make_shared<PosetData>(acting.parent(), acting);
  for (const auto& H : all_subgroups(acting, bound))
    for (auto& phi : linear_characters(H)) d->pairs.push_back(MonomialPair{H, std::move(phi)});
  std::sort(d->pairs.begin(), d->pairs.end(), [](const MonomialPair& a, const MonomialPair& b) {
    if (a.subgroup.order() != b.subgroup.order()) return a.subgroup.order() < b.subgroup.order();
    return key_of(a) < key_of(b);
  });
  const int n = static_cast<int>(d->pairs.size());
  for (int i = 0; i < n; ++i) d->index.emplace(key_of(d->pairs[static_cast<std::size_t>(i)]), i);

  d->above.assign(static_cast<std::size_t>(n), {});
  d->above_mask.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    const auto& lo = d->pairs[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      const auto& hi = d->pairs[static_cast<std::size_t>(j)];
      if (hi.subgroup.order() == lo.subgroup.order() || hi.subgroup.order() % lo.subgroup.order() != 0) continue;
      if (!lo.subgroup.is_subgroup_of(hi.subgroup)) continue;
      bool agrees = true;
      for (int x : lo.subgroup.elements())
        if (!(hi.character.value(x) == lo.character.value(x))) {
          agrees = false;
          break;
        }
      if (agrees) {
        d->above[static_cast<std::size_t>(i)].push_back(j);
        d->above_mask[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
      }
    }
  }

  for (int g : acting.elements()) {
    std::vector<int> row(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      auto it = d->index.find(key_of(conjugate_pair(g, d->pairs[static_cast<std::size_t>(i)])));
      if (it == d->index.end()) throw std::logic_error("monomial poset is not closed under conjugation");
      row[static_cast<std::size_t>(i)] = it->second;
    }
    d->action.push_back(std::move(row));
  }
  d->rep_of.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int best = i;
    for (const auto& row : d->action) best = std::min(best, row[static_cast<std::size_t>(i)]);
    d->rep_of[static_cast<std::size_t>(i)] = best;
    if (best == i) d->reps.push_back(i);
  }
  return d;
}

// Values of chi on the elements of the ambient group.
std::vector<Cyclotomic> element_values(const PermGroup& G, const ClassFunction& chi) {
  const CharacterTable t = chi.table();
  const auto classes = G.classes();
  if (t.num_classes() != classes.size() || t.order() != G.order())
    throw std::invalid_argument("character table does not match the group");
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (t.classes()[c].size != classes[c].size || t.classes()[c].rep_order != classes[c].element_order)
      throw std::invalid_argument("character table classes do not follow the group's class order");
  std::vector<Cyclotomic> out;
  out.reserve(static_cast<std::size_t>(G.order()));
  for (int x = 0; x < static_cast<int>(G.order()); ++x) out.push_back(chi[static_cast<std::size_t>(G.class_of(x))]);
  return out;
}

Int pair_multiplicity(const MonomialPair& p, const std::vector<Cyclotomic>& values) {
  Cyclotomic s;
  const auto elems = p.subgroup.elements();
  const auto exps = p.character.exponents();
  for (std::size_t k = 0; k < elems.size(); ++k)
    s += values[static_cast<std::size_t>(elems[k])].times(RootOfUnity(p.character.level(), -exps[k]));
  if (!s.is_rational()) throw std::domain_error("(chi_H, phi) is not rational");
  const Rational m = s.to_rational() / Rational(p.subgroup.order());
  if (!is_integer(m)) throw std::domain_error("(chi_H, phi) = " + to_string(m) + " is not an integer");
  return to_int(m);
}

}  // namespace

struct ChainAccess {
  static PosetData& data(const MonomialPoset& p) { return *p.data_; }
};

MonomialPoset::MonomialPoset(const PermGroup& group, std::size_t bound) : data_(build(group.whole(), bound)) {}
MonomialPoset::MonomialPoset(const Subgroup& acting, std::size_t bound) : data_(build(acting, bound)) {}

PermGroup MonomialPoset::group() const { return data_->group; }
const Subgroup& MonomialPoset::acting_group() const { return data_->acting; }
std::size_t MonomialPoset::size() const { return data_->pairs.size(); }
const MonomialPair& MonomialPoset::pair(int i) const { return data_->pairs.at(static_cast<std::size_t>(i)); }

std::optional<int> MonomialPoset::find(const MonomialPair& p) const {
  auto it = data_->index.find(key_of(p));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::span<const int> MonomialPoset::above(int i) const { return data_->above.at(static_cast<std::size_t>(i)); }
bool MonomialPoset::less(int i, int j) const {
  return data_->above_mask.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
}

int MonomialPoset::conjugate(int g, int i) const {
  if (!data_->acting.contains(g)) throw std::invalid_argument("conjugating element is not in the acting group");
  return data_->action[data_->acting.position(g)][static_cast<std::size_t>(i)];
}

OrbitInfo MonomialPoset::orbit_of(int i) const {
  const auto members = orbit(i);
  const Int size = static_cast<Int>(members.size());
  return OrbitInfo{data_->rep_of.at(static_cast<std::size_t>(i)), size, data_->acting.order() / size};
}

std::vector<int> MonomialPoset::orbit(int i) const {
  std::vector<int> out;
  for (const auto& row : data_->action) out.push_back(row[static_cast<std::size_t>(i)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::span<const int> MonomialPoset::representatives() const { return data_->reps; }

Int RPlusElement::coefficient(int pair) const {
  auto it = coeffs_.find(poset_.orbit_of(pair).representative);
  return it == coeffs_.end() ? 0 : it->second;
}

void RPlusElement::add(int pair, Int c) {
  if (c == 0) return;
  const int rep = poset_.orbit_of(pair).representative;
  auto [it, inserted] = coeffs_.emplace(rep, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

std::vector<Int> pair_multiplicities(const MonomialPoset& poset, const ClassFunction& chi) {
  const auto values = element_values(poset.group(), chi);
  std::vector<Int> out;
  out.reserve(poset.size());
  for (std::size_t i = 0; i < poset.size(); ++i) out.push_back(pair_multiplicity(poset.pair(static_cast<int>(i)), values));
  return out;
}

RPlusElement a_g_chains(const MonomialPoset& poset, const ClassFunction& chi) {
  const auto m = pair_multiplicities(poset, chi);
  const std::size_t n = poset.size();
  // g[p] = sum over chains starting at p of (-1)^length m(top)
  std::vector<Int> g(n, 0);
  for (std::size_t p = n; p-- > 0;) {
    Int v = m[p];
    for (int q : poset.above(static_cast<int>(p))) v -= g[static_cast<std::size_t>(q)];
    g[p] = v;
  }
  const Int order = poset.acting_group().order();
  RPlusElement out(poset);
  for (int rep : poset.representatives()) {
    Int total = 0;
    for (int p : poset.orbit(rep)) total += poset.pair(p).subgroup.order() * g[static_cast<std::size_t>(p)];
    if (total % order != 0)
      throw std::logic_error("a_G coefficient " + std::to_string(total) + "/" + std::to_string(order) +
                             " is not an integer");
    out.add(rep, total / order);
  }
  return out;
}

namespace {

void enumerate_orbit_chains(const MonomialPoset& poset, PosetData& d) {
  std::map<std::pair<int, int>, Int> counts;
  std::vector<int> chain;
  for (int start : poset.representatives()) {
    std::vector<const std::vector<int>*> stab;
    for (const auto& row : d.action)
      if (row[static_cast<std::size_t>(start)] == start) stab.push_back(&row);
    auto canonical = [&]() {
      for (const auto* row : stab) {
        for (std::size_t k = 1; k < chain.size(); ++k) {
          const int img = (*row)[static_cast<std::size_t>(chain[k])];
          if (img < chain[k]) return false;
          if (img > chain[k]) break;
        }
      }
      return true;
    };
    chain.assign(1, start);
    auto dfs = [&](auto&& self) -> void {
      if (canonical()) counts[{start, chain.back()}] += (chain.size() % 2 == 1) ? 1 : -1;
      for (int q : poset.above(chain.back())) {
        chain.push_back(q);
        self(self);
        chain.pop_back();
      }
    };
    dfs(dfs);
  }
  for (const auto& [key, c] : counts)
    if (c != 0) d.chain_orbits.emplace_back(key.first, key.second, c);
}

}  // namespace

RPlusElement a_g_orbit_chains(const MonomialPoset& poset, const ClassFunction& chi) {
  PosetData& d = ChainAccess::data(poset);
  std::call_once(d.chains_once, [&] { enumerate_orbit_chains(poset, d); });
  const auto m = pair_multiplicities(poset, chi);
  RPlusElement out(poset);
  for (const auto& [start, top, sign] : d.chain_orbits) out.add(start, sign * m[static_cast<std::size_t>(top)]);
  return out;
}

ClassFunction b_g(const RPlusElement& element, const CharacterTable& table) {
  const MonomialPoset& poset = element.poset();
  const PermGroup G = poset.group();
  if (poset.acting_group().order() != G.order()) throw std::invalid_argument("b_g needs the poset of the whole group");
  const Int e = G.exponent();
  ClassFunction out = table.zero();
  for (const auto& [rep, coeff] : element.coefficients()) {
    const MonomialPair& p = poset.pair(rep);
    std::vector<Cyclotomic> vals;
    for (const auto& cls : G.classes()) {
      std::vector<Rational> dense(static_cast<std::size_t>(e));
      bool any = false;
      for (int x = 0; x < static_cast<int>(G.order()); ++x) {
        const int y = G.conjugate(G.inv(x), cls.representative);
        if (!p.subgroup.contains(y)) continue;
        const RootOfUnity z = p.character.value(y);
        dense[static_cast<std::size_t>(numth::mod(z.exponent * (e / z.level), e))] += 1;
        any = true;
      }
      if (!any) {
        vals.emplace_back(0);
        continue;
      }
      std::vector<std::pair<Int, Rational>> terms;
      for (Int k = 0; k < e; ++k)
        if (sgn(dense[static_cast<std::size_t>(k)]) != 0) terms.emplace_back(k, dense[static_cast<std::size_t>(k)]);
      vals.push_back(Cyclotomic::from_terms(e, terms) * ratio(coeff, p.subgroup.order()));
    }
    out += ClassFunction(table, std::move(vals));
  }
  return out;
}

RPlusElement restrict_rplus(const RPlusElement& element, const MonomialPoset& target) {
  const MonomialPoset& source = element.poset();
  const Subgroup& V = source.acting_group();
  const Subgroup& U = target.acting_group();
  if (!U.is_subgroup_of(V)) throw std::invalid_argument("restrict_rplus: U is not contained in the acting group");
  const PermGroup G = source.group();
  RPlusElement out(target);
  for (const auto& [rep, coeff] : element.coefficients()) {
    const MonomialPair& p = source.pair(rep);
    std::vector<bool> covered(static_cast<std::size_t>(G.order()), false);
    for (int g : V.elements()) {
      if (covered[static_cast<std::size_t>(g)]) continue;
      for (int u : U.elements())
        for (int h : p.subgroup.elements()) covered[static_cast<std::size_t>(G.mul(G.mul(u, g), h))] = true;
      const MonomialPair conj = conjugate_pair(g, p);
      const Subgroup K = U.intersection(conj.subgroup);
      const MonomialPair restricted{K, restrict_linear(conj, K)};
      const auto idx = target.find(restricted);
      if (!idx) throw std::logic_error("restricted pair missing from the target poset");
      out.add(*idx, coeff);
    }
  }
  return out;
}

RPlusElement restrict_rplus(const RPlusElement& element, const Subgroup& U) {
  return restrict_rplus(element, MonomialPoset(U, kMaxOracleBound));
}

Int s_via_coefficients(const RPlusElement& a, Int n) {
  if (n < 1) throw std::invalid_argument("s_via_coefficients: n must be positive");
  Int total = 0;
  for (const auto& [rep, c] : a.coefficients())
    if (a.poset().pair(rep).character.order() % n == 0) total += c;
  return total;
}

Int s_via_coefficients(const MonomialPoset& poset, const ClassFunction& chi, Int n) {
  return s_via_coefficients(a_g_chains(poset, chi), n);
}

AdamsIdentityCheck adams_coefficient_identity(const MonomialPoset& poset, const ClassFunction& chi, Int n) {
  const RPlusElement a = a_g_chains(poset, chi);
  AdamsIdentityCheck check;
  for (const auto& [rep, c] : a.coefficients())
    if (n % poset.pair(rep).character.order() == 0) check.lhs += c;
  const Cyclotomic rhs = inner_product(adams_operation(chi, n), chi.table().trivial_character());
  check.rhs = to_int(rhs.to_rational());
  return check;
}

namespace {

std::vector<int> maximal(const MonomialPoset& poset, const std::vector<int>& set) {
  std::vector<bool> in(poset.size(), false);
  for (int p : set) in[static_cast<std::size_t>(p)] = true;
  std::vector<int> out;
  for (int p : set) {
    const auto up = poset.above(p);
    if (std::none_of(up.begin(), up.end(), [&](int q) { return in[static_cast<std::size_t>(q)]; })) out.push_back(p);
  }
  return out;
}

struct Sets {
  std::vector<int> m, m_tilde, max_m, max_m_tilde;
};

Sets compute_sets(const MonomialPoset& poset, const ClassFunction& chi) {
  const auto mult = pair_multiplicities(poset, chi);
  const RPlusElement a = a_g_chains(poset, chi);
  Sets s;
  for (int p = 0; p < static_cast<int>(poset.size()); ++p) {
    if (mult[static_cast<std::size_t>(p)] > 0) s.m.push_back(p);
    if (a.coefficient(p) != 0) s.m_tilde.push_back(p);
  }
  s.max_m = maximal(poset, s.m);
  s.max_m_tilde = maximal(poset, s.m_tilde);
  return s;
}

}  // namespace

MaxSetsCheck check_max_sets(const MonomialPoset& poset, const ClassFunction& chi) {
  Sets s = compute_sets(poset, chi);
  MaxSetsCheck check;
  check.subset = std::includes(s.m.begin(), s.m.end(), s.m_tilde.begin(), s.m_tilde.end());
  check.max_equal = s.max_m == s.max_m_tilde;
  check.m = std::move(s.m);
  check.m_tilde = std::move(s.m_tilde);
  check.max_m = std::move(s.max_m);
  check.max_m_tilde = std::move(s.max_m_tilde);
  return check;
}

bool EquivalenceCheck::passed() const {
  return std::all_of(statements.begin(), statements.end(), [&](bool b) { return b == statements[0]; });
}

EquivalenceCheck check_equivalences(const MonomialPoset& poset, const ClassFunction& chi, Int n) {
  const Sets s = compute_sets(poset, chi);
  auto exists = [&](const std::vector<int>& set, bool cyclic_only, bool exact) {
    return std::any_of(set.begin(), set.end(), [&](int p) {
      const MonomialPair& pr = poset.pair(p);
      if (cyclic_only && !pr.subgroup.is_cyclic()) return false;
      const Int o = pr.character.order();
      return exact ? o == n : o % n == 0;
    });
  };
  EquivalenceCheck check;
  check.statements = {exists(s.m, false, false),      exists(s.max_m, false, false), exists(s.m_tilde, false, false),
                      exists(s.max_m_tilde, false, false), exists(s.m, true, false),  exists(s.m, false, true),
                      exists(s.m, true, true)};
  return check;
}

nlohmann::ordered_json to_json(const RPlusElement& element) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  const PermGroup G = element.poset().group();
  for (const auto& [rep, c] : element.coefficients()) {
    const MonomialPair& p = element.poset().pair(rep);
    nlohmann::ordered_json sub = nlohmann::ordered_json::array();
    for (int x : p.subgroup.elements()) sub.push_back(G.element(x).to_string());
    nlohmann::ordered_json phi = nlohmann::ordered_json::array();
    for (Int k : p.character.exponents()) phi.push_back(k);
    out.push_back({{"subgroup", sub}, {"phi", {{"level", p.character.level()}, {"exponents", phi}}}, {"coefficient", c}});
  }
  return out;
}

}  // namespace feitlab
