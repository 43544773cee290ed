#include "feitlab/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "feitlab/numth.hpp"

namespace feitlab {

// ---------------------------------------------------------------- Perm

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("Perm: image list is not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (int pt : cycle) {
      if (pt < 1 || static_cast<std::size_t>(pt) > degree)
        throw std::invalid_argument("Perm::from_cycles: point " + std::to_string(pt) + " out of range");
      if (used[static_cast<std::size_t>(pt - 1)])
        throw std::invalid_argument("Perm::from_cycles: point " + std::to_string(pt) + " repeated");
      used[static_cast<std::size_t>(pt - 1)] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()] - 1;
  }
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Int Perm::order() const {
  Int result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    Int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      ++len;
    }
    result = numth::lcm(result, len);
  }
  return result;
}

Perm Perm::extended(std::size_t degree) const {
  if (degree < images_.size()) throw std::invalid_argument("Perm::extended: degree too small");
  Perm p(degree);
  std::copy(images_.begin(), images_.end(), p.images_.begin());
  return p;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    os << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      os << (first ? "" : ",") << j + 1;
      first = false;
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("Perm product: degree mismatch");
  Perm r;
  r.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  return r;
}

// ---------------------------------------------------------------- PermGroup

namespace detail {

struct GroupData {
  static constexpr std::size_t kTableBound = 720;

  std::string name;
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;
  std::vector<int> inverse;
  std::vector<Int> orders;
  std::vector<int> table;
  Int exponent = 1;
  bool abelian = true;
  std::vector<ConjugacyClass> classes;
  std::vector<int> class_of;

  int find(const Perm& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || *it != p) return -1;
    return static_cast<int>(it - elements.begin());
  }

  int mul(int a, int b) const {
    const std::size_t n = elements.size();
    if (!table.empty()) return table[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
    return find(elements[static_cast<std::size_t>(a)] * elements[static_cast<std::size_t>(b)]);
  }
};

}  // namespace detail

namespace {

std::shared_ptr<detail::GroupData> build_group(std::string name, std::size_t degree, std::vector<Perm> generators,
                                               std::size_t bound) {
  auto data = std::make_shared<detail::GroupData>();
  data->name = std::move(name);
  data->degree = degree;
  for (auto& g : generators) {
    if (g.degree() > degree) throw std::invalid_argument("generator degree exceeds group degree");
    g = g.extended(degree);
  }
  data->generators = std::move(generators);

  std::set<Perm> seen;
  std::deque<Perm> queue;
  seen.insert(Perm(degree));
  queue.push_back(Perm(degree));
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    for (const Perm& s : data->generators) {
      Perm y = s * x;
      if (seen.insert(y).second) {
        if (seen.size() > bound)
          throw BoundExceeded("group " + data->name + " has more than " + std::to_string(bound) + " elements");
        queue.push_back(std::move(y));
      }
    }
  }
  data->elements.assign(seen.begin(), seen.end());
  const std::size_t n = data->elements.size();

  if (n <= detail::GroupData::kTableBound) {
    data->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) data->table[a * n + b] = data->find(data->elements[a] * data->elements[b]);
  }
  data->inverse.resize(n);
  data->orders.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    data->inverse[i] = data->find(data->elements[i].inverse());
    data->orders[i] = data->elements[i].order();
    data->exponent = numth::lcm(data->exponent, data->orders[i]);
  }
  for (std::size_t i = 0; i < data->generators.size() && data->abelian; ++i)
    for (std::size_t j = i + 1; j < data->generators.size(); ++j)
      if (data->generators[i] * data->generators[j] != data->generators[j] * data->generators[i]) {
        data->abelian = false;
        break;
      }

  // Conjugacy classes: orbits under conjugation by the generators.
  std::vector<Perm> gen_inv;
  for (const auto& s : data->generators) gen_inv.push_back(s.inverse());
  data->class_of.assign(n, -1);
  std::vector<ConjugacyClass> classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (data->class_of[i] != -1) continue;
    ConjugacyClass cls;
    const int id = static_cast<int>(classes.size());
    std::vector<int> stack{static_cast<int>(i)};
    data->class_of[i] = id;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      cls.elements.push_back(x);
      for (std::size_t k = 0; k < data->generators.size(); ++k) {
        const int y = data->find(data->generators[k] * data->elements[static_cast<std::size_t>(x)] * gen_inv[k]);
        if (data->class_of[static_cast<std::size_t>(y)] == -1) {
          data->class_of[static_cast<std::size_t>(y)] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(cls.elements.begin(), cls.elements.end());
    cls.representative = cls.elements.front();
    cls.size = static_cast<Int>(cls.elements.size());
    cls.element_order = data->orders[static_cast<std::size_t>(cls.representative)];
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    return std::tie(a.element_order, a.size, a.representative) < std::tie(b.element_order, b.size, b.representative);
  });
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int x : classes[c].elements) data->class_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
  data->classes = std::move(classes);
  return data;
}

}  // namespace

PermGroup::PermGroup(std::string name, std::size_t degree, std::vector<Perm> generators, std::size_t element_bound)
    : data_(build_group(std::move(name), degree, std::move(generators), element_bound)) {}

const std::string& PermGroup::name() const { return data_->name; }
std::size_t PermGroup::degree() const { return data_->degree; }
Int PermGroup::order() const { return static_cast<Int>(data_->elements.size()); }
std::span<const Perm> PermGroup::generators() const { return data_->generators; }
std::span<const Perm> PermGroup::elements() const { return data_->elements; }
const Perm& PermGroup::element(int i) const { return data_->elements.at(static_cast<std::size_t>(i)); }

std::optional<int> PermGroup::find(const Perm& p) const {
  if (p.degree() != data_->degree) return std::nullopt;
  const int i = data_->find(p);
  if (i < 0) return std::nullopt;
  return i;
}

int PermGroup::index_of(const Perm& p) const {
  auto i = find(p);
  if (!i) throw std::invalid_argument("permutation " + p.to_string() + " is not in " + data_->name);
  return *i;
}

int PermGroup::mul(int a, int b) const { return data_->mul(a, b); }
int PermGroup::inv(int a) const { return data_->inverse[static_cast<std::size_t>(a)]; }

int PermGroup::pow(int a, Int m) const {
  const Int o = element_order(a);
  m = numth::mod(m, o);
  int result = identity();
  int base = a;
  while (m > 0) {
    if (m & 1) result = mul(result, base);
    m >>= 1;
    if (m > 0) base = mul(base, base);
  }
  return result;
}

Int PermGroup::element_order(int a) const { return data_->orders[static_cast<std::size_t>(a)]; }
int PermGroup::conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }
bool PermGroup::is_abelian() const { return data_->abelian; }
Int PermGroup::exponent() const { return data_->exponent; }
std::span<const ConjugacyClass> PermGroup::classes() const { return data_->classes; }
int PermGroup::class_of(int x) const { return data_->class_of[static_cast<std::size_t>(x)]; }

std::vector<int> PermGroup::class_power_map(Int m) const {
  std::vector<int> out;
  out.reserve(data_->classes.size());
  for (const auto& cls : data_->classes) out.push_back(class_of(pow(cls.representative, m)));
  return out;
}

Subgroup PermGroup::whole() const {
  std::vector<int> all(data_->elements.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> gens;
  for (const auto& g : data_->generators) gens.push_back(data_->find(g));
  return Subgroup(data_, std::move(all), std::move(gens));
}

Subgroup PermGroup::trivial_subgroup() const {
  return Subgroup(data_, {0}, {});
}

Subgroup PermGroup::generate(std::span<const int> generators) const {
  std::vector<bool> seen(data_->elements.size(), false);
  std::vector<int> members{0};
  seen[0] = true;
  std::vector<int> gens;
  for (int g : generators)
    if (g != 0 && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int s : gens) {
      const int y = mul(members[i], s);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup(data_, std::move(members), std::move(gens));
}

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(std::shared_ptr<const detail::GroupData> parent, std::vector<int> elements, std::vector<int> generators)
    : parent_(std::move(parent)), elements_(std::move(elements)), generators_(std::move(generators)) {
  mask_.assign(parent_->elements.size(), false);
  for (int x : elements_) mask_[static_cast<std::size_t>(x)] = true;
}

std::size_t Subgroup::position(int x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) throw std::out_of_range("element is not in the subgroup");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (elements_.size() > other.elements_.size()) return false;
  for (int x : elements_)
    if (!other.contains(x)) return false;
  return true;
}

bool Subgroup::is_cyclic() const {
  for (int x : elements_)
    if (parent_->orders[static_cast<std::size_t>(x)] == order()) return true;
  return false;
}

bool Subgroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (parent_->mul(generators_[i], generators_[j]) != parent_->mul(generators_[j], generators_[i])) return false;
  return true;
}

Int Subgroup::exponent() const {
  Int e = 1;
  for (int x : elements_) e = numth::lcm(e, parent_->orders[static_cast<std::size_t>(x)]);
  return e;
}

Subgroup Subgroup::conjugate(int g) const {
  const PermGroup G = parent();
  std::vector<int> elems, gens;
  elems.reserve(elements_.size());
  for (int x : elements_) elems.push_back(G.conjugate(g, x));
  for (int x : generators_) gens.push_back(G.conjugate(g, x));
  std::sort(elems.begin(), elems.end());
  return Subgroup(parent_, std::move(elems), std::move(gens));
}

Subgroup Subgroup::intersection(const Subgroup& other) const {
  std::vector<int> elems;
  for (int x : elements_)
    if (other.contains(x)) elems.push_back(x);
  std::vector<int> gens(elems.begin() + 1, elems.end());
  return Subgroup(parent_, std::move(elems), std::move(gens));
}

Subgroup Subgroup::derived_subgroup() const {
  const PermGroup G = parent();
  std::vector<int> commutators;
  std::vector<bool> seen(parent_->elements.size(), false);
  for (int x : elements_)
    for (int y : elements_) {
      const int c = G.mul(G.mul(G.inv(x), G.inv(y)), G.mul(x, y));
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = true;
        commutators.push_back(c);
      }
    }
  return G.generate(commutators);
}

bool Subgroup::operator<(const Subgroup& other) const {
  if (elements_.size() != other.elements_.size()) return elements_.size() < other.elements_.size();
  return elements_ < other.elements_;
}

std::vector<Subgroup> all_subgroups(const Subgroup& U, std::size_t bound) {
  if (static_cast<std::size_t>(U.order()) > bound)
    throw BoundExceeded("subgroup enumeration: |G| = " + std::to_string(U.order()) + " exceeds bound " +
                        std::to_string(bound));
  const PermGroup group = U.parent();
  std::map<std::vector<int>, std::size_t> known;
  std::vector<Subgroup> found;
  auto add = [&](Subgroup H) {
    std::vector<int> key(H.elements().begin(), H.elements().end());
    if (known.emplace(std::move(key), found.size()).second) found.push_back(std::move(H));
  };

  // Cyclic subgroups, each with a single generator.
  std::vector<int> cyclic_gens;
  for (int x : U.elements()) {
    const std::size_t before = found.size();
    const int gen[1] = {x};
    add(group.generate(gen));
    if (found.size() != before) cyclic_gens.push_back(x);
  }
  // Every subgroup is a join of cyclic subgroups; close under joining.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (int c : cyclic_gens) {
      if (found[i].contains(c)) continue;
      std::vector<int> gens(found[i].generators().begin(), found[i].generators().end());
      gens.push_back(c);
      add(group.generate(gens));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Subgroup> all_subgroups(const PermGroup& group, std::size_t bound) {
  return all_subgroups(group.whole(), bound);
}

// ---------------------------------------------------------------- linear characters

LinearChar::LinearChar(Subgroup domain, Int level, std::vector<Int> exponents)
    : domain_(std::move(domain)), level_(level), exponents_(std::move(exponents)) {
  if (exponents_.size() != domain_.elements().size())
    throw std::invalid_argument("LinearChar: one exponent per subgroup element required");
  for (auto& e : exponents_) e = numth::mod(e, level_);
}

RootOfUnity LinearChar::value(int x) const {
  return RootOfUnity(level_, exponents_[domain_.position(x)]);
}

Int LinearChar::order() const {
  Int g = level_;
  for (Int e : exponents_) g = numth::gcd(g, e);
  return level_ / g;
}

bool LinearChar::is_trivial() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Int e) { return e == 0; });
}

std::vector<LinearChar> linear_characters(const Subgroup& H) {
  const PermGroup G = H.parent();
  const Int E = G.exponent();
  const auto n = static_cast<std::size_t>(G.order());

  // Extend characters from A = [H,H] one cyclic step at a time; A stays normal in H.
  const Subgroup D = H.derived_subgroup();
  std::vector<bool> in_a(n, false);
  std::vector<int> a_elems(D.elements().begin(), D.elements().end());
  for (int x : a_elems) in_a[static_cast<std::size_t>(x)] = true;
  std::vector<std::vector<Int>> chars{std::vector<Int>(n, 0)};

  for (int g : H.elements()) {
    if (in_a[static_cast<std::size_t>(g)]) continue;
    Int k = 1;
    int gk = g;
    while (!in_a[static_cast<std::size_t>(gk)]) {
      gk = G.mul(gk, g);
      ++k;
    }
    std::vector<int> new_elems;
    std::vector<std::pair<int, std::pair<int, Int>>> decomposition;  // element -> (a, j)
    int gj = G.identity();
    for (Int j = 0; j < k; ++j) {
      for (int a : a_elems) decomposition.push_back({G.mul(a, gj), {a, j}});
      gj = G.mul(gj, g);
    }
    std::vector<std::vector<Int>> extended;
    for (const auto& psi : chars) {
      const Int s = psi[static_cast<std::size_t>(gk)];
      if (s % k != 0) throw std::logic_error("linear_characters: extension step has no solution");
      for (Int i = 0; i < k; ++i) {
        const Int w = s / k + i * (E / k);
        std::vector<Int> phi(n, 0);
        for (const auto& [x, aj] : decomposition)
          phi[static_cast<std::size_t>(x)] = numth::mod(psi[static_cast<std::size_t>(aj.first)] + aj.second * w, E);
        extended.push_back(std::move(phi));
      }
    }
    chars = std::move(extended);
    a_elems.clear();
    for (const auto& [x, aj] : decomposition) {
      in_a[static_cast<std::size_t>(x)] = true;
      a_elems.push_back(x);
    }
  }

  std::vector<std::vector<Int>> restricted;
  for (const auto& phi : chars) {
    std::vector<Int> vals;
    vals.reserve(H.elements().size());
    for (int x : H.elements()) vals.push_back(phi[static_cast<std::size_t>(x)]);
    restricted.push_back(std::move(vals));
  }
  std::sort(restricted.begin(), restricted.end());
  std::vector<LinearChar> out;
  for (auto& v : restricted) out.emplace_back(H, E, std::move(v));
  return out;
}

MonomialPair conjugate_pair(int g, const MonomialPair& pair) {
  const PermGroup G = pair.subgroup.parent();
  Subgroup K = pair.subgroup.conjugate(g);
  std::vector<Int> exps(K.elements().size());
  for (int h : pair.subgroup.elements())
    exps[K.position(G.conjugate(g, h))] = pair.character.value(h).exponent;
  LinearChar phi(K, pair.character.level(), std::move(exps));
  return MonomialPair{std::move(K), std::move(phi)};
}

LinearChar restrict_linear(const MonomialPair& pair, const Subgroup& K) {
  if (!K.is_subgroup_of(pair.subgroup)) throw std::invalid_argument("restrict_linear: K is not contained in H");
  std::vector<Int> exps;
  exps.reserve(K.elements().size());
  for (int x : K.elements()) exps.push_back(pair.character.value(x).exponent);
  return LinearChar(K, pair.character.level(), std::move(exps));
}

}  // namespace feitlab
