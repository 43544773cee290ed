#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "feitlab/groups.hpp"
#include "feitlab/numth.hpp"

namespace feitlab {

namespace {

std::size_t as_size(Int n) { return static_cast<std::size_t>(n); }

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// Smallest prime p and exponent k with p^k == n, if n is a prime power > 1.
std::optional<std::pair<Int, int>> prime_power(Int n) {
  if (n < 2) return std::nullopt;
  const auto primes = numth::PrimeSet::of(n);
  if (primes.size() != 1) return std::nullopt;
  const Int p = *primes.begin();
  return std::make_pair(p, numth::valuation(n, p));
}

}  // namespace

PermGroup trivial_group() {
  return PermGroup("trivial", 1, {});
}

PermGroup cyclic(Int n) {
  require(n >= 1, "cyclic: order must be positive");
  const std::string name = "cyclic:" + std::to_string(n);
  if (n == 1) return PermGroup(name, 1, {});
  std::vector<int> cycle(as_size(n));
  for (Int i = 0; i < n; ++i) cycle[as_size(i)] = static_cast<int>(i + 1);
  return PermGroup(name, as_size(n), {Perm::from_cycles(as_size(n), {cycle})});
}

PermGroup dihedral(Int order) {
  require(order >= 2 && order % 2 == 0, "dihedral: order must be even and at least 2");
  const std::string name = "dihedral:" + std::to_string(order);
  const Int n = order / 2;
  if (n == 1) return PermGroup(name, 2, {Perm::from_cycles(2, {{1, 2}})});
  if (n == 2) return PermGroup(name, 4, {Perm::from_cycles(4, {{1, 2}, {3, 4}}), Perm::from_cycles(4, {{1, 3}, {2, 4}})});
  std::vector<int> rotation(as_size(n)), reflection(as_size(n));
  for (Int i = 0; i < n; ++i) {
    rotation[as_size(i)] = static_cast<int>((i + 1) % n);
    reflection[as_size(i)] = static_cast<int>((n - i) % n);
  }
  return PermGroup(name, as_size(n), {Perm(rotation), Perm(reflection)});
}

PermGroup symmetric(Int n) {
  require(n >= 1, "sym: degree must be positive");
  const std::string name = "sym:" + std::to_string(n);
  if (n == 1) return PermGroup(name, 1, {});
  std::vector<int> cycle(as_size(n));
  for (Int i = 0; i < n; ++i) cycle[as_size(i)] = static_cast<int>(i + 1);
  return PermGroup(name, as_size(n), {Perm::from_cycles(as_size(n), {{1, 2}}), Perm::from_cycles(as_size(n), {cycle})});
}

PermGroup alternating(Int n) {
  require(n >= 1, "alt: degree must be positive");
  const std::string name = "alt:" + std::to_string(n);
  if (n <= 2) return PermGroup(name, as_size(n), {});
  std::vector<Perm> gens;
  for (int k = 3; k <= n; ++k) gens.push_back(Perm::from_cycles(as_size(n), {{1, 2, k}}));
  return PermGroup(name, as_size(n), std::move(gens));
}

PermGroup quaternion(Int order) {
  auto pp = prime_power(order);
  require(pp && pp->first == 2 && pp->second >= 3, "quaternion: order must be 2^k with k >= 3");
  // Regular representation on x^a y^b, index a + m*b, with y x y^-1 = x^-1 and y^2 = x^(m/2).
  const Int m = order / 2;
  auto product = [m](Int a, Int b, Int c, Int d) {
    Int e = numth::mod(a + (b == 0 ? c : -c), m);
    Int f = b + d;
    if (f == 2) {
      f = 0;
      e = numth::mod(e + m / 2, m);
    }
    return e + m * f;
  };
  std::vector<int> left_x(as_size(order)), left_y(as_size(order));
  for (Int c = 0; c < m; ++c)
    for (Int d = 0; d < 2; ++d) {
      left_x[as_size(c + m * d)] = static_cast<int>(product(1, 0, c, d));
      left_y[as_size(c + m * d)] = static_cast<int>(product(0, 1, c, d));
    }
  return PermGroup("quaternion:" + std::to_string(order), as_size(order), {Perm(left_x), Perm(left_y)});
}

PermGroup elementary_abelian(Int order) {
  auto pp = prime_power(order);
  require(order == 1 || pp.has_value(), "elementary: order must be a prime power");
  if (order == 1) return trivial_group();
  std::vector<PermGroup> factors;
  for (int i = 0; i < pp->second; ++i) factors.push_back(cyclic(pp->first));
  const PermGroup prod = direct_product(factors);
  std::vector<Perm> gens(prod.generators().begin(), prod.generators().end());
  return PermGroup("elementary:" + std::to_string(order), prod.degree(), std::move(gens));
}

PermGroup special_linear_2(Int p) {
  require(numth::is_prime(p), "sl2: field size must be prime");
  // Points: non-zero (a, b) in F_p^2, index a*p + b - 1.
  const Int points = p * p - 1;
  auto act = [p](Int m00, Int m01, Int m10, Int m11) {
    std::vector<int> img(as_size(p * p - 1));
    for (Int a = 0; a < p; ++a)
      for (Int b = 0; b < p; ++b) {
        if (a == 0 && b == 0) continue;
        const Int x = numth::mod(m00 * a + m01 * b, p), y = numth::mod(m10 * a + m11 * b, p);
        img[as_size(a * p + b - 1)] = static_cast<int>(x * p + y - 1);
      }
    return Perm(img);
  };
  return PermGroup("sl2:" + std::to_string(p), as_size(points), {act(1, 1, 0, 1), act(0, -1, 1, 0)});
}

PermGroup extraspecial(Int order) {
  auto pp = prime_power(order);
  require(pp && pp->second == 3 && pp->first % 2 == 1, "extraspecial: order must be p^3 for an odd prime p");
  const Int p = pp->first;
  // Unitriangular [[1,a,c],[0,1,b],[0,0,1]] acting on (x, y, z), index x + p y + p^2 z.
  auto act = [p](Int a, Int b, Int c) {
    std::vector<int> img(as_size(p * p * p));
    for (Int x = 0; x < p; ++x)
      for (Int y = 0; y < p; ++y)
        for (Int z = 0; z < p; ++z) {
          const Int nx = numth::mod(x + a * y + c * z, p), ny = numth::mod(y + b * z, p);
          img[as_size(x + p * y + p * p * z)] = static_cast<int>(nx + p * ny + p * p * z);
        }
    return Perm(img);
  };
  return PermGroup("extraspecial:" + std::to_string(order), as_size(order), {act(1, 0, 0), act(0, 1, 0)});
}

PermGroup direct_product(std::span<const PermGroup> factors) {
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree();
  std::vector<Perm> gens;
  std::string name = "product:";
  std::size_t shift = 0;
  bool first = true;
  for (const auto& f : factors) {
    name += (first ? "" : ",") + f.name();
    first = false;
    for (const Perm& g : f.generators()) {
      std::vector<int> img(degree);
      for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<int>(i);
      for (std::size_t i = 0; i < f.degree(); ++i) img[shift + i] = static_cast<int>(shift) + g[i];
      gens.emplace_back(std::move(img));
    }
    shift += f.degree();
  }
  if (degree == 0) return trivial_group();
  return PermGroup(name, degree, std::move(gens));
}

// ---------------------------------------------------------------- spec parsing

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

Int parse_int(const std::string& text, const std::string& spec) {
  Int value = 0;
  const auto t = trim(text);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw std::invalid_argument("group spec '" + spec + "': expected an integer, got '" + text + "'");
  return value;
}

// Splits on commas that are not nested inside () or [].
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
      continue;
    }
    cur += ch;
  }
  parts.push_back(trim(cur));
  return parts;
}

// "(1,2)(3,4,5)" -> cycles; "()" is the identity.
std::vector<std::vector<int>> parse_cycles(const std::string& text, const std::string& spec, int& max_point) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw std::invalid_argument("group spec '" + spec + "': malformed cycle near '" + text.substr(i) + "'");
    const auto close = text.find(')', i);
    if (close == std::string::npos) throw std::invalid_argument("group spec '" + spec + "': unterminated cycle");
    const std::string body = trim(text.substr(i + 1, close - i - 1));
    if (!body.empty()) {
      std::vector<int> cycle;
      for (const auto& tok : split_top_level(body)) {
        const Int pt = parse_int(tok, spec);
        if (pt < 1) throw std::invalid_argument("group spec '" + spec + "': points are numbered from 1");
        cycle.push_back(static_cast<int>(pt));
        max_point = std::max(max_point, static_cast<int>(pt));
      }
      cycles.push_back(std::move(cycle));
    }
    i = close + 1;
  }
  return cycles;
}

}  // namespace

PermGroup parse_group_spec(const std::string& raw, std::size_t element_bound) {
  const std::string spec = trim(raw);
  if (spec == "trivial") return trivial_group();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("group spec '" + spec + "': expected kind:argument");
  const std::string kind = spec.substr(0, colon);
  std::string arg = trim(spec.substr(colon + 1));

  auto bounded = [element_bound](PermGroup g) {
    if (static_cast<std::size_t>(g.order()) > element_bound)
      throw BoundExceeded("group " + g.name() + " has more than " + std::to_string(element_bound) + " elements");
    return g;
  };

  if (kind == "cyclic") return bounded(cyclic(parse_int(arg, spec)));
  if (kind == "dihedral") return bounded(dihedral(parse_int(arg, spec)));
  if (kind == "sym" || kind == "alt") {
    const Int n = parse_int(arg, spec);
    Int order = 1;
    for (Int i = 2; i <= n; ++i) {
      order *= i;
      if (static_cast<std::size_t>(order / (kind == "alt" ? 2 : 1)) > element_bound)
        throw BoundExceeded("group " + spec + " exceeds the element bound " + std::to_string(element_bound));
    }
    return kind == "sym" ? symmetric(n) : alternating(n);
  }
  if (kind == "quaternion") return bounded(quaternion(parse_int(arg, spec)));
  if (kind == "elementary") return bounded(elementary_abelian(parse_int(arg, spec)));
  if (kind == "sl2") return bounded(special_linear_2(parse_int(arg, spec)));
  if (kind == "extraspecial") return bounded(extraspecial(parse_int(arg, spec)));
  if (kind == "product") {
    std::vector<PermGroup> factors;
    for (auto part : split_top_level(arg)) {
      if (part.size() >= 2 && part.front() == '[' && part.back() == ']') part = part.substr(1, part.size() - 2);
      factors.push_back(parse_group_spec(part, element_bound));
    }
    return bounded(direct_product(factors));
  }
  if (kind == "perm") {
    if (arg.size() < 2 || arg.front() != '[' || arg.back() != ']')
      throw std::invalid_argument("group spec '" + spec + "': perm generators must be written [g1,g2,...]");
    const std::string body = trim(arg.substr(1, arg.size() - 2));
    int max_point = 1;
    std::vector<std::vector<std::vector<int>>> gens;
    if (!body.empty())
      for (const auto& g : split_top_level(body)) gens.push_back(parse_cycles(g, spec, max_point));
    std::vector<Perm> perms;
    for (const auto& cycles : gens) perms.push_back(Perm::from_cycles(static_cast<std::size_t>(max_point), cycles));
    return PermGroup(spec, static_cast<std::size_t>(max_point), std::move(perms), element_bound);
  }
  throw std::invalid_argument("group spec '" + spec + "': unknown kind '" + kind + "'");
}

}  // namespace feitlab
