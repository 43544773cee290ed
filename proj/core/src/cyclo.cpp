#include "feitlab/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "feitlab/numth.hpp"

namespace feitlab {

namespace {

struct LevelData {
  Int level = 1;
  Int degree = 1;
  std::vector<Int> poly;  // Phi_level, degree + 1 coefficients
  std::vector<std::pair<Int, Int>> lower_terms;  // non-zero (j, poly[j]) for j < degree
};

std::recursive_mutex level_mutex;
std::map<Int, std::unique_ptr<LevelData>> level_cache;

// Exact division by a monic integer polynomial; the remainder must vanish.
std::vector<Int> divide_monic(std::vector<Int> num, const std::vector<Int>& den) {
  const std::size_t m = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("divide_monic: degree too small");
  std::vector<Int> quotient(num.size() - m, 0);
  for (std::size_t i = num.size() - 1; i + 1 > m; --i) {
    const Int c = num[i];
    quotient[i - m] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= m; ++j) num[i - m + j] -= c * den[j];
    if (i == m) break;
  }
  for (std::size_t j = 0; j < m; ++j)
    if (num[j] != 0) throw std::logic_error("divide_monic: non-zero remainder");
  return quotient;
}

const LevelData& level_data(Int e) {
  if (e < 1) throw std::invalid_argument("cyclotomic level must be positive, got " + std::to_string(e));
  std::lock_guard lock(level_mutex);
  if (auto it = level_cache.find(e); it != level_cache.end()) return *it->second;

  // x^e - 1 = prod_{d | e} Phi_d(x)
  std::vector<Int> poly(static_cast<std::size_t>(e) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(e)] = 1;
  for (Int d : numth::divisors(e)) {
    if (d == e) continue;
    poly = divide_monic(std::move(poly), level_data(d).poly);
  }
  auto data = std::make_unique<LevelData>();
  data->level = e;
  data->degree = static_cast<Int>(poly.size()) - 1;
  for (Int j = 0; j < data->degree; ++j)
    if (poly[static_cast<std::size_t>(j)] != 0) data->lower_terms.emplace_back(j, poly[static_cast<std::size_t>(j)]);
  data->poly = std::move(poly);
  if (data->degree != numth::totient(e)) throw std::logic_error("cyclotomic polynomial has wrong degree");
  auto& ref = *data;
  level_cache.emplace(e, std::move(data));
  return ref;
}

Int degree_of(Int e) {
  return level_data(e).degree;
}

}  // namespace

std::span<const Int> cyclotomic_polynomial(Int e) {
  return level_data(e).poly;
}

RootOfUnity::RootOfUnity(Int level_, Int exponent_) : level(level_), exponent(0) {
  if (level_ < 1) throw std::invalid_argument("RootOfUnity: level must be positive");
  exponent = numth::mod(exponent_, level_);
}

Int RootOfUnity::order() const {
  return level / numth::gcd(level, exponent);
}

RootOfUnity RootOfUnity::pow(Int m) const {
  // exponent * m may be large; reduce factors first.
  const Int e = numth::mod(exponent, level);
  const Int mm = numth::mod(m, level);
  return RootOfUnity(level, static_cast<Int>((static_cast<__int128>(e) * mm) % level));
}

Cyclotomic RootOfUnity::to_cyclotomic() const {
  return Cyclotomic::zeta(level, exponent);
}

bool RootOfUnity::operator==(const RootOfUnity& other) const {
  // Equal as complex numbers: exponent/level == other.exponent/other.level mod 1.
  return static_cast<__int128>(exponent) * other.level == static_cast<__int128>(other.exponent) * level;
}

Cyclotomic::Cyclotomic() : level_(1), coeffs_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(Int value) : level_(1), coeffs_(1, Rational(value)) {}

Cyclotomic::Cyclotomic(const Rational& value) : level_(1), coeffs_(1, value) {}

Cyclotomic::Cyclotomic(Int level, std::vector<Rational> coeffs) : level_(level), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::reduce(Int level, std::vector<Rational> dense) {
  const LevelData& data = level_data(level);
  const auto deg = static_cast<std::size_t>(data.degree);
  for (std::size_t i = dense.size(); i-- > deg;) {
    if (sgn(dense[i]) == 0) continue;
    const Rational c = dense[i];
    for (const auto& [j, pj] : data.lower_terms) dense[i - deg + static_cast<std::size_t>(j)] -= c * pj;
    dense[i] = 0;
  }
  dense.resize(deg);
  return Cyclotomic(level, std::move(dense));
}

Cyclotomic Cyclotomic::zeta(Int level, Int exponent) {
  std::vector<Rational> dense(static_cast<std::size_t>(level), Rational(0));
  dense[static_cast<std::size_t>(numth::mod(exponent, level))] = 1;
  return reduce(level, std::move(dense));
}

Cyclotomic Cyclotomic::from_terms(Int level, std::span<const std::pair<Int, Rational>> terms) {
  if (level < 1) throw std::invalid_argument("Cyclotomic::from_terms: level must be positive");
  std::vector<Rational> dense(static_cast<std::size_t>(level), Rational(0));
  for (const auto& [exp, c] : terms) dense[static_cast<std::size_t>(numth::mod(exp, level))] += c;
  return reduce(level, std::move(dense));
}

std::vector<std::pair<Int, Rational>> Cyclotomic::terms() const {
  std::vector<std::pair<Int, Rational>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) out.emplace_back(static_cast<Int>(i), coeffs_[i]);
  return out;
}

Cyclotomic Cyclotomic::at_level(Int L) const {
  if (L == level_) return *this;
  if (L < 1 || L % level_ != 0)
    throw std::invalid_argument("Cyclotomic::at_level: " + std::to_string(level_) + " does not divide " + std::to_string(L));
  const Int m = L / level_;
  std::vector<Rational> dense(static_cast<std::size_t>(L), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) dense[static_cast<std::size_t>(static_cast<Int>(i) * m)] = coeffs_[i];
  return reduce(L, std::move(dense));
}

std::optional<Cyclotomic> Cyclotomic::descend_to(Int e) const {
  if (e < 1 || level_ % e != 0)
    throw std::invalid_argument("Cyclotomic::descend_to: " + std::to_string(e) + " does not divide " + std::to_string(level_));
  if (e == level_) return *this;
  const auto rows = coeffs_.size();
  const auto cols = static_cast<std::size_t>(degree_of(e));
  // Columns: images of the level-e power basis; last column: this value.
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t j = 0; j < cols; ++j) {
    const Cyclotomic b = zeta(e, static_cast<Int>(j)).at_level(level_);
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = b.coeffs_[i];
  }
  for (std::size_t i = 0; i < rows; ++i) m[i][cols] = coeffs_[i];

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k <= cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(m[i][cols]) != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols];
  return Cyclotomic(e, std::move(x));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic " + to_string() + " is not rational");
  return coeffs_[0];
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (other.level_ != level_) {
    const Int L = numth::lcm(level_, other.level_);
    if (L != level_) *this = at_level(L);
    if (L != other.level_) return *this += other.at_level(L);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  if (other.level_ != level_) {
    const Int L = numth::lcm(level_, other.level_);
    if (L != level_) *this = at_level(L);
    if (L != other.level_) return *this -= other.at_level(L);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (other.is_rational() && level_ % other.level_ == 0) return *this *= other.coeffs_[0];
  if (is_rational() && other.level_ % level_ == 0) {
    const Rational q = coeffs_[0];
    *this = other;
    return *this *= q;
  }
  const Int L = numth::lcm(level_, other.level_);
  const Cyclotomic a = at_level(L);
  const Cyclotomic b = other.at_level(L);
  std::vector<Rational> dense(static_cast<std::size_t>(L), Rational(0));
  const auto Lu = static_cast<std::size_t>(L);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      dense[(i + j) % Lu] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  *this = reduce(L, std::move(dense));
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::times(const RootOfUnity& root) const {
  const Int L = numth::lcm(level_, root.level);
  const Int m = L / level_;
  const Int shift = root.exponent * (L / root.level);
  std::vector<Rational> dense(static_cast<std::size_t>(L), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) dense[static_cast<std::size_t>((static_cast<Int>(i) * m + shift) % L)] += coeffs_[i];
  return reduce(L, std::move(dense));
}

Cyclotomic Cyclotomic::pow(Int m) const {
  if (m < 0) throw std::invalid_argument("Cyclotomic::pow: negative exponent");
  Cyclotomic result = Cyclotomic(1).at_level(level_);
  Cyclotomic base = *this;
  while (m > 0) {
    if (m & 1) result *= base;
    m >>= 1;
    if (m > 0) base *= base;
  }
  return result;
}

Cyclotomic Cyclotomic::galois(Int k) const {
  const Int kk = numth::mod(k, level_);
  if (numth::gcd(kk, level_) != 1)
    throw std::invalid_argument("galois: " + std::to_string(k) + " is not a unit modulo " + std::to_string(level_));
  std::vector<Rational> dense(static_cast<std::size_t>(level_), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) dense[static_cast<std::size_t>((static_cast<Int>(i) * kk) % level_)] += coeffs_[i];
  return reduce(level_, std::move(dense));
}

Cyclotomic Cyclotomic::conj() const {
  return galois(-1);
}

Rational Cyclotomic::trace() const {
  std::vector<Rational> dense(static_cast<std::size_t>(level_), Rational(0));
  for (Int k = 0; k < level_; ++k) {
    if (numth::gcd(k, level_) != 1 && level_ != 1) continue;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (sgn(coeffs_[i]) != 0) dense[static_cast<std::size_t>((static_cast<Int>(i) * k) % level_)] += coeffs_[i];
  }
  return reduce(level_, std::move(dense)).to_rational();
}

std::optional<RootOfUnity> Cyclotomic::as_root_of_unity() const {
  if (is_zero()) return std::nullopt;
  if (!((*this) * conj() == Cyclotomic(1))) return std::nullopt;
  const Int L = level_;
  for (Int k = 0; k < L; ++k) {
    const Cyclotomic z = zeta(L, k);
    if (z.coeffs_ == coeffs_) return RootOfUnity(L, k);
    if (L % 2 == 1 && (-z).coeffs_ == coeffs_) return RootOfUnity(2 * L, 2 * k + L);
  }
  return std::nullopt;
}

std::string Cyclotomic::to_string() const {
  const auto ts = terms();
  if (ts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, c] : ts) {
    Rational mag = abs(c);
    const bool negative = sgn(c) < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (exp == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z" << level_;
    if (exp != 1) os << "^" << exp;
  }
  return os.str();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.level_ == b.level_) return a.coeffs_ == b.coeffs_;
  const Int L = numth::lcm(a.level_, b.level_);
  return a.at_level(L).coeffs_ == b.at_level(L).coeffs_;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  const Int L = numth::lcm(a.level_, b.level_);
  const Cyclotomic x = a.at_level(L), y = b.at_level(L);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    const int c = cmp(x.coeffs_[i], y.coeffs_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace feitlab
