// Character tables of permutation groups: common eigenvectors of the class
// multiplication matrices modulo a prime p = 1 (mod e), lifted to Q_e through
// eigenvalue multiplicities.
#include <algorithm>
#include <cstdint>
#include <optional>

#include "feitlab/chartab.hpp"
#include "feitlab/numth.hpp"

namespace feitlab {

namespace {

using Row = std::vector<Int>;
using Mat = std::vector<Row>;

struct Field {
  Int p;
  Int add(Int a, Int b) const { return (a + b) % p; }
  Int sub(Int a, Int b) const { return ((a - b) % p + p) % p; }
  Int mul(Int a, Int b) const { return static_cast<Int>((static_cast<__int128>(a) * b) % p); }
  Int pow(Int a, Int e) const {
    Int r = 1;
    a %= p;
    if (a < 0) a += p;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Int inv(Int a) const { return pow(a, p - 2); }
  Int norm(Int a) const { return ((a % p) + p) % p; }
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m, const Field& f) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Int s = f.inv(m[row][c]);
    for (auto& v : m[row]) v = f.mul(v, s);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Int k = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(k, m[row][j]));
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Basis (rows) of {x : a x = 0}.
Mat nullspace(Mat a, const Field& f) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  const auto pivots = rref(a, f);
  Mat basis;
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Row v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial via reduction to upper Hessenberg form; constant term first.
Row charpoly(Mat h, const Field& f) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (auto& row : h) std::swap(row[piv], row[m]);
    }
    const Int inv = f.inv(h[m][m - 1]);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (h[i][m - 1] == 0) continue;
      const Int u = f.mul(h[i][m - 1], inv);
      for (std::size_t j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(u, h[m][j]));
      for (std::size_t j = 0; j < n; ++j) h[j][m] = f.add(h[j][m], f.mul(u, h[j][i]));
    }
  }
  std::vector<Row> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    Row pk(k + 1, 0);
    const Row& prev = polys[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      pk[d + 1] = f.add(pk[d + 1], prev[d]);
      pk[d] = f.sub(pk[d], f.mul(h[k - 1][k - 1], prev[d]));
    }
    Int prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = f.mul(prod, h[i + 1][i]);
      if (prod == 0) break;
      const Int c = f.mul(h[i][k - 1], prod);
      const Row& q = polys[i];
      for (std::size_t d = 0; d < q.size(); ++d) pk[d] = f.sub(pk[d], f.mul(c, q[d]));
    }
    polys[k] = std::move(pk);
  }
  return polys[n];
}

Int eval(const Row& poly, Int x, const Field& f) {
  Int r = 0;
  for (std::size_t i = poly.size(); i-- > 0;) r = f.add(f.mul(r, x), poly[i]);
  return r;
}

Int primitive_root(const Field& f) {
  const auto primes = numth::PrimeSet::of(f.p - 1);
  for (Int g = 2; g < f.p; ++g) {
    bool ok = true;
    for (Int q : primes)
      if (f.pow(g, (f.p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;
}

struct Setup {
  const PermGroup& g;
  std::size_t r;
  std::vector<int> reps;
  std::vector<Int> sizes;
  std::vector<int> inverse_class;
};

// (A_j)_{ik} = #{x in C_j : x^-1 g_k in C_i}
Mat class_matrix(const Setup& s, std::size_t j, const Field& f) {
  Mat a(s.r, Row(s.r, 0));
  for (int x : s.g.classes()[j].elements) {
    const int xi = s.g.inv(x);
    for (std::size_t k = 0; k < s.r; ++k) {
      const int i = s.g.class_of(s.g.mul(xi, s.reps[k]));
      a[static_cast<std::size_t>(i)][k] += 1;
    }
  }
  for (auto& row : a)
    for (auto& v : row) v = f.norm(v);
  return a;
}

// Splits the whole space into common eigenspaces; nullopt if p misbehaves.
std::optional<Mat> split(const Setup& s, const Field& f) {
  std::vector<Mat> spaces;
  Mat whole(s.r, Row(s.r, 0));
  for (std::size_t i = 0; i < s.r; ++i) whole[i][i] = 1;
  spaces.push_back(std::move(whole));

  for (std::size_t j = 1; j < s.r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Mat& m) { return m.size() == 1; })) break;
    const Mat a = class_matrix(s, j, f);
    std::vector<Mat> next;
    for (auto& space : spaces) {
      if (space.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      const auto pivots = rref(space, f);
      const std::size_t d = space.size();
      // Images A_j b_m, then coordinates in the echelon basis.
      Mat images(d, Row(s.r, 0));
      for (std::size_t m = 0; m < d; ++m)
        for (std::size_t i = 0; i < s.r; ++i) {
          Int acc = 0;
          for (std::size_t k = 0; k < s.r; ++k)
            if (space[m][k] != 0) acc = f.add(acc, f.mul(a[i][k], space[m][k]));
          images[m][i] = acc;
        }
      Mat restricted(d, Row(d, 0));
      for (std::size_t l = 0; l < d; ++l)
        for (std::size_t m = 0; m < d; ++m) restricted[l][m] = images[m][pivots[l]];
      const Row poly = charpoly(restricted, f);
      std::size_t found = 0;
      for (Int lambda = 0; lambda < f.p && found < d; ++lambda) {
        if (eval(poly, lambda, f) != 0) continue;
        Mat shifted = restricted;
        for (std::size_t l = 0; l < d; ++l) shifted[l][l] = f.sub(shifted[l][l], lambda);
        const Mat coords = nullspace(shifted, f);
        Mat sub;
        for (const auto& c : coords) {
          Row v(s.r, 0);
          for (std::size_t m = 0; m < d; ++m)
            if (c[m] != 0)
              for (std::size_t k = 0; k < s.r; ++k) v[k] = f.add(v[k], f.mul(c[m], space[m][k]));
          sub.push_back(std::move(v));
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != d) return std::nullopt;
    }
    spaces = std::move(next);
  }
  Mat vectors;
  for (auto& space : spaces) {
    if (space.size() != 1) return std::nullopt;
    vectors.push_back(std::move(space[0]));
  }
  return vectors;
}

std::optional<std::vector<std::vector<Cyclotomic>>> lift(const Setup& s, const Mat& vectors, const Field& f, Int e) {
  const Int z = f.pow(primitive_root(f), (f.p - 1) / e);
  const Int order = s.g.order();
  std::vector<std::vector<Cyclotomic>> rows;
  for (Row w : vectors) {
    if (w[0] == 0) return std::nullopt;
    const Int s0 = f.inv(w[0]);
    for (auto& v : w) v = f.mul(v, s0);
    Int sum = 0;
    for (std::size_t k = 0; k < s.r; ++k)
      sum = f.add(sum, f.mul(f.mul(w[k], w[static_cast<std::size_t>(s.inverse_class[k])]), f.inv(s.sizes[k])));
    if (sum == 0) return std::nullopt;
    const Int deg_sq = f.mul(f.norm(order), f.inv(sum));
    Int deg = 0;
    for (Int d = 1; d * d <= order; ++d)
      if (f.norm(d * d) == deg_sq) deg = d;
    if (deg == 0) return std::nullopt;

    Row chi_p(s.r);
    for (std::size_t k = 0; k < s.r; ++k) chi_p[k] = f.mul(f.mul(w[k], deg), f.inv(s.sizes[k]));

    std::vector<Cyclotomic> row;
    for (std::size_t c = 0; c < s.r; ++c) {
      const Int t = s.g.classes()[c].element_order;
      const Int step = e / t;
      std::vector<Int> powers(static_cast<std::size_t>(t));
      for (Int a = 0; a < t; ++a)
        powers[static_cast<std::size_t>(a)] = chi_p[static_cast<std::size_t>(s.g.class_of(s.g.pow(s.reps[c], a)))];
      const Int tinv = f.inv(t);
      std::vector<std::pair<Int, Rational>> terms;
      for (Int j = 0; j < t; ++j) {
        Int acc = 0;
        for (Int a = 0; a < t; ++a) {
          const Int expo = numth::mod(-j * a * step, e);
          acc = f.add(acc, f.mul(powers[static_cast<std::size_t>(a)], f.pow(z, expo)));
        }
        const Int mult = f.mul(acc, tinv);
        if (mult > deg) return std::nullopt;
        if (mult != 0) terms.emplace_back(j * step, Rational(mult));
      }
      row.push_back(Cyclotomic::from_terms(e, terms));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool is_trivial_row(const std::vector<Cyclotomic>& row) {
  return std::all_of(row.begin(), row.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
}

void sort_rows(std::vector<std::vector<Cyclotomic>>& rows) {
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    const bool ta = is_trivial_row(a), tb = is_trivial_row(b);
    if (ta != tb) return ta;
    const Rational da = a[0].to_rational(), db = b[0].to_rational();
    if (da != db) return da < db;
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end()) < 0;
  });
}

}  // namespace

CharacterTable compute_table(const PermGroup& group, std::size_t bound) {
  if (static_cast<std::size_t>(group.order()) > bound)
    throw BoundExceeded("compute_table: |G| = " + std::to_string(group.order()) + " exceeds the bound " +
                        std::to_string(bound));
  const Int e = group.exponent();
  const auto classes = group.classes();
  const std::size_t r = classes.size();

  std::vector<ClassData> class_data;
  const auto primes = numth::PrimeSet::of(e);
  std::map<Int, std::vector<int>> maps;
  for (Int p : primes) maps[p] = group.class_power_map(p);
  for (std::size_t c = 0; c < r; ++c) {
    ClassData d;
    d.rep_order = classes[c].element_order;
    d.size = classes[c].size;
    for (Int p : primes) d.powermap[p] = maps[p][c];
    class_data.push_back(std::move(d));
  }

  std::vector<std::vector<Cyclotomic>> rows;
  if (group.is_abelian()) {
    for (const auto& lc : linear_characters(group.whole())) {
      std::vector<Cyclotomic> row;
      for (const auto& cls : classes) row.push_back(lc.value(cls.representative).to_cyclotomic().at_level(e));
      rows.push_back(std::move(row));
    }
  } else {
    Setup s{group, r, {}, {}, {}};
    for (const auto& cls : classes) {
      s.reps.push_back(cls.representative);
      s.sizes.push_back(cls.size);
      s.inverse_class.push_back(group.class_of(group.inv(cls.representative)));
    }
    Int p = e + 1;
    for (int attempt = 0;; p += e) {
      if (p <= group.order() || !numth::is_prime(p)) continue;
      const Field f{p};
      auto vectors = split(s, f);
      if (vectors) {
        auto lifted = lift(s, *vectors, f, e);
        if (lifted) {
          rows = std::move(*lifted);
          break;
        }
      }
      if (++attempt > 50) throw std::runtime_error("compute_table: no usable prime found for " + group.name());
    }
  }
  sort_rows(rows);
  return CharacterTable(group.name(), group.order(), e, std::move(class_data), std::move(rows));
}

}  // namespace feitlab
