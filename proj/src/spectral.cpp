#include "hopfchain/spectral.hpp"

#include "hopfchain/instances.hpp"
#include "hopfchain/lyndon.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace hopfchain {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix invert(Matrix m) {
  const std::size_t n = m.size();
  Matrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) fail(ErrorCode::internal_inconsistency, "singular duality system");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Vec to_chain_left(const HopfInstance& h, const Element& b, const Vec& g) {
  Rational inv = 1 / rescale_element(h, b);
  Vec out;
  for (const auto& [b2, c] : g) out.add(b2, c * rescale_element(h, b2) * inv);
  return out;
}

Vec to_chain_right(const HopfInstance& h, const Element& b, const Vec& f) {
  Rational phi = rescale_element(h, b);
  Vec out;
  for (const auto& [b2, c] : f) out.add(b2, c * phi / rescale_element(h, b2));
  return out;
}

Vec raw_left(const HopfInstance& h, const Element& b) {
  if (h.kind() == Kind::polynomial) {
    Vec g(Element{}, 1);
    for (GenId c : b.g) g = product(h, g, h.eulerian_of(c));
    return g;
  }
  auto image = [&h](GenId c) { return h.eulerian_of(c); };
  auto mul = [&h](const Vec& x, const Vec& y) { return product(h, x, y); };
  return sym_with(b.g, image, mul);
}

// ---- polynomial right eigenvectors ----

void single_generator_tuples(const HopfInstance& h, const Element& b2, int l, std::size_t i,
                             std::vector<std::vector<GenId>>& slots, const Rational& coef,
                             std::map<Element, Rational>& acc) {
  if (i == b2.g.size()) {
    std::vector<GenId> gens;
    for (const auto& s : slots) {
      if (s.size() != 1) return;
      gens.push_back(s[0]);
    }
    acc[make_monomial(std::move(gens))] += coef;
    return;
  }
  for (const auto& [t, c] : h.iterated_coproduct_of(b2.g[i], l)) {
    bool ok = true;
    for (std::size_t s = 0; s < t.size() && ok; ++s)
      if (slots[s].size() + t[s].g.size() > 1) ok = false;
    if (!ok) continue;
    for (std::size_t s = 0; s < t.size(); ++s)
      slots[s].insert(slots[s].end(), t[s].g.begin(), t[s].g.end());
    single_generator_tuples(h, b2, l, i + 1, slots, coef * c, acc);
    for (std::size_t s = 0; s < t.size(); ++s) slots[s].resize(slots[s].size() - t[s].g.size());
  }
}

std::map<Element, Vec> polynomial_right(const HopfInstance& h, const std::vector<Element>& basis) {
  std::map<Element, Vec> f;
  const int n = basis.empty() ? 0 : basis.front().degree();
  for (const Element& b2 : basis) {
    for (int l = 1; l <= n; ++l) {
      std::map<Element, Rational> acc;
      std::vector<std::vector<GenId>> slots(static_cast<std::size_t>(l));
      single_generator_tuples(h, b2, l, 0, slots, Rational(1), acc);
      Rational scale = 1 / Rational(factorial(l));
      for (const auto& [b, c] : acc) f[b].add(b2, c * scale);
    }
  }
  return f;
}

// ---- free right eigenvectors, through the dual algebra ----

class DualAlgebra {
 public:
  explicit DualAlgebra(const HopfInstance& h) : h_(h) {}

  // (x* y*)(z) = [x ⊗ y] Δ(z)
  Vec mul(const Vec& x, const Vec& y) {
    Vec out;
    std::set<Grading> gx, gy;
    for (const auto& [u, cu] : x) gx.insert(h_.grading(u));
    for (const auto& [v, cv] : y) gy.insert(h_.grading(v));
    for (const Grading& a : gx)
      for (const Grading& b : gy) prepare(a, b);
    for (const auto& [u, cu] : x) {
      for (const auto& [v, cv] : y) {
        auto it = table_.find({u, v});
        if (it == table_.end()) continue;
        for (const auto& [z, c] : it->second) out.add(z, cu * cv * c);
      }
    }
    return out;
  }

  // Dual Eulerian idempotent on w*: deconcatenations into nonempty pieces.
  Vec eulerian(const Element& w) {
    Vec out;
    const std::size_t len = w.g.size();
    for (std::uint32_t cuts = 0; cuts < (1u << (len - 1)); ++cuts) {
      std::vector<Element> pieces;
      std::size_t start = 0;
      for (std::size_t i = 1; i <= len; ++i) {
        if (i == len || ((cuts >> (i - 1)) & 1u)) {
          pieces.emplace_back(std::vector<GenId>(w.g.begin() + static_cast<long>(start),
                                                 w.g.begin() + static_cast<long>(i)));
          start = i;
        }
      }
      const int a = static_cast<int>(pieces.size());
      Vec term(pieces[0], 1);
      for (std::size_t i = 1; i < pieces.size(); ++i) term = mul(term, Vec(pieces[i], 1));
      out += make_rational(a % 2 == 1 ? 1 : -1, a) * term;
    }
    return out;
  }

  // f_L for every Lyndon word L of the grading.
  const std::map<Element, Vec>& lyndon_duals(const Grading& g) {
    auto it = lyndon_.find(g);
    if (it != lyndon_.end()) return it->second;
    std::vector<Element> lyn;
    for (const Element& b : h_.basis_of_grading(g))
      if (is_lyndon(b.g)) lyn.push_back(b);
    std::map<Element, Vec> out;
    if (!lyn.empty()) {
      const std::size_t m = lyn.size();
      // P(M, l') = [l'] g_M
      Matrix pt(m, std::vector<Rational>(m, 0));
      for (std::size_t i = 0; i < m; ++i) {
        Vec gm = raw_left(h_, lyn[i]);
        for (std::size_t j = 0; j < m; ++j) pt[j][i] = gm.coeff(lyn[j]);
      }
      Matrix c = invert(pt);
      std::vector<Vec> es;
      for (const Element& l : lyn) es.push_back(eulerian(l));
      for (std::size_t i = 0; i < m; ++i) {
        Vec f;
        for (std::size_t j = 0; j < m; ++j)
          if (c[i][j] != 0) f += c[i][j] * es[j];
        out.emplace(lyn[i], std::move(f));
      }
    }
    return lyndon_.emplace(g, std::move(out)).first->second;
  }

  Vec right(const Element& b) {
    std::vector<Word> factors = lyndon_factorize(b.g);
    Vec f;
    std::map<Word, int> mult;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      Element fe(factors[i]);
      ++mult[factors[i]];
      const Vec& fl = lyndon_duals(h_.grading(fe)).at(fe);
      f = i == 0 ? fl : mul(f, fl);
    }
    Integer norm = factorial(static_cast<long>(factors.size()));
    for (const auto& [w, m] : mult) norm *= factorial(m);
    f *= Rational(1) / Rational(norm);
    return f;
  }

 private:
  void prepare(const Grading& gx, const Grading& gy) {
    Grading g = gx;
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += gy[i];
    if (!built_.insert(g).second) return;
    for (const Element& z : h_.basis_of_grading(g)) {
      for (const auto& [t, c] : coproduct_iterated(h_, z, 2)) {
        if (t[0].empty() || t[1].empty()) continue;
        table_[{t[0], t[1]}].emplace_back(z, c);
      }
    }
  }

  const HopfInstance& h_;
  std::set<Grading> built_;
  std::map<std::pair<Element, Element>, std::vector<std::pair<Element, Rational>>> table_;
  std::map<Grading, std::map<Element, Vec>> lyndon_;
};

bool fits(const Integer& x, int bits) { return mpz_sizeinbase(x.get_mpz_t(), 2) <= static_cast<std::size_t>(bits); }

Integer lcm_of_denominators(const std::vector<const Rational*>& xs) {
  Integer d = 1;
  for (const Rational* x : xs) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x->get_den_mpz_t());
  return d;
}

struct IntMatrix {
  bool ok = false;
  Integer den;
  std::vector<std::vector<std::pair<std::size_t, long long>>> rows;
  std::vector<std::vector<std::pair<std::size_t, long long>>> cols;
};

IntMatrix integer_matrix(const TransitionMatrix& k) {
  IntMatrix m;
  std::vector<const Rational*> all;
  for (const auto& row : k.rows)
    for (const auto& e : row) all.push_back(&e.second);
  m.den = lcm_of_denominators(all);
  if (!fits(m.den, 40)) return m;
  m.rows.resize(k.size());
  m.cols.resize(k.size());
  for (std::size_t i = 0; i < k.size(); ++i)
    for (const auto& [j, v] : k.rows[i]) {
      Integer x = v.get_num() * (m.den / v.get_den());
      if (!fits(x, 40)) return m;
      m.rows[i].emplace_back(j, x.get_si());
      m.cols[j].emplace_back(i, x.get_si());
    }
  m.ok = true;
  return m;
}

// v as integers over a common denominator, or empty if too large.
std::optional<std::vector<long long>> integer_vector(const std::vector<Rational>& v) {
  std::vector<const Rational*> all;
  for (const Rational& x : v) all.push_back(&x);
  Integer den = lcm_of_denominators(all);
  std::vector<long long> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Integer x = v[i].get_num() * (den / v[i].get_den());
    if (!fits(x, 50)) return std::nullopt;
    out[i] = x.get_si();
  }
  return out;
}

using Wide = __int128;

bool check_vector(const TransitionMatrix& k, const IntMatrix& km, const std::vector<Rational>& v,
                  Side side, const Rational& beta) {
  const std::size_t n = k.size();
  if (km.ok && fits(beta.get_num(), 20) && fits(beta.get_den(), 20)) {
    if (auto iv = integer_vector(v)) {
      const Wide p = beta.get_num().get_si(), q = beta.get_den().get_si();
      const Wide d = km.den.get_si();
      const auto& lines = side == Side::left ? km.cols : km.rows;
      for (std::size_t j = 0; j < n; ++j) {
        Wide s = 0;
        for (const auto& [i, x] : lines[j]) s += static_cast<Wide>((*iv)[i]) * x;
        if (q * s != p * d * (*iv)[j]) return false;
      }
      return true;
    }
  }
  std::vector<Rational> out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [j, x] : k.rows[i]) {
      if (side == Side::left) {
        out[j] += v[i] * x;
      } else {
        out[i] += x * v[j];
      }
    }
  for (std::size_t j = 0; j < n; ++j)
    if (out[j] != beta * v[j]) return false;
  return true;
}

void count_matrices(const std::vector<int>& lambda, std::size_t j, std::map<int, int>& remaining,
                    std::vector<std::map<int, int>>& chosen,
                    const std::function<void(const std::vector<std::map<int, int>>&)>& visit) {
  if (j == lambda.size()) {
    for (const auto& [s, m] : remaining)
      if (m) return;
    visit(chosen);
    return;
  }
  // pick a multiset of remaining parts summing to lambda[j]
  std::vector<int> sizes;
  for (const auto& [s, m] : remaining)
    if (m) sizes.push_back(s);
  std::map<int, int> pick;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (left == 0) {
      chosen.push_back(pick);
      for (const auto& [s, m] : pick) remaining[s] -= m;
      count_matrices(lambda, j + 1, remaining, chosen, visit);
      for (const auto& [s, m] : pick) remaining[s] += m;
      chosen.pop_back();
      return;
    }
    if (idx == sizes.size()) return;
    int s = sizes[idx];
    for (int m = 0; m <= remaining[s] && m * s <= left; ++m) {
      if (m) pick[s] = m;
      rec(idx + 1, left - m * s);
    }
    pick.erase(s);
  };
  rec(0, lambda[j]);
}

int total(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

}  // namespace

int eigen_exponent(const HopfInstance& h, const Element& b) {
  if (b.empty()) return 0;
  if (h.kind() == Kind::polynomial) return b.length();
  return static_cast<int>(lyndon_factorize(b.g).size());
}

std::vector<EigenVector> left_eigenbasis(const HopfInstance& h, int n) {
  std::vector<EigenVector> out;
  for (const Element& b : h.basis(n)) {
    EigenVector v;
    v.side = Side::left;
    v.index = b;
    v.exponent = eigen_exponent(h, b);
    v.coeffs = to_chain_left(h, b, raw_left(h, b));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<EigenVector> right_eigenbasis(const HopfInstance& h, int n) {
  std::vector<Element> basis = h.basis(n);
  std::vector<EigenVector> out;
  if (h.kind() == Kind::polynomial) {
    std::map<Element, Vec> f = polynomial_right(h, basis);
    for (const Element& b : basis) {
      EigenVector v;
      v.side = Side::right;
      v.index = b;
      v.exponent = eigen_exponent(h, b);
      v.coeffs = to_chain_right(h, b, f[b]);
      out.push_back(std::move(v));
    }
    return out;
  }
  if (!h.cocommutative()) fail(ErrorCode::not_supported, h.name() + ": no eigenbasis for this kind");
  DualAlgebra dual(h);
  for (const Element& b : basis) {
    EigenVector v;
    v.side = Side::right;
    v.index = b;
    v.exponent = eigen_exponent(h, b);
    v.coeffs = to_chain_right(h, b, dual.right(b));
    out.push_back(std::move(v));
  }
  return out;
}

EigenSystem eigensystem(const HopfInstance& h, int n) {
  EigenSystem sys;
  sys.n = n;
  sys.basis = h.basis(n);
  sys.left = left_eigenbasis(h, n);
  sys.right = right_eigenbasis(h, n);
  return sys;
}

namespace {

// Each vector scaled to integers: dense entries and the common denominator.
struct ScaledRows {
  bool ok = true;
  std::vector<std::vector<long long>> rows;
  std::vector<Integer> den;
};

ScaledRows scale_rows(const std::vector<EigenVector>& vs, const std::map<Element, std::size_t>& index) {
  ScaledRows out;
  const std::size_t m = index.size();
  for (const EigenVector& v : vs) {
    std::vector<const Rational*> xs;
    for (const auto& [b, c] : v.coeffs) xs.push_back(&c);
    Integer d = lcm_of_denominators(xs);
    std::vector<long long> row(m, 0);
    for (const auto& [b, c] : v.coeffs) {
      Integer x = c.get_num() * (d / c.get_den());
      if (!fits(x, 50)) {
        out.ok = false;
        return out;
      }
      row[index.at(b)] = x.get_si();
    }
    out.rows.push_back(std::move(row));
    out.den.push_back(d);
  }
  return out;
}

}  // namespace

std::vector<std::vector<Rational>> pairing_matrix(const EigenSystem& sys) {
  const std::size_t m = sys.basis.size();
  std::map<Element, std::size_t> index;
  for (std::size_t k = 0; k < m; ++k) index.emplace(sys.basis[k], k);
  Matrix p(sys.right.size(), std::vector<Rational>(sys.left.size(), 0));
  ScaledRows f = scale_rows(sys.right, index), g = scale_rows(sys.left, index);
  if (f.ok && g.ok && m < (std::size_t{1} << 20)) {
    for (std::size_t i = 0; i < f.rows.size(); ++i)
      for (std::size_t j = 0; j < g.rows.size(); ++j) {
        __int128 acc = 0;
        const long long* x = f.rows[i].data();
        const long long* y = g.rows[j].data();
        for (std::size_t k = 0; k < m; ++k) acc += static_cast<__int128>(x[k]) * y[k];
        if (acc == 0) continue;
        bool neg = acc < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(acc) : static_cast<unsigned __int128>(acc);
        Integer num = static_cast<unsigned long>(u >> 64);
        num <<= 64;
        num += static_cast<unsigned long>(u & ~std::uint64_t{0});
        if (neg) num = -num;
        p[i][j] = make_rational(num, f.den[i] * g.den[j]);
      }
    return p;
  }
  // column k of the left vectors: (j, g_j(k))
  std::vector<std::vector<std::pair<std::size_t, const Rational*>>> gcols(m);
  for (std::size_t j = 0; j < sys.left.size(); ++j)
    for (const auto& [b, c] : sys.left[j].coeffs) gcols[index.at(b)].emplace_back(j, &c);
  for (std::size_t i = 0; i < sys.right.size(); ++i)
    for (const auto& [b, c] : sys.right[i].coeffs)
      for (const auto& [j, gv] : gcols[index.at(b)]) p[i][j] += c * *gv;
  return p;
}

bool duality_certificate(const EigenSystem& sys) {
  Matrix p = pairing_matrix(sys);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

EigenCheckReport eigen_equation_check(const TransitionMatrix& k, const EigenSystem& sys) {
  EigenCheckReport rep;
  if (k.basis != sys.basis) {
    rep.ok = false;
    rep.failures.push_back("matrix and eigensystem use different bases");
    return rep;
  }
  IntMatrix km = integer_matrix(k);
  auto dense = [&](const Vec& v) {
    std::vector<Rational> d(k.size(), 0);
    for (const auto& [b, c] : v) d[k.index.at(b)] = c;
    return d;
  };
  auto run = [&](const std::vector<EigenVector>& vs) {
    for (const EigenVector& v : vs) {
      Rational beta = rational_pow(Rational(k.a), v.exponent - k.n);
      if (!check_vector(k, km, dense(v.coeffs), v.side, beta)) {
        rep.ok = false;
        rep.failures.push_back(std::string(v.side == Side::left ? "g" : "f") + " at index " +
                               std::to_string(k.index.at(v.index)));
      }
    }
  };
  run(sys.left);
  run(sys.right);
  return rep;
}

namespace {

using Series = std::map<std::pair<std::vector<int>, int>, Integer>;

std::map<int, Integer> extract(const std::vector<int>& target,
                               const std::vector<std::pair<std::vector<int>, Integer>>& gens) {
  Series s;
  s[{std::vector<int>(target.size(), 0), 0}] = 1;
  for (const auto& [gamma, d] : gens) {
    if (d == 0) continue;
    Series next;
    for (const auto& [key, coef] : s) {
      const auto& [x, y] = key;
      // (1 - y x^γ)^(-d) = Σ_m C(d+m-1, m) y^m x^(mγ)
      for (int m = 0;; ++m) {
        std::vector<int> xm = x;
        bool ok = true;
        for (std::size_t i = 0; i < xm.size(); ++i) {
          xm[i] += m * gamma[i];
          if (xm[i] > target[i]) ok = false;
        }
        if (!ok) break;
        Integer c;
        mpz_bin_ui(c.get_mpz_t(), Integer(d + m - 1).get_mpz_t(), static_cast<unsigned long>(m));
        next[{xm, y + m}] += coef * c;
      }
    }
    s = std::move(next);
  }
  std::map<int, Integer> out;
  for (const auto& [key, coef] : s)
    if (key.first == target && coef != 0) out[key.second] = coef;
  return out;
}

// All nonzero vectors componentwise below `top`.
std::vector<std::vector<int>> sub_vectors(const std::vector<int>& top) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(top.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == top.size()) {
      if (std::any_of(cur.begin(), cur.end(), [](int x) { return x; })) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= top[i]; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  return out;
}

}  // namespace

Integer lyndon_count(const std::vector<int>& counts) {
  int m = std::accumulate(counts.begin(), counts.end(), 0);
  if (m == 0) return 0;
  int g = 0;
  for (int c : counts) g = std::gcd(g, c);
  auto mobius = [](int d) {
    int r = 1;
    for (int p = 2; p * p <= d; ++p) {
      if (d % p) continue;
      d /= p;
      if (d % p == 0) return 0;
      r = -r;
    }
    return d > 1 ? -r : r;
  };
  Integer sum = 0;
  for (int d = 1; d <= g; ++d) {
    if (g % d) continue;
    int mu = mobius(d);
    if (!mu) continue;
    Integer term = factorial(m / d);
    for (int c : counts) term /= factorial(c / d);
    sum += mu * term;
  }
  return sum / m;
}

std::map<int, Integer> multiplicities(const HopfInstance& h, int n) {
  h.check_degree(n);
  std::vector<std::pair<std::vector<int>, Integer>> gens;
  if (h.kind() == Kind::polynomial) {
    for (int i = 1; i <= n; ++i)
      gens.push_back({{i}, Integer(static_cast<unsigned long>(h.generators(i).size()))});
    return extract({n}, gens);
  }
  if (auto* deck = dynamic_cast<const FreeAssocInstance*>(&h)) {
    std::vector<int> target = deck->nu();
    if (target.empty() || std::accumulate(target.begin(), target.end(), 0) != n)
      fail(ErrorCode::invalid_input, "multiplicities need the deck composition");
    for (const auto& gamma : sub_vectors(target)) gens.push_back({gamma, lyndon_count(gamma)});
    return extract(target, gens);
  }
  for (int i = 1; i <= n; ++i) {
    Integer d = 0;
    for (const Element& b : h.basis(i))
      if (is_lyndon(b.g)) ++d;
    gens.push_back({{i}, d});
  }
  return extract({n}, gens);
}

std::map<int, Integer> multiplicities_direct(const HopfInstance& h, int n) {
  std::map<int, Integer> out;
  for (const Element& b : h.basis(n)) out[eigen_exponent(h, b)] += 1;
  return out;
}

Integer deck_multiplicity_lower_bound(const std::vector<int>& nu, int k) {
  Integer total_count = 0;
  for (const auto& gamma : sub_vectors(nu))
    if (std::accumulate(gamma.begin(), gamma.end(), 0) == k + 1) total_count += lyndon_count(gamma);
  return total_count;
}

Rational rock_f(const Partition& mu_in, const Partition& lambda_in) {
  Partition mu = sorted_partition(mu_in), lambda = sorted_partition(lambda_in);
  if (total(mu) != total(lambda)) fail(ErrorCode::invalid_input, "rock_f: sizes differ");
  std::map<int, int> remaining = part_multiplicities(mu);
  std::vector<std::map<int, int>> chosen;
  Rational sum = 0;
  count_matrices(lambda, 0, remaining, chosen, [&](const std::vector<std::map<int, int>>& blocks) {
    Rational term = 1;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      term *= Rational(factorial(lambda[j]));
      for (const auto& [s, m] : blocks[j]) term /= Rational(factorial(m));
    }
    sum += term;
  });
  for (int p : mu) sum /= Rational(factorial(p));
  return sum;
}

Rational rock_g(const Partition& lambda_in, const Partition& mu_in) {
  Partition mu = sorted_partition(mu_in), lambda = sorted_partition(lambda_in);
  if (total(mu) != total(lambda)) fail(ErrorCode::invalid_input, "rock_g: sizes differ");
  std::map<int, int> remaining = part_multiplicities(mu);
  std::vector<std::map<int, int>> chosen;
  Rational sum = 0;
  count_matrices(lambda, 0, remaining, chosen, [&](const std::vector<std::map<int, int>>& blocks) {
    Rational term = 1;
    for (const auto& block : blocks) {
      int len = 0;
      for (const auto& [s, m] : block) len += m;
      term *= Rational(factorial(len - 1));
      for (const auto& [s, m] : block) term /= Rational(factorial(m));
    }
    sum += term;
  });
  Rational pre = 1;
  for (int p : lambda) pre *= Rational(factorial(p));
  for (int p : mu) pre /= Rational(factorial(p));
  if ((mu.size() - lambda.size()) % 2) pre = -pre;
  return pre * sum;
}

QuasiStationary quasi_stationary(const TransitionMatrix& k, const EigenSystem& sys) {
  std::vector<std::size_t> absorbing;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k.at(i, i) == 1) absorbing.push_back(i);
  if (absorbing.size() != 1)
    fail(ErrorCode::not_applicable, "quasi-stationarity needs a unique absorbing state");
  const EigenVector* g1 = nullptr;
  const EigenVector* f1 = nullptr;
  int count = 0;
  for (std::size_t i = 0; i < sys.left.size(); ++i)
    if (sys.left[i].exponent == k.n - 1) {
      ++count;
      g1 = &sys.left[i];
      f1 = &sys.right[i];
    }
  if (count != 1)
    fail(ErrorCode::not_applicable,
         "second eigenvalue has multiplicity " + std::to_string(count) + ", expected 1");
  const Element& dead = k.basis[absorbing[0]];
  QuasiStationary q;
  Rational s1 = 0, s2 = 0;
  for (const auto& [b, c] : g1->coeffs) {
    if (b == dead) continue;
    s1 += c;
    s2 += c * f1->coeffs.coeff(b);
  }
  if (s1 == 0 || s2 == 0) fail(ErrorCode::not_applicable, "quasi-stationary weights sum to zero");
  for (const auto& [b, c] : g1->coeffs) {
    if (b == dead) continue;
    q.pi1[b] = c / s1;
    Rational w = c * f1->coeffs.coeff(b) / s2;
    if (w != 0) q.pi2[b] = w;
  }
  return q;
}

QuasiStationary quasi_stationary(const HopfInstance& h, int n) {
  return quasi_stationary(transition_matrix(h, n, 2), eigensystem(h, n));
}

}  // namespace hopfchain
