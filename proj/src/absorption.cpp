#include "hopfchain/absorption.hpp"

#include "hopfchain/chain.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace hopfchain {

Rational QuasisymFunction::evaluate_constant(const Rational& x, int count) const {
  Rational s = 0;
  for (const auto& [alpha, c] : coeffs)
    s += c * Rational(binomial(count, static_cast<long>(alpha.size())));
  return s * rational_pow(x, degree);
}

bool CharacterSpec::contains(const Element& b) const {
  return std::all_of(b.g.begin(), b.g.end(), [this](GenId c) { return C.count(c) > 0; });
}

QuasisymFunction chromatic_quasisym(const HopfInstance& h, const Element& b, const CharacterSpec& spec) {
  QuasisymFunction chi;
  chi.degree = b.degree();
  const Rational inv = 1 / rescale_element(h, b);
  for (int k = 1; k <= chi.degree; ++k) {
    for (const auto& [t, c] : reduced_coproduct_iterated(h, b, k)) {
      if (!std::all_of(t.begin(), t.end(), [&spec](const Element& e) { return spec.contains(e); }))
        continue;
      Composition alpha;
      Rational w = c * inv;
      for (const Element& e : t) {
        alpha.push_back(e.degree());
        w *= rescale_element(h, e);
      }
      chi.coeffs[alpha] += w;
    }
  }
  for (auto it = chi.coeffs.begin(); it != chi.coeffs.end();) {
    if (it->second == 0) {
      it = chi.coeffs.erase(it);
    } else {
      ++it;
    }
  }
  return chi;
}

Rational absorption_probability(const HopfInstance& h, const Element& b, int a, const CharacterSpec& spec) {
  if (a < 1) fail(ErrorCode::invalid_input, "a must be at least 1");
  return chromatic_quasisym(h, b, spec).evaluate_constant(make_rational(1, a), a);
}

Rational target_mass(const HopfInstance& h, const Element& b, int a, const CharacterSpec& spec) {
  Rational s = 0;
  for (const auto& [b2, p] : transition_row(h, b, a))
    if (spec.contains(b2)) s += p;
  return s;
}

namespace {

IntPoly poly_mul(const IntPoly& x, const IntPoly& y) {
  IntPoly z(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) z[i + j] += x[i] * y[j];
  return z;
}

IntPoly poly_sub(IntPoly x, const IntPoly& y) {
  if (x.size() < y.size()) x.resize(y.size(), 0);
  for (std::size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
  while (x.size() > 1 && x.back() == 0) x.pop_back();
  return x;
}

// Vertices sorted by degree and neighbour degrees; a cheap key that is the
// same for many isomorphic graphs.
std::pair<int, std::uint64_t> refined_key(const Graph& g) {
  std::vector<std::pair<std::vector<int>, int>> sig;
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> s{std::popcount(g.adj[v])};
    std::vector<int> nb;
    for (int u = 0; u < g.n; ++u)
      if (g.has_edge(u, v)) nb.push_back(std::popcount(g.adj[u]));
    std::sort(nb.begin(), nb.end());
    s.insert(s.end(), nb.begin(), nb.end());
    sig.emplace_back(std::move(s), v);
  }
  std::sort(sig.begin(), sig.end());
  std::vector<int> perm(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) perm[sig[i].second] = i;
  return {g.n, adjacency_key(relabel(g, perm))};
}

Graph contract(const Graph& g, int u, int v) {
  // merge v into u, then drop v
  Graph m(g.n - 1);
  auto idx = [v](int x) { return x < v ? x : x - 1; };
  for (int x = 0; x < g.n; ++x)
    for (int y = x + 1; y < g.n; ++y) {
      if (!g.has_edge(x, y)) continue;
      int a = x == v ? u : x, b = y == v ? u : y;
      if (a == b) continue;
      if (!m.has_edge(idx(a), idx(b))) m.add_edge(idx(a), idx(b));
    }
  return m;
}

IntPoly chromatic_rec(const Graph& g, std::map<std::pair<int, std::uint64_t>, IntPoly>& memo) {
  const int e = g.edge_count();
  if (e == 0) {
    IntPoly p(static_cast<std::size_t>(g.n) + 1, 0);
    p[g.n] = 1;
    return p;
  }
  auto key = refined_key(g);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  IntPoly result;
  auto comps = connected_components(g);
  if (comps.size() > 1) {
    result = IntPoly{1};
    for (std::uint32_t c : comps) result = poly_mul(result, chromatic_rec(induced_subgraph(g, c), memo));
  } else if (e == g.n - 1) {
    // tree: x (x-1)^(n-1)
    result = IntPoly{0, 1};
    for (int i = 1; i < g.n; ++i) result = poly_mul(result, IntPoly{-1, 1});
  } else if (e == g.n * (g.n - 1) / 2) {
    result = IntPoly{1};
    for (int i = 0; i < g.n; ++i) result = poly_mul(result, IntPoly{-i, 1});
  } else {
    int u = 0, v = 0;
    for (int x = 0; x < g.n && !v; ++x)
      for (int y = x + 1; y < g.n; ++y)
        if (g.has_edge(x, y)) {
          u = x;
          v = y;
          break;
        }
    Graph del = g;
    del.adj[u] &= ~(1u << v);
    del.adj[v] &= ~(1u << u);
    result = poly_sub(chromatic_rec(del, memo), chromatic_rec(contract(g, u, v), memo));
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

IntPoly chromatic_polynomial(const Graph& g) {
  if (g.n > kChromaticCap)
    fail(ErrorCode::unsupported_size, "chromatic polynomial is capped at " + std::to_string(kChromaticCap) +
                                          " vertices, got " + std::to_string(g.n));
  std::map<std::pair<int, std::uint64_t>, IntPoly> memo;
  return chromatic_rec(g, memo);
}

Integer evaluate(const IntPoly& p, const Integer& x) {
  Integer s = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * x + *it;
  return s;
}

Integer count_proper_colorings(const Graph& g, int colors) {
  if (g.n > 8) fail(ErrorCode::unsupported_size, "brute-force colouring is capped at 8 vertices");
  std::vector<int> col(static_cast<std::size_t>(g.n), 0);
  Integer count = 0;
  if (colors <= 0) return g.n == 0 ? 1 : 0;
  while (true) {
    bool proper = true;
    for (int u = 0; u < g.n && proper; ++u)
      for (int v = u + 1; v < g.n; ++v)
        if (g.has_edge(u, v) && col[u] == col[v]) {
          proper = false;
          break;
        }
    if (proper) ++count;
    int i = 0;
    while (i < g.n && ++col[i] == colors) col[i++] = 0;
    if (i == g.n) break;
  }
  return count;
}

Rational simplex_absorption(const Complex& c, int k) {
  if (k < 0) fail(ErrorCode::invalid_input, "negative step count");
  Graph g = one_skeleton(c);
  Integer x = integer_pow(2, static_cast<unsigned long>(k));
  Integer denom = integer_pow(2, static_cast<unsigned long>(k) * static_cast<unsigned long>(c.n));
  return make_rational(evaluate(chromatic_polynomial(g), x), denom);
}

}  // namespace hopfchain
