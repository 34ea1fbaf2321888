#include "hopfchain/chain.hpp"

#include <algorithm>
#include <set>

namespace hopfchain {

Rational RescaleMap::of(const Element& b) const {
  Rational r = 1;
  for (GenId c : b.g) {
    auto it = phi.find(c);
    if (it == phi.end()) fail(ErrorCode::internal_inconsistency, "rescale map is missing a generator");
    r *= it->second;
  }
  return r;
}

Rational rescale_generator(const HopfInstance& h, GenId c) {
  auto& cache = h.rescale_cache();
  auto it = cache.find(c);
  if (it != cache.end()) return it->second;
  const int d = gen_degree(c);
  Rational phi = 1;
  if (d > 1) {
    for (const auto& [pair, coef] : h.coproduct_of(c))
      if (coef < 0)
        fail(ErrorCode::not_nonnegative,
             "coproduct of generator " + h.generator_label(c) + " has a negative coefficient");
    const Element self{c};
    Rational sum = 0;
    for (const auto& [b, coef] : h.hopf_power_of(c, 2))
      if (b != self) sum += rescale_element(h, b) * coef;
    if (sum == 0)
      fail(ErrorCode::no_markov_rescaling,
           "no Markov rescaling: generator " + h.generator_label(c) + " of degree " +
               std::to_string(d) + " is primitive, so its row of K_2 cannot sum to 1");
    sum /= Rational(integer_pow(2, static_cast<unsigned long>(d)));
    phi = sum / (1 - make_rational(1, 1) / Rational(integer_pow(2, static_cast<unsigned long>(d - 1))));
  }
  cache.emplace(c, phi);
  return phi;
}

Rational rescale_element(const HopfInstance& h, const Element& b) {
  Rational r = 1;
  for (GenId c : b.g) r *= rescale_generator(h, c);
  return r;
}

RescaleMap rescale(const HopfInstance& h, int max_degree) {
  h.check_degree(max_degree);
  RescaleMap m;
  for (int d = 1; d <= max_degree; ++d)
    for (GenId c : h.generators(d)) m.phi[c] = rescale_generator(h, c);
  return m;
}

Rational TransitionMatrix::at(std::size_t i, std::size_t j) const {
  const auto& row = rows.at(i);
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  return (it != row.end() && it->first == j) ? it->second : Rational(0);
}

std::vector<std::vector<Rational>> TransitionMatrix::dense() const {
  std::vector<std::vector<Rational>> d(size(), std::vector<Rational>(size(), 0));
  for (std::size_t i = 0; i < size(); ++i)
    for (const auto& [j, v] : rows[i]) d[i][j] = v;
  return d;
}

Vec transition_row(const HopfInstance& h, const Element& b, int a) {
  if (a < 1) fail(ErrorCode::invalid_input, "a must be at least 1");
  const int n = b.degree();
  h.check_degree(n);
  Rational scale = 1 / (rescale_element(h, b) * Rational(integer_pow(a, static_cast<unsigned long>(n))));
  Vec row;
  for (const auto& [b2, coef] : hopf_power(h, b, a)) {
    if (coef < 0)
      fail(ErrorCode::not_nonnegative, h.name() + ": negative coefficient in the power map of " +
                                           h.element_label(b));
    row.add(b2, coef * scale * rescale_element(h, b2));
  }
  return row;
}

namespace {

TransitionMatrix build(const HopfInstance& h, std::vector<Element> states, int a, int n) {
  TransitionMatrix k;
  k.n = n;
  k.a = a;
  k.basis = std::move(states);
  for (std::size_t i = 0; i < k.basis.size(); ++i) k.index.emplace(k.basis[i], i);
  k.rows.resize(k.basis.size());
  for (std::size_t i = 0; i < k.basis.size(); ++i) {
    auto& row = k.rows[i];
    for (const auto& [b2, v] : transition_row(h, k.basis[i], a)) {
      auto it = k.index.find(b2);
      if (it == k.index.end())
        fail(ErrorCode::internal_inconsistency,
             "row of " + h.element_label(k.basis[i]) + " leaves the state space at " + h.element_label(b2));
      row.emplace_back(it->second, v);
    }
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return k;
}

}  // namespace

TransitionMatrix transition_matrix(const HopfInstance& h, int n, int a) {
  return build(h, h.basis(n), a, n);
}

TransitionMatrix transition_matrix_on(const HopfInstance& h, std::vector<Element> states, int a) {
  int n = states.empty() ? 0 : states.front().degree();
  return build(h, std::move(states), a, n);
}

TransitionMatrix transpose(const TransitionMatrix& k) {
  TransitionMatrix t = k;
  t.direction = k.direction == Direction::inverse ? Direction::forward : Direction::inverse;
  for (auto& r : t.rows) r.clear();
  for (std::size_t i = 0; i < k.size(); ++i)
    for (const auto& [j, v] : k.rows[i]) t.rows[j].emplace_back(i, v);
  return t;
}

TransitionMatrix multiply(const TransitionMatrix& x, const TransitionMatrix& y) {
  if (x.basis != y.basis) fail(ErrorCode::invalid_input, "multiplying matrices on different bases");
  TransitionMatrix z = x;
  z.a = x.a * y.a;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [j, v] : x.rows[i])
      for (const auto& [l, w] : y.rows[j]) acc[l] += v * w;
    z.rows[i].clear();
    for (auto& [l, v] : acc)
      if (v != 0) z.rows[i].emplace_back(l, v);
  }
  return z;
}

bool same_entries(const TransitionMatrix& x, const TransitionMatrix& y) {
  return x.basis == y.basis && x.rows == y.rows;
}

bool is_row_stochastic(const TransitionMatrix& k) {
  for (const auto& row : k.rows) {
    Rational s = 0;
    for (const auto& [j, v] : row) {
      if (v < 0) return false;
      s += v;
    }
    if (s != 1) return false;
  }
  return true;
}

bool power_law_check(const HopfInstance& h, int n, int a, int b) {
  TransitionMatrix ka = transition_matrix(h, n, a);
  TransitionMatrix kb = transition_matrix(h, n, b);
  TransitionMatrix kab = transition_matrix(h, n, a * b);
  return same_entries(multiply(ka, kb), kab);
}

StationarySet stationary_set(const HopfInstance& h, int n) {
  StationarySet out;
  std::vector<Element> basis = h.basis(n);
  auto all_degree_one = [](const Element& b) {
    return std::all_of(b.g.begin(), b.g.end(), [](GenId c) { return gen_degree(c) == 1; });
  };
  if (h.kind() == Kind::polynomial) {
    for (const Element& b : basis)
      if (all_degree_one(b)) {
        out.absorbing.push_back(b);
        out.stationary.push_back(Distribution{{b, Rational(1)}});
      }
    return out;
  }
  std::map<std::vector<GenId>, std::vector<Element>> by_content;
  for (const Element& b : basis) {
    if (!all_degree_one(b)) continue;
    std::vector<GenId> content = b.g;
    std::sort(content.begin(), content.end());
    by_content[content].push_back(b);
    if (std::adjacent_find(b.g.begin(), b.g.end(), std::not_equal_to<>()) == b.g.end())
      out.absorbing.push_back(b);
  }
  for (const auto& [content, words] : by_content) {
    Distribution d;
    Rational p = make_rational(1, static_cast<long>(words.size()));
    for (const Element& w : words) d[w] = p;
    out.stationary.push_back(d);
  }
  return out;
}

Distribution evolve(const HopfInstance& h, const Element& start, int a, int steps) {
  Distribution d{{start, Rational(1)}};
  std::map<Element, Vec> rows;
  for (int s = 0; s < steps; ++s) {
    Distribution next;
    for (const auto& [b, p] : d) {
      auto it = rows.find(b);
      if (it == rows.end()) it = rows.emplace(b, transition_row(h, b, a)).first;
      for (const auto& [b2, v] : it->second) next[b2] += p * v;
    }
    d = std::move(next);
  }
  return d;
}

Distribution row_distribution(const TransitionMatrix& k, const Element& b) {
  auto it = k.index.find(b);
  if (it == k.index.end()) fail(ErrorCode::invalid_input, "state not in the matrix basis");
  Distribution d;
  for (const auto& [j, v] : k.rows[it->second]) d[k.basis[j]] = v;
  return d;
}

Distribution matrix_power_row(const TransitionMatrix& k, const Element& b, int steps) {
  auto it = k.index.find(b);
  if (it == k.index.end()) fail(ErrorCode::invalid_input, "state not in the matrix basis");
  std::vector<Rational> v(k.size(), 0);
  v[it->second] = 1;
  for (int s = 0; s < steps; ++s) {
    std::vector<Rational> w(k.size(), 0);
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (v[i] == 0) continue;
      for (const auto& [j, x] : k.rows[i]) w[j] += v[i] * x;
    }
    v = std::move(w);
  }
  Distribution d;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (v[i] != 0) d[k.basis[i]] = v[i];
  return d;
}

Distances distances(const Distribution& row, const Distribution& pi) {
  Distances out;
  std::set<Element> keys;
  for (const auto& [b, p] : row) keys.insert(b);
  for (const auto& [b, p] : pi) keys.insert(b);
  Rational total = 0;
  bool defined = true;
  Rational sep = 0, linf = 0;
  bool first = true;
  for (const Element& b : keys) {
    auto r = row.find(b);
    auto q = pi.find(b);
    Rational x = r == row.end() ? Rational(0) : r->second;
    Rational y = q == pi.end() ? Rational(0) : q->second;
    total += abs(x - y);
    if (y == 0) {
      if (x != 0) defined = false;
      continue;
    }
    Rational s = 1 - x / y, l = abs(x - y) / y;
    if (first || s > sep) sep = s;
    if (first || l > linf) linf = l;
    first = false;
  }
  out.tv = total / 2;
  if (defined && !first) {
    out.sep = sep;
    out.linf = linf;
  }
  return out;
}

Element sample_from_row(const Vec& row, Rng& rng) {
  if (row.empty()) fail(ErrorCode::invalid_input, "sampling from an empty row");
  Rational u(Integer(static_cast<unsigned long>(rng.next() >> 11)), Integer(1) << 53);
  u.canonicalize();
  Rational acc = 0;
  for (const auto& [b, p] : row) {
    acc += p;
    if (u < acc) return b;
  }
  return std::prev(row.end())->first;
}

std::vector<Element> simulate(const HopfInstance& h, int n, int a, const Element& start, int steps,
                              std::uint64_t seed, std::uint64_t stream) {
  if (start.degree() != n)
    fail(ErrorCode::invalid_input, "start state " + h.element_label(start) + " is not of degree " +
                                       std::to_string(n));
  if (steps < 0) fail(ErrorCode::invalid_input, "negative step count");
  if (h.kind() == Kind::free_cocommutative && h.grading(start).size() > 1) {
    std::vector<Element> states = h.basis_of_grading(h.grading(start));
    if (!std::binary_search(states.begin(), states.end(), start, canonical_less))
      fail(ErrorCode::invalid_input, "start state is not in the basis");
  }
  Rng rng(seed, stream);
  std::vector<Element> path{start};
  std::map<Element, Vec> rows;
  Element cur = start;
  for (int s = 0; s < steps; ++s) {
    if (auto next = h.sample_step(cur, a, rng)) {
      cur = *next;
    } else {
      auto it = rows.find(cur);
      if (it == rows.end()) it = rows.emplace(cur, transition_row(h, cur, a)).first;
      cur = sample_from_row(it->second, rng);
    }
    path.push_back(cur);
  }
  return path;
}

}  // namespace hopfchain

namespace hopfchain {

Rational rock_occupancy(int n, int k, const std::vector<int>& lambda) {
  int total = 0;
  std::map<int, int> mult;
  for (int p : lambda) {
    if (p < 1) fail(ErrorCode::invalid_input, "partition parts must be positive");
    total += p;
    ++mult[p];
  }
  if (total != n) fail(ErrorCode::invalid_input, "partition is not of n");
  const Integer boxes = integer_pow(2, static_cast<unsigned long>(k));
  if (boxes < static_cast<long>(lambda.size())) return 0;
  // choose which boxes get which count, then which balls go where
  Integer ways = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i) ways *= boxes - static_cast<long>(i);
  Integer denom_ways = 1;
  for (const auto& [part, m] : mult) {
    denom_ways *= factorial(m);
    for (int i = 0; i < m; ++i) denom_ways *= factorial(part);
  }
  ways *= factorial(n);
  return make_rational(ways, denom_ways * integer_pow(2, static_cast<unsigned long>(n) * static_cast<unsigned long>(k)));
}

}  // namespace hopfchain
