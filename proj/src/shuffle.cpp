#include "hopfchain/shuffle.hpp"

#include "hopfchain/instances.hpp"
#include "hopfchain/lyndon.hpp"
#include "hopfchain/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace hopfchain {

int descents(const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
  return d;
}

int ascents(const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] < w[i + 1];
  return d;
}

int inversions(const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) d += w[i] > w[j];
  return d;
}

int peaks(const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 1; i + 1 < w.size(); ++i) d += w[i - 1] < w[i] && w[i] > w[i + 1];
  return d;
}

int troughs(const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 1; i + 1 < w.size(); ++i) d += w[i - 1] > w[i] && w[i] < w[i + 1];
  return d;
}

int straights(const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    d += (w[i - 1] < w[i] && w[i] < w[i + 1]) || (w[i - 1] > w[i] && w[i] > w[i + 1]);
  return d;
}

Perm inverse(const Perm& w) {
  Perm inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

int rising_sequences(const Perm& w) { return descents(inverse(w)) + 1; }

Perm compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i] - 1];
  return r;
}

std::vector<Perm> all_permutations(int n) {
  Perm w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Rational gsr_probability(int n, int a, const Perm& w) {
  if (a < 1) fail(ErrorCode::invalid_input, "a must be at least 1");
  return Rational(binomial(n + a - descents(w) - 1, n)) /
         Rational(integer_pow(a, static_cast<unsigned long>(n)));
}

TransitionMatrix gsr_forward_matrix(int n, int a) {
  TransitionMatrix f;
  f.n = n;
  f.a = a;
  f.direction = Direction::forward;
  std::vector<Perm> perms = all_permutations(n);
  for (const Perm& p : perms) f.basis.push_back(word_element(p));
  for (std::size_t i = 0; i < f.basis.size(); ++i) f.index.emplace(f.basis[i], i);
  f.rows.resize(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      Rational p = gsr_probability(n, a, compose(inverse(perms[j]), perms[i]));
      if (p != 0) f.rows[i].emplace_back(j, p);
    }
  return f;
}

std::vector<Rational> convolve(const std::vector<Perm>& perms, const std::vector<Rational>& p,
                               const std::vector<Rational>& q) {
  std::map<Perm, std::size_t> idx;
  for (std::size_t i = 0; i < perms.size(); ++i) idx.emplace(perms[i], i);
  std::vector<Rational> out(perms.size(), 0);
  for (std::size_t s = 0; s < perms.size(); ++s)
    for (std::size_t t = 0; t < perms.size(); ++t) {
      if (p[t] == 0) continue;
      out[s] += p[t] * q[idx.at(compose(perms[s], inverse(perms[t])))];
    }
  return out;
}

std::vector<NamedEigenfunction> named_eigenfunctions(const std::vector<int>& nu, int a) {
  FreeAssocInstance deck(nu);
  const int n = deck.working_degree();
  TransitionMatrix k = transition_matrix(deck, n, a);
  std::vector<std::vector<int>> words;
  for (const Element& b : k.basis) words.push_back(element_letters(b));

  std::vector<NamedEigenfunction> out;
  auto add = [&](std::string name, int exponent, const std::function<Rational(const std::vector<int>&)>& fn) {
    NamedEigenfunction e{std::move(name), {}, exponent};
    for (const auto& w : words) e.values.push_back(fn(w));
    out.push_back(std::move(e));
  };

  int present = 0;
  for (int x : nu) present += x > 0;
  const bool distinct = std::all_of(nu.begin(), nu.end(), [](int x) { return x == 1; });

  if (present >= 2)
    add("ascents-descents", -1, [](const std::vector<int>& w) { return Rational(ascents(w) - descents(w)); });
  if (distinct && n >= 2) {
    add("descents", -1, [n](const std::vector<int>& w) { return Rational(n - 1 - 2 * descents(w)); });
    if (n >= 3) {
      Rational third = make_rational(n - 2, 3);
      add("peaks", -2, [third](const std::vector<int>& w) -> Rational { return Rational(peaks(w)) - third; });
      add("troughs", -2, [third](const std::vector<int>& w) -> Rational { return Rational(troughs(w)) - third; });
      add("straights", -2, [third](const std::vector<int>& w) -> Rational { return Rational(straights(w)) - third; });
    }
  }
  if (distinct) {
    for (int j = 0; j <= n - 1; ++j) {
      add("h" + std::to_string(j), -j, [n, j](const std::vector<int>& w) -> Rational {
        Rational s = 0;
        int d = descents(w);
        for (int kk = 0; kk <= n; ++kk) {
          Integer st = stirling1_signed(kk, n - j);
          if (st == 0) continue;
          s += Rational(st) / Rational(factorial(kk)) * Rational(binomial(n - d - 1, n - kk));
        }
        return s * Rational(factorial(n));
      });
    }
  }
  if (nu.size() == 2 && nu[0] == 1 && nu[1] >= 1) {
    add("top-bottom", -1, [](const std::vector<int>& w) {
      if (w.front() == 1) return Rational(1);
      if (w.back() == 1) return Rational(-1);
      return Rational(0);
    });
  }

  // right eigenfunctions of the forward chain = left eigenvectors of K
  for (const auto& e : out) {
    Rational beta = rational_pow(Rational(a), e.exponent);
    std::vector<Rational> fk(k.size(), 0);
    for (std::size_t i = 0; i < k.size(); ++i)
      for (const auto& [j, v] : k.rows[i]) fk[j] += e.values[i] * v;
    for (std::size_t j = 0; j < k.size(); ++j)
      if (fk[j] != beta * e.values[j])
        fail(ErrorCode::internal_inconsistency, "named eigenfunction " + e.name + " fails at " +
                                                    deck.element_label(k.basis[j]));
  }
  return out;
}

int pattern_eigenfunction_value(const std::vector<int>& w, const std::vector<int>& w2) {
  std::vector<int> a = w, b = w2;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b || std::adjacent_find(a.begin(), a.end()) != a.end())
    fail(ErrorCode::invalid_input, "pattern eigenfunction needs two arrangements of the same distinct letters");
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < w2.size(); ++i) pos[w2[i]] = i;
  int value = 1;
  for (const Word& l : lyndon_factorize(word_element(w).g)) {
    std::size_t lo = w2.size(), hi = 0;
    for (GenId c : l) {
      std::size_t p = pos[static_cast<int>(gen_key(c))];
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
    if (hi - lo + 1 != l.size()) return 0;
    Word u;
    for (std::size_t i = lo; i <= hi; ++i) u.push_back(letter(w2[i]));
    Rational c = standard_bracketing(l).coeff(Element(u));
    value *= static_cast<int>(c.get_num().get_si());
    if (!value) return 0;
  }
  return value;
}

namespace {
void check_q(const Rational& q) {
  if (q <= 0) fail(ErrorCode::invalid_input, "q must be positive");
}
}  // namespace

Rational q_integer(int j, const Rational& q) {
  Rational s = 0, p = 1;
  for (int i = 0; i < j; ++i) {
    s += p;
    p *= q;
  }
  return s;
}

Rational q_factorial(int j, const Rational& q) {
  Rational r = 1;
  for (int i = 1; i <= j; ++i) r *= q_integer(i, q);
  return r;
}

Rational q_binomial(int n, int k, const Rational& q) {
  if (k < 0 || k > n) return 0;
  return q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q));
}

Rational q_shuffle_normalizer(int n, const Rational& q) {
  check_q(q);
  Rational z = 0;
  for (int j = 0; j <= n; ++j) z += q_binomial(n, j, q);
  return z;
}

Rational q_shuffle_probability(int n, const Rational& q, const Perm& w) {
  check_q(q);
  if (n > 10) fail(ErrorCode::unsupported_size, "q-shuffle closed form is capped at n = 10");
  if (static_cast<int>(w.size()) != n) fail(ErrorCode::invalid_input, "permutation has the wrong length");
  if (rising_sequences(w) > 2) return 0;
  // the identity arises from every cut
  int mult = inversions(w) == 0 ? n + 1 : 1;
  return Rational(mult) * rational_pow(q, inversions(w)) / q_shuffle_normalizer(n, q);
}

Perm q_shuffle_sample(int n, const Rational& q, std::uint64_t seed, std::uint64_t stream) {
  check_q(q);
  Rng rng(seed, stream);
  const double z = to_double(q_shuffle_normalizer(n, q));
  double u = rng.unit() * z, acc = 0;
  int cut = n;
  for (int j = 0; j <= n; ++j) {
    acc += to_double(q_binomial(n, j, q));
    if (u < acc) {
      cut = j;
      break;
    }
  }
  std::vector<int> left, right;
  for (int c = 1; c <= cut; ++c) left.push_back(c);
  for (int c = cut + 1; c <= n; ++c) right.push_back(c);
  std::vector<int> dropped;
  while (!left.empty() || !right.empty()) {
    int A = static_cast<int>(left.size()), B = static_cast<int>(right.size());
    double p_left = to_double(rational_pow(q, B) * q_integer(A, q) / q_integer(A + B, q));
    if (rng.unit() < p_left) {
      dropped.push_back(left.back());
      left.pop_back();
    } else {
      dropped.push_back(right.back());
      right.pop_back();
    }
  }
  std::reverse(dropped.begin(), dropped.end());
  return dropped;
}

std::map<Perm, Rational> q_shuffle_path_law(int n, const Rational& q) {
  check_q(q);
  std::map<Perm, Rational> law;
  const Rational z = q_shuffle_normalizer(n, q);
  for (int cut = 0; cut <= n; ++cut) {
    std::function<void(int, int, std::vector<int>&, const Rational&)> rec =
        [&](int A, int B, std::vector<int>& dropped, const Rational& p) {
          if (A == 0 && B == 0) {
            Perm deck(dropped.rbegin(), dropped.rend());
            law[deck] += p;
            return;
          }
          Rational pl = rational_pow(q, B) * q_integer(A, q) / q_integer(A + B, q);
          if (A > 0) {
            dropped.push_back(A);
            rec(A - 1, B, dropped, p * pl);
            dropped.pop_back();
          }
          if (B > 0) {
            dropped.push_back(cut + B);
            rec(A, B - 1, dropped, p * (1 - pl));
            dropped.pop_back();
          }
        };
    std::vector<int> dropped;
    rec(cut, n - cut, dropped, q_binomial(n, cut, q) / z);
  }
  return law;
}

BilinearForm BilinearForm::all_ones(int letters) {
  BilinearForm f;
  f.m.assign(static_cast<std::size_t>(letters), std::vector<int>(static_cast<std::size_t>(letters), 1));
  return f;
}

int quantized_weight(const std::vector<int>& subset_positions, const std::vector<int>& w,
                     const BilinearForm& form) {
  std::vector<bool> in(w.size() + 1, false);
  for (int p : subset_positions) {
    if (p < 1 || p > static_cast<int>(w.size())) fail(ErrorCode::invalid_input, "position out of range");
    in[p] = true;
  }
  int wt = 0;
  for (int j = 1; j <= static_cast<int>(w.size()); ++j) {
    if (!in[j]) continue;
    for (int jp = 1; jp < j; ++jp)
      if (!in[jp]) wt += form(w[jp - 1], w[j - 1]);
  }
  return wt;
}

std::map<std::vector<int>, Rational> quantized_inverse_shuffle_step(const std::vector<int>& w,
                                                                    const Rational& q,
                                                                    const BilinearForm& form) {
  check_q(q);
  const int n = static_cast<int>(w.size());
  if (n > 20) fail(ErrorCode::unsupported_size, "quantized step enumerates 2^n subsets");
  std::map<std::vector<int>, Rational> out;
  Rational theta = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::vector<int> subset, target, rest;
    for (int j = 1; j <= n; ++j) {
      if ((s >> (j - 1)) & 1u) {
        subset.push_back(j);
        target.push_back(w[j - 1]);
      } else {
        rest.push_back(w[j - 1]);
      }
    }
    target.insert(target.end(), rest.begin(), rest.end());
    Rational weight = rational_pow(q, quantized_weight(subset, w, form));
    out[target] += weight;
    theta += weight;
  }
  for (auto& [t, p] : out) p /= theta;
  return out;
}

}  // namespace hopfchain
