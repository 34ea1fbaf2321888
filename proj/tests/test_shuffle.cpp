#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfchain/golden.hpp"
#include "hopfchain/instances.hpp"
#include "hopfchain/lyndon.hpp"
#include "hopfchain/partition.hpp"
#include "hopfchain/shuffle.hpp"
#include "hopfchain/spectral.hpp"

#include <cmath>
#include <numeric>

using namespace hopfchain;

namespace {

std::vector<int> deck_nu(const Composition& c) { return std::vector<int>(c.begin(), c.end()); }

}  // namespace

TEST_CASE("word statistics") {
  for (const auto& w : multiset_words({2, 2, 1}))
    CHECK(descents(w) + ascents(w) + [&] {
      int ties = 0;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) ties += w[i] == w[i + 1];
      return ties;
    }() == 4);
  for (const Perm& w : all_permutations(5)) {
    CHECK(peaks(w) + troughs(w) + straights(w) == 3);
    CHECK(inversions(w) == inversions(inverse(w)));
    CHECK(compose(w, inverse(w)) == Perm{1, 2, 3, 4, 5});
  }
  CHECK(descents({3, 1, 2}) == 1);
  CHECK(rising_sequences({3, 1, 2}) == 2);
  CHECK(rising_sequences({3, 2, 1}) == 3);
  CHECK(peaks({1, 3, 2}) == 1);
  CHECK(troughs({2, 1, 3}) == 1);
  CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("GSR closed form") {
  for (int n = 1; n <= 6; ++n)
    for (int a = 1; a <= 4; ++a) {
      Rational total = 0;
      for (const Perm& w : all_permutations(n)) total += gsr_probability(n, a, w);
      CHECK(total == 1);
      Perm id(static_cast<std::size_t>(n));
      std::iota(id.begin(), id.end(), 1);
      CHECK(gsr_probability(n, a, id) == make_rational(binomial(n + a - 1, n), integer_pow(a, n)));
    }
  CHECK(gsr_probability(3, 2, {1, 3, 2}) == Rational(1, 8));
  CHECK(gsr_probability(4, 2, {4, 3, 2, 1}) == 0);
}

TEST_CASE("three-card table") {
  for (int a : {2, 3, 5}) {
    TransitionMatrix f = gsr_forward_matrix(3, a);
    auto perms = all_permutations(3);
    const auto& t = golden::shuffle3_offsets();
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        std::size_t r = f.index.at(word_element(perms[i])), c = f.index.at(word_element(perms[j]));
        CHECK(f.at(r, c) == make_rational(binomial(a + 2 - t[i][j], 3), integer_pow(a, 3)));
      }
  }
}

TEST_CASE("Hopf chain matches the GSR matrix") {
  for (int n = 1; n <= 5; ++n) {
    FreeAssocInstance deck(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (int a : {2, 3}) {
      TransitionMatrix forward = transpose(transition_matrix(deck, n, a));
      CHECK(same_entries(forward, gsr_forward_matrix(n, a)));
    }
  }
}

TEST_CASE("convolution") {
  for (int n = 1; n <= 5; ++n) {
    auto perms = all_permutations(n);
    auto law = [&](int a) {
      std::vector<Rational> p;
      for (const Perm& w : perms) p.push_back(gsr_probability(n, a, w));
      return p;
    };
    for (int a : {2, 3})
      for (int b : {2, 3}) CHECK(convolve(perms, law(a), law(b)) == law(a * b));
  }
}

TEST_CASE("named eigenfunctions") {
  for (int n = 2; n <= 6; ++n) {
    auto fs = named_eigenfunctions(std::vector<int>(static_cast<std::size_t>(n), 1), 2);
    std::map<std::string, const NamedEigenfunction*> by;
    for (const auto& f : fs) by[f.name] = &f;
    REQUIRE(by.count("descents"));
    REQUIRE(by.count("h1"));
    for (int j = 0; j < n; ++j) CHECK(by.count("h" + std::to_string(j)));
    if (n >= 3) CHECK(by.count("peaks"));
    // h_1 = (n/2)(n-1-2d)
    for (std::size_t i = 0; i < by["h1"]->values.size(); ++i)
      CHECK(by["h1"]->values[i] == make_rational(n, 2) * by["descents"]->values[i]);
    // h_0 is constant
    for (const Rational& v : by["h0"]->values) CHECK(v == by["h0"]->values.front());
  }
  for (int n = 2; n <= 5; ++n)
    for (const Composition& c : compositions(n))
      for (int a : {2, 3}) {
        auto fs = named_eigenfunctions(deck_nu(c), a);
        bool has = std::any_of(fs.begin(), fs.end(), [](const auto& f) { return f.name == "ascents-descents"; });
        CHECK(has == (c.size() >= 2));
      }
  auto tb = named_eigenfunctions({1, 3}, 2);
  CHECK(std::any_of(tb.begin(), tb.end(), [](const auto& f) { return f.name == "top-bottom"; }));
  CHECK(named_eigenfunctions({4}, 2).empty());
}

TEST_CASE("deck spectra") {
  for (int n = 2; n <= 6; ++n)
    for (const Composition& c : compositions(n)) {
      FreeAssocInstance deck(deck_nu(c));
      auto m = multiplicities(deck, n);
      long N = static_cast<long>(c.size());
      // eigenvalue 1/a
      CHECK(m[n - 1] == binomial(N, 2));
      if (N >= 2)
        for (int k = 0; k <= n - 1; ++k) {
          CHECK(m[n - k] > 0);
          if (k >= 1) CHECK(m[n - k] >= deck_multiplicity_lower_bound(deck_nu(c), k));
        }
    }
}

TEST_CASE("pattern eigenfunctions") {
  CHECK(pattern_eigenfunction_value({3, 5, 1, 4, 2}, {1, 4, 2, 5, 3}) == -1);
  CHECK(pattern_eigenfunction_value({3, 5, 1, 4, 2}, {3, 5, 2, 4, 1}) == 1);
  CHECK(pattern_eigenfunction_value({1, 2, 3}, {1, 2, 3}) == 1);
  CHECK_THROWS_AS(pattern_eigenfunction_value({1, 2}, {1, 3}), HopfError);

  // each f_w is an eigenfunction of the forward shuffle with eigenvalue a^(k-n)
  for (int n = 2; n <= 5; ++n) {
    FreeAssocInstance deck(std::vector<int>(static_cast<std::size_t>(n), 1));
    TransitionMatrix k = transition_matrix(deck, n, 2);
    for (const Element& w : k.basis) {
      auto lw = element_letters(w);
      int factors = static_cast<int>(lyndon_factorize(w.g).size());
      std::vector<Rational> v, vk(k.size(), 0);
      for (const Element& w2 : k.basis) v.push_back(pattern_eigenfunction_value(lw, element_letters(w2)));
      for (std::size_t i = 0; i < k.size(); ++i)
        for (const auto& [j, x] : k.rows[i]) vk[j] += v[i] * x;
      Rational beta = rational_pow(Rational(2), factors - n);
      for (std::size_t j = 0; j < k.size(); ++j) CHECK(vk[j] == beta * v[j]);
      for (const Rational& x : v) CHECK((x == 0 || x == 1 || x == -1));
      // reversal flips the sign by the parity of n minus the factor count
      int sign = (n - factors) % 2 ? -1 : 1;
      for (const Element& w2 : k.basis) {
        auto l2 = element_letters(w2);
        auto rev = std::vector<int>(l2.rbegin(), l2.rend());
        CHECK(pattern_eigenfunction_value(lw, rev) == sign * pattern_eigenfunction_value(lw, l2));
      }
    }
  }
}

TEST_CASE("q-analogues") {
  Rational q(1, 2);
  CHECK(q_integer(3, q) == Rational(7, 4));
  CHECK(q_factorial(3, q) == Rational(21, 8));
  CHECK(q_binomial(4, 2, Rational(1)) == 6);
  CHECK(q_binomial(3, 1, Rational(2)) == 7);
  CHECK_THROWS_AS(q_shuffle_probability(3, Rational(-1), {1, 2, 3}), HopfError);
}

TEST_CASE("q-shuffle path law") {
  for (int n = 1; n <= 5; ++n) {
    // q = 1 is one GSR 2-shuffle of the ordered deck
    TransitionMatrix gsr = gsr_forward_matrix(n, 2);
    Perm id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 1);
    std::size_t from = gsr.index.at(word_element(id));
    for (const Rational& q : {Rational(1, 2), Rational(1), Rational(2)}) {
      auto law = q_shuffle_path_law(n, q);
      Rational total = 0;
      for (const Perm& w : all_permutations(n)) {
        Rational p = q_shuffle_probability(n, q, w);
        total += p;
        auto it = law.find(w);
        CHECK(p == (it == law.end() ? Rational(0) : it->second));
        if (q == 1) CHECK(p == gsr.at(from, gsr.index.at(word_element(w))));
      }
      CHECK(total == 1);
    }
  }
}

TEST_CASE("q-shuffle sampler") {
  const int n = 4, samples = 20000;
  Rational q(1, 2);
  std::map<Perm, int> counts;
  for (int s = 0; s < samples; ++s) ++counts[q_shuffle_sample(n, q, 2024, s)];
  for (const Perm& w : all_permutations(n)) {
    double p = to_double(q_shuffle_probability(n, q, w));
    double sd = std::sqrt(p * (1 - p) / samples);
    CHECK(std::abs(counts[w] / double(samples) - p) <= 4 * sd + 1e-12);
  }
  CHECK(q_shuffle_sample(5, Rational(2), 3) == q_shuffle_sample(5, Rational(2), 3));
}

TEST_CASE("quantized inverse shuffle") {
  BilinearForm form;
  form.m.assign(5, std::vector<int>(5, 0));
  for (int x = 1; x <= 5; ++x)
    for (int y = 1; y <= 5; ++y) form.m[x - 1][y - 1] = x * y;
  // w = ijklm = 12345, S = {2,4}: i·j + i·l + k·l
  CHECK(quantized_weight({2, 4}, {1, 2, 3, 4, 5}, form) == 1 * 2 + 1 * 4 + 3 * 4);
  BilinearForm ones = BilinearForm::all_ones(5);
  CHECK(quantized_weight({2, 4}, {1, 2, 3, 4, 5}, ones) == 3);
  CHECK(quantized_weight({}, {1, 2, 3}, ones) == 0);
  CHECK(quantized_weight({1, 2, 3}, {1, 2, 3}, ones) == 0);

  Rational q(1, 3);
  auto step = quantized_inverse_shuffle_step({1, 2, 3, 4}, q, ones);
  Rational total = 0;
  for (const auto& [w, p] : step) total += p;
  CHECK(total == 1);
  // with the all-ones form the step is a random walk: the law of the
  // position rearrangement does not depend on the starting deck
  Perm start{3, 1, 4, 2};
  auto other = quantized_inverse_shuffle_step(start, q, ones);
  for (const auto& [w, p] : step) {
    Perm moved;
    for (int x : w) moved.push_back(start[static_cast<std::size_t>(x - 1)]);
    CHECK(other[moved] == p);
  }
  // q = 1 gives the inverse 2-shuffle
  auto plain = quantized_inverse_shuffle_step({1, 2, 3}, Rational(1), ones);
  FreeAssocInstance deck(std::vector<int>{1, 1, 1});
  Vec row = transition_row(deck, word_element({1, 2, 3}), 2);
  for (const auto& [w, p] : plain) CHECK(row.coeff(word_element(w)) == p);
}
