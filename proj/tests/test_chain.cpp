#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfchain/golden.hpp"
#include "hopfchain/chain.hpp"
#include "hopfchain/instances.hpp"
#include "hopfchain/partition.hpp"
#include "hopfchain/shuffle.hpp"

#include <cmath>

using namespace hopfchain;

namespace {

GenId e(int i) { return make_gen(i, static_cast<std::uint64_t>(i)); }

}  // namespace

TEST_CASE("rescaling constants") {
  SymFnInstance sym(8);
  for (int i = 1; i <= 8; ++i) CHECK(rescale_generator(sym, e(i)) == Rational(1, factorial(i)));
  CHECK(rescale_element(sym, partition_element({2, 2, 1})) == Rational(1, 4));

  QuotientSymInstance quo(4);
  try {
    rescale_generator(quo, quo.generators(2).front());
    FAIL("expected no_markov_rescaling");
  } catch (const HopfError& err) {
    CHECK(err.code() == ErrorCode::no_markov_rescaling);
    CHECK(std::string(err.what()).find(quo.generator_label(quo.generators(2).front())) !=
          std::string::npos);
  }
  CHECK_THROWS_AS(transition_matrix(quo, 4, 2), HopfError);

  FreeAssocInstance deck(std::vector<int>{1, 1, 1});
  for (const Element& w : deck.basis(3)) CHECK(rescale_element(deck, w) == 1);
  GraphInstance graphs(4);
  for (const Element& b : graphs.basis(4)) CHECK(rescale_element(graphs, b) == 1);
}

TEST_CASE("golden rock matrices") {
  SymFnInstance sym(4);
  for (int n = 2; n <= 4; ++n) {
    TransitionMatrix k = transition_matrix(sym, n, 2);
    const auto& g = golden::rock_matrix(n);
    REQUIRE(k.size() == g.size());
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::size_t j = 0; j < k.size(); ++j) CHECK(k.at(i, j) == golden::at(g, i, j));
  }
}

TEST_CASE("rock chain structure") {
  SymFnInstance sym(7);
  for (int n = 1; n <= 7; ++n)
    for (int a : {2, 3}) {
      TransitionMatrix k = transition_matrix(sym, n, a);
      CHECK(is_row_stochastic(k));
      for (std::size_t i = 0; i < k.size(); ++i) {
        int l = k.basis[i].length();
        CHECK(k.at(i, i) == rational_pow(Rational(a), l - n));
        // only coarser-to-finer moves: states later in the order are unreachable
        for (std::size_t j = i + 1; j < k.size(); ++j) CHECK(k.at(i, j) == 0);
      }
    }
}

TEST_CASE("deck forward diagonal") {
  FreeAssocInstance deck(std::vector<int>{1, 1, 1});
  for (int a : {2, 3, 4}) {
    TransitionMatrix k = transition_matrix(deck, 3, a);
    CHECK(is_row_stochastic(k));
    Element id = word_element({1, 2, 3});
    std::size_t i = k.index.at(id);
    CHECK(k.at(i, i) == make_rational(binomial(a + 2, 3), integer_pow(a, 3)));
    TransitionMatrix f = transpose(k);
    CHECK(f.at(i, i) == k.at(i, i));
  }
}

TEST_CASE("power law") {
  SymFnInstance sym(5);
  for (int n = 1; n <= 5; ++n) CHECK(power_law_check(sym, n, 2, 3));
  FreeAssocInstance deck(std::vector<int>{1, 1, 1, 1});
  CHECK(power_law_check(deck, 4, 2, 2));
  FreeAssocInstance multi(std::vector<int>{2, 1, 1});
  CHECK(power_law_check(multi, 4, 2, 3));
  GraphInstance graphs(4);
  CHECK(power_law_check(graphs, 4, 2, 2));
}

TEST_CASE("stationary sets") {
  SymFnInstance sym(5);
  StationarySet s = stationary_set(sym, 5);
  REQUIRE(s.absorbing.size() == 1);
  CHECK(s.absorbing.front() == partition_element({1, 1, 1, 1, 1}));

  FreeAssocInstance deck(std::vector<int>{2, 1});
  StationarySet d = stationary_set(deck, 3);
  CHECK(d.absorbing.empty());
  REQUIRE(d.stationary.size() == 1);
  CHECK(d.stationary.front().size() == 3);
  TransitionMatrix k = transition_matrix(deck, 3, 2);
  for (const auto& [w, p] : d.stationary.front()) {
    Rational mass = 0;
    for (const auto& [w2, p2] : d.stationary.front()) mass += p2 * k.at(k.index.at(w2), k.index.at(w));
    CHECK(mass == p);
  }
}

TEST_CASE("evolve and matrix powers agree") {
  SymFnInstance sym(5);
  TransitionMatrix k = transition_matrix(sym, 5, 2);
  Element top = partition_element({5});
  for (int steps = 0; steps <= 4; ++steps) {
    Distribution a = evolve(sym, top, 2, steps);
    Distribution b = matrix_power_row(k, top, steps);
    for (const auto& [x, p] : b)
      if (p != 0) CHECK(a[x] == p);
  }
  TransitionMatrix k2 = multiply(k, k);
  CHECK(same_entries(k2, transition_matrix(sym, 5, 4)));
}

TEST_CASE("distances") {
  Element x = partition_element({1, 1}), y = partition_element({2});
  Distribution pi{{x, Rational(1)}};
  Distances d = distances(Distribution{{x, Rational(1, 2)}, {y, Rational(1, 2)}}, pi);
  CHECK(d.tv == Rational(1, 2));
  CHECK_FALSE(d.sep.has_value());
  CHECK_FALSE(d.linf.has_value());

  Distribution uni{{x, Rational(1, 2)}, {y, Rational(1, 2)}};
  Distances u = distances(Distribution{{x, Rational(3, 4)}, {y, Rational(1, 4)}}, uni);
  CHECK(u.tv == Rational(1, 4));
  REQUIRE(u.sep.has_value());
  CHECK(*u.sep == Rational(1, 2));
  CHECK(*u.linf == Rational(1, 2));
  CHECK(distances(uni, uni).tv == 0);
}

TEST_CASE("simulation") {
  SymFnInstance sym(6);
  Element top = partition_element({6});
  auto p1 = simulate(sym, 6, 2, top, 10, 42);
  auto p2 = simulate(sym, 6, 2, top, 10, 42);
  CHECK(p1 == p2);
  REQUIRE(p1.size() == 11);
  CHECK(p1.front() == top);
  for (std::size_t i = 1; i < p1.size(); ++i) CHECK(p1[i].degree() == 6);

  Element ones = partition_element({1, 1, 1, 1, 1, 1});
  for (const Element& b : simulate(sym, 6, 2, ones, 5, 7)) CHECK(b == ones);

  // one-step frequencies from (4) against the exact row
  SymFnInstance sym4(4);
  Element four = partition_element({4});
  Vec row = transition_row(sym4, four, 2);
  const int samples = 20000;
  std::map<Element, int> counts;
  for (int s = 0; s < samples; ++s) ++counts[simulate(sym4, 4, 2, four, 1, 99, s).back()];
  for (const auto& [b, p] : row) {
    double q = to_double(p);
    double sd = std::sqrt(q * (1 - q) / samples);
    CHECK(std::abs(counts[b] / double(samples) - q) <= 4 * sd + 1e-12);
  }

  Rng rng(1);
  FreeAssocInstance deck(std::vector<int>{1, 1, 1});
  Vec drow = transition_row(deck, word_element({3, 1, 2}), 2);
  for (int s = 0; s < 100; ++s) CHECK(drow.coeff(sample_from_row(drow, rng)) > 0);
}

TEST_CASE("balls in boxes occupancy") {
  for (int n = 1; n <= 6; ++n) {
    SymFnInstance sym(n);
    TransitionMatrix k = transition_matrix(sym, n, 2);
    Element top = partition_element({n});
    for (int steps = 1; steps <= 3; ++steps) {
      Distribution d = matrix_power_row(k, top, steps);
      Rational total = 0;
      for (const Partition& lambda : partitions(n)) {
        Rational p = rock_occupancy(n, steps, lambda);
        total += p;
        auto it = d.find(partition_element(lambda));
        CHECK(p == (it == d.end() ? Rational(0) : it->second));
      }
      CHECK(total == 1);
    }
  }
  CHECK_THROWS_AS(rock_occupancy(3, 1, {2, 2}), HopfError);
}

TEST_CASE("rock absorption from the top") {
  for (int n = 2; n <= 8; ++n) {
    SymFnInstance sym(n);
    Element top = partition_element({n});
    Element ones = partition_element(std::vector<int>(static_cast<std::size_t>(n), 1));
    Distribution d{{top, Rational(1)}};
    for (int k = 1; k <= 12; ++k) {
      d = [&] {
        Distribution next;
        for (const auto& [b, p] : d)
          for (const auto& [b2, v] : transition_row(sym, b, 2)) next[b2] += p * v;
        return next;
      }();
      Rational closed = 1;
      Rational box = rational_pow(Rational(2), k);
      for (int i = 1; i < n; ++i) closed *= 1 - Rational(i) / box;
      CHECK(d[ones] == closed);
      CHECK(1 - d[ones] <= Rational(binomial(n, 2)) / box);
    }
  }
}
