#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfchain/golden.hpp"
#include "hopfchain/instances.hpp"
#include "hopfchain/partition.hpp"
#include "hopfchain/spectral.hpp"

using namespace hopfchain;

namespace {

const EigenVector& find(const std::vector<EigenVector>& vs, const Element& index) {
  for (const EigenVector& v : vs)
    if (v.index == index) return v;
  FAIL("missing eigenvector");
  return vs.front();
}

// Kv and vK for a chain matrix.
Vec apply_right(const TransitionMatrix& k, const Vec& f) {
  Vec out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    Rational s = 0;
    for (const auto& [j, v] : k.rows[i]) s += v * f.coeff(k.basis[j]);
    out.add(k.basis[i], s);
  }
  return out;
}

Vec apply_left(const TransitionMatrix& k, const Vec& g) {
  Vec out;
  for (std::size_t i = 0; i < k.size(); ++i)
    for (const auto& [j, v] : k.rows[i]) out.add(k.basis[j], g.coeff(k.basis[i]) * v);
  return out;
}

// [e_μ] p_n from Newton's identities.
Rational power_sum_coeff(const Partition& mu) {
  int n = 0;
  for (int p : mu) n += p;
  long l = static_cast<long>(mu.size());
  Integer denom = 1;
  for (const auto& [part, m] : part_multiplicities(mu)) denom *= factorial(m);
  Rational c = make_rational(Integer(n) * factorial(l - 1), denom);
  return (n - l) % 2 ? -c : c;
}

}  // namespace

TEST_CASE("golden rock eigenbases") {
  SymFnInstance sym(4);
  for (int n = 2; n <= 4; ++n) {
    EigenSystem sys = eigensystem(sym, n);
    const auto& basis = sys.basis;
    REQUIRE(basis.size() == golden::rock_left(n).size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const EigenVector& g = find(sys.left, basis[i]);
      const EigenVector& f = find(sys.right, basis[i]);
      CHECK(g.exponent == basis[i].length());
      for (std::size_t j = 0; j < basis.size(); ++j) {
        CHECK(g.coeffs.coeff(basis[j]) == golden::at(golden::rock_left(n), i, j));
        CHECK(f.coeffs.coeff(basis[j]) == golden::at(golden::rock_right(n), j, i));
      }
    }
    CHECK(duality_certificate(sys));
    auto p = pairing_matrix(sys);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) CHECK(p[i][j] == (i == j ? 1 : 0));
  }
}

TEST_CASE("eigen-equations") {
  SymFnInstance sym(7);
  for (int n = 1; n <= 7; ++n)
    for (int a : {2, 3}) {
      EigenSystem sys = eigensystem(sym, n);
      EigenCheckReport r = eigen_equation_check(transition_matrix(sym, n, a), sys);
      CHECK_MESSAGE(r.ok, "rock n=" << n);
      CHECK(duality_certificate(sys));
    }
  for (int n = 1; n <= 5; ++n)
    for (const Composition& nu : compositions(n)) {
      FreeAssocInstance deck(nu);
      EigenSystem sys = eigensystem(deck, n);
      CHECK(duality_certificate(sys));
      for (int a : {2, 3}) CHECK(eigen_equation_check(transition_matrix(deck, n, a), sys).ok);
    }
  GraphInstance graphs(4);
  EigenSystem gs = eigensystem(graphs, 4);
  CHECK(duality_certificate(gs));
  CHECK(eigen_equation_check(transition_matrix(graphs, 4, 2), gs).ok);
}

TEST_CASE("eigen-equation check detects a corrupted vector") {
  SymFnInstance sym(4);
  EigenSystem sys = eigensystem(sym, 4);
  sys.right[2].coeffs.add(sys.basis[0], Rational(1));
  EigenCheckReport r = eigen_equation_check(transition_matrix(sym, 4, 2), sys);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.failures.empty());
}

TEST_CASE("three-card deck") {
  FreeAssocInstance deck(std::vector<int>{1, 1, 1});
  EigenSystem sys = eigensystem(deck, 3);
  const EigenVector& f = find(sys.right, word_element({1, 2, 3}));
  CHECK(f.exponent == 1);
  std::vector<Rational> expect{Rational(1, 3), Rational(-1, 6), Rational(-1, 6),
                               Rational(-1, 6), Rational(-1, 6), Rational(1, 3)};
  REQUIRE(sys.basis.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(f.coeffs.coeff(sys.basis[i]) == expect[i]);

  // the descent-type vector (1,1,0,-1,0,-1) has eigenvalue 1/a
  Vec v;
  std::vector<int> vals{1, 1, 0, -1, 0, -1};
  for (std::size_t i = 0; i < 6; ++i) v.add(sys.basis[i], vals[i]);
  for (int a : {2, 3}) {
    TransitionMatrix k = transition_matrix(deck, 3, a);
    CHECK(apply_right(k, v) == Rational(1, a) * v);
  }
}

TEST_CASE("multiplicities") {
  for (int n = 1; n <= 10; ++n) {
    SymFnInstance sym(n);
    auto m = multiplicities(sym, n);
    for (int l = 1; l <= n; ++l) CHECK(m[l] == partition_count(n, l));
    if (n <= 7) CHECK(m == multiplicities_direct(sym, n));
  }
  for (int n = 1; n <= 7; ++n) {
    FreeAssocInstance deck(std::vector<int>(static_cast<std::size_t>(n), 1));
    auto m = multiplicities(deck, n);
    for (int k = 1; k <= n; ++k) CHECK(m[k] == stirling1_unsigned(n, k));
    if (n <= 5) CHECK(m == multiplicities_direct(deck, n));
  }
  FreeAssocInstance multi(std::vector<int>{2, 2, 1});
  CHECK(multiplicities(multi, 5) == multiplicities_direct(multi, 5));
  GraphInstance graphs(5);
  CHECK(multiplicities(graphs, 5) == multiplicities_direct(graphs, 5));

  CHECK(lyndon_count({1, 1, 1}) == 2);
  CHECK(lyndon_count({2, 2}) == 1);
  CHECK(lyndon_count({2, 1}) == 1);
  CHECK(deck_multiplicity_lower_bound({1, 1, 1}, 1) == 3);
}

TEST_CASE("closed forms against generic constructions") {
  CHECK(rock_f({2, 1, 1, 1}, {3, 2}) == 4);
  CHECK(rock_g({3, 2}, {2, 1, 1, 1}) == 5);
  for (int n = 1; n <= 7; ++n) {
    SymFnInstance sym(n);
    EigenSystem sys = eigensystem(sym, n);
    for (const EigenVector& g : sys.left)
      for (const Element& mu : sys.basis)
        CHECK(rock_g(element_partition(g.index), element_partition(mu)) == g.coeffs.coeff(mu));
    for (const EigenVector& f : sys.right)
      for (const Element& lambda : sys.basis)
        CHECK(rock_f(element_partition(f.index), element_partition(lambda)) == f.coeffs.coeff(lambda));
  }
}

TEST_CASE("top left eigenvector is a power sum") {
  for (int n = 1; n <= 8; ++n) {
    SymFnInstance sym(n);
    Element top = partition_element({n});
    Vec g = find(left_eigenbasis(sym, n), top).coeffs;
    for (const Partition& mu : partitions(n)) {
      Rational phi = 1;
      for (int p : mu) phi /= Rational(factorial(p));
      Rational expect = (n % 2 ? 1 : -1) * Rational(factorial(n - 1)) * power_sum_coeff(mu) * phi;
      CHECK(g.coeff(partition_element(mu)) == expect);
    }
  }
}

TEST_CASE("quasi-stationary point mass") {
  for (int n = 3; n <= 8; ++n) {
    SymFnInstance sym(n);
    QuasiStationary q = quasi_stationary(sym, n);
    std::vector<int> parts(static_cast<std::size_t>(n - 1), 1);
    parts.front() = 2;
    Element target = partition_element(parts);
    CHECK(q.pi1 == Distribution{{target, Rational(1)}});
    CHECK(q.pi2 == Distribution{{target, Rational(1)}});
  }
}

TEST_CASE("expected eigenfunction values decay geometrically") {
  SymFnInstance sym(6);
  TransitionMatrix k = transition_matrix(sym, 6, 2);
  EigenSystem sys = eigensystem(sym, 6);
  Element top = partition_element({6});
  for (const EigenVector& f : sys.right) {
    Rational beta = rational_pow(Rational(2), f.exponent - 6);
    for (int t = 0; t <= 3; ++t) {
      Distribution d = matrix_power_row(k, top, t);
      Rational ev = 0;
      for (const auto& [b, p] : d) ev += p * f.coeffs.coeff(b);
      CHECK(ev == rational_pow(beta, t) * f.coeffs.coeff(top));
    }
  }
  // left eigenvectors as well, via vK
  for (const EigenVector& g : sys.left)
    CHECK(apply_left(k, g.coeffs) == rational_pow(Rational(2), g.exponent - 6) * g.coeffs);
}

TEST_CASE("triangularity") {
  // f_μ vanishes off states that μ can reach, and g_λ off states λ reaches
  SymFnInstance sym(6);
  EigenSystem sys = eigensystem(sym, 6);
  for (const EigenVector& g : sys.left)
    for (const auto& [mu, c] : g.coeffs) CHECK_FALSE(canonical_less(g.index, mu));
  for (const EigenVector& f : sys.right)
    for (const auto& [lambda, c] : f.coeffs) CHECK_FALSE(canonical_less(lambda, f.index));
}
