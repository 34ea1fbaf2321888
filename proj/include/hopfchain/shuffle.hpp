#pragma once

#include "hopfchain/chain.hpp"

#include <string>
#include <vector>

namespace hopfchain {

using Perm = std::vector<int>;  // one-line notation, values 1..n

int descents(const std::vector<int>& w);
int ascents(const std::vector<int>& w);
int inversions(const std::vector<int>& w);
int peaks(const std::vector<int>& w);
int troughs(const std::vector<int>& w);
int straights(const std::vector<int>& w);
int rising_sequences(const Perm& w);  // d(w^-1) + 1
Perm inverse(const Perm& w);
Perm compose(const Perm& p, const Perm& q);  // (p∘q)(i) = p(q(i))
std::vector<Perm> all_permutations(int n);

Rational gsr_probability(int n, int a, const Perm& w);
// Entry (σ, π) = Q_a(π^-1 ∘ σ): the forward a-shuffle taking deck σ to π.
TransitionMatrix gsr_forward_matrix(int n, int a);
// (P ∗ Q)(σ) = Σ_τ P(τ) Q(σ ∘ τ^-1).
std::vector<Rational> convolve(const std::vector<Perm>& perms, const std::vector<Rational>& p,
                               const std::vector<Rational>& q);

struct NamedEigenfunction {
  std::string name;
  std::vector<Rational> values;  // indexed like the deck basis
  int exponent = 0;              // eigenvalue a^exponent
};
// Right eigenfunctions of the forward shuffle on decks of composition ν,
// each verified against the exact matrix before being returned.
std::vector<NamedEigenfunction> named_eigenfunctions(const std::vector<int>& nu, int a);

// f_w(w') for words with distinct letters, via the Lyndon-factor product rule.
int pattern_eigenfunction_value(const std::vector<int>& w, const std::vector<int>& w2);

// q-analogues evaluated at rational q > 0.
Rational q_integer(int j, const Rational& q);
Rational q_factorial(int j, const Rational& q);
Rational q_binomial(int n, int k, const Rational& q);

// Normalizer z_n = Σ_j [n choose j]_q, one term per (cut, interleaving).
Rational q_shuffle_normalizer(int n, const Rational& q);
Rational q_shuffle_probability(int n, const Rational& q, const Perm& w);
Perm q_shuffle_sample(int n, const Rational& q, std::uint64_t seed, std::uint64_t stream = 0);
// Exact law of the sequential sampler, summed over all cut/drop paths.
std::map<Perm, Rational> q_shuffle_path_law(int n, const Rational& q);

struct BilinearForm {
  std::vector<std::vector<int>> m;  // symmetric, indexed by letter-1
  static BilinearForm all_ones(int letters);
  int operator()(int x, int y) const { return m[x - 1][y - 1]; }
};

int quantized_weight(const std::vector<int>& subset_positions, const std::vector<int>& w,
                     const BilinearForm& form);  // positions are 1-based
std::map<std::vector<int>, Rational> quantized_inverse_shuffle_step(const std::vector<int>& w,
                                                                    const Rational& q,
                                                                    const BilinearForm& form);

}  // namespace hopfchain
