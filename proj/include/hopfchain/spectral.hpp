#pragma once

#include "hopfchain/chain.hpp"
#include "hopfchain/partition.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hopfchain {

enum class Side { left, right };

struct EigenVector {
  Side side = Side::left;
  Element index;
  int exponent = 0;  // eigenvalue a^exponent on H, a^(exponent-n) for the chain
  Vec coeffs;
};

struct EigenSystem {
  int n = 0;
  std::vector<Element> basis;
  std::vector<EigenVector> left;
  std::vector<EigenVector> right;
};

// Number of Lyndon factors (free) or generator factors (polynomial).
int eigen_exponent(const HopfInstance& h, const Element& b);

// Both bases are expressed in the coordinates of the rescaled chain.
std::vector<EigenVector> left_eigenbasis(const HopfInstance& h, int n);
std::vector<EigenVector> right_eigenbasis(const HopfInstance& h, int n);
EigenSystem eigensystem(const HopfInstance& h, int n);

// Pairing matrix f_b(g_b'), which must be the identity.
std::vector<std::vector<Rational>> pairing_matrix(const EigenSystem& sys);
bool duality_certificate(const EigenSystem& sys);

struct EigenCheckReport {
  bool ok = true;
  std::vector<std::string> failures;
};
EigenCheckReport eigen_equation_check(const TransitionMatrix& k, const EigenSystem& sys);

// Exponent k -> multiplicity of a^k (a^(k-n) for the chain), from the
// generating function ∏ (1 - y x^γ)^(-d_γ).
std::map<int, Integer> multiplicities(const HopfInstance& h, int n);
// Direct count over the basis.
std::map<int, Integer> multiplicities_direct(const HopfInstance& h, int n);
// Lower bound on the multiplicity of a^(-k) for a deck of composition ν:
// Lyndon words of length k+1 using letter i at most ν_i times.
Integer deck_multiplicity_lower_bound(const std::vector<int>& nu, int k);
// Lyndon words with the given letter counts (necklace formula).
Integer lyndon_count(const std::vector<int>& counts);

Rational rock_f(const Partition& mu, const Partition& lambda);
Rational rock_g(const Partition& lambda, const Partition& mu);

struct QuasiStationary {
  Distribution pi1;
  Distribution pi2;
};
// π¹ ∝ g_1 and π² ∝ g_1 f_1 on the non-absorbed states, where g_1, f_1
// belong to the second-largest eigenvalue a^(-1).
QuasiStationary quasi_stationary(const TransitionMatrix& k, const EigenSystem& sys);
QuasiStationary quasi_stationary(const HopfInstance& h, int n);

}  // namespace hopfchain
