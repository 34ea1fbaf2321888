#pragma once

#include "hopfchain/graph.hpp"
#include "hopfchain/hopf.hpp"
#include "hopfchain/partition.hpp"

#include <map>
#include <set>
#include <vector>

namespace hopfchain {

struct QuasisymFunction {
  int degree = 0;
  std::map<Composition, Rational> coeffs;  // coefficient of M_α, positive parts

  // Value at (x, ..., x, 0, ...) with `count` copies of x.
  Rational evaluate_constant(const Rational& x, int count) const;
};

struct CharacterSpec {
  std::set<GenId> C;
  bool contains(const Element& b) const;
};

// η-coefficients in the rescaled basis, ζ^C applied to every tensor factor.
QuasisymFunction chromatic_quasisym(const HopfInstance& h, const Element& b,
                                    const CharacterSpec& spec);
Rational absorption_probability(const HopfInstance& h, const Element& b, int a,
                                const CharacterSpec& spec);
// Probability mass K_a(b, ·) on states built from C, read off the exact row.
Rational target_mass(const HopfInstance& h, const Element& b, int a, const CharacterSpec& spec);

constexpr int kChromaticCap = 10;

// Integer coefficients, index = power of x.
using IntPoly = std::vector<Integer>;
IntPoly chromatic_polynomial(const Graph& g);
Integer evaluate(const IntPoly& p, const Integer& x);
Integer count_proper_colorings(const Graph& g, int colors);

Rational simplex_absorption(const Complex& c, int k);

}  // namespace hopfchain
