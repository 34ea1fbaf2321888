#pragma once

#include "hopfchain/hopf.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hopfchain {

struct RescaleMap {
  std::map<GenId, Rational> phi;
  Rational of(const Element& b) const;
};

// φ(c) for one generator, computed recursively and memoized.
Rational rescale_generator(const HopfInstance& h, GenId c);
Rational rescale_element(const HopfInstance& h, const Element& b);
RescaleMap rescale(const HopfInstance& h, int max_degree);

enum class Direction { inverse, forward };

struct TransitionMatrix {
  int n = 0;
  int a = 0;
  Direction direction = Direction::inverse;
  std::vector<Element> basis;
  std::map<Element, std::size_t> index;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;

  std::size_t size() const { return basis.size(); }
  Rational at(std::size_t i, std::size_t j) const;
  std::vector<std::vector<Rational>> dense() const;
};

using Distribution = std::map<Element, Rational>;

// Row of the rescaled chain: K_a(b, ·).
Vec transition_row(const HopfInstance& h, const Element& b, int a);
TransitionMatrix transition_matrix(const HopfInstance& h, int n, int a);
TransitionMatrix transition_matrix_on(const HopfInstance& h, std::vector<Element> states, int a);
TransitionMatrix transpose(const TransitionMatrix& k);
TransitionMatrix multiply(const TransitionMatrix& x, const TransitionMatrix& y);
bool same_entries(const TransitionMatrix& x, const TransitionMatrix& y);
bool is_row_stochastic(const TransitionMatrix& k);
bool power_law_check(const HopfInstance& h, int n, int a, int b);

struct StationarySet {
  std::vector<Element> absorbing;
  std::vector<Distribution> stationary;
};
StationarySet stationary_set(const HopfInstance& h, int n);

// Distribution after `steps` steps from `start`, propagated row by row.
Distribution evolve(const HopfInstance& h, const Element& start, int a, int steps);
Distribution row_distribution(const TransitionMatrix& k, const Element& b);
Distribution matrix_power_row(const TransitionMatrix& k, const Element& b, int steps);

struct Distances {
  Rational tv;
  std::optional<Rational> sep;
  std::optional<Rational> linf;
};
Distances distances(const Distribution& row, const Distribution& pi);

// Rock-breaking from (n) after k binary steps: n balls dropped uniformly into
// 2^k boxes, read off as the partition of nonempty box counts.
Rational rock_occupancy(int n, int k, const std::vector<int>& lambda);

std::vector<Element> simulate(const HopfInstance& h, int n, int a, const Element& start, int steps,
                              std::uint64_t seed, std::uint64_t stream = 0);
Element sample_from_row(const Vec& row, Rng& rng);

}  // namespace hopfchain
