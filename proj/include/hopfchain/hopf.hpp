#pragma once

#include "hopfchain/element.hpp"
#include "hopfchain/error.hpp"
#include "hopfchain/rng.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hopfchain {

enum class Kind { polynomial, free_cocommutative };

using Grading = std::vector<int>;

class HopfInstance {
 public:
  explicit HopfInstance(int working_degree) : working_degree_(working_degree) {}
  virtual ~HopfInstance() = default;
  HopfInstance(const HopfInstance&) = delete;
  HopfInstance& operator=(const HopfInstance&) = delete;

  virtual std::string name() const = 0;
  virtual Kind kind() const = 0;
  virtual bool commutative() const { return kind() == Kind::polynomial; }
  virtual bool cocommutative() const { return true; }

  // Generators of the given degree, ascending.
  virtual std::vector<GenId> generators(int degree) const = 0;
  // Δ(c) as a combination of pairs.
  virtual TensorComb generator_coproduct(GenId c) const = 0;
  virtual std::string generator_label(GenId c) const = 0;
  virtual std::string element_label(const Element& b) const;
  virtual Element parse_element(const std::string& text) const;

  // Degree-n basis in canonical order (for a deck instance: the graded piece).
  virtual std::vector<Element> basis(int n) const;
  virtual Grading grading(const Element& b) const;
  virtual std::vector<Element> basis_of_grading(const Grading& g) const;

  // Native one-step sampler of the rescaled chain, if the instance has one.
  virtual std::optional<Element> sample_step(const Element& b, int a, Rng& rng) const;

  int working_degree() const { return working_degree_; }
  void check_degree(int degree) const;

  // Memoized pieces used by the generic maps.
  const TensorComb& coproduct_of(GenId c) const;
  const TensorComb& iterated_coproduct_of(GenId c, int a) const;
  const Vec& hopf_power_of(GenId c, int a) const;
  const Vec& eulerian_of(GenId c) const;
  // φ values, filled in by the chain builder.
  std::map<GenId, Rational>& rescale_cache() const { return rescale_cache_; }

 protected:
  std::vector<Element> generic_basis(int n) const;

 private:
  int working_degree_;
  mutable std::map<GenId, TensorComb> coproduct_cache_;
  mutable std::map<std::pair<GenId, int>, TensorComb> iterated_cache_;
  mutable std::map<std::pair<GenId, int>, Vec> power_cache_;
  mutable std::map<GenId, Vec> eulerian_cache_;
  mutable std::map<GenId, Rational> rescale_cache_;
};

Element product(const HopfInstance& h, const Element& x, const Element& y);
Vec product(const HopfInstance& h, const Vec& x, const Vec& y);
Tensor tensor_product(const HopfInstance& h, const Tensor& x, const Tensor& y);
TensorComb tensor_product(const HopfInstance& h, const TensorComb& x, const TensorComb& y);

TensorComb coproduct_iterated(const HopfInstance& h, const Element& b, int a);
TensorComb reduced_coproduct_iterated(const HopfInstance& h, const Element& b, int a);
Element multiply_out(const HopfInstance& h, const Tensor& t);

Vec hopf_power(const HopfInstance& h, const Element& b, int a);
Vec hopf_power(const HopfInstance& h, const Vec& x, int a);

Vec eulerian_idempotent(const HopfInstance& h, const Element& b);
Vec eulerian_idempotent(const HopfInstance& h, const Vec& x);
Vec higher_eulerian(const HopfInstance& h, const Element& b, int i);
Vec higher_eulerian(const HopfInstance& h, const Vec& x, int i);

// Coefficients of Ψ^a(b) sum to a^deg(b) for every b of degree n.
bool psi_sum_preserving(const HopfInstance& h, int n, int a);

// Applies Δ to one tensor slot of every term.
TensorComb apply_coproduct_at(const HopfInstance& h, const TensorComb& t, std::size_t slot);

}  // namespace hopfchain
