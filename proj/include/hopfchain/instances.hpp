#pragma once

#include "hopfchain/graph.hpp"
#include "hopfchain/hopf.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfchain {

// Symmetric functions in the raw e-basis: Δ(e_i) = Σ e_j ⊗ e_{i-j}.
class SymFnInstance : public HopfInstance {
 public:
  explicit SymFnInstance(int working_degree);
  std::string name() const override { return "symfn"; }
  Kind kind() const override { return Kind::polynomial; }
  std::vector<GenId> generators(int degree) const override;
  TensorComb generator_coproduct(GenId c) const override;
  std::string generator_label(GenId c) const override;
  std::optional<Element> sample_step(const Element& b, int a, Rng& rng) const override;
};

Element partition_element(const std::vector<int>& parts);
std::vector<int> element_partition(const Element& b);

// Λ / (e_1): generators e_2, e_3, ...
class QuotientSymInstance : public HopfInstance {
 public:
  explicit QuotientSymInstance(int working_degree);
  std::string name() const override { return "quotient-sym"; }
  Kind kind() const override { return Kind::polynomial; }
  std::vector<GenId> generators(int degree) const override;
  TensorComb generator_coproduct(GenId c) const override;
  std::string generator_label(GenId c) const override;
};

// Free associative algebra on primitive letters 1..N, optionally restricted
// to the deck composition ν.
class FreeAssocInstance : public HopfInstance {
 public:
  FreeAssocInstance(int letters, int working_degree);
  explicit FreeAssocInstance(std::vector<int> nu);
  std::string name() const override { return "deck"; }
  Kind kind() const override { return Kind::free_cocommutative; }
  std::vector<GenId> generators(int degree) const override;
  TensorComb generator_coproduct(GenId c) const override;
  std::string generator_label(GenId c) const override;
  std::vector<Element> basis(int n) const override;
  Grading grading(const Element& b) const override;
  std::vector<Element> basis_of_grading(const Grading& g) const override;
  std::optional<Element> sample_step(const Element& b, int a, Rng& rng) const override;

  int letters() const { return letters_; }
  const std::vector<int>& nu() const { return nu_; }

 private:
  int letters_;
  std::vector<int> nu_;
};

GenId letter(int i);
Element word_element(const std::vector<int>& letters);
std::vector<int> element_letters(const Element& b);
// All words with the given letter counts, lexicographically ascending.
std::vector<std::vector<int>> multiset_words(const std::vector<int>& counts);

// Unlabeled simple graphs; generators are connected graphs.
class GraphInstance : public HopfInstance {
 public:
  explicit GraphInstance(int working_degree);
  std::string name() const override { return "graph"; }
  Kind kind() const override { return Kind::polynomial; }
  std::vector<GenId> generators(int degree) const override;
  TensorComb generator_coproduct(GenId c) const override;
  std::string generator_label(GenId c) const override;
  std::optional<Element> sample_step(const Element& b, int a, Rng& rng) const override;
  Element parse_element(const std::string& text) const override;

  Element from_graph(const Graph& g) const;
  Graph to_graph(const Element& b) const;

 private:
  mutable std::map<int, std::vector<GenId>> generator_cache_;
};

// Labeled graphs on {1..n}; product shifts labels, generators have no cut index.
class LabeledGraphInstance : public HopfInstance {
 public:
  explicit LabeledGraphInstance(int working_degree);
  std::string name() const override { return "labeled-graph"; }
  Kind kind() const override { return Kind::free_cocommutative; }
  std::vector<GenId> generators(int degree) const override;
  TensorComb generator_coproduct(GenId c) const override;
  std::string generator_label(GenId c) const override;
  Element parse_element(const std::string& text) const override;

  Element factorize(const Graph& g) const;
  Graph to_graph(const Element& b) const;

 private:
  mutable std::map<int, std::vector<GenId>> generator_cache_;
};

// Simplicial complexes; generators have connected 1-skeleton.
class SimplicialInstance : public HopfInstance {
 public:
  explicit SimplicialInstance(int working_degree);
  std::string name() const override { return "simplicial"; }
  Kind kind() const override { return Kind::polynomial; }
  std::vector<GenId> generators(int degree) const override;
  TensorComb generator_coproduct(GenId c) const override;
  std::string generator_label(GenId c) const override;
  std::optional<Element> sample_step(const Element& b, int a, Rng& rng) const override;
  Element parse_element(const std::string& text) const override;

  Element from_complex(const Complex& c) const;
  Complex to_complex(const Element& b) const;

 private:
  mutable std::map<int, std::vector<GenId>> generator_cache_;
};

// Single-vertex generator shared by the graph-like instances.
GenId vertex_generator();

std::unique_ptr<HopfInstance> make_instance(const std::string& name, int working_degree,
                                            const std::vector<int>& nu = {});

}  // namespace hopfchain
