#pragma once

#include "hopfchain/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

namespace hopfchain {

// A generator id packs (degree, key); integer order is the generator order,
// which therefore refines the ordering by degree.
using GenId = std::uint64_t;

constexpr int kDegreeShift = 58;
constexpr std::uint64_t kKeyMask = (std::uint64_t{1} << kDegreeShift) - 1;

constexpr GenId make_gen(int degree, std::uint64_t key) {
  return (static_cast<std::uint64_t>(degree) << kDegreeShift) | (key & kKeyMask);
}
constexpr int gen_degree(GenId g) { return static_cast<int>(g >> kDegreeShift); }
constexpr std::uint64_t gen_key(GenId g) { return g & kKeyMask; }

using Word = std::vector<GenId>;

// A basis element given by its factorization into generators. Words keep
// the order; monomials are stored weakly decreasing.
struct Element {
  std::vector<GenId> g;

  Element() = default;
  explicit Element(std::vector<GenId> gens) : g(std::move(gens)) {}
  Element(std::initializer_list<GenId> gens) : g(gens) {}

  int degree() const;
  int length() const { return static_cast<int>(g.size()); }
  bool empty() const { return g.empty(); }

  auto operator<=>(const Element&) const = default;
  bool operator==(const Element&) const = default;
};

using Monomial = Element;

Element make_monomial(std::vector<GenId> gens);
Element concat(const Element& a, const Element& b);
Element merge_monomials(const Element& a, const Element& b);

// Multiplicity a_c(b) of each generator.
std::map<GenId, int> multiplicities_of(const Element& b);

// Canonical state order: length descending, then lexicographic ascending.
bool canonical_less(const Element& a, const Element& b);

using Tensor = std::vector<Element>;

template <class Key>
class LinComb {
 public:
  using Map = std::map<Key, Rational>;
  using const_iterator = typename Map::const_iterator;

  LinComb() = default;
  LinComb(const Key& k, const Rational& c) { add(k, c); }

  void add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void set(const Key& k, const Rational& c) {
    if (c == 0) {
      terms_.erase(k);
    } else {
      terms_[k] = c;
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }

  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

  Rational coefficient_sum() const {
    Rational s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
  }

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

 private:
  Map terms_;
};

using Vec = LinComb<Element>;
using TensorComb = LinComb<Tensor>;

}  // namespace hopfchain
