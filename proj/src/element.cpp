#include "hopfchain/element.hpp"

#include <algorithm>
#include <functional>

namespace hopfchain {

int Element::degree() const {
  int d = 0;
  for (GenId c : g) d += gen_degree(c);
  return d;
}

Element make_monomial(std::vector<GenId> gens) {
  std::sort(gens.begin(), gens.end(), std::greater<>());
  return Element(std::move(gens));
}

Element concat(const Element& a, const Element& b) {
  std::vector<GenId> out = a.g;
  out.insert(out.end(), b.g.begin(), b.g.end());
  return Element(std::move(out));
}

Element merge_monomials(const Element& a, const Element& b) {
  std::vector<GenId> out;
  out.reserve(a.g.size() + b.g.size());
  std::merge(a.g.begin(), a.g.end(), b.g.begin(), b.g.end(), std::back_inserter(out),
             std::greater<>());
  return Element(std::move(out));
}

std::map<GenId, int> multiplicities_of(const Element& b) {
  std::map<GenId, int> m;
  for (GenId c : b.g) ++m[c];
  return m;
}

bool canonical_less(const Element& a, const Element& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  return a.g < b.g;
}

}  // namespace hopfchain
