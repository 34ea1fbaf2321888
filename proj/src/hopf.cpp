#include "hopfchain/hopf.hpp"

#include <algorithm>
#include <functional>

namespace hopfchain {

namespace {

Tensor unit_tensor(int arity) { return Tensor(static_cast<std::size_t>(arity)); }

int tensor_arity(const TensorComb& t) {
  return t.empty() ? 0 : static_cast<int>(t.begin()->first.size());
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

void HopfInstance::check_degree(int degree) const {
  if (degree < 0) fail(ErrorCode::invalid_input, "negative degree");
  if (degree > working_degree_)
    fail(ErrorCode::unsupported_size, name() + ": degree " + std::to_string(degree) +
                                          " exceeds working degree " +
                                          std::to_string(working_degree_));
}

std::string HopfInstance::element_label(const Element& b) const {
  if (b.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < b.g.size(); ++i) {
    if (i) s += '.';
    s += generator_label(b.g[i]);
  }
  return s;
}

Element HopfInstance::parse_element(const std::string& text) const {
  std::map<std::string, GenId> by_label;
  for (int d = 1; d <= working_degree_; ++d)
    for (GenId c : generators(d)) by_label.emplace(generator_label(c), c);
  std::vector<std::string> parts = split(text, '.');
  if (parts.size() == 1 && !by_label.count(text)) {
    // compact form such as "211" or "3142"
    parts.clear();
    for (char ch : text) parts.emplace_back(1, ch);
  }
  std::vector<GenId> gens;
  for (const std::string& p : parts) {
    auto it = by_label.find(p);
    if (it == by_label.end())
      fail(ErrorCode::invalid_input, name() + ": unknown generator '" + p + "' in '" + text + "'");
    gens.push_back(it->second);
  }
  if (kind() == Kind::polynomial) return make_monomial(std::move(gens));
  return Element(std::move(gens));
}

std::vector<Element> HopfInstance::generic_basis(int n) const {
  check_degree(n);
  std::vector<Element> out;
  std::vector<GenId> cur;
  const bool poly = kind() == Kind::polynomial;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int d = 1; d <= left; ++d) {
      for (GenId c : generators(d)) {
        if (poly && !cur.empty() && c > cur.back()) continue;
        cur.push_back(c);
        rec(left - d);
        cur.pop_back();
      }
    }
  };
  rec(n);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Element> HopfInstance::basis(int n) const { return generic_basis(n); }

Grading HopfInstance::grading(const Element& b) const { return {b.degree()}; }

std::vector<Element> HopfInstance::basis_of_grading(const Grading& g) const {
  if (g.size() != 1) fail(ErrorCode::invalid_input, name() + ": expected a single degree");
  return basis(g[0]);
}

std::optional<Element> HopfInstance::sample_step(const Element&, int, Rng&) const {
  return std::nullopt;
}

const TensorComb& HopfInstance::coproduct_of(GenId c) const {
  auto it = coproduct_cache_.find(c);
  if (it != coproduct_cache_.end()) return it->second;
  return coproduct_cache_.emplace(c, generator_coproduct(c)).first->second;
}

const TensorComb& HopfInstance::iterated_coproduct_of(GenId c, int a) const {
  auto key = std::make_pair(c, a);
  auto it = iterated_cache_.find(key);
  if (it != iterated_cache_.end()) return it->second;
  TensorComb out;
  if (a == 1) {
    out.add(Tensor{Element{c}}, 1);
  } else {
    // (ι ⊗ Δ^[a-1]) Δ
    for (const auto& [pair, coef] : coproduct_of(c)) {
      TensorComb rest = coproduct_iterated(*this, pair[1], a - 1);
      for (const auto& [t, c2] : rest) {
        Tensor full;
        full.reserve(static_cast<std::size_t>(a));
        full.push_back(pair[0]);
        full.insert(full.end(), t.begin(), t.end());
        out.add(full, coef * c2);
      }
    }
  }
  return iterated_cache_.emplace(key, std::move(out)).first->second;
}

const Vec& HopfInstance::hopf_power_of(GenId c, int a) const {
  auto key = std::make_pair(c, a);
  auto it = power_cache_.find(key);
  if (it != power_cache_.end()) return it->second;
  Vec out;
  for (const auto& [t, coef] : iterated_coproduct_of(c, a)) out.add(multiply_out(*this, t), coef);
  return power_cache_.emplace(key, std::move(out)).first->second;
}

const Vec& HopfInstance::eulerian_of(GenId c) const {
  auto it = eulerian_cache_.find(c);
  if (it != eulerian_cache_.end()) return it->second;
  Vec out = eulerian_idempotent(*this, Element{c});
  return eulerian_cache_.emplace(c, std::move(out)).first->second;
}

Element product(const HopfInstance& h, const Element& x, const Element& y) {
  if (h.kind() == Kind::polynomial) return merge_monomials(x, y);
  return concat(x, y);
}

Vec product(const HopfInstance& h, const Vec& x, const Vec& y) {
  Vec out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) out.add(product(h, u, v), cu * cv);
  return out;
}

Tensor tensor_product(const HopfInstance& h, const Tensor& x, const Tensor& y) {
  if (x.size() != y.size()) fail(ErrorCode::internal_inconsistency, "tensor arity mismatch");
  Tensor out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = product(h, x[i], y[i]);
  return out;
}

TensorComb tensor_product(const HopfInstance& h, const TensorComb& x, const TensorComb& y) {
  TensorComb out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) out.add(tensor_product(h, u, v), cu * cv);
  return out;
}

TensorComb coproduct_iterated(const HopfInstance& h, const Element& b, int a) {
  if (a < 1) fail(ErrorCode::invalid_input, "iterated coproduct needs a >= 1");
  TensorComb out(unit_tensor(a), 1);
  for (GenId c : b.g) out = tensor_product(h, out, h.iterated_coproduct_of(c, a));
  return out;
}

TensorComb reduced_coproduct_iterated(const HopfInstance& h, const Element& b, int a) {
  if (a < 1) fail(ErrorCode::invalid_input, "iterated coproduct needs a >= 1");
  TensorComb out;
  if (a > b.degree()) return out;
  for (const auto& [t, c] : coproduct_iterated(h, b, a)) {
    bool positive = std::none_of(t.begin(), t.end(), [](const Element& e) { return e.empty(); });
    if (positive) out.add(t, c);
  }
  return out;
}

Element multiply_out(const HopfInstance& h, const Tensor& t) {
  Element out;
  for (const Element& e : t) out = product(h, out, e);
  return out;
}

namespace {

// Σ over choices of one iterated-coproduct term per generator, slots
// multiplied as they are filled; avoids materializing Δ^[a](b).
void power_expand(const HopfInstance& h, const Element& b, int a, std::size_t i, Tensor& slots,
                  const Rational& coef, Vec& out) {
  if (i == b.g.size()) {
    out.add(multiply_out(h, slots), coef);
    return;
  }
  for (const auto& [t, c] : h.iterated_coproduct_of(b.g[i], a)) {
    Tensor saved = slots;
    for (std::size_t s = 0; s < slots.size(); ++s) slots[s] = product(h, slots[s], t[s]);
    power_expand(h, b, a, i + 1, slots, coef * c, out);
    slots = std::move(saved);
  }
}

}  // namespace

Vec hopf_power(const HopfInstance& h, const Element& b, int a) {
  if (a < 1) fail(ErrorCode::invalid_input, "hopf power needs a >= 1");
  if (h.kind() == Kind::polynomial) {
    // Ψ^a is an algebra map when H is commutative
    Vec out(Element{}, 1);
    for (GenId c : b.g) out = product(h, out, h.hopf_power_of(c, a));
    return out;
  }
  Vec out;
  Tensor slots = unit_tensor(a);
  power_expand(h, b, a, 0, slots, Rational(1), out);
  return out;
}

Vec hopf_power(const HopfInstance& h, const Vec& x, int a) {
  Vec out;
  for (const auto& [b, c] : x) out += c * hopf_power(h, b, a);
  return out;
}

Vec eulerian_idempotent(const HopfInstance& h, const Element& b) {
  Vec out;
  const int n = b.degree();
  for (int a = 1; a <= n; ++a) {
    Rational s = make_rational(a % 2 == 1 ? 1 : -1, a);
    for (const auto& [t, c] : reduced_coproduct_iterated(h, b, a)) out.add(multiply_out(h, t), s * c);
  }
  return out;
}

Vec eulerian_idempotent(const HopfInstance& h, const Vec& x) {
  Vec out;
  for (const auto& [b, c] : x) out += c * eulerian_idempotent(h, b);
  return out;
}

Vec higher_eulerian(const HopfInstance& h, const Element& b, int i) {
  if (i < 1) fail(ErrorCode::invalid_input, "higher Eulerian idempotent needs i >= 1");
  Vec out;
  for (const auto& [t, c] : reduced_coproduct_iterated(h, b, i)) {
    Vec term(Element{}, c);
    for (const Element& slot : t) term = product(h, term, eulerian_idempotent(h, slot));
    out += term;
  }
  out *= Rational(1) / Rational(factorial(i));
  return out;
}

Vec higher_eulerian(const HopfInstance& h, const Vec& x, int i) {
  Vec out;
  for (const auto& [b, c] : x) out += c * higher_eulerian(h, b, i);
  return out;
}

bool psi_sum_preserving(const HopfInstance& h, int n, int a) {
  const Rational target(integer_pow(a, static_cast<unsigned long>(n)));
  for (const Element& b : h.basis(n))
    if (hopf_power(h, b, a).coefficient_sum() != target) return false;
  return true;
}

TensorComb apply_coproduct_at(const HopfInstance& h, const TensorComb& t, std::size_t slot) {
  TensorComb out;
  if (!t.empty() && slot >= static_cast<std::size_t>(tensor_arity(t)))
    fail(ErrorCode::invalid_input, "coproduct slot out of range");
  for (const auto& [term, c] : t) {
    for (const auto& [pair, c2] : coproduct_iterated(h, term[slot], 2)) {
      Tensor next;
      next.reserve(term.size() + 1);
      next.insert(next.end(), term.begin(), term.begin() + static_cast<long>(slot));
      next.push_back(pair[0]);
      next.push_back(pair[1]);
      next.insert(next.end(), term.begin() + static_cast<long>(slot) + 1, term.end());
      out.add(next, c * c2);
    }
  }
  return out;
}

}  // namespace hopfchain
