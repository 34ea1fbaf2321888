#include "hopfchain/instances.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

namespace hopfchain {

namespace {

std::string replace_all(std::string s, char from, char to) {
  std::replace(s.begin(), s.end(), from, to);
  return s;
}

std::vector<std::string> split_dots(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == '.') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// "<prefix><d>_<bits>"; degree-1 generators are written "<prefix>1".
std::string shape_label(char prefix, int d, int width, std::uint64_t key) {
  std::string s(1, prefix);
  s += std::to_string(d);
  if (width > 0) {
    s += '_';
    for (int b = width - 1; b >= 0; --b) s += ((key >> b) & 1u) ? '1' : '0';
  }
  return s;
}

std::pair<int, std::uint64_t> parse_shape_label(char prefix, const std::string& s) {
  if (s.size() < 2 || s[0] != prefix)
    fail(ErrorCode::invalid_input, "bad generator label '" + s + "'");
  auto us = s.find('_');
  int d = 0;
  std::uint64_t key = 0;
  try {
    d = std::stoi(s.substr(1, us == std::string::npos ? std::string::npos : us - 1));
    if (us != std::string::npos) key = std::stoull(s.substr(us + 1), nullptr, 2);
  } catch (const std::exception&) {
    fail(ErrorCode::invalid_input, "bad generator label '" + s + "'");
  }
  if (d < 1) fail(ErrorCode::invalid_input, "bad generator label '" + s + "'");
  return {d, key};
}

int complex_width(int d) { return (1 << d) - 1 - d; }

}  // namespace

GenId vertex_generator() { return make_gen(1, 0); }

// ---- symmetric functions ----

SymFnInstance::SymFnInstance(int working_degree) : HopfInstance(working_degree) {}

std::vector<GenId> SymFnInstance::generators(int degree) const {
  if (degree < 1 || degree > working_degree()) return {};
  return {make_gen(degree, static_cast<std::uint64_t>(degree))};
}

TensorComb SymFnInstance::generator_coproduct(GenId c) const {
  const int i = gen_degree(c);
  TensorComb out;
  for (int j = 0; j <= i; ++j) {
    Element left = j ? Element{make_gen(j, static_cast<std::uint64_t>(j))} : Element{};
    Element right = (i - j) ? Element{make_gen(i - j, static_cast<std::uint64_t>(i - j))} : Element{};
    out.add(Tensor{left, right}, 1);
  }
  return out;
}

std::string SymFnInstance::generator_label(GenId c) const { return std::to_string(gen_degree(c)); }

std::optional<Element> SymFnInstance::sample_step(const Element& b, int a, Rng& rng) const {
  // each unit of mass lands in one of a pieces uniformly
  std::vector<GenId> out;
  std::vector<int> counts(static_cast<std::size_t>(a));
  for (GenId c : b.g) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int u = 0; u < gen_degree(c); ++u) ++counts[rng.below(static_cast<std::uint64_t>(a))];
    for (int m : counts)
      if (m) out.push_back(make_gen(m, static_cast<std::uint64_t>(m)));
  }
  return make_monomial(std::move(out));
}

Element partition_element(const std::vector<int>& parts) {
  std::vector<GenId> gens;
  for (int p : parts) {
    if (p < 1) fail(ErrorCode::invalid_input, "partition parts must be positive");
    gens.push_back(make_gen(p, static_cast<std::uint64_t>(p)));
  }
  return make_monomial(std::move(gens));
}

std::vector<int> element_partition(const Element& b) {
  std::vector<int> parts;
  for (GenId c : b.g) parts.push_back(gen_degree(c));
  return parts;
}

// ---- quotient by e_1 ----

QuotientSymInstance::QuotientSymInstance(int working_degree) : HopfInstance(working_degree) {}

std::vector<GenId> QuotientSymInstance::generators(int degree) const {
  if (degree < 2 || degree > working_degree()) return {};
  return {make_gen(degree, static_cast<std::uint64_t>(degree))};
}

TensorComb QuotientSymInstance::generator_coproduct(GenId c) const {
  const int n = gen_degree(c);
  TensorComb out;
  out.add(Tensor{Element{}, Element{c}}, 1);
  out.add(Tensor{Element{c}, Element{}}, 1);
  for (int j = 2; j <= n - 2; ++j)
    out.add(Tensor{Element{make_gen(j, static_cast<std::uint64_t>(j))},
                   Element{make_gen(n - j, static_cast<std::uint64_t>(n - j))}},
            1);
  return out;
}

std::string QuotientSymInstance::generator_label(GenId c) const {
  return "e" + std::to_string(gen_degree(c));
}

// ---- free associative algebra / decks ----

GenId letter(int i) { return make_gen(1, static_cast<std::uint64_t>(i)); }

Element word_element(const std::vector<int>& letters) {
  std::vector<GenId> g;
  for (int x : letters) g.push_back(letter(x));
  return Element(std::move(g));
}

std::vector<int> element_letters(const Element& b) {
  std::vector<int> out;
  for (GenId c : b.g) out.push_back(static_cast<int>(gen_key(c)));
  return out;
}

std::vector<std::vector<int>> multiset_words(const std::vector<int>& counts) {
  std::vector<int> w;
  for (std::size_t i = 0; i < counts.size(); ++i)
    for (int k = 0; k < counts[i]; ++k) w.push_back(static_cast<int>(i) + 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

FreeAssocInstance::FreeAssocInstance(int letters, int working_degree)
    : HopfInstance(working_degree), letters_(letters) {
  if (letters < 1) fail(ErrorCode::invalid_input, "need at least one letter");
}

FreeAssocInstance::FreeAssocInstance(std::vector<int> nu)
    : HopfInstance(std::accumulate(nu.begin(), nu.end(), 0)),
      letters_(static_cast<int>(nu.size())),
      nu_(std::move(nu)) {
  if (nu_.empty()) fail(ErrorCode::invalid_input, "empty deck composition");
  for (int x : nu_)
    if (x < 0) fail(ErrorCode::invalid_input, "deck composition has a negative part");
}

std::vector<GenId> FreeAssocInstance::generators(int degree) const {
  std::vector<GenId> out;
  if (degree != 1) return out;
  for (int i = 1; i <= letters_; ++i) out.push_back(letter(i));
  return out;
}

TensorComb FreeAssocInstance::generator_coproduct(GenId c) const {
  TensorComb out;
  out.add(Tensor{Element{}, Element{c}}, 1);
  out.add(Tensor{Element{c}, Element{}}, 1);
  return out;
}

std::string FreeAssocInstance::generator_label(GenId c) const {
  return std::to_string(gen_key(c));
}

std::vector<Element> FreeAssocInstance::basis(int n) const {
  if (nu_.empty()) return generic_basis(n);
  if (n != working_degree())
    fail(ErrorCode::invalid_input, "deck instance only has degree " + std::to_string(working_degree()));
  return basis_of_grading(nu_);
}

Grading FreeAssocInstance::grading(const Element& b) const {
  Grading g(static_cast<std::size_t>(letters_), 0);
  for (GenId c : b.g) ++g[gen_key(c) - 1];
  return g;
}

std::vector<Element> FreeAssocInstance::basis_of_grading(const Grading& g) const {
  if (static_cast<int>(g.size()) != letters_)
    fail(ErrorCode::invalid_input, "grading has the wrong number of letters");
  std::vector<Element> out;
  for (const auto& w : multiset_words(g)) out.push_back(word_element(w));
  return out;
}

std::optional<Element> FreeAssocInstance::sample_step(const Element& b, int a, Rng& rng) const {
  // inverse a-shuffle: a digit per card, then stable sort by digit
  std::vector<std::pair<std::uint64_t, GenId>> tagged;
  for (GenId c : b.g) tagged.emplace_back(rng.below(static_cast<std::uint64_t>(a)), c);
  std::stable_sort(tagged.begin(), tagged.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<GenId> out;
  for (const auto& t : tagged) out.push_back(t.second);
  return Element(std::move(out));
}

// ---- unlabeled graphs ----

GraphInstance::GraphInstance(int working_degree) : HopfInstance(working_degree) {}

std::vector<GenId> GraphInstance::generators(int degree) const {
  if (degree < 1 || degree > working_degree()) return {};
  auto it = generator_cache_.find(degree);
  if (it != generator_cache_.end()) return it->second;
  if (degree > 7)
    fail(ErrorCode::unsupported_size, "enumerating connected graphs above 7 vertices");
  std::set<std::uint64_t> keys;
  if (degree == 1) {
    keys.insert(0);
  } else {
    // every connected graph is a connected graph plus one non-cut vertex
    for (GenId smaller : generators(degree - 1)) {
      Graph base = graph_from_key(degree - 1, gen_key(smaller));
      for (std::uint32_t nb = 1; nb < (1u << (degree - 1)); ++nb) {
        Graph g(degree);
        for (int u = 0; u < degree - 1; ++u)
          for (int v = u + 1; v < degree - 1; ++v)
            if (base.has_edge(u, v)) g.add_edge(u, v);
        for (int u = 0; u < degree - 1; ++u)
          if ((nb >> u) & 1u) g.add_edge(u, degree - 1);
        keys.insert(canonical_key(g));
      }
    }
  }
  std::vector<GenId> out;
  for (auto k : keys) out.push_back(make_gen(degree, k));
  generator_cache_[degree] = out;
  return out;
}

Element GraphInstance::from_graph(const Graph& g) const {
  std::vector<GenId> gens;
  for (std::uint32_t comp : connected_components(g)) {
    Graph sub = induced_subgraph(g, comp);
    gens.push_back(make_gen(sub.n, canonical_key(sub)));
  }
  return make_monomial(std::move(gens));
}

Graph GraphInstance::to_graph(const Element& b) const {
  Graph g(b.degree());
  int offset = 0;
  for (GenId c : b.g) {
    Graph part = graph_from_key(gen_degree(c), gen_key(c));
    for (int u = 0; u < part.n; ++u)
      for (int v = u + 1; v < part.n; ++v)
        if (part.has_edge(u, v)) g.add_edge(offset + u, offset + v);
    offset += part.n;
  }
  return g;
}

TensorComb GraphInstance::generator_coproduct(GenId c) const {
  Graph g = graph_from_key(gen_degree(c), gen_key(c));
  const std::uint32_t full = (1u << g.n) - 1;
  TensorComb out;
  for (std::uint32_t s = 0; s <= full; ++s)
    out.add(Tensor{from_graph(induced_subgraph(g, s)), from_graph(induced_subgraph(g, full & ~s))}, 1);
  return out;
}

std::string GraphInstance::generator_label(GenId c) const {
  int d = gen_degree(c);
  return shape_label('g', d, d * (d - 1) / 2, gen_key(c));
}

std::optional<Element> GraphInstance::sample_step(const Element& b, int a, Rng& rng) const {
  Graph g = to_graph(b);
  std::vector<std::uint64_t> color(static_cast<std::size_t>(g.n));
  for (auto& x : color) x = rng.below(static_cast<std::uint64_t>(a));
  Graph out(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.has_edge(u, v) && color[u] == color[v]) out.add_edge(u, v);
  return from_graph(out);
}

Element GraphInstance::parse_element(const std::string& text) const {
  if (!text.empty() && text[0] == 'g') {
    std::vector<GenId> gens;
    for (const std::string& part : split_dots(text)) {
      auto [d, key] = parse_shape_label('g', part);
      check_degree(d);
      Graph g = graph_from_key(d, key);
      if (!is_connected(g) || canonical_key(g) != key)
        fail(ErrorCode::invalid_input, "'" + part + "' is not a canonical connected graph");
      gens.push_back(make_gen(d, key));
    }
    return make_monomial(std::move(gens));
  }
  Graph g = parse_edge_list(replace_all(text, ';', '\n'));
  check_degree(g.n);
  return from_graph(g);
}

// ---- labeled graphs ----

namespace {

// Blocks between consecutive non-crossing cut indices.
std::vector<std::pair<int, int>> labeled_blocks(const Graph& g) {
  std::vector<std::pair<int, int>> blocks;
  int start = 0;
  for (int i = 1; i <= g.n; ++i) {
    bool cut = i == g.n;
    if (!cut) {
      std::uint32_t low = (1u << i) - 1;
      cut = true;
      for (int u = 0; u < i && cut; ++u)
        if (g.adj[u] & ~low) cut = false;
    }
    if (cut) {
      blocks.emplace_back(start, i);
      start = i;
    }
  }
  return blocks;
}

}  // namespace

LabeledGraphInstance::LabeledGraphInstance(int working_degree) : HopfInstance(working_degree) {}

std::vector<GenId> LabeledGraphInstance::generators(int degree) const {
  if (degree < 1 || degree > working_degree()) return {};
  auto it = generator_cache_.find(degree);
  if (it != generator_cache_.end()) return it->second;
  if (degree > 6) fail(ErrorCode::unsupported_size, "enumerating labeled graphs above 6 vertices");
  const int m = degree * (degree - 1) / 2;
  std::vector<GenId> out;
  for (std::uint64_t key = 0; key < (std::uint64_t{1} << m); ++key) {
    Graph g = graph_from_key(degree, key);
    if (labeled_blocks(g).size() == 1) out.push_back(make_gen(degree, key));
  }
  generator_cache_[degree] = out;
  return out;
}

Element LabeledGraphInstance::factorize(const Graph& g) const {
  if (g.n > kGraphCap)
    fail(ErrorCode::unsupported_size, "labeled graph above " + std::to_string(kGraphCap) + " vertices");
  std::vector<GenId> gens;
  for (auto [lo, hi] : labeled_blocks(g)) {
    std::uint32_t mask = ((1u << hi) - 1) & ~((1u << lo) - 1);
    Graph sub = induced_subgraph(g, mask);
    gens.push_back(make_gen(sub.n, adjacency_key(sub)));
  }
  return Element(std::move(gens));
}

Graph LabeledGraphInstance::to_graph(const Element& b) const {
  Graph g(b.degree());
  int offset = 0;
  for (GenId c : b.g) {
    Graph part = graph_from_key(gen_degree(c), gen_key(c));
    for (int u = 0; u < part.n; ++u)
      for (int v = u + 1; v < part.n; ++v)
        if (part.has_edge(u, v)) g.add_edge(offset + u, offset + v);
    offset += part.n;
  }
  return g;
}

TensorComb LabeledGraphInstance::generator_coproduct(GenId c) const {
  Graph g = graph_from_key(gen_degree(c), gen_key(c));
  const std::uint32_t full = (1u << g.n) - 1;
  TensorComb out;
  for (std::uint32_t s = 0; s <= full; ++s)
    out.add(Tensor{factorize(induced_subgraph(g, s)), factorize(induced_subgraph(g, full & ~s))}, 1);
  return out;
}

std::string LabeledGraphInstance::generator_label(GenId c) const {
  int d = gen_degree(c);
  return shape_label('l', d, d * (d - 1) / 2, gen_key(c));
}

Element LabeledGraphInstance::parse_element(const std::string& text) const {
  if (!text.empty() && text[0] == 'l') {
    std::vector<GenId> gens;
    for (const std::string& part : split_dots(text)) {
      auto [d, key] = parse_shape_label('l', part);
      check_degree(d);
      if (labeled_blocks(graph_from_key(d, key)).size() != 1)
        fail(ErrorCode::invalid_input, "'" + part + "' has a cut index");
      gens.push_back(make_gen(d, key));
    }
    return Element(std::move(gens));
  }
  Graph g = parse_edge_list(replace_all(text, ';', '\n'));
  check_degree(g.n);
  return factorize(g);
}

// ---- simplicial complexes ----

SimplicialInstance::SimplicialInstance(int working_degree) : HopfInstance(working_degree) {}

std::vector<GenId> SimplicialInstance::generators(int degree) const {
  if (degree < 1 || degree > working_degree()) return {};
  auto it = generator_cache_.find(degree);
  if (it != generator_cache_.end()) return it->second;
  if (degree > 5) fail(ErrorCode::unsupported_size, "enumerating complexes above 5 vertices");
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << degree); ++m)
    if (std::popcount(m) >= 2) masks.push_back(m);
  std::set<std::uint64_t> keys;
  std::vector<std::uint32_t> chosen;
  // antichains of faces = sets of maximal faces
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == masks.size()) {
      Complex c = complex_from_faces(degree, chosen);
      if (is_connected(one_skeleton(c))) keys.insert(complex_canonical_key(c));
      return;
    }
    rec(i + 1);
    std::uint32_t m = masks[i];
    bool ok = std::none_of(chosen.begin(), chosen.end(), [m](std::uint32_t f) {
      return (f & m) == f || (f & m) == m;
    });
    if (ok) {
      chosen.push_back(m);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  std::vector<GenId> out;
  for (auto k : keys) out.push_back(make_gen(degree, k));
  generator_cache_[degree] = out;
  return out;
}

Element SimplicialInstance::from_complex(const Complex& c) const {
  std::vector<GenId> gens;
  for (std::uint32_t comp : connected_components(one_skeleton(c))) {
    Complex sub = induced_subcomplex(c, comp);
    gens.push_back(make_gen(sub.n, complex_canonical_key(sub)));
  }
  return make_monomial(std::move(gens));
}

Complex SimplicialInstance::to_complex(const Element& b) const {
  std::vector<std::uint32_t> faces;
  int offset = 0;
  for (GenId c : b.g) {
    Complex part = complex_from_key(gen_degree(c), gen_key(c));
    for (std::uint32_t f : part.maximal_faces) faces.push_back(f << offset);
    offset += part.n;
  }
  return complex_from_faces(offset, faces);
}

TensorComb SimplicialInstance::generator_coproduct(GenId c) const {
  Complex x = complex_from_key(gen_degree(c), gen_key(c));
  const std::uint32_t full = (1u << x.n) - 1;
  TensorComb out;
  for (std::uint32_t s = 0; s <= full; ++s)
    out.add(Tensor{from_complex(induced_subcomplex(x, s)),
                   from_complex(induced_subcomplex(x, full & ~s))},
            1);
  return out;
}

std::string SimplicialInstance::generator_label(GenId c) const {
  int d = gen_degree(c);
  return shape_label('c', d, complex_width(d), gen_key(c));
}

std::optional<Element> SimplicialInstance::sample_step(const Element& b, int a, Rng& rng) const {
  Complex x = to_complex(b);
  std::vector<std::uint32_t> classes(static_cast<std::size_t>(a), 0);
  for (int v = 0; v < x.n; ++v) classes[rng.below(static_cast<std::uint64_t>(a))] |= 1u << v;
  std::vector<std::uint32_t> faces;
  for (std::uint32_t f : x.maximal_faces)
    for (std::uint32_t cl : classes) faces.push_back(f & cl);
  return from_complex(complex_from_faces(x.n, faces));
}

Element SimplicialInstance::parse_element(const std::string& text) const {
  if (!text.empty() && text[0] == 'c') {
    std::vector<GenId> gens;
    for (const std::string& part : split_dots(text)) {
      auto [d, key] = parse_shape_label('c', part);
      check_degree(d);
      Complex x = complex_from_key(d, key);
      if (!is_connected(one_skeleton(x)) || complex_canonical_key(x) != key)
        fail(ErrorCode::invalid_input, "'" + part + "' is not a canonical connected complex");
      gens.push_back(make_gen(d, key));
    }
    return make_monomial(std::move(gens));
  }
  Complex x = parse_faces(replace_all(text, ';', '\n'));
  check_degree(x.n);
  return from_complex(x);
}

std::unique_ptr<HopfInstance> make_instance(const std::string& name, int working_degree,
                                            const std::vector<int>& nu) {
  if (working_degree < 0) fail(ErrorCode::invalid_input, "negative working degree");
  if (name == "rock" || name == "symfn") return std::make_unique<SymFnInstance>(working_degree);
  if (name == "quotient-sym") return std::make_unique<QuotientSymInstance>(working_degree);
  if (name == "deck" || name == "shuffle") {
    if (!nu.empty()) return std::make_unique<FreeAssocInstance>(nu);
    return std::make_unique<FreeAssocInstance>(std::vector<int>(static_cast<std::size_t>(working_degree), 1));
  }
  if (name == "free") return std::make_unique<FreeAssocInstance>(nu.empty() ? 2 : nu[0], working_degree);
  if (name == "graph") return std::make_unique<GraphInstance>(working_degree);
  if (name == "labeled-graph") return std::make_unique<LabeledGraphInstance>(working_degree);
  if (name == "simplicial") return std::make_unique<SimplicialInstance>(working_degree);
  fail(ErrorCode::invalid_input, "unknown instance '" + name + "'");
}

}  // namespace hopfchain
