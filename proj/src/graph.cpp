#include "hopfchain/graph.hpp"

#include "hopfchain/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace hopfchain {

void Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n || v >= n)
    fail(ErrorCode::invalid_input, "bad edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1));
  adj[u] |= 1u << v;
  adj[v] |= 1u << u;
}

int Graph::edge_count() const {
  int e = 0;
  for (auto m : adj) e += std::popcount(m);
  return e / 2;
}

std::uint64_t adjacency_key(const Graph& g) {
  std::uint64_t key = 0;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) key = (key << 1) | (g.has_edge(i, j) ? 1u : 0u);
  return key;
}

Graph graph_from_key(int n, std::uint64_t key) {
  Graph g(n);
  int bit = n * (n - 1) / 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      --bit;
      if ((key >> bit) & 1u) g.add_edge(i, j);
    }
  return g;
}

std::string key_bits(int n, std::uint64_t key) {
  int m = n * (n - 1) / 2;
  std::string s;
  for (int b = m - 1; b >= 0; --b) s += ((key >> b) & 1u) ? '1' : '0';
  return s;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.has_edge(u, v)) out.add_edge(perm[u], perm[v]);
  return out;
}

std::uint64_t canonical_key(const Graph& g) {
  if (g.n > kGraphCap)
    fail(ErrorCode::unsupported_size,
         "graph with " + std::to_string(g.n) + " vertices exceeds cap " + std::to_string(kGraphCap));
  static std::map<std::pair<int, std::uint64_t>, std::uint64_t> memo;
  auto key = std::make_pair(g.n, adjacency_key(g));
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<int> perm(static_cast<std::size_t>(g.n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = key.second;
  do {
    best = std::min(best, adjacency_key(relabel(g, perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  memo.emplace(key, best);
  return best;
}

Graph graph_canonicalize(const Graph& g) { return graph_from_key(g.n, canonical_key(g)); }

Graph induced_subgraph(const Graph& g, std::uint32_t vertex_mask) {
  std::vector<int> idx(static_cast<std::size_t>(g.n), -1);
  int k = 0;
  for (int v = 0; v < g.n; ++v)
    if ((vertex_mask >> v) & 1u) idx[v] = k++;
  Graph out(k);
  for (int u = 0; u < g.n; ++u) {
    if (idx[u] < 0) continue;
    for (int v = u + 1; v < g.n; ++v)
      if (idx[v] >= 0 && g.has_edge(u, v)) out.add_edge(idx[u], idx[v]);
  }
  return out;
}

std::vector<std::uint32_t> connected_components(const Graph& g) {
  std::vector<std::uint32_t> comps;
  std::uint32_t seen = 0;
  for (int v = 0; v < g.n; ++v) {
    if ((seen >> v) & 1u) continue;
    std::uint32_t comp = 1u << v, frontier = comp;
    while (frontier) {
      int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint32_t fresh = g.adj[u] & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

bool is_connected(const Graph& g) { return g.n <= 1 || connected_components(g).size() == 1; }

namespace {

std::vector<std::string> nonblank_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    out.push_back(line);
  }
  return out;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  for (const std::string& line : nonblank_lines(text)) {
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "n") {
      if (!(ls >> n) || n < 0) fail(ErrorCode::invalid_input, "bad vertex count line: " + line);
      continue;
    }
    int u = 0, v = 0;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      fail(ErrorCode::invalid_input, "bad edge line: " + line);
    }
    if (!(ls >> v) || u < 1 || v < 1) fail(ErrorCode::invalid_input, "bad edge line: " + line);
    edges.emplace_back(u - 1, v - 1);
    n = std::max({n, u, v});
  }
  if (n > 32) fail(ErrorCode::unsupported_size, "graph has more than 32 vertices");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) fail(ErrorCode::invalid_input, "edge endpoint beyond vertex count");
    g.add_edge(u, v);
  }
  return g;
}

std::vector<std::uint32_t> all_faces(const Complex& c) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t f : c.maximal_faces)
    for (std::uint32_t s = f; s; s = (s - 1) & f)
      if (std::popcount(s) >= 2) out.push_back(s);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Complex complex_from_faces(int n, const std::vector<std::uint32_t>& faces) {
  Complex c;
  c.n = n;
  std::vector<std::uint32_t> fs;
  for (std::uint32_t f : faces) {
    if (n < 32 && (f >> n)) fail(ErrorCode::invalid_input, "face uses a vertex beyond the vertex count");
    if (std::popcount(f) >= 2) fs.push_back(f);
  }
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  for (std::uint32_t f : fs) {
    bool maximal = std::none_of(fs.begin(), fs.end(),
                                [f](std::uint32_t g) { return g != f && (g & f) == f; });
    if (maximal) c.maximal_faces.push_back(f);
  }
  return c;
}

std::uint64_t complex_key(const Complex& c) {
  if (c.n > kComplexCap)
    fail(ErrorCode::unsupported_size, "complex with " + std::to_string(c.n) +
                                          " vertices exceeds cap " + std::to_string(kComplexCap));
  std::vector<std::uint32_t> faces = all_faces(c);
  std::uint64_t key = 0;
  std::size_t fi = 0;
  for (std::uint32_t m = 0; m < (1u << c.n); ++m) {
    if (std::popcount(m) < 2) continue;
    bool present = fi < faces.size() && faces[fi] == m;
    if (present) ++fi;
    key = (key << 1) | (present ? 1u : 0u);
  }
  return key;
}

namespace {

std::uint32_t permute_mask(std::uint32_t m, const std::vector<int>& perm) {
  std::uint32_t out = 0;
  for (std::size_t v = 0; v < perm.size(); ++v)
    if ((m >> v) & 1u) out |= 1u << perm[v];
  return out;
}

}  // namespace

std::uint64_t complex_canonical_key(const Complex& c) {
  std::uint64_t best = complex_key(c);
  static std::map<std::pair<int, std::uint64_t>, std::uint64_t> memo;
  auto mk = std::make_pair(c.n, best);
  auto it = memo.find(mk);
  if (it != memo.end()) return it->second;
  std::vector<int> perm(static_cast<std::size_t>(c.n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Complex r;
    r.n = c.n;
    for (std::uint32_t f : c.maximal_faces) r.maximal_faces.push_back(permute_mask(f, perm));
    best = std::min(best, complex_key(r));
  } while (std::next_permutation(perm.begin(), perm.end()));
  memo.emplace(mk, best);
  return best;
}

Complex complex_from_key(int n, std::uint64_t key) {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) >= 2) masks.push_back(m);
  std::vector<std::uint32_t> faces;
  for (std::size_t i = 0; i < masks.size(); ++i)
    if ((key >> (masks.size() - 1 - i)) & 1u) faces.push_back(masks[i]);
  return complex_from_faces(n, faces);
}

Complex induced_subcomplex(const Complex& c, std::uint32_t vertex_mask) {
  std::vector<int> idx(static_cast<std::size_t>(c.n), -1);
  int k = 0;
  for (int v = 0; v < c.n; ++v)
    if ((vertex_mask >> v) & 1u) idx[v] = k++;
  std::vector<std::uint32_t> faces;
  for (std::uint32_t f : c.maximal_faces) {
    std::uint32_t s = f & vertex_mask, mapped = 0;
    for (int v = 0; v < c.n; ++v)
      if ((s >> v) & 1u) mapped |= 1u << idx[v];
    faces.push_back(mapped);
  }
  return complex_from_faces(k, faces);
}

Graph one_skeleton(const Complex& c) {
  Graph g(c.n);
  for (std::uint32_t f : c.maximal_faces)
    for (int u = 0; u < c.n; ++u)
      for (int v = u + 1; v < c.n; ++v)
        if (((f >> u) & 1u) && ((f >> v) & 1u)) {
          g.adj[u] |= 1u << v;
          g.adj[v] |= 1u << u;
        }
  return g;
}

Complex parse_faces(const std::string& text) {
  int n = 0;
  std::vector<std::uint32_t> faces;
  for (const std::string& line : nonblank_lines(text)) {
    std::istringstream ls(line);
    std::string tok;
    std::vector<int> verts;
    bool count_line = false;
    while (ls >> tok) {
      if (tok == "n" && verts.empty()) {
        count_line = true;
        continue;
      }
      int v = 0;
      try {
        v = std::stoi(tok);
      } catch (const std::exception&) {
        fail(ErrorCode::invalid_input, "bad face line: " + line);
      }
      if (count_line) {
        n = std::max(n, v);
        break;
      }
      if (v < 1 || v > 32) fail(ErrorCode::invalid_input, "bad vertex in face line: " + line);
      verts.push_back(v - 1);
    }
    if (count_line) continue;
    std::uint32_t m = 0;
    for (int v : verts) {
      m |= 1u << v;
      n = std::max(n, v + 1);
    }
    faces.push_back(m);
  }
  return complex_from_faces(n, faces);
}

}  // namespace hopfchain
