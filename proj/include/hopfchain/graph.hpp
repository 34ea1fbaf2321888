#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hopfchain {

// Simple graph on vertices 0..n-1, adjacency as neighbour bitmasks.
struct Graph {
  int n = 0;
  std::vector<std::uint32_t> adj;

  Graph() = default;
  explicit Graph(int vertices) : n(vertices), adj(static_cast<std::size_t>(vertices), 0) {}
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  int edge_count() const;
  bool operator==(const Graph&) const = default;
};

constexpr int kGraphCap = 8;

// Upper-triangle adjacency string read as a binary number, pair (0,1) most significant.
std::uint64_t adjacency_key(const Graph& g);
Graph graph_from_key(int n, std::uint64_t key);
std::string key_bits(int n, std::uint64_t key);

// Least adjacency key over all vertex permutations.
std::uint64_t canonical_key(const Graph& g);
Graph graph_canonicalize(const Graph& g);

Graph induced_subgraph(const Graph& g, std::uint32_t vertex_mask);
std::vector<std::uint32_t> connected_components(const Graph& g);
bool is_connected(const Graph& g);
Graph relabel(const Graph& g, const std::vector<int>& perm);  // vertex v -> perm[v]

// Edge list text: one "u v" pair per line, 1-indexed; "n N" sets the vertex count.
Graph parse_edge_list(const std::string& text);

// Simplicial complex on vertices 0..n-1: faces as vertex bitmasks.
struct Complex {
  int n = 0;
  std::vector<std::uint32_t> maximal_faces;
};

constexpr int kComplexCap = 6;

std::vector<std::uint32_t> all_faces(const Complex& c);  // size >= 2
Complex complex_from_faces(int n, const std::vector<std::uint32_t>& faces);
std::uint64_t complex_key(const Complex& c);
std::uint64_t complex_canonical_key(const Complex& c);
Complex complex_from_key(int n, std::uint64_t key);
Complex induced_subcomplex(const Complex& c, std::uint32_t vertex_mask);
Graph one_skeleton(const Complex& c);
Complex parse_faces(const std::string& text);

}  // namespace hopfchain
