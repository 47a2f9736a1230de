#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "aic/symbol_array.hpp"

namespace aic {

using BigInt = boost::multiprecision::cpp_int;

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  explicit Graph(std::size_t n = 0) : n_(n) {}
  Graph(std::size_t n, const std::vector<Edge>& edges);

  // Ignores duplicates; rejects self-loops and out-of-range vertices.
  void add_edge(std::size_t u, std::size_t v);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::set<Edge>& edges() const { return edges_; }  // u < v

  // Symmetric 0/1 matrix with zero diagonal.
  SymbolArray adjacency() const;

  // Vertex v of the result is permutation[v] of this graph.
  Graph relabelled(const std::vector<std::size_t>& permutation) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_;
  std::set<Edge> edges_;
};

// Coefficients of det(xI - A), highest degree first (so front() == 1),
// computed exactly with Faddeev-LeVerrier over arbitrary-precision integers.
std::vector<BigInt> char_poly(const Graph& g);
std::string format_poly(const std::vector<BigInt>& coefficients);

bool is_cospectral(const Graph& a, const Graph& b);

// Vertices are the edges of g in sorted order; adjacent iff they share an
// endpoint.
Graph line_graph(const Graph& g);

// Graph file: "n m" then m lines "u v" (0-based, u < v).
Graph parse_graph(std::istream& in);
Graph load_graph(const std::filesystem::path& path);
void write_graph(std::ostream& out, const Graph& g);

// Connected sparse graph: a random spanning tree plus `extra_edges` random
// chords. Deterministic for a given seed on every platform.
Graph random_sparse_graph(std::size_t n, std::size_t extra_edges, std::uint64_t seed);

// G(n, p) with the same determinism guarantee.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

// Classical small graphs used by the tests and the shipped corpus.
Graph star_graph(std::size_t leaves);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace aic
