#include "aic/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace aic {

namespace {

// Bounded draw that does not depend on the standard library's distribution
// implementations.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

}  // namespace

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : n_(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
  edges_.emplace(std::min(u, v), std::max(u, v));
}

SymbolArray Graph::adjacency() const {
  SymbolArray a = SymbolArray::matrix(n_, n_, 0);
  for (const auto& [u, v] : edges_) {
    a.at(u, v) = 1;
    a.at(v, u) = 1;
  }
  return a;
}

Graph Graph::relabelled(const std::vector<std::size_t>& permutation) const {
  if (permutation.size() != n_) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::size_t> inverse(n_, n_);
  for (std::size_t v = 0; v < n_; ++v) inverse.at(permutation[v]) = v;
  Graph out(n_);
  for (const auto& [u, v] : edges_) out.add_edge(inverse[u], inverse[v]);
  return out;
}

std::vector<BigInt> char_poly(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> neighbours(n);
  for (const auto& [u, v] : g.edges()) {
    neighbours[u].push_back(v);
    neighbours[v].push_back(u);
  }
  std::vector<BigInt> coeff(n + 1);
  coeff[0] = 1;
  // M_k = A M_{k-1} + c_{k-1} I ;  c_k = -tr(A M_k) / k
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  std::vector<std::vector<BigInt>> am(n, std::vector<BigInt>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[i][i] += coeff[k - 1];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        BigInt sum = 0;
        for (std::size_t nb : neighbours[i]) sum += m[nb][j];
        am[i][j] = std::move(sum);
      }
    }
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
    coeff[k] = -trace / static_cast<long>(k);
    std::swap(m, am);
  }
  return coeff;
}

std::string format_poly(const std::vector<BigInt>& coefficients) {
  std::ostringstream out;
  const std::size_t degree = coefficients.size() - 1;
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const BigInt& c = coefficients[i];
    if (c == 0) continue;
    const std::size_t power = degree - i;
    BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (magnitude != 1 || power == 0) out << magnitude;
    if (power > 0) out << "x";
    if (power > 1) out << "^" << power;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

bool is_cospectral(const Graph& a, const Graph& b) { return char_poly(a) == char_poly(b); }

Graph line_graph(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("line graph of an edgeless graph");
  const std::vector<Graph::Edge> edges(g.edges().begin(), g.edges().end());
  Graph out(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& [a, b] = edges[i];
      const auto& [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) out.add_edge(i, j);
    }
  }
  return out;
}

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw std::invalid_argument("graph file is empty");
  std::istringstream header(line);
  std::size_t n = 0, m = 0;
  if (!(header >> n >> m)) throw std::invalid_argument("line 1: expected 'n m'");
  Graph g(n);
  for (std::size_t e = 0; e < m; ++e) {
    if (!next_line()) throw std::invalid_argument("graph file declares " + std::to_string(m) +
                                                  " edges but has " + std::to_string(e));
    std::istringstream row(line);
    std::size_t u = 0, v = 0;
    if (!(row >> u >> v) || u >= v) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'u v' with u < v");
    }
    if (g.edges().contains({u, v})) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": duplicate edge");
    }
    try {
      g.add_edge(u, v);
    } catch (const std::exception& ex) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + ex.what());
    }
  }
  return g;
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path.string() + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph random_sparse_graph(std::size_t n, std::size_t extra_edges, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v) g.add_edge(draw(rng, v), v);
  const std::size_t max_edges = n * (n - 1) / 2;
  const std::size_t target = std::min(max_edges, g.edge_count() + extra_edges);
  while (g.edge_count() < target) {
    const std::size_t u = draw(rng, n);
    const std::size_t v = draw(rng, n);
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  const auto threshold = static_cast<std::uint64_t>(p * 18446744073709551615.0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng() < threshold) g.add_edge(u, v);
    }
  }
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (const auto& [u, v] : a.edges()) g.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) g.add_edge(u + a.vertex_count(), v + a.vertex_count());
  return g;
}

}  // namespace aic
