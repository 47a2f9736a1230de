#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "aic/graph.hpp"
#include "aic/harness.hpp"
#include "support.hpp"

using namespace aic;

namespace {

std::vector<std::vector<int>> dense(const Graph& g) {
  std::vector<std::vector<int>> a(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

std::vector<long long> as_ll(const std::vector<BigInt>& p) {
  std::vector<long long> out;
  for (const BigInt& c : p) out.push_back(c.convert_to<long long>());
  return out;
}

const CtmTable& table22() {
  static const CtmTable t = ctm_table(build_distribution(RuleSpace{2, 2, 1}, 6), 4);
  return t;
}

}  // namespace

TEST_CASE("Spearman basics") {
  const std::vector<double> xs{1, 2, 3, 4, 5};
  CHECK(spearman(xs, xs) == 1.0);
  const std::vector<double> rev{5, 4, 3, 2, 1};
  CHECK(spearman(xs, rev) == -1.0);
  CHECK(spearman(std::vector<double>{1, 2, 3, 4}, std::vector<double>{1, 3, 2, 4}) == doctest::Approx(0.8));
  std::vector<double> cubes;
  for (double x : xs) cubes.push_back(x * x * x - 7.0);
  CHECK(spearman(xs, cubes) == 1.0);
  CHECK_THROWS(spearman(xs, std::vector<double>{1, 2}));
  CHECK_THROWS(spearman(xs, std::vector<double>{3, 3, 3, 3, 3}));
}

TEST_CASE("Spearman agrees with the textbook formula on tie-free data") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> x(12), y(12);
    for (auto& v : x) v = u(rng);
    for (auto& v : y) v = u(rng);
    CHECK(spearman(x, y) == doctest::Approx(test::oracle_spearman_no_ties(x, y)).epsilon(1e-12));
  }
}

TEST_CASE("average ranks share ties") {
  const std::vector<double> v{10, 20, 10, 30};
  CHECK(average_ranks(v) == std::vector<double>{1.5, 3.0, 1.5, 4.0});
}

TEST_CASE("sweep labels") {
  const SweepConfig c = SweepConfig::parse("b11o10");
  CHECK(c.block == 11);
  CHECK(c.overlap == 10);
  CHECK(c.label() == "b11o10");
  CHECK_THROWS(SweepConfig::parse("b4"));
  CHECK_THROWS(SweepConfig::parse("x4o1"));
  CHECK_THROWS(SweepConfig::parse("b4o1z"));
}

TEST_CASE("sweep over all 4-bit strings with the (2,2) table") {
  const auto strings = all_strings(4, 2);
  const std::vector<SweepConfig> configs{{4, 0}, {1, 0}, {2, 1}, {5, 0}, {2, 2}};
  const SweepReport report = correlation_sweep(strings, table22(), configs);
  REQUIRE(report.find("b4o0"));
  CHECK(*report.find("b4o0")->rho_ctm == 1.0);
  CHECK(report.find("b5o0")->note.find("skipped") != std::string::npos);
  CHECK(report.find("b2o2")->note.find("skipped") != std::string::npos);
  REQUIRE(report.find("H1"));
  CHECK(*report.find("H1")->rho_entropy == 1.0);
  CHECK(report.find("best-H"));
  // Determinism.
  CHECK(correlation_sweep(strings, table22(), configs).to_csv() == report.to_csv());
  CHECK(report.to_csv().rfind("config,rho_ctm,rho_h1,note\n", 0) == 0);
}

TEST_CASE("b1o0 ranks mixed strings exactly like H1") {
  std::vector<SymbolArray> mixed;
  for (const SymbolArray& s : all_strings(8, 2)) {
    const auto ones = std::count(s.cells().begin(), s.cells().end(), Symbol{1});
    if (ones > 0 && ones < 8) mixed.push_back(s);
  }
  const SweepReport report = correlation_sweep(mixed, table22(), {{1, 0}});
  CHECK(*report.find("b1o0")->rho_entropy == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.find("b1o0")->note.find("does not cover") != std::string::npos);
}

TEST_CASE("measure report") {
  const std::string empty = measure_report({}, table22(), {{"trim4", BdmConfig{}}});
  CHECK(empty == "id,h1,best_block,best_h,bdm_trim4,nbdm,note\n");

  std::ifstream in(test::data_dir() / "low_complexity_strings.txt");
  std::vector<MeasureObject> objects;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    objects.push_back({line, SymbolArray::from_string(line)});
  }
  CHECK(objects.size() == 116);
  BdmConfig c;
  c.block = 4;
  const std::string report = measure_report(objects, table22(), {{"trim4", c}});
  CHECK(std::count(report.begin(), report.end(), '\n') == 117);
  CHECK(report.find("error") == std::string::npos);

  // Failures are noted, not dropped.
  c.block = 5;
  const std::string failing = measure_report({{"x", SymbolArray::from_string("0101010101")}}, table22(), {{"b5", c}});
  CHECK(failing.find("block exceeds table base shape") != std::string::npos);
}

TEST_CASE("characteristic polynomials agree with determinant expansion") {
  CHECK(as_ll(char_poly(Graph(1))) == std::vector<long long>{1, 0});
  CHECK(as_ll(char_poly(complete_graph(3))) == std::vector<long long>{1, 0, -3, -2});
  CHECK(as_ll(char_poly(path_graph(3))) == std::vector<long long>{1, 0, -2, 0});
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(3 + trial % 5, 0.5, rng());
    CHECK(as_ll(char_poly(g)) == test::oracle_char_poly(dense(g)));
  }
  CHECK(format_poly(char_poly(complete_graph(3))) == "x^3 - 3x - 2");
}

TEST_CASE("cospectral pairs") {
  const Graph star = star_graph(4);
  const Graph c4k1 = disjoint_union(cycle_graph(4), Graph(1));
  CHECK(is_cospectral(star, c4k1));
  CHECK(test::oracle_char_poly(dense(star)) == test::oracle_char_poly(dense(c4k1)));
  CHECK_FALSE(is_cospectral(complete_graph(3), path_graph(3)));
  CHECK(is_cospectral(star, star));
}

TEST_CASE("characteristic polynomial is invariant under relabelling") {
  std::mt19937_64 rng(47);
  for (int g_index = 0; g_index < 5; ++g_index) {
    const Graph g = random_graph(12, 0.3, rng());
    const auto reference = char_poly(g);
    std::vector<std::size_t> perm(12);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 20; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(char_poly(g.relabelled(perm)) == reference);
    }
  }
}

TEST_CASE("line graphs") {
  CHECK(line_graph(path_graph(3)) == complete_graph(2));
  CHECK(line_graph(complete_graph(3)) == complete_graph(3));
  CHECK(line_graph(star_graph(3)) == complete_graph(3));
  CHECK_THROWS(line_graph(Graph(4)));
  // Brute force: vertices are edges, adjacent when they share an endpoint.
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_sparse_graph(9, 3, rng());
    const Graph l = line_graph(g);
    const std::vector<Graph::Edge> e(g.edges().begin(), g.edges().end());
    CHECK(l.vertex_count() == e.size());
    std::size_t expected_edges = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j)
        expected_edges += e[i].first == e[j].first || e[i].first == e[j].second ||
                          e[i].second == e[j].first || e[i].second == e[j].second;
    CHECK(l.edge_count() == expected_edges);
  }
}

TEST_CASE("graph file format") {
  std::istringstream good("3 2\n0 1\n1 2\n");
  CHECK(parse_graph(good) == path_graph(3));
  std::istringstream reversed_edge("3 1\n2 1\n");
  CHECK_THROWS(parse_graph(reversed_edge));
  std::istringstream short_file("3 2\n0 1\n");
  CHECK_THROWS(parse_graph(short_file));
  std::ostringstream out;
  write_graph(out, star_graph(2));
  CHECK(out.str() == "3 2\n0 1\n0 2\n");
  CHECK(load_graph(test::data_dir() / "graphs" / "star_k1_4.txt") == star_graph(4));
  CHECK(load_graph(test::data_dir() / "graphs" / "triangle_k3.txt") == complete_graph(3));
}

TEST_CASE("shipped line-graph corpus matches regeneration from its seed") {
  const auto dir = test::data_dir() / "line_graph_corpus";
  std::ifstream manifest(dir / "corpus.txt");
  std::string line;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  while (std::getline(manifest, line)) {
    if (line.rfind("seed=", 0) == 0) seed = std::stoull(line.substr(5));
    if (line.rfind("count=", 0) == 0) count = std::stoul(line.substr(6));
  }
  REQUIRE(count >= 30);
  const auto pairs = line_graph_corpus(count, seed);
  for (const GraphPair& p : pairs) {
    CHECK(load_graph(dir / (p.id + ".txt")) == p.graph);
    CHECK(load_graph(dir / (p.id + "_line.txt")) == p.transformed);
    CHECK(p.graph.vertex_count() >= 8);
    CHECK(p.graph.vertex_count() <= 16);
    CHECK(line_graph(p.graph) == p.transformed);
  }
}

TEST_CASE("graph pair report with 20 pairs") {
  const CtmTable t = test::synthetic_square_table(2);
  BdmConfig c;
  c.block = 2;
  const PairReport r = graph_pair_report(line_graph_corpus(20, 99), t, {{"trim", c}});
  CHECK(r.ids.size() == 20);
  CHECK(r.values.at(0).size() == 20);
  CHECK(r.rho.size() == 1);
  CHECK(graph_pair_report(line_graph_corpus(20, 99), t, {{"trim", c}}).to_csv() == r.to_csv());
}
