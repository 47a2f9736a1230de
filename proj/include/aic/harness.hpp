#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aic/bdm.hpp"
#include "aic/ctm.hpp"
#include "aic/graph.hpp"
#include "aic/symbol_array.hpp"

namespace aic {

// Spearman rank correlation with average ranks for ties. Throws on length
// mismatch, fewer than 3 points, or a constant input.
double spearman(std::span<const double> xs, std::span<const double> ys);

// Average (fractional) ranks, 1-based.
std::vector<double> average_ranks(std::span<const double> values);

// A sweep configuration in the "b<block>o<overlap>" notation: windows of
// `block` symbols that overlap by `overlap` (offset m = block - overlap).
struct SweepConfig {
  std::size_t block = 1;
  std::size_t overlap = 0;

  std::string label() const;
  static SweepConfig parse(const std::string& label);
};

struct SweepRow {
  std::string label;
  std::optional<double> rho_ctm;      // against the whole-string table value
  std::optional<double> rho_entropy;  // against Shannon entropy H1
  std::string note;
};

struct SweepReport {
  std::vector<SweepRow> rows;

  const SweepRow* find(const std::string& label) const;
  std::string to_csv() const;
};

// For every configuration, BDM (Trim, offset = block - overlap) of every
// string, ranked against the table's whole-string value (when the table
// covers the string length) and against H1. Baseline rows "H1" and
// "best-H" follow. Configurations that cannot run are kept with a note.
SweepReport correlation_sweep(const std::vector<SymbolArray>& strings, const CtmTable& table,
                              const std::vector<SweepConfig>& configs);

// A labelled BDM configuration for measure reports.
struct NamedConfig {
  std::string name;
  BdmConfig config;
};

struct MeasureObject {
  std::string id;
  SymbolArray object;
};

// Comma-delimited rows: id, H1, best block size, best H_l, one BDM column per
// config, NBDM (square matrices only, at block nbdm_block), note. Failures
// leave the cell empty and are recorded in the note column.
std::string measure_report(const std::vector<MeasureObject>& objects, const CtmTable& table,
                           const std::vector<NamedConfig>& configs,
                           std::optional<std::size_t> nbdm_block = std::nullopt);

// Line-graph pair corpus: graph i has 8 + (i % 9) vertices.
struct GraphPair {
  std::string id;
  Graph graph;
  Graph transformed;
};
std::vector<GraphPair> line_graph_corpus(std::size_t count, std::uint64_t seed);

struct PairReport {
  std::vector<std::string> ids;
  std::vector<std::string> config_names;
  // values[c][i]: BDM of graph i (first) and of its transform (second).
  std::vector<std::vector<std::pair<double, double>>> values;
  std::vector<double> rho;  // per config

  std::string to_csv() const;
};

// BDM of the adjacency matrices of both members of each pair under every
// configuration, plus the Spearman rho between the two columns.
PairReport graph_pair_report(const std::vector<GraphPair>& pairs, const CtmTable& table,
                             const std::vector<NamedConfig>& configs);

// Fixed-point text with `digits` fractional digits and '.' separator.
std::string format_fixed(double value, int digits = 6);

}  // namespace aic
