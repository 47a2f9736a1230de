#include "aic/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "aic/entropy.hpp"

namespace aic {

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("spearman: length mismatch");
  if (xs.size() < 3) throw std::invalid_argument("spearman: need at least 3 points");
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  const auto n = static_cast<double>(rx.size());
  const double mean = (n + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    const double dx = rx[i] - mean;
    const double dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw std::invalid_argument("spearman: constant input has no ranking");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::string SweepConfig::label() const {
  return "b" + std::to_string(block) + "o" + std::to_string(overlap);
}

SweepConfig SweepConfig::parse(const std::string& label) {
  const auto o = label.find('o');
  if (label.size() < 4 || label[0] != 'b' || o == std::string::npos) {
    throw std::invalid_argument("sweep config must look like b<block>o<overlap>: '" + label + "'");
  }
  try {
    std::size_t used = 0;
    SweepConfig c;
    const std::string block = label.substr(1, o - 1);
    const std::string overlap = label.substr(o + 1);
    c.block = std::stoul(block, &used);
    if (used != block.size()) throw std::invalid_argument("trailing");
    c.overlap = std::stoul(overlap, &used);
    if (used != overlap.size()) throw std::invalid_argument("trailing");
    return c;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("sweep config must look like b<block>o<overlap>: '" + label + "'");
  }
}

const SweepRow* SweepReport::find(const std::string& label) const {
  for (const SweepRow& row : rows) {
    if (row.label == label) return &row;
  }
  return nullptr;
}

std::string format_fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

namespace {

std::string optional_cell(const std::optional<double>& v) { return v ? format_fixed(*v) : ""; }

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::optional<double> try_spearman(const std::vector<double>& a, const std::vector<double>& b,
                                   std::string& note) {
  try {
    return spearman(a, b);
  } catch (const std::invalid_argument& e) {
    if (!note.empty()) note += "; ";
    note += e.what();
    return std::nullopt;
  }
}

}  // namespace

std::string SweepReport::to_csv() const {
  std::string out = "config,rho_ctm,rho_h1,note\n";
  for (const SweepRow& row : rows) {
    out += row.label + "," + optional_cell(row.rho_ctm) + "," + optional_cell(row.rho_entropy) + "," +
           csv_escape(row.note) + "\n";
  }
  return out;
}

SweepReport correlation_sweep(const std::vector<SymbolArray>& strings, const CtmTable& table,
                              const std::vector<SweepConfig>& configs) {
  if (strings.empty()) throw std::invalid_argument("sweep needs at least one string");
  const std::size_t length = strings.front().size();
  for (const SymbolArray& s : strings) {
    if (s.rank() != 1 || s.size() != length) {
      throw std::invalid_argument("sweep strings must share one length");
    }
  }

  std::vector<double> entropy_column;
  for (const SymbolArray& s : strings) entropy_column.push_back(shannon_entropy(s));
  std::optional<std::vector<double>> ctm_column;
  std::string ctm_note;
  if (table.fits(strings.front())) {
    ctm_column.emplace();
    for (const SymbolArray& s : strings) ctm_column->push_back(table.lookup(s));
  } else {
    ctm_note = "table does not cover length " + std::to_string(length);
  }

  SweepReport report;
  auto add_row = [&](const std::string& label, const std::vector<double>& column, std::string note) {
    SweepRow row{label, std::nullopt, std::nullopt, std::move(note)};
    if (ctm_column) {
      row.rho_ctm = try_spearman(column, *ctm_column, row.note);
    } else {
      row.note += (row.note.empty() ? "" : "; ") + ctm_note;
    }
    row.rho_entropy = try_spearman(column, entropy_column, row.note);
    report.rows.push_back(std::move(row));
  };

  for (const SweepConfig& sc : configs) {
    SweepRow skipped{sc.label(), std::nullopt, std::nullopt, ""};
    if (sc.block == 0 || sc.overlap >= sc.block) {
      skipped.note = "skipped: overlap must be smaller than block";
    } else if (sc.block > length) {
      skipped.note = "skipped: block exceeds string length";
    } else if (sc.block > table.base_extent()) {
      skipped.note = "skipped: block exceeds table base shape";
    }
    if (!skipped.note.empty()) {
      report.rows.push_back(std::move(skipped));
      continue;
    }
    BdmConfig config;
    config.block = sc.block;
    config.offset = sc.block - sc.overlap;
    std::vector<double> column;
    column.reserve(strings.size());
    for (const SymbolArray& s : strings) column.push_back(bdm(s, table, config).value);
    add_row(sc.label(), column, "");
  }

  add_row("H1", entropy_column, "");
  std::vector<double> best;
  for (const SymbolArray& s : strings) best.push_back(best_block_entropy(s).bits);
  add_row("best-H", best, "");
  return report;
}

std::string measure_report(const std::vector<MeasureObject>& objects, const CtmTable& table,
                           const std::vector<NamedConfig>& configs,
                           std::optional<std::size_t> nbdm_block) {
  std::ostringstream out;
  out << "id,h1,best_block,best_h";
  for (const NamedConfig& c : configs) out << ",bdm_" << c.name;
  out << ",nbdm,note\n";
  for (const MeasureObject& item : objects) {
    std::string note;
    auto record = [&](const std::string& what, const std::exception& e) {
      if (!note.empty()) note += "; ";
      note += what + ": " + e.what();
    };
    out << csv_escape(item.id) << ',';
    try {
      out << format_fixed(shannon_entropy(item.object));
    } catch (const std::exception& e) {
      record("h1", e);
    }
    out << ',';
    try {
      const SymbolArray flat({item.object.size()},
                             std::vector<Symbol>(item.object.cells().begin(), item.object.cells().end()));
      const BestBlock b = best_block_entropy(flat, false, table.symbols());
      out << b.block << ',' << format_fixed(b.bits);
    } catch (const std::exception& e) {
      out << ',';
      record("best_h", e);
    }
    for (const NamedConfig& c : configs) {
      out << ',';
      try {
        out << format_fixed(bdm(item.object, table, c.config).value);
      } catch (const std::exception& e) {
        record(c.name, e);
      }
    }
    out << ',';
    if (nbdm_block) {
      try {
        out << format_fixed(normalized_bdm(item.object, table, *nbdm_block));
      } catch (const std::exception& e) {
        record("nbdm", e);
      }
    }
    out << ',' << csv_escape(note) << '\n';
  }
  return out.str();
}

std::vector<GraphPair> line_graph_corpus(std::size_t count, std::uint64_t seed) {
  std::vector<GraphPair> pairs;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 8 + (i % 9);
    const std::size_t extra = 1 + (i % 4);
    Graph g = random_sparse_graph(n, extra, seed + i);
    Graph l = line_graph(g);
    char id[32];
    std::snprintf(id, sizeof id, "g%02zu", i);
    pairs.push_back({id, std::move(g), std::move(l)});
  }
  return pairs;
}

std::string PairReport::to_csv() const {
  std::ostringstream out;
  out << "id";
  for (const std::string& name : config_names) out << ',' << name << "_g," << name << "_line";
  out << '\n';
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out << ids[i];
    for (std::size_t c = 0; c < config_names.size(); ++c) {
      out << ',' << format_fixed(values[c][i].first) << ',' << format_fixed(values[c][i].second);
    }
    out << '\n';
  }
  out << "rho";
  for (double r : rho) out << ',' << format_fixed(r) << ',';
  out << '\n';
  return out.str();
}

PairReport graph_pair_report(const std::vector<GraphPair>& pairs, const CtmTable& table,
                             const std::vector<NamedConfig>& configs) {
  PairReport report;
  for (const GraphPair& p : pairs) report.ids.push_back(p.id);
  for (const NamedConfig& c : configs) {
    report.config_names.push_back(c.name);
    std::vector<std::pair<double, double>> column;
    std::vector<double> first, second;
    for (const GraphPair& p : pairs) {
      const double a = bdm(p.graph.adjacency(), table, c.config).value;
      const double b = bdm(p.transformed.adjacency(), table, c.config).value;
      column.emplace_back(a, b);
      first.push_back(a);
      second.push_back(b);
    }
    report.values.push_back(std::move(column));
    report.rho.push_back(spearman(first, second));
  }
  return report;
}

}  // namespace aic
