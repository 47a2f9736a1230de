#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "aic/bdm.hpp"
#include "aic/ctm.hpp"
#include "aic/entropy.hpp"
#include "aic/graph.hpp"
#include "aic/harness.hpp"

namespace aic::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Writes to --out when given, otherwise to `out`.
void emit(const Command& cmd, std::ostream& out, const std::string& text) {
  if (cmd.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cmd.out, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + cmd.out + "' for writing");
  file << text;
}

SymbolArray read_object(const Command& cmd) {
  if (!cmd.string_value.empty()) return SymbolArray::from_string(cmd.string_value);
  if (cmd.input.empty()) throw std::invalid_argument("give --string or --input");
  return parse_object(read_file(cmd.input));
}

std::vector<std::string> read_lines(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty() && line.front() != '#') lines.push_back(line);
  }
  return lines;
}

BdmConfig config_from(const Command& cmd) {
  BdmConfig config;
  config.block = cmd.block;
  config.offset = cmd.overlap;
  config.boundary = parse_boundary(cmd.boundary);
  config.variant = parse_variant(cmd.variant);
  for (const std::string& q : split_list(cmd.quadrants)) config.quadrants.push_back(parse_quadrant(q));
  if (cmd.weights == "frequency") {
    config.weights = SmoothWeights::Frequency;
  } else if (cmd.weights == "unit") {
    config.weights = SmoothWeights::Unit;
  } else {
    throw std::invalid_argument("unknown weight scheme '" + cmd.weights + "'");
  }
  return config;
}

// Largest extent whose classes 1..L all have an observed block.
std::size_t largest_complete_extent(const OutputDistribution& dist) {
  std::map<std::size_t, bool> seen;
  for (const auto& [key, count] : dist.counts) {
    const SymbolArray block = SymbolArray::from_key(key);
    if (block.rank() == 1) {
      seen[block.size()] = true;
    } else if (block.dim(0) == block.dim(1)) {
      seen[block.dim(0)] = true;
    }
  }
  std::size_t extent = 0;
  while (seen.contains(extent + 1)) ++extent;
  return extent;
}

int do_ctm_build(const Command& cmd, std::ostream& out, std::ostream& err) {
  const RuleSpace space{cmd.states, cmd.symbols, cmd.dimension};
  space.validate();
  const std::uint64_t cutoff = halting_cutoff(space, cmd.cutoff);
  std::optional<SamplingPlan> plan;
  if (cmd.sample_stride) plan = SamplingPlan{*cmd.sample_stride, cmd.seed};
  err << "enumerating (" << space.states << "," << space.symbols << ")"
      << (space.dimension == 2 ? " 2D" : "") << " cutoff " << cutoff << " over "
      << cmd.partitions << " partition(s)" << (plan ? " (sampled)" : "") << "\n";
  const OutputDistribution dist = build_distribution(space, cutoff, cmd.partitions, plan);
  err << dist.machines << " machines, " << dist.source.total_halting << " halting runs, "
      << dist.counts.size() << " distinct outputs\n";
  if (!cmd.distribution_out.empty()) {
    std::ofstream file(cmd.distribution_out, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open '" + cmd.distribution_out + "' for writing");
    dist.write(file);
  }
  const std::size_t base = cmd.base ? *cmd.base : largest_complete_extent(dist);
  const CtmTable table = ctm_table(dist, base, cmd.completion_r);
  if (cmd.out.empty()) {
    table.write(out);
  } else {
    save_table(table, cmd.out);
    err << "wrote " << table.entries().size() << " rows (base " << base << ") to " << cmd.out << "\n";
  }
  return 0;
}

int do_ctm_show(const Command& cmd, std::ostream& out) {
  const CtmTable table = load_table(cmd.table);
  std::ostringstream text;
  if (!cmd.show_block.empty()) {
    const SymbolArray block = SymbolArray::from_key(cmd.show_block);
    const TableEntry* entry = table.find(block);
    if (!entry) throw std::out_of_range("block '" + cmd.show_block + "' not in table");
    text << table.key_for(block) << ","
         << (entry->count ? std::to_string(*entry->count) : std::string("-")) << ","
         << format_fixed(entry->bits, 12) << "\n";
  } else {
    const SourceInfo& s = table.source();
    text << "space: (" << s.space.states << "," << s.space.symbols << ") dimension "
         << s.space.dimension << "\n";
    text << "cutoff: " << s.cutoff << "\n";
    text << "total_halting: " << s.total_halting << "\n";
    if (s.sampling) text << "sampling: stride " << s.sampling->stride << " seed " << s.sampling->seed << "\n";
    text << "completion_r: " << table.completion_r() << "\n";
    text << "base: " << table.base_extent() << "\n";
    text << "extent,observed,total,min_bits,max_bits\n";
    for (std::size_t e = 1; e <= table.base_extent(); ++e) {
      const auto& st = table.stats(e);
      text << e << "," << st.observed << "," << st.total << "," << format_fixed(st.min_bits) << ","
           << format_fixed(st.max_bits) << "\n";
    }
  }
  emit(cmd, out, text.str());
  return 0;
}

int do_bdm(const Command& cmd, std::ostream& out) {
  const CtmTable table = load_table(cmd.table);
  const BdmConfig config = config_from(cmd);
  if (cmd.block > table.base_extent()) {
    throw UsageError("block exceeds table base shape (" + std::to_string(table.base_extent()) + ")",
                     "bdm --table FILE --block L [--overlap M] (--string S | --input FILE)");
  }
  if (cmd.batch) {
    std::vector<MeasureObject> objects;
    for (const std::string& line : read_lines(cmd.input)) {
      objects.push_back({line, SymbolArray::from_string(line)});
    }
    const std::string name = "b" + std::to_string(cmd.block) + "m" +
                             std::to_string(config.effective_offset()) + "_" + cmd.boundary;
    emit(cmd, out, measure_report(objects, table, {{name, config}},
                                  cmd.normalized ? std::optional<std::size_t>(cmd.block) : std::nullopt));
    return 0;
  }
  const SymbolArray object = read_object(cmd);
  std::ostringstream text;
  if (cmd.normalized) {
    text << format_fixed(normalized_bdm(object, table, cmd.block), cmd.precision) << "\n";
  } else {
    text << format_fixed(bdm(object, table, config).value, cmd.precision) << "\n";
  }
  emit(cmd, out, text.str());
  return 0;
}

int do_entropy(const Command& cmd, std::ostream& out) {
  const SymbolArray object = read_object(cmd);
  std::ostringstream text;
  if (cmd.best) {
    const BestBlock b = best_block_entropy(object, cmd.normalized, std::max(2, object.max_symbol() + 1));
    text << b.block << " " << format_fixed(b.bits, cmd.precision) << "\n";
  } else if (object.rank() == 1) {
    text << format_fixed(block_entropy(object, cmd.entropy_block, cmd.overlapping), cmd.precision) << "\n";
  } else {
    text << format_fixed(shannon_entropy(object), cmd.precision) << "\n";
  }
  emit(cmd, out, text.str());
  return 0;
}

int do_sweep(const Command& cmd, std::ostream& out) {
  const CtmTable table = load_table(cmd.table);
  std::vector<SymbolArray> strings;
  if (!cmd.input.empty()) {
    for (const std::string& line : read_lines(cmd.input)) strings.push_back(SymbolArray::from_string(line));
  } else {
    if (cmd.length == 0) throw std::invalid_argument("give --length or --input");
    strings = all_strings(cmd.length, table.symbols());
  }
  std::vector<SweepConfig> configs;
  if (cmd.configs.empty()) {
    const std::size_t length = strings.empty() ? 0 : strings.front().size();
    for (std::size_t b = std::min(length, table.base_extent()); b >= 1; --b) {
      for (std::size_t o = b; o-- > 0;) configs.push_back({b, o});
    }
  } else {
    for (const std::string& label : split_list(cmd.configs)) configs.push_back(SweepConfig::parse(label));
  }
  emit(cmd, out, correlation_sweep(strings, table, configs).to_csv());
  return 0;
}

void write_corpus(const std::string& dir, std::size_t count, std::uint64_t seed) {
  std::filesystem::create_directories(dir);
  std::ofstream manifest(std::filesystem::path(dir) / "corpus.txt", std::ios::trunc);
  manifest << "# line-graph pair corpus\nseed=" << seed << "\ncount=" << count << "\n";
  for (const GraphPair& p : line_graph_corpus(count, seed)) {
    std::ofstream g(std::filesystem::path(dir) / (p.id + ".txt"), std::ios::trunc);
    write_graph(g, p.graph);
    std::ofstream l(std::filesystem::path(dir) / (p.id + "_line.txt"), std::ios::trunc);
    write_graph(l, p.transformed);
    manifest << p.id << "\n";
  }
}

int do_graph_test(const Command& cmd, std::ostream& out, std::ostream& err) {
  if (!cmd.write_corpus.empty()) {
    write_corpus(cmd.write_corpus, cmd.corpus == 0 ? 30 : cmd.corpus, cmd.seed);
    err << "wrote corpus to " << cmd.write_corpus << "\n";
    return 0;
  }
  if (cmd.corpus > 0) {
    if (cmd.table.empty()) throw std::invalid_argument("--corpus needs --table");
    const CtmTable table = load_table(cmd.table);
    const std::size_t d = cmd.block == 0 ? 2 : cmd.block;
    std::vector<NamedConfig> configs;
    BdmConfig trim;
    trim.block = d;
    configs.push_back({"trim", trim});
    BdmConfig recursive = trim;
    recursive.boundary = Boundary::Recursive;
    configs.push_back({"recursive", recursive});
    BdmConfig smooth = trim;
    smooth.variant = Variant::Smooth;
    configs.push_back({"smooth", smooth});
    emit(cmd, out, graph_pair_report(line_graph_corpus(cmd.corpus, cmd.seed), table, configs).to_csv());
    return 0;
  }
  if (cmd.g1.empty()) throw std::invalid_argument("give --g1 (and --g2, --line, or --corpus)");
  const Graph g1 = load_graph(cmd.g1);
  std::ostringstream text;
  if (cmd.line) {
    write_graph(text, line_graph(g1));
  } else {
    if (cmd.g2.empty()) throw std::invalid_argument("cospectrality test needs --g2");
    const Graph g2 = load_graph(cmd.g2);
    const auto p1 = char_poly(g1);
    const auto p2 = char_poly(g2);
    text << "g1: " << format_poly(p1) << "\n";
    text << "g2: " << format_poly(p2) << "\n";
    text << "cospectral: " << (p1 == p2 ? "true" : "false") << "\n";
  }
  emit(cmd, out, text.str());
  return 0;
}

}  // namespace

Command parse(const std::vector<std::string>& args) {
  Command cmd;
  CLI::App app{"Algorithmic complexity estimates: CTM tables, BDM and entropy baselines", "aic"};
  app.require_subcommand(1);

  std::uint64_t cutoff = 0, stride = 0;
  std::size_t base = 0;

  auto* build = app.add_subcommand("ctm-build", "Enumerate a rule space and write a CTM table");
  build->add_option("--t", cmd.states, "Number of states")->required()->check(CLI::PositiveNumber);
  build->add_option("--k", cmd.symbols, "Number of symbols")->capture_default_str()->check(CLI::Range(2, 10));
  build->add_option("--dim", cmd.dimension, "Tape dimension (1 or 2)")->capture_default_str()->check(CLI::Range(1, 2));
  build->add_option("--cutoff", cutoff, "Step cutoff (default: known Busy Beaver bound)");
  build->add_option("--partitions", cmd.partitions, "Worker partitions; output does not depend on it")
      ->capture_default_str()->check(CLI::PositiveNumber);
  build->add_option("--base", base, "Base extent (default: largest fully observed)");
  build->add_option("--r", cmd.completion_r, "Completion offset in bits")->capture_default_str();
  build->add_option("--sample-stride", stride, "Sample every n-th machine index");
  build->add_option("--seed", cmd.seed, "Sampling seed (offset = seed mod stride)")->capture_default_str();
  build->add_option("--distribution-out", cmd.distribution_out, "Also write the raw distribution");
  build->add_option("--out", cmd.out, "Table file (default: standard output)");

  auto* show = app.add_subcommand("ctm-show", "Summarise a table or look up one block");
  show->add_option("--table", cmd.table, "Table file")->required();
  show->add_option("--block", cmd.show_block, "Block key, e.g. 0110 or 2x2:0110");
  show->add_option("--out", cmd.out, "Output file");

  auto* bdm_cmd = app.add_subcommand("bdm", "Block decomposition estimate of an object");
  bdm_cmd->add_option("--table", cmd.table, "Table file")->required();
  bdm_cmd->add_option("--block", cmd.block, "Block size l (per axis)")->required()->check(CLI::PositiveNumber);
  bdm_cmd->add_option("--overlap", cmd.overlap, "Window offset m, 1 <= m <= l (default l: no overlap)");
  bdm_cmd->add_option("--boundary", cmd.boundary, "trim | cyclic | recursive | addborder")->capture_default_str();
  bdm_cmd->add_option("--variant", cmd.variant, "plain | smooth | mi")->capture_default_str();
  bdm_cmd->add_option("--quadrants", cmd.quadrants, "Recursive corners, e.g. UL,LR");
  bdm_cmd->add_option("--weights", cmd.weights, "Smooth weights: frequency | unit")->capture_default_str();
  bdm_cmd->add_option("--input", cmd.input, "Object file (string, matrix or tensor)");
  bdm_cmd->add_option("--string", cmd.string_value, "Object given inline");
  bdm_cmd->add_flag("--normalized", cmd.normalized, "Normalized BDM in [0,1] (square matrices)");
  bdm_cmd->add_flag("--batch", cmd.batch, "Treat --input as one string per line; write a CSV report");
  bdm_cmd->add_option("--precision", cmd.precision, "Fractional digits")->capture_default_str();
  bdm_cmd->add_option("--out", cmd.out, "Output file");

  auto* ent = app.add_subcommand("entropy", "Shannon and block entropy");
  ent->add_option("--input", cmd.input, "Object file");
  ent->add_option("--string", cmd.string_value, "Object given inline");
  ent->add_option("--block", cmd.entropy_block, "Block size l")->capture_default_str()->check(CLI::PositiveNumber);
  ent->add_flag("--overlapping", cmd.overlapping, "Slide the block window by one symbol");
  ent->add_flag("--best", cmd.best, "Minimum block entropy over l = 1..n/2");
  ent->add_flag("--normalized", cmd.normalized, "Normalize each H_l before minimising (with --best)");
  ent->add_option("--precision", cmd.precision, "Fractional digits")->capture_default_str();
  ent->add_option("--out", cmd.out, "Output file");

  auto* sweep = app.add_subcommand("sweep", "Spearman correlation of BDM configurations");
  sweep->add_option("--table", cmd.table, "Table file")->required();
  sweep->add_option("--length", cmd.length, "Use all strings of this length");
  sweep->add_option("--input", cmd.input, "File with one string per line");
  sweep->add_option("--configs", cmd.configs, "Comma list like b1o0,b4o3 (default: all)");
  sweep->add_option("--out", cmd.out, "CSV output file");

  auto* graph = app.add_subcommand("graph-test", "Cospectrality, line graphs and pair reports");
  graph->add_option("--g1", cmd.g1, "First graph file");
  graph->add_option("--g2", cmd.g2, "Second graph file");
  graph->add_flag("--line", cmd.line, "Write the line graph of --g1");
  graph->add_option("--corpus", cmd.corpus, "Generate this many (G, L(G)) pairs and report BDM");
  graph->add_option("--write-corpus", cmd.write_corpus, "Write the generated corpus to a directory");
  graph->add_option("--seed", cmd.seed, "Corpus seed")->capture_default_str();
  graph->add_option("--table", cmd.table, "2D table for the pair report");
  graph->add_option("--block", cmd.block, "Block side for the pair report (default 2)");
  graph->add_option("--out", cmd.out, "Output file");

  std::vector<const char*> argv{"aic"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const CLI::App* sub : app.get_subcommands()) target = sub;
    cmd.help = true;
    cmd.help_text = target->help();
    return cmd;
  } catch (const CLI::ParseError& e) {
    const CLI::App* failed = &app;
    for (const CLI::App* sub : app.get_subcommands()) failed = sub;
    throw UsageError(e.what(), failed->help());
  }
  for (CLI::App* sub : {build, show, bdm_cmd, ent, sweep, graph}) {
    if (sub->parsed()) cmd.subcommand = sub->get_name();
  }
  if (build->count("--cutoff")) cmd.cutoff = cutoff;
  if (build->count("--sample-stride")) {
    if (stride == 0) throw UsageError("--sample-stride must be positive", build->help());
    cmd.sample_stride = stride;
  }
  if (build->count("--base")) {
    if (base == 0) throw UsageError("--base must be positive", build->help());
    cmd.base = base;
  }
  if (bdm_cmd->parsed() && cmd.overlap > cmd.block) {
    throw UsageError("--overlap must satisfy 1 <= m <= block", bdm_cmd->help());
  }
  return cmd;
}

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
  if (cmd.help) {
    out << cmd.help_text;
    return 0;
  }
  try {
    if (cmd.subcommand == "ctm-build") return do_ctm_build(cmd, out, err);
    if (cmd.subcommand == "ctm-show") return do_ctm_show(cmd, out);
    if (cmd.subcommand == "bdm") return do_bdm(cmd, out);
    if (cmd.subcommand == "entropy") return do_entropy(cmd, out);
    if (cmd.subcommand == "sweep") return do_sweep(cmd, out);
    if (cmd.subcommand == "graph-test") return do_graph_test(cmd, out, err);
    err << "error: unknown subcommand '" << cmd.subcommand << "'\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << e.usage() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse(args);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << e.usage() << "\n";
    return 2;
  }
  return execute(cmd, out, err);
}

}  // namespace aic::cli
