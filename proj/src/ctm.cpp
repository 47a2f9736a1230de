#include "aic/ctm.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <vector>

namespace aic {

namespace {

constexpr std::string_view kMagic = "#ctm-table v1";

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xF]);
  }
  return hex;
}

std::string format_bits(double bits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", bits);
  return buf;
}

std::string format_decimal(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  if (ec != std::errc()) throw std::runtime_error("cannot format decimal");
  return std::string(buf, ptr);
}

std::string format_space(const RuleSpace& s) {
  return std::to_string(s.states) + "," + std::to_string(s.symbols) + "," +
         std::to_string(s.dimension);
}

std::string complement_key(const std::string& key, int symbols) {
  std::string out = key;
  const auto start = out.find(':') == std::string::npos ? 0 : out.find(':') + 1;
  for (std::size_t i = start; i < out.size(); ++i) {
    out[i] = static_cast<char>('0' + (symbols - 1 - (out[i] - '0')));
  }
  return out;
}

std::uint64_t sample_count(std::uint64_t total, const std::optional<SamplingPlan>& plan) {
  if (!plan) return total;
  if (plan->stride == 0) throw std::invalid_argument("sampling stride must be positive");
  const std::uint64_t offset = plan->offset();
  if (offset >= total) return 0;
  return (total - offset - 1) / plan->stride + 1;
}

}  // namespace

void OutputDistribution::write(std::ostream& out) const {
  out << "#ctm-distribution v1\n";
  out << "space=" << format_space(source.space) << " cutoff=" << source.cutoff
      << " total_halting=" << source.total_halting << " machines=" << machines;
  if (source.sampling) {
    out << " sampling=" << source.sampling->stride << ":" << source.sampling->seed;
  }
  out << "\n";
  for (const auto& [block, count] : counts) out << block << "," << count << "\n";
}

std::string OutputDistribution::serialized() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

OutputDistribution build_distribution(const RuleSpace& space, std::uint64_t cutoff,
                                      unsigned partitions,
                                      std::optional<SamplingPlan> sampling) {
  if (partitions == 0) throw std::invalid_argument("partitions must be positive");
  const std::uint64_t total = space.machine_count();
  const std::uint64_t samples = sample_count(total, sampling);
  const std::uint64_t offset = sampling ? sampling->offset() : 0;
  const std::uint64_t stride = sampling ? sampling->stride : 1;

  const std::uint64_t parts = std::min<std::uint64_t>(partitions, std::max<std::uint64_t>(samples, 1));
  using LocalCounts = std::unordered_map<std::string, std::uint64_t>;
  std::vector<LocalCounts> local(parts);
  std::vector<std::uint64_t> halting(parts, 0);

  auto work = [&](std::uint64_t part) {
    const std::uint64_t begin = samples * part / parts;
    const std::uint64_t end = samples * (part + 1) / parts;
    Simulator sim(space, cutoff);
    LocalCounts& counts = local[part];
    for (std::uint64_t j = begin; j < end; ++j) {
      auto key = sim.run_index(offset + j * stride);
      if (!key) continue;
      ++halting[part];
      ++counts[complement_key(*key, space.symbols)];
      ++counts[std::move(*key)];
    }
  };

  if (parts == 1) {
    work(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(parts);
    for (std::uint64_t p = 0; p < parts; ++p) workers.emplace_back(work, p);
  }

  OutputDistribution dist;
  dist.source.space = space;
  dist.source.cutoff = cutoff;
  dist.source.sampling = sampling;
  dist.machines = samples;
  for (std::uint64_t p = 0; p < parts; ++p) {
    dist.source.total_halting += 2 * halting[p];
    for (auto& [key, count] : local[p]) dist.counts[key] += count;
  }
  if (dist.source.total_halting == 0) {
    throw std::logic_error("no halting machine found in the enumerated space");
  }
  return dist;
}

double quantize_bits(double bits) { return std::strtod(format_bits(bits).c_str(), nullptr); }

CtmTable::CtmTable(SourceInfo source, double completion_r,
                   std::map<std::string, TableEntry> entries)
    : source_(source), completion_r_(completion_r), entries_(std::move(entries)) {
  source_.space.validate();
  for (const auto& [key, entry] : entries_) {
    const SymbolArray block = SymbolArray::from_key(key);
    if (block.rank() != static_cast<std::size_t>(dimension())) {
      throw std::invalid_argument("block '" + key + "' does not match table dimension");
    }
    if (block.max_symbol() >= symbols()) {
      throw std::invalid_argument("block '" + key + "' uses a symbol outside the alphabet");
    }
    if (dimension() == 2 && block.dim(0) != block.dim(1)) {
      throw std::invalid_argument("2D table blocks must be square: '" + key + "'");
    }
    const std::size_t extent = block.cols();
    base_extent_ = std::max(base_extent_, extent);
    auto [it, inserted] = stats_.try_emplace(extent);
    ShapeStats& s = it->second;
    if (inserted) {
      s.min_bits = s.max_bits = entry.bits;
    } else {
      s.min_bits = std::min(s.min_bits, entry.bits);
      s.max_bits = std::max(s.max_bits, entry.bits);
    }
    ++s.total;
    if (entry.count) ++s.observed;
  }
}

std::string CtmTable::key_for(const SymbolArray& block) const {
  SymbolArray normalized = block.squeezed(static_cast<std::size_t>(dimension()));
  if (dimension() == 2 && normalized.rank() == 1) {
    normalized = SymbolArray({1, normalized.size()},
                             std::vector<Symbol>(normalized.cells().begin(), normalized.cells().end()));
  }
  if (normalized.rank() != static_cast<std::size_t>(dimension())) {
    throw ShapeError("block of rank " + std::to_string(block.rank()) +
                     " cannot be looked up in a " + std::to_string(dimension()) + "D table");
  }
  if (extent_of(normalized) > base_extent_) {
    throw ShapeError("block larger than the table base shape (" + std::to_string(base_extent_) +
                     "); decompose it with BDM");
  }
  return normalized.key();
}

std::size_t CtmTable::extent_of(const SymbolArray& normalized) const {
  return normalized.rank() == 1 ? normalized.size()
                                : std::max(normalized.dim(0), normalized.dim(1));
}

bool CtmTable::fits(const SymbolArray& block) const {
  try {
    (void)key_for(block);
    return true;
  } catch (const ShapeError&) {
    return false;
  }
}

const TableEntry* CtmTable::find(const SymbolArray& block) const {
  auto it = entries_.find(key_for(block));
  return it == entries_.end() ? nullptr : &it->second;
}

double CtmTable::lookup(const SymbolArray& block) const {
  const std::string key = key_for(block);
  auto it = entries_.find(key);
  if (it == entries_.end()) throw std::out_of_range("block '" + key + "' not in table");
  return it->second.bits;
}

const CtmTable::ShapeStats& CtmTable::stats(std::size_t extent) const {
  auto it = stats_.find(extent);
  if (it == stats_.end()) {
    throw ShapeError("table has no blocks of extent " + std::to_string(extent));
  }
  return it->second;
}

double CtmTable::max_bits() const {
  double best = 0.0;
  for (const auto& [extent, s] : stats_) best = std::max(best, s.max_bits);
  return best;
}

void CtmTable::write(std::ostream& out) const {
  std::ostringstream rows;
  for (const auto& [key, entry] : entries_) {
    rows << key << ',';
    if (entry.count) {
      rows << *entry.count;
    } else {
      rows << '-';
    }
    rows << ',' << format_bits(entry.bits) << '\n';
  }
  const std::string body = rows.str();
  out << kMagic << '\n';
  out << "space=" << format_space(source_.space) << " cutoff=" << source_.cutoff
      << " total_halting=" << source_.total_halting
      << " completion_r=" << format_decimal(completion_r_);
  if (source_.sampling) {
    out << " sampling=" << source_.sampling->stride << ":" << source_.sampling->seed;
  }
  out << '\n';
  out << "sha256=" << sha256_hex(body) << '\n';
  out << body;
}

std::string CtmTable::serialized() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

CtmTable ctm_table(const OutputDistribution& dist, std::size_t base_extent, double completion_r) {
  if (base_extent == 0) throw std::invalid_argument("base shape must be at least 1");
  if (!(completion_r > 0.0)) throw std::invalid_argument("completion offset r must be positive");
  const RuleSpace& space = dist.source.space;
  const auto total = static_cast<double>(dist.source.total_halting);

  std::map<std::string, TableEntry> entries;
  for (std::size_t extent = 1; extent <= base_extent; ++extent) {
    const auto blocks = space.dimension == 1 ? all_strings(extent, space.symbols)
                                             : all_matrices(extent, extent, space.symbols);
    double class_max = -1.0;
    std::vector<std::string> missing;
    for (const SymbolArray& block : blocks) {
      std::string key = block.key();
      auto it = dist.counts.find(key);
      if (it == dist.counts.end()) {
        missing.push_back(std::move(key));
        continue;
      }
      const double bits = quantize_bits(-std::log2(static_cast<double>(it->second) / total));
      class_max = std::max(class_max, bits);
      entries.emplace(std::move(key), TableEntry{it->second, bits});
    }
    if (class_max < 0.0) {
      const std::string name = space.dimension == 1
                                   ? "length " + std::to_string(extent)
                                   : std::to_string(extent) + "x" + std::to_string(extent);
      throw ShapeError("distribution has no observed block of " + name +
                       "; cannot complete this class");
    }
    const double completed = quantize_bits(class_max + completion_r);
    for (std::string& key : missing) entries.emplace(std::move(key), TableEntry{std::nullopt, completed});
  }
  return CtmTable(dist.source, completion_r, std::move(entries));
}

void save_table(const CtmTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  table.write(out);
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw TableFormatError("line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_u64(std::string_view text, std::size_t line, std::string_view field) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(line, "malformed " + std::string(field) + " '" + std::string(text) + "'");
  }
  return value;
}

double parse_double(std::string_view text, std::size_t line, std::string_view field) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    fail(line, "malformed " + std::string(field) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

CtmTable parse_table(std::istream& in, std::optional<RuleSpace> expected_space) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<std::string_view> lines;
  std::string_view rest = content;
  std::size_t header_end = 0;
  for (int i = 0; i < 3; ++i) {
    auto nl = rest.find('\n');
    if (nl == std::string_view::npos) fail(static_cast<std::size_t>(i + 1), "truncated header");
    lines.push_back(rest.substr(0, nl));
    rest.remove_prefix(nl + 1);
    header_end += nl + 1;
  }
  if (lines[0] != kMagic) fail(1, "unsupported table version '" + std::string(lines[0]) + "'");

  SourceInfo source;
  double completion_r = 0.0;
  bool seen_space = false, seen_cutoff = false, seen_total = false, seen_r = false;
  for (std::string_view field : split(lines[1], ' ')) {
    auto eq = field.find('=');
    if (eq == std::string_view::npos) fail(2, "malformed header field '" + std::string(field) + "'");
    auto name = field.substr(0, eq);
    auto value = field.substr(eq + 1);
    if (name == "space") {
      auto parts = split(value, ',');
      if (parts.size() != 3) fail(2, "space must be <t>,<k>,<dim>");
      source.space.states = static_cast<int>(parse_u64(parts[0], 2, "states"));
      source.space.symbols = static_cast<int>(parse_u64(parts[1], 2, "symbols"));
      source.space.dimension = static_cast<int>(parse_u64(parts[2], 2, "dimension"));
      try {
        source.space.validate();
      } catch (const std::invalid_argument& e) {
        fail(2, e.what());
      }
      seen_space = true;
    } else if (name == "cutoff") {
      source.cutoff = parse_u64(value, 2, "cutoff");
      seen_cutoff = true;
    } else if (name == "total_halting") {
      source.total_halting = parse_u64(value, 2, "total_halting");
      seen_total = true;
    } else if (name == "completion_r") {
      completion_r = parse_double(value, 2, "completion_r");
      seen_r = true;
    } else if (name == "sampling") {
      auto parts = split(value, ':');
      if (parts.size() != 2) fail(2, "sampling must be <stride>:<seed>");
      source.sampling = SamplingPlan{parse_u64(parts[0], 2, "stride"), parse_u64(parts[1], 2, "seed")};
    } else {
      fail(2, "unknown header field '" + std::string(name) + "'");
    }
  }
  if (!(seen_space && seen_cutoff && seen_total && seen_r)) fail(2, "incomplete header");
  if (expected_space && !(*expected_space == source.space)) {
    throw TableFormatError("table metadata mismatch: file has space=" + format_space(source.space) +
                           ", expected " + format_space(*expected_space));
  }

  if (!lines[2].starts_with("sha256=")) fail(3, "missing sha256 line");
  const std::string_view body = std::string_view(content).substr(header_end);
  if (lines[2].substr(7) != sha256_hex(body)) fail(3, "checksum mismatch");

  std::map<std::string, TableEntry> entries;
  std::size_t line_no = 3;
  std::string_view remaining = body;
  std::string previous;
  while (!remaining.empty()) {
    ++line_no;
    auto nl = remaining.find('\n');
    if (nl == std::string_view::npos) fail(line_no, "row not terminated by newline");
    std::string_view row = remaining.substr(0, nl);
    remaining.remove_prefix(nl + 1);
    auto parts = split(row, ',');
    if (parts.size() != 3) fail(line_no, "expected <block>,<count|->,<bits>");
    std::string key(parts[0]);
    try {
      (void)SymbolArray::from_key(key);
    } catch (const std::invalid_argument& e) {
      fail(line_no, e.what());
    }
    if (!previous.empty() && !(previous < key)) fail(line_no, "rows not sorted or duplicated");
    TableEntry entry;
    if (parts[1] != "-") entry.count = parse_u64(parts[1], line_no, "count");
    entry.bits = parse_double(parts[2], line_no, "bits");
    entries.emplace(key, entry);
    previous = std::move(key);
  }
  try {
    return CtmTable(source, completion_r, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw TableFormatError(e.what());
  }
}

CtmTable load_table(const std::filesystem::path& path, std::optional<RuleSpace> expected_space) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open table '" + path.string() + "'");
  return parse_table(in, expected_space);
}

}  // namespace aic
