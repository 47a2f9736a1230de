#include "aic/bdm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "aic/entropy.hpp"

namespace aic {

namespace {

using Dims = std::vector<std::size_t>;

std::vector<std::size_t> strides_of(const Dims& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t a = dims.size(); a-- > 1;) strides[a - 1] = strides[a] * dims[a];
  return strides;
}

// Advances a multi-index over `extent`; returns false after the last one.
bool advance(std::vector<std::size_t>& index, const Dims& extent) {
  for (std::size_t a = index.size(); a-- > 0;) {
    if (++index[a] < extent[a]) return true;
    index[a] = 0;
  }
  return false;
}

SymbolArray extract(const SymbolArray& object, const Dims& origin, const Dims& shape, bool wrap) {
  const Dims& dims = object.dims();
  const auto strides = strides_of(dims);
  std::vector<Symbol> cells;
  cells.reserve(std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>()));
  std::vector<std::size_t> offset(shape.size(), 0);
  do {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < shape.size(); ++a) {
      std::size_t coord = origin[a] + offset[a];
      if (wrap) coord %= dims[a];
      flat += coord * strides[a];
    }
    cells.push_back(object[flat]);
  } while (advance(offset, shape));
  return SymbolArray(shape, std::move(cells));
}

std::string multiset_key(const SymbolArray& block) {
  std::string key;
  for (std::size_t d : block.dims()) key += std::to_string(d) + "x";
  key += ":" + block.digits();
  return key;
}

BlockMultiset collect(const SymbolArray& object, std::vector<Placement> placements, bool wrap) {
  std::map<std::string, BlockCount> counts;
  for (const Placement& p : placements) {
    SymbolArray block = extract(object, p.origin, p.shape, wrap);
    auto [it, inserted] = counts.try_emplace(multiset_key(block), BlockCount{block, 0});
    ++it->second.multiplicity;
  }
  BlockMultiset out;
  out.entries.reserve(counts.size());
  for (auto& [key, bc] : counts) out.entries.push_back(std::move(bc));
  out.placements = std::move(placements);
  return out;
}

std::vector<std::size_t> uncovered(const Dims& dims, const std::vector<Placement>& placements) {
  const auto strides = strides_of(dims);
  const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  std::vector<bool> covered(total, false);
  for (const Placement& p : placements) {
    std::vector<std::size_t> offset(p.shape.size(), 0);
    do {
      std::size_t flat = 0;
      for (std::size_t a = 0; a < dims.size(); ++a) flat += (p.origin[a] + offset[a]) * strides[a];
      covered[flat] = true;
    } while (advance(offset, p.shape));
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < total; ++i) {
    if (!covered[i]) out.push_back(i);
  }
  return out;
}

std::vector<Placement> sliding_windows(const Dims& dims, const Dims& shape, std::size_t step) {
  Dims counts(dims.size());
  for (std::size_t a = 0; a < dims.size(); ++a) {
    if (shape[a] > dims[a]) throw std::invalid_argument("object below block size");
    counts[a] = (dims[a] - shape[a]) / step + 1;
  }
  std::vector<Placement> out;
  std::vector<std::size_t> index(dims.size(), 0);
  do {
    Placement p{Dims(dims.size()), shape};
    for (std::size_t a = 0; a < dims.size(); ++a) p.origin[a] = index[a] * step;
    out.push_back(std::move(p));
  } while (advance(index, counts));
  return out;
}

SymbolArray pad(const SymbolArray& object, const Dims& padded, Symbol fill) {
  SymbolArray out(padded, fill);
  const auto src_strides = strides_of(object.dims());
  const auto dst_strides = strides_of(padded);
  std::vector<std::size_t> index(object.rank(), 0);
  do {
    std::size_t src = 0, dst = 0;
    for (std::size_t a = 0; a < object.rank(); ++a) {
      src += index[a] * src_strides[a];
      dst += index[a] * dst_strides[a];
    }
    out[dst] = object[src];
  } while (advance(index, object.dims()));
  return out;
}

// Smallest n' >= max(n, b) with (n' - b) divisible by the step.
std::size_t padded_extent(std::size_t n, std::size_t b, std::size_t step) {
  if (n <= b) return b;
  return b + ((n - b + step - 1) / step) * step;
}

void recurse_1d(std::size_t start, std::size_t length, std::size_t l, std::size_t level,
                const std::vector<Quadrant>& quadrants, std::vector<Placement>& out) {
  if (length == 0 || l == 0) return;
  const Quadrant q = quadrants.empty() ? Quadrant::UL : quadrants[std::min(level, quadrants.size() - 1)];
  const bool left = q == Quadrant::UL || q == Quadrant::LL;
  const std::size_t tiled = (length / l) * l;
  const std::size_t main_start = left ? start : start + length - tiled;
  for (std::size_t p = 0; p < tiled; p += l) out.push_back({{main_start + p}, {l}});
  recurse_1d(left ? start + tiled : start, length - tiled, l - 1, level + 1, quadrants, out);
}

void recurse_2d(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols, std::size_t d,
                std::size_t level, const std::vector<Quadrant>& quadrants,
                std::vector<Placement>& out) {
  if (rows == 0 || cols == 0 || d == 0) return;
  const Quadrant q = quadrants.empty() ? Quadrant::UL : quadrants[std::min(level, quadrants.size() - 1)];
  const bool top = q == Quadrant::UL || q == Quadrant::DR;
  const bool left = q == Quadrant::UL || q == Quadrant::LL;
  const std::size_t mr = (rows / d) * d;
  const std::size_t nc = (cols / d) * d;
  const std::size_t main_r = top ? r0 : r0 + rows - mr;
  const std::size_t main_c = left ? c0 : c0 + cols - nc;
  for (std::size_t r = 0; r < mr; r += d) {
    for (std::size_t c = 0; c < nc; c += d) out.push_back({{main_r + r, main_c + c}, {d, d}});
  }
  const std::size_t rest_r = top ? r0 + mr : r0;
  const std::size_t rest_c = left ? c0 + nc : c0;
  // Column strip beside the tiling, row strip below/above it, then the corner.
  recurse_2d(main_r, rest_c, mr, cols - nc, d - 1, level + 1, quadrants, out);
  recurse_2d(rest_r, main_c, rows - mr, nc, d - 1, level + 1, quadrants, out);
  recurse_2d(rest_r, rest_c, rows - mr, cols - nc, d - 1, level + 1, quadrants, out);
}

void check_alphabet(const SymbolArray& object, const CtmTable& table) {
  if (object.empty()) throw std::invalid_argument("object is empty");
  if (object.max_symbol() >= table.symbols()) {
    throw ConfigurationError("object uses symbols outside the table's " +
                             std::to_string(table.symbols()) + "-symbol alphabet");
  }
}

void check_block_fits(const SymbolArray& object, const CtmTable& table, const BdmConfig& config) {
  const SymbolArray probe(config.shape_for(object.rank()), Symbol{0});
  if (!table.fits(probe)) {
    throw ShapeError("block exceeds table base shape (" + std::to_string(table.base_extent()) + ")");
  }
}

double weight_of(const CtmTable& table, const SymbolArray& block, double bits, SmoothWeights scheme) {
  if (scheme == SmoothWeights::Unit) return 1.0;
  const std::string key = table.key_for(block);
  const SymbolArray normalized = SymbolArray::from_key(key);
  return std::exp2(table.stats(normalized.cols()).min_bits - bits);
}

double weighted_value(const BlockMultiset& ms, const CtmTable& table, SmoothWeights scheme) {
  double value = 0.0;
  for (const BlockCount& bc : ms.entries) {
    const double bits = table.lookup(bc.block);
    value += bits * weight_of(table, bc.block, bits, scheme) +
             std::log2(static_cast<double>(bc.multiplicity));
  }
  return value - ms.leftover.correction;
}

bool divisible(const Dims& dims, const Dims& shape) {
  for (std::size_t a = 0; a < dims.size(); ++a) {
    if (dims[a] % shape[a] != 0) return false;
  }
  return true;
}

std::vector<Symbol> border_fills(const CtmTable& table) {
  std::vector<Symbol> fills{0};
  if (table.symbols() > 1) fills.push_back(1);
  return fills;
}

}  // namespace

std::vector<std::size_t> BdmConfig::shape_for(std::size_t rank) const {
  if (!block_shape.empty()) {
    if (block_shape.size() != rank) {
      throw std::invalid_argument("block shape rank does not match the object rank");
    }
    return block_shape;
  }
  return std::vector<std::size_t>(rank, block);
}

void BdmConfig::validate(std::size_t rank) const {
  const auto shape = shape_for(rank);
  for (std::size_t b : shape) {
    if (b == 0) throw std::invalid_argument("block size must be positive");
    if (effective_offset() > b) throw std::invalid_argument("offset must satisfy 1 <= m <= l");
  }
}

std::size_t BlockMultiset::total_blocks() const {
  std::size_t total = 0;
  for (const BlockCount& bc : entries) total += bc.multiplicity;
  return total;
}

BlockMultiset decompose(const SymbolArray& object, const BdmConfig& config, Symbol fill) {
  if (object.empty()) throw std::invalid_argument("object is empty");
  config.validate(object.rank());
  const Dims shape = config.shape_for(object.rank());
  const std::size_t step = config.effective_offset();

  switch (config.boundary) {
    case Boundary::Trim: {
      auto placements = sliding_windows(object.dims(), shape, step);
      auto ignored = uncovered(object.dims(), placements);
      BlockMultiset ms = collect(object, std::move(placements), false);
      ms.leftover.ignored = std::move(ignored);
      return ms;
    }
    case Boundary::Cyclic: {
      if (config.block_shape.empty()) return cyclic_embed(object, config.block);
      for (std::size_t a = 0; a < object.rank(); ++a) {
        if (shape[a] > object.dim(a)) throw std::invalid_argument("object below block size");
      }
      auto placements = sliding_windows(object.dims(), Dims(object.rank(), 1), 1);
      for (Placement& p : placements) p.shape = shape;
      BlockMultiset ms = collect(object, std::move(placements), true);
      ms.leftover.wrapped = true;
      return ms;
    }
    case Boundary::Recursive: {
      std::vector<Placement> placements;
      if (object.rank() == 1) {
        recurse_1d(0, object.size(), shape[0], 0, config.quadrants, placements);
      } else if (object.rank() == 2) {
        if (shape[0] != shape[1]) throw std::invalid_argument("recursive partition needs square blocks");
        placements = recursive_partition(object.dim(0), object.dim(1), shape[0], config.quadrants);
      } else {
        throw std::invalid_argument("recursive partition supports strings and matrices only");
      }
      return collect(object, std::move(placements), false);
    }
    case Boundary::AddBorder: {
      Dims padded(object.rank());
      std::size_t added_total = 1;
      double correction = 0.0;
      for (std::size_t a = 0; a < object.rank(); ++a) {
        padded[a] = padded_extent(object.dim(a), shape[a], step);
        const std::size_t added = padded[a] - object.dim(a);
        if (added > 0) correction += std::log2(static_cast<double>(added));
        added_total *= padded[a];
      }
      const SymbolArray extended = pad(object, padded, fill);
      auto placements = sliding_windows(padded, shape, step);
      BlockMultiset ms = collect(extended, std::move(placements), false);
      ms.leftover.padded_dims = padded;
      ms.leftover.added_cells = added_total - object.size();
      ms.leftover.fill = fill;
      ms.leftover.correction = correction;
      return ms;
    }
  }
  throw std::invalid_argument("unknown boundary strategy");
}

double evaluate(const BlockMultiset& multiset, const CtmTable& table) {
  double value = 0.0;
  for (const BlockCount& bc : multiset.entries) {
    value += table.lookup(bc.block) + std::log2(static_cast<double>(bc.multiplicity));
  }
  return value - multiset.leftover.correction;
}

BdmResult bdm(const SymbolArray& object, const CtmTable& table, const BdmConfig& config) {
  check_alphabet(object, table);
  config.validate(object.rank());
  check_block_fits(object, table, config);
  if (config.variant == Variant::Smooth) return smooth_bdm(object, table, config);
  if (config.variant == Variant::MutualInfo) return mi_bdm(object, table, config);

  BdmResult best;
  bool have = false;
  const std::vector<Symbol> fills =
      config.boundary == Boundary::AddBorder ? border_fills(table) : std::vector<Symbol>{0};
  for (Symbol fill : fills) {
    BlockMultiset ms = decompose(object, config, fill);
    const double value = evaluate(ms, table);
    if (!have || value < best.value) {
      best.value = value;
      best.correction = ms.leftover.correction;
      best.multiset = std::move(ms);
      have = true;
    }
  }
  best.config = config;
  return best;
}

std::vector<Placement> recursive_partition(std::size_t rows, std::size_t cols, std::size_t d,
                                           const std::vector<Quadrant>& quadrants) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix must be non-empty");
  if (d == 0) throw std::invalid_argument("block size must be positive");
  std::vector<Placement> out;
  recurse_2d(0, 0, rows, cols, d, 0, quadrants, out);
  return out;
}

std::vector<SymbolArray> recursive_partition(const SymbolArray& matrix, std::size_t d,
                                             const std::vector<Quadrant>& quadrants) {
  if (matrix.rank() != 2) throw std::invalid_argument("recursive partition needs a matrix");
  std::vector<SymbolArray> out;
  for (const Placement& p : recursive_partition(matrix.dim(0), matrix.dim(1), d, quadrants)) {
    out.push_back(extract(matrix, p.origin, p.shape, false));
  }
  return out;
}

BlockMultiset cyclic_embed(const SymbolArray& object, std::size_t d) {
  if (d == 0) throw std::invalid_argument("block size must be positive");
  for (std::size_t n : object.dims()) {
    if (d > n) throw std::invalid_argument("object below block size");
  }
  auto placements = sliding_windows(object.dims(), Dims(object.rank(), 1), 1);
  for (Placement& p : placements) p.shape = Dims(object.rank(), d);
  BlockMultiset ms = collect(object, std::move(placements), true);
  ms.leftover.wrapped = true;
  return ms;
}

BdmResult smooth_bdm(const SymbolArray& object, const CtmTable& table, const BdmConfig& config) {
  check_alphabet(object, table);
  config.validate(object.rank());
  check_block_fits(object, table, config);
  const Dims shape = config.shape_for(object.rank());

  BdmConfig partition = config;
  partition.offset = 0;
  BdmResult best;
  best.config = config;
  if (divisible(object.dims(), shape)) {
    partition.boundary = Boundary::Trim;
    best.multiset = decompose(object, partition);
    best.value = weighted_value(best.multiset, table, config.weights);
    return best;
  }
  partition.boundary = Boundary::AddBorder;
  bool have = false;
  for (Symbol fill : border_fills(table)) {
    BlockMultiset ms = decompose(object, partition, fill);
    const double value = weighted_value(ms, table, config.weights);
    if (!have || value < best.value) {
      best.value = value;
      best.correction = ms.leftover.correction;
      best.multiset = std::move(ms);
      have = true;
    }
  }
  return best;
}

double mi_mix(double mi, double ctm_i, double ctm_j) {
  return std::min(mi * ctm_i + (1.0 - mi) * ctm_j, mi * ctm_j + (1.0 - mi) * ctm_i);
}

BdmResult mi_bdm(const SymbolArray& object, const CtmTable& table, const BdmConfig& config) {
  check_alphabet(object, table);
  config.validate(object.rank());
  check_block_fits(object, table, config);

  BdmConfig plain = config;
  plain.variant = Variant::Plain;
  BdmResult base = bdm(object, table, plain);
  const auto& entries = base.multiset.entries;

  std::vector<double> ctm(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) ctm[i] = table.lookup(entries[i].block);

  double value = 0.0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    double best_mi = -1.0;
    double block_value = ctm[i];
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (j == i || entries[j].block.dims() != entries[i].block.dims()) continue;
      const double mi = normalized_mutual_information(entries[i].block, entries[j].block);
      const double mixed = mi_mix(mi, ctm[i], ctm[j]);
      // Ties on MI keep the partner that gives the smaller value.
      if (mi > best_mi || (mi == best_mi && mixed < block_value)) {
        best_mi = mi;
        block_value = mixed;
      }
    }
    value += block_value + std::log2(static_cast<double>(entries[i].multiplicity));
  }
  base.value = value - base.multiset.leftover.correction;
  base.config = config;
  return base;
}

double partition_entropy(const BlockMultiset& multiset) {
  const auto total = static_cast<double>(multiset.total_blocks());
  double h = 0.0;
  for (const BlockCount& bc : multiset.entries) {
    const double p = static_cast<double>(bc.multiplicity) / total;
    h -= p * std::log2(p);
  }
  return h == 0.0 ? 0.0 : h;
}

namespace {

void require_square_table(const CtmTable& table, std::size_t n, std::size_t d) {
  if (table.dimension() != 2) throw ConfigurationError("normalized BDM needs a 2D table");
  if (d == 0 || d > table.base_extent()) {
    throw ShapeError("block exceeds table base shape (" + std::to_string(table.base_extent()) + ")");
  }
  if (n < d) throw std::invalid_argument("matrix smaller than the block size");
}

}  // namespace

double min_bdm(std::size_t n, std::size_t d, const CtmTable& table) {
  require_square_table(table, n, d);
  return static_cast<double>(n / d) + table.stats(d).min_bits;
}

std::vector<BlockCount> max_occupancy(std::size_t n, std::size_t d, const CtmTable& table) {
  require_square_table(table, n, d);
  const std::string prefix = std::to_string(d) + "x" + std::to_string(d) + ":";
  std::vector<std::pair<std::string, double>> ranked;
  for (auto it = table.entries().lower_bound(prefix);
       it != table.entries().end() && it->first.starts_with(prefix); ++it) {
    ranked.emplace_back(it->first, it->second.bits);
  }
  if (ranked.empty()) throw ShapeError("table has no " + prefix + " blocks");
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  const std::size_t tiles = (n / d) * (n / d);
  const std::size_t per_block = tiles / ranked.size();
  const std::size_t extra = tiles % ranked.size();
  std::map<std::string, BlockCount> chosen;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const std::size_t f = per_block + (i < extra ? 1 : 0);
    if (f == 0) break;
    SymbolArray block = SymbolArray::from_key(ranked[i].first);
    std::string key = multiset_key(block);
    chosen.emplace(std::move(key), BlockCount{std::move(block), f});
  }
  std::vector<BlockCount> out;
  for (auto& [key, bc] : chosen) out.push_back(std::move(bc));
  return out;
}

double max_bdm(std::size_t n, std::size_t d, const CtmTable& table) {
  BlockMultiset ms;
  ms.entries = max_occupancy(n, d, table);
  return evaluate(ms, table);
}

SymbolArray max_complexity_matrix(std::size_t n, std::size_t d, const CtmTable& table) {
  const auto occupancy = max_occupancy(n, d, table);
  SymbolArray out = SymbolArray::matrix(n, n, 0);
  const std::size_t per_row = n / d;
  std::size_t tile = 0;
  for (const BlockCount& bc : occupancy) {
    for (std::size_t rep = 0; rep < bc.multiplicity; ++rep, ++tile) {
      const std::size_t r0 = (tile / per_row) * d;
      const std::size_t c0 = (tile % per_row) * d;
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) out.at(r0 + r, c0 + c) = bc.block.at(r, c);
      }
    }
  }
  return out;
}

double normalized_bdm(const SymbolArray& matrix, const CtmTable& table, std::size_t d) {
  if (matrix.rank() != 2 || matrix.dim(0) != matrix.dim(1)) {
    throw std::invalid_argument("normalized BDM needs a square matrix");
  }
  const std::size_t n = matrix.dim(0);
  const double lo = min_bdm(n, d, table);
  const double hi = max_bdm(n, d, table);
  if (!(hi > lo)) throw std::domain_error("table has no complexity spread");
  BdmConfig config;
  config.block = d;
  const double value = bdm(matrix, table, config).value;
  return std::clamp((value - lo) / (hi - lo), 0.0, 1.0);
}

double boundary_error_bound(const std::vector<std::size_t>& dims, std::size_t d, Boundary strategy,
                            double max_table_bits) {
  if (dims.empty() || d == 0) throw std::invalid_argument("invalid shape or block size");
  switch (strategy) {
    case Boundary::Trim: {
      if (std::all_of(dims.begin(), dims.end(), [d](std::size_t n) { return n % d == 0; })) return 0.0;
      const auto k = static_cast<double>(*std::min_element(dims.begin(), dims.end()));
      return k * k / std::exp(k);
    }
    case Boundary::Cyclic:
      return static_cast<double>(d - 1) * max_table_bits;
    case Boundary::Recursive:
      return static_cast<double>((d - 1) * (d - 1)) * max_table_bits;
    case Boundary::AddBorder: {
      double bits = 0.0;
      for (std::size_t n : dims) {
        const std::size_t added = (d - n % d) % d;
        if (added > 0) bits += std::log2(static_cast<double>(added));
      }
      return bits;
    }
  }
  throw std::invalid_argument("unknown boundary strategy");
}

std::string to_string(Boundary b) {
  switch (b) {
    case Boundary::Trim: return "trim";
    case Boundary::Cyclic: return "cyclic";
    case Boundary::Recursive: return "recursive";
    case Boundary::AddBorder: return "addborder";
  }
  return "?";
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Plain: return "plain";
    case Variant::Smooth: return "smooth";
    case Variant::MutualInfo: return "mi";
  }
  return "?";
}

std::string to_string(Quadrant q) {
  switch (q) {
    case Quadrant::UL: return "UL";
    case Quadrant::LL: return "LL";
    case Quadrant::DR: return "DR";
    case Quadrant::LR: return "LR";
  }
  return "?";
}

Boundary parse_boundary(const std::string& text) {
  if (text == "trim") return Boundary::Trim;
  if (text == "cyclic") return Boundary::Cyclic;
  if (text == "recursive") return Boundary::Recursive;
  if (text == "addborder" || text == "add-border") return Boundary::AddBorder;
  throw std::invalid_argument("unknown boundary strategy '" + text + "'");
}

Variant parse_variant(const std::string& text) {
  if (text == "plain") return Variant::Plain;
  if (text == "smooth") return Variant::Smooth;
  if (text == "mi") return Variant::MutualInfo;
  throw std::invalid_argument("unknown BDM variant '" + text + "'");
}

Quadrant parse_quadrant(const std::string& text) {
  if (text == "UL") return Quadrant::UL;
  if (text == "LL") return Quadrant::LL;
  if (text == "DR" || text == "UR") return Quadrant::DR;
  if (text == "LR") return Quadrant::LR;
  throw std::invalid_argument("unknown quadrant '" + text + "'");
}

namespace {

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

SymbolArray parse_matrix(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw std::invalid_argument("matrix text is empty");
  const std::size_t cols = lines.front().size();
  SymbolArray m = SymbolArray::matrix(lines.size(), cols);
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].size() != cols) {
      throw std::invalid_argument("matrix line " + std::to_string(r + 1) + " has length " +
                                  std::to_string(lines[r].size()) + ", expected " +
                                  std::to_string(cols));
    }
    const SymbolArray row = SymbolArray::from_string(lines[r]);
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = row[c];
  }
  return m;
}

SymbolArray parse_tensor(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty() || !lines.front().starts_with("dims=")) {
    throw std::invalid_argument("tensor text must start with dims=<d1>x<d2>x...");
  }
  Dims dims;
  std::istringstream spec(lines.front().substr(5));
  std::string part;
  while (std::getline(spec, part, 'x')) {
    std::size_t used = 0;
    const unsigned long value = std::stoul(part, &used);
    if (used != part.size() || value == 0) throw std::invalid_argument("malformed tensor dims");
    dims.push_back(value);
  }
  if (dims.empty()) throw std::invalid_argument("malformed tensor dims");
  std::string digits;
  for (std::size_t i = 1; i < lines.size(); ++i) digits += lines[i];
  SymbolArray flat = SymbolArray::from_string(digits);
  std::vector<Symbol> cells(flat.cells().begin(), flat.cells().end());
  return SymbolArray(dims, std::move(cells));
}

SymbolArray parse_object(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw std::invalid_argument("object text is empty");
  if (lines.front().starts_with("dims=")) return parse_tensor(text);
  if (lines.size() == 1) return SymbolArray::from_string(lines.front());
  return parse_matrix(text);
}

std::string format_matrix(const SymbolArray& matrix) {
  std::string out;
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      out.push_back(static_cast<char>('0' + matrix[r * matrix.cols() + c]));
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace aic
