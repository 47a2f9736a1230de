#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aic/ctm.hpp"
#include "aic/symbol_array.hpp"

namespace aic {

// How cells outside whole blocks are handled.
enum class Boundary {
  Trim,       // ignore cells that do not fit a whole block
  Cyclic,     // wrap the object on a torus, slide the window by one cell
  Recursive,  // largest d x d tiling in a corner, residual strips at d-1, ...
  AddBorder,  // pad to the next multiple with a constant symbol, then correct
};

enum class Variant { Plain, Smooth, MutualInfo };

// Corner that anchors the d x d tiling at each recursion level. DR names the
// upper-right corner.
enum class Quadrant { UL, LL, DR, LR };

enum class SmoothWeights {
  // W = 2^(min class value - value): the block's frequency relative to the
  // most frequent block of its shape in the source distribution.
  Frequency,
  Unit,  // W = 1
};

struct BdmConfig {
  std::size_t block = 12;             // l (strings) or d (per axis)
  std::vector<std::size_t> block_shape;  // optional per-axis override (tensors)
  std::size_t offset = 0;             // m; 0 means m = l (no overlap)
  Boundary boundary = Boundary::Trim;
  Variant variant = Variant::Plain;
  std::vector<Quadrant> quadrants;    // Recursive: one per level, last repeats
  SmoothWeights weights = SmoothWeights::Frequency;

  std::size_t effective_offset() const { return offset == 0 ? block : offset; }
  std::vector<std::size_t> shape_for(std::size_t rank) const;
  void validate(std::size_t rank) const;
};

struct Placement {
  std::vector<std::size_t> origin;  // in (possibly padded) object coordinates
  std::vector<std::size_t> shape;
};

// What happened to cells not covered by exactly one whole block.
struct Leftover {
  std::vector<std::size_t> ignored;  // flat indices dropped by Trim
  std::vector<std::size_t> padded_dims;  // AddBorder: dims after padding
  std::size_t added_cells = 0;
  Symbol fill = 0;
  double correction = 0.0;  // bits subtracted from the block sum
  bool wrapped = false;     // Cyclic
};

struct BlockCount {
  SymbolArray block;
  std::size_t multiplicity = 0;
};

struct BlockMultiset {
  std::vector<BlockCount> entries;  // distinct blocks, sorted by key
  std::vector<Placement> placements;  // one per block occurrence
  Leftover leftover;

  std::size_t total_blocks() const;
};

struct BdmResult {
  double value = 0.0;
  BlockMultiset multiset;
  BdmConfig config;
  double correction = 0.0;
};

// Splits an object into blocks. For AddBorder the object is padded with
// `fill` first.
BlockMultiset decompose(const SymbolArray& object, const BdmConfig& config, Symbol fill = 0);

// Sum over distinct blocks of lookup + log2(multiplicity), minus the
// leftover correction.
double evaluate(const BlockMultiset& multiset, const CtmTable& table);

// Dispatches on config.variant.
BdmResult bdm(const SymbolArray& object, const CtmTable& table, const BdmConfig& config);

// The recursive quadrant partition of a matrix into square blocks of sides
// d, d-1, ..., 1. Blocks are returned with their placements.
std::vector<Placement> recursive_partition(std::size_t rows, std::size_t cols, std::size_t d,
                                           const std::vector<Quadrant>& quadrants);
std::vector<SymbolArray> recursive_partition(const SymbolArray& matrix, std::size_t d,
                                             const std::vector<Quadrant>& quadrants);

// Full-overlap d x d (or length-d) windows over the object wrapped on a torus.
BlockMultiset cyclic_embed(const SymbolArray& object, std::size_t d);

BdmResult smooth_bdm(const SymbolArray& object, const CtmTable& table, const BdmConfig& config);
BdmResult mi_bdm(const SymbolArray& object, const CtmTable& table, const BdmConfig& config);

// Mixing rule for one block given its best partner: the smaller of
// MI*c_i + (1-MI)*c_j and MI*c_j + (1-MI)*c_i.
double mi_mix(double mi, double ctm_i, double ctm_j);

// Shannon entropy of the partition: blocks taken as symbols.
double partition_entropy(const BlockMultiset& multiset);

// Normalized BDM for n x n matrices over a 2D table with d x d base blocks.
double min_bdm(std::size_t n, std::size_t d, const CtmTable& table);
double max_bdm(std::size_t n, std::size_t d, const CtmTable& table);
// Occupancy f_{n,d}: the floor(n/d)^2 tiles spread as evenly as possible over
// the d x d blocks, highest table values first.
std::vector<BlockCount> max_occupancy(std::size_t n, std::size_t d, const CtmTable& table);
// An n x n matrix whose d x d tiling realises max_occupancy (cells outside
// the tiling are 0).
SymbolArray max_complexity_matrix(std::size_t n, std::size_t d, const CtmTable& table);
double normalized_bdm(const SymbolArray& matrix, const CtmTable& table, std::size_t d);

// Analytic bound on the boundary error of a strategy for an object shape.
double boundary_error_bound(const std::vector<std::size_t>& dims, std::size_t d, Boundary strategy,
                            double max_table_bits);

std::string to_string(Boundary b);
std::string to_string(Variant v);
std::string to_string(Quadrant q);
Boundary parse_boundary(const std::string& text);
Variant parse_variant(const std::string& text);
Quadrant parse_quadrant(const std::string& text);

// Text formats. Matrix: lines of symbol digits of equal length. Tensor:
// "dims=<d1>x<d2>x..." header then row-major symbol lines. A single line is
// read as a string.
SymbolArray parse_object(const std::string& text);
SymbolArray parse_matrix(const std::string& text);
SymbolArray parse_tensor(const std::string& text);
std::string format_matrix(const SymbolArray& matrix);

}  // namespace aic
