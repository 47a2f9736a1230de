#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "aic/symbol_array.hpp"
#include "aic/turing.hpp"

namespace aic {

// Index-stride sampler for rule spaces too large to enumerate: runs the
// machines with indices offset, offset+stride, ... where offset = seed % stride.
struct SamplingPlan {
  std::uint64_t stride = 1;
  std::uint64_t seed = 0;

  std::uint64_t offset() const { return seed % stride; }
  friend bool operator==(const SamplingPlan&, const SamplingPlan&) = default;
};

// Where a distribution (and any table built from it) came from.
struct SourceInfo {
  RuleSpace space;
  std::uint64_t cutoff = 0;
  std::uint64_t total_halting = 0;
  std::optional<SamplingPlan> sampling;

  friend bool operator==(const SourceInfo&, const SourceInfo&) = default;
};

// Output frequencies of a rule space run from blank tapes. Every machine is
// run once on the blank-0 tape; its output and the output's complement are
// both counted (the latter being what the complement-conjugate machine
// produces on the blank-(k-1) tape), so each halting machine contributes two
// runs to total_halting.
struct OutputDistribution {
  SourceInfo source;
  std::uint64_t machines = 0;  // machines simulated
  std::map<std::string, std::uint64_t> counts;

  void write(std::ostream& out) const;
  std::string serialized() const;
};

// Enumerates the whole space (or the sampled subset) split over `partitions`
// worker threads. The result does not depend on `partitions`.
OutputDistribution build_distribution(const RuleSpace& space, std::uint64_t cutoff,
                                      unsigned partitions = 1,
                                      std::optional<SamplingPlan> sampling = std::nullopt);

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TableFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TableEntry {
  std::optional<std::uint64_t> count;  // empty for completed entries
  double bits = 0.0;

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

// Block -> complexity-in-bits lookup table. 1D tables are exhaustive over all
// strings of length 1..base_extent; 2D tables over all j x j matrices for
// j = 1..base_extent. Values are kept at 12 fractional digits so that the
// in-memory table and its serialized form agree exactly.
class CtmTable {
 public:
  struct ShapeStats {
    double min_bits = 0.0;
    double max_bits = 0.0;
    std::size_t observed = 0;
    std::size_t total = 0;
  };

  CtmTable(SourceInfo source, double completion_r, std::map<std::string, TableEntry> entries);

  const SourceInfo& source() const { return source_; }
  int dimension() const { return source_.space.dimension; }
  int symbols() const { return source_.space.symbols; }
  double completion_r() const { return completion_r_; }
  // Longest string length (1D) or largest square side (2D) present.
  std::size_t base_extent() const { return base_extent_; }
  const std::map<std::string, TableEntry>& entries() const { return entries_; }

  // Throws ShapeError for blocks beyond the base shape and std::out_of_range
  // for in-shape blocks missing from a partial (imported) table.
  double lookup(const SymbolArray& block) const;
  const TableEntry* find(const SymbolArray& block) const;
  bool fits(const SymbolArray& block) const;

  // Stats for the class of blocks of a given extent (length or square side).
  const ShapeStats& stats(std::size_t extent) const;
  double max_bits() const;

  // Normalises rank (drops leading unit axes, promotes strings to 1 x n for 2D
  // tables) and returns the table key.
  std::string key_for(const SymbolArray& block) const;

  void write(std::ostream& out) const;
  std::string serialized() const;

  friend bool operator==(const CtmTable& a, const CtmTable& b) {
    return a.source_ == b.source_ && a.completion_r_ == b.completion_r_ &&
           a.entries_ == b.entries_;
  }

 private:
  std::size_t extent_of(const SymbolArray& normalized) const;

  SourceInfo source_;
  double completion_r_;
  std::map<std::string, TableEntry> entries_;
  std::size_t base_extent_ = 0;
  std::map<std::size_t, ShapeStats> stats_;
};

// Rounds to the 12-fractional-digit value the table format stores.
double quantize_bits(double bits);

// -log2(count/total) for observed blocks up to `base_extent`; every unobserved
// block of a class gets (max observed value in that class) + r.
CtmTable ctm_table(const OutputDistribution& dist, std::size_t base_extent,
                   double completion_r = 1.0);

void save_table(const CtmTable& table, const std::filesystem::path& path);
CtmTable load_table(const std::filesystem::path& path,
                    std::optional<RuleSpace> expected_space = std::nullopt);
CtmTable parse_table(std::istream& in, std::optional<RuleSpace> expected_space = std::nullopt);

}  // namespace aic
