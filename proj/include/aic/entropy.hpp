#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "aic/symbol_array.hpp"

namespace aic {

// Probability mass over symbols or blocks (keyed by their text form).
class SymbolDistribution {
 public:
  // Validates: non-empty support, every p in (0,1], sum = 1 within 1e-12.
  explicit SymbolDistribution(std::map<std::string, double> probabilities);

  // Natural (empirical) distribution of the given counts.
  static SymbolDistribution from_counts(const std::map<std::string, std::size_t>& counts);
  // Natural distribution of the cell symbols of any array.
  static SymbolDistribution of_symbols(const SymbolArray& a);

  const std::map<std::string, double>& probabilities() const { return probabilities_; }
  std::size_t support() const { return probabilities_.size(); }

 private:
  std::map<std::string, double> probabilities_;
};

// -sum p log2 p, in bits.
double entropy(const SymbolDistribution& dist);

// Shannon entropy of the cells of an array (natural distribution).
double shannon_entropy(const SymbolArray& a);

// Entropy of the empirical distribution of length-l blocks of a string.
// Non-overlapping drops a trailing remainder shorter than l; overlapping
// slides a window by one symbol.
double block_entropy(const SymbolArray& s, std::size_t block, bool overlapping = false);

// How the normalized best-block search scales H_l.
enum class BlockNormalization {
  // log2(k^l): count of distinct possible blocks of that size.
  DistinctBlocks,
  // log2(floor(n/l)): count of block positions.
  BlockPositions,
};

struct BestBlock {
  std::size_t block = 0;
  double bits = 0.0;
};

// Minimum of H_l over 1 <= l <= n/2 (ties go to the smallest l). With
// `normalized`, each H_l is divided by the chosen denominator first; a zero
// denominator scores 0.
BestBlock best_block_entropy(const SymbolArray& s, bool normalized = false,
                             int symbols = 2,
                             BlockNormalization norm = BlockNormalization::DistinctBlocks);

// H(a | b) and I(a; b) = H(a) - H(a | b) over the joint distribution of
// aligned cell pairs. Arrays must have equal shape.
double conditional_entropy(const SymbolArray& a, const SymbolArray& b);
double mutual_information(const SymbolArray& a, const SymbolArray& b);

// I(a; b) / max(H(a), H(b)), with two constant arrays scoring 1.
double normalized_mutual_information(const SymbolArray& a, const SymbolArray& b);

// H_l / l for l = 1..max_block (non-overlapping).
std::map<std::size_t, double> entropy_rate_profile(const SymbolArray& s, std::size_t max_block);

}  // namespace aic
