#include "aic/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aic {

namespace {

double entropy_of_counts(const std::map<std::string, std::size_t>& counts) {
  std::size_t total = 0;
  for (const auto& [key, n] : counts) total += n;
  double h = 0.0;
  for (const auto& [key, n] : counts) {
    const double p = static_cast<double>(n) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  // Single-symbol support gives -1*log2(1) = -0.0.
  return h == 0.0 ? 0.0 : h;
}

void require_rank1(const SymbolArray& s) {
  if (s.rank() != 1) throw std::invalid_argument("block entropy needs a string (rank-1 array)");
}

std::map<std::string, std::size_t> block_counts(const SymbolArray& s, std::size_t block,
                                                bool overlapping) {
  const std::string digits = s.digits();
  const std::size_t step = overlapping ? 1 : block;
  std::map<std::string, std::size_t> counts;
  for (std::size_t pos = 0; pos + block <= digits.size(); pos += step) {
    ++counts[digits.substr(pos, block)];
  }
  return counts;
}

}  // namespace

SymbolDistribution::SymbolDistribution(std::map<std::string, double> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) throw std::invalid_argument("distribution has empty support");
  double sum = 0.0;
  for (const auto& [key, p] : probabilities_) {
    if (!(p > 0.0 && p <= 1.0)) {
      throw std::invalid_argument("probability of '" + key + "' outside (0,1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("probabilities do not sum to 1");
}

SymbolDistribution SymbolDistribution::from_counts(const std::map<std::string, std::size_t>& counts) {
  std::size_t total = 0;
  for (const auto& [key, n] : counts) total += n;
  std::map<std::string, double> p;
  for (const auto& [key, n] : counts) {
    if (n > 0) p[key] = static_cast<double>(n) / static_cast<double>(total);
  }
  return SymbolDistribution(std::move(p));
}

SymbolDistribution SymbolDistribution::of_symbols(const SymbolArray& a) {
  std::map<std::string, std::size_t> counts;
  for (Symbol s : a.cells()) ++counts[std::string(1, static_cast<char>('0' + s))];
  return from_counts(counts);
}

double entropy(const SymbolDistribution& dist) {
  double h = 0.0;
  for (const auto& [key, p] : dist.probabilities()) h -= p * std::log2(p);
  return h == 0.0 ? 0.0 : h;
}

double shannon_entropy(const SymbolArray& a) {
  if (a.empty()) throw std::invalid_argument("entropy of an empty array");
  std::map<std::string, std::size_t> counts;
  for (Symbol s : a.cells()) ++counts[std::string(1, static_cast<char>('0' + s))];
  return entropy_of_counts(counts);
}

double block_entropy(const SymbolArray& s, std::size_t block, bool overlapping) {
  require_rank1(s);
  if (block == 0 || block > s.size()) {
    throw std::out_of_range("block size " + std::to_string(block) + " outside 1.." +
                            std::to_string(s.size()));
  }
  return entropy_of_counts(block_counts(s, block, overlapping));
}

BestBlock best_block_entropy(const SymbolArray& s, bool normalized, int symbols,
                             BlockNormalization norm) {
  require_rank1(s);
  if (s.size() < 2) throw std::out_of_range("best block entropy needs a string of length >= 2");
  BestBlock best{0, 0.0};
  for (std::size_t l = 1; l <= s.size() / 2; ++l) {
    double h = block_entropy(s, l, false);
    if (normalized) {
      const double denominator =
          norm == BlockNormalization::DistinctBlocks
              ? static_cast<double>(l) * std::log2(static_cast<double>(symbols))
              : std::log2(static_cast<double>(s.size() / l));
      h = denominator > 0.0 ? h / denominator : 0.0;
    }
    if (best.block == 0 || h < best.bits) best = {l, h};
  }
  return best;
}

double conditional_entropy(const SymbolArray& a, const SymbolArray& b) {
  if (a.dims() != b.dims()) throw std::invalid_argument("mutual information needs equal shapes");
  if (a.empty()) throw std::invalid_argument("mutual information of empty arrays");
  std::map<std::string, std::size_t> joint;
  std::map<std::string, std::size_t> marginal_b;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const char ca = static_cast<char>('0' + a[i]);
    const char cb = static_cast<char>('0' + b[i]);
    ++joint[std::string{ca, cb}];
    ++marginal_b[std::string(1, cb)];
  }
  // H(A|B) = H(A,B) - H(B)
  const double h = entropy_of_counts(joint) - entropy_of_counts(marginal_b);
  return std::max(0.0, h);
}

double mutual_information(const SymbolArray& a, const SymbolArray& b) {
  const double mi = shannon_entropy(a) - conditional_entropy(a, b);
  return std::max(0.0, mi);
}

double normalized_mutual_information(const SymbolArray& a, const SymbolArray& b) {
  const double scale = std::max(shannon_entropy(a), shannon_entropy(b));
  if (scale == 0.0) return 1.0;
  return std::clamp(mutual_information(a, b) / scale, 0.0, 1.0);
}

std::map<std::size_t, double> entropy_rate_profile(const SymbolArray& s, std::size_t max_block) {
  std::map<std::size_t, double> out;
  for (std::size_t l = 1; l <= std::min(max_block, s.size()); ++l) {
    out[l] = block_entropy(s, l, false) / static_cast<double>(l);
  }
  return out;
}

}  // namespace aic
