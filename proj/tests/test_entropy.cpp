#include <doctest.h>

#include <cmath>
#include <random>

#include "aic/entropy.hpp"
#include "support.hpp"

using namespace aic;

namespace {

SymbolArray str(const char* s) { return SymbolArray::from_string(s); }

}  // namespace

TEST_CASE("entropy of simple distributions") {
  CHECK(entropy(SymbolDistribution({{"0", 0.5}, {"1", 0.5}})) == 1.0);
  CHECK(entropy(SymbolDistribution({{"0", 1.0}})) == 0.0);
  CHECK(entropy(SymbolDistribution({{"0", 0.25}, {"1", 0.25}, {"2", 0.25}, {"3", 0.25}})) == 2.0);
  // -(1/3 log 1/3 + 2/3 log 2/3)
  const double expected = std::log2(3.0) - 2.0 / 3.0;
  CHECK(entropy(SymbolDistribution::from_counts({{"a", 1}, {"b", 2}})) ==
        doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("invalid distributions are rejected") {
  CHECK_THROWS(SymbolDistribution({}));
  CHECK_THROWS(SymbolDistribution({{"0", 0.5}, {"1", 0.4}}));
  CHECK_THROWS(SymbolDistribution({{"0", 1.5}, {"1", -0.5}}));
  CHECK_THROWS(SymbolDistribution({{"0", 0.0}, {"1", 1.0}}));
}

TEST_CASE("block entropy") {
  CHECK(block_entropy(str("010101010101"), 2) == 0.0);
  CHECK(block_entropy(str("010101010101"), 1) == 1.0);
  CHECK(block_entropy(str("001100110011"), 4) == 0.0);
  // Overlapping length-2 windows of 0101...: 6 x "01", 5 x "10".
  const double p = 6.0 / 11.0, q = 5.0 / 11.0;
  CHECK(block_entropy(str("010101010101"), 2, true) ==
        doctest::Approx(-p * std::log2(p) - q * std::log2(q)).epsilon(1e-14));
  CHECK_THROWS_AS(block_entropy(str("0101"), 5), std::out_of_range);
}

TEST_CASE("best block entropy finds the period") {
  const BestBlock periodic = best_block_entropy(str("011011011011"));
  CHECK(periodic.bits == 0.0);
  CHECK(periodic.block == 3);
  const BestBlock zeros = best_block_entropy(str("00000000"));
  CHECK(zeros.bits == 0.0);
  CHECK(zeros.block == 1);
  CHECK_THROWS_AS(best_block_entropy(str("0")), std::out_of_range);
}

TEST_CASE("best block entropy agrees with a direct minimum over l") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const SymbolArray s = test::random_string(5 + trial % 20, rng);
    double best = 1e9;
    std::size_t best_l = 0;
    for (std::size_t l = 1; l <= s.size() / 2; ++l) {
      std::map<std::string, std::size_t> counts;
      const std::string d = s.digits();
      for (std::size_t i = 0; i + l <= d.size(); i += l) ++counts[d.substr(i, l)];
      double total = 0.0, h = 0.0;
      for (const auto& [b, c] : counts) total += static_cast<double>(c);
      for (const auto& [b, c] : counts) h -= c / total * std::log2(c / total);
      if (h < best - 1e-12) {
        best = h;
        best_l = l;
      }
    }
    const BestBlock got = best_block_entropy(s);
    CHECK(got.block == best_l);
    CHECK(got.bits == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("normalized best block entropy stays in [0,1]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const SymbolArray s = test::random_string(24, rng);
    for (auto norm : {BlockNormalization::DistinctBlocks, BlockNormalization::BlockPositions}) {
      const BestBlock b = best_block_entropy(s, true, 2, norm);
      CHECK(b.bits >= 0.0);
      CHECK(b.bits <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("mutual information") {
  const SymbolArray a = str("0110100110010110");
  CHECK(mutual_information(a, a) == doctest::Approx(shannon_entropy(a)).epsilon(1e-14));
  CHECK(mutual_information(str("0000"), str("0110")) == 0.0);
  CHECK(conditional_entropy(a, a) == doctest::Approx(0.0));
  CHECK(normalized_mutual_information(str("0000"), str("1111")) == 1.0);
  CHECK(normalized_mutual_information(a, complement(a, 2)) == doctest::Approx(1.0));
  CHECK_THROWS(mutual_information(str("01"), str("011")));
}

TEST_CASE("entropy rate profile") {
  const auto profile = entropy_rate_profile(str("0101010101010101"), 4);
  CHECK(profile.at(1) == 1.0);
  CHECK(profile.at(2) == 0.0);
  CHECK(profile.at(4) == 0.0);
}

TEST_CASE("Shannon entropy of a matrix uses all cells") {
  SymbolArray m = SymbolArray::matrix(2, 2, 0);
  m.at(0, 1) = 1;
  const double p = 0.25;
  CHECK(shannon_entropy(m) == doctest::Approx(-p * std::log2(p) - 0.75 * std::log2(0.75)));
}
