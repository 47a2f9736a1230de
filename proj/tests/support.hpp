#pragma once

// Helpers shared by the test binaries: hand-built tables, seeded object
// generators and small brute-force oracles that do not reuse library code.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "aic/ctm.hpp"
#include "aic/symbol_array.hpp"

namespace aic::test {

inline std::filesystem::path data_dir() { return AIC_TEST_DATA_DIR; }

inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("aic_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// A table holding exactly the given entries (no completion, no counts).
inline CtmTable injected_table(const std::map<std::string, double>& bits, int dimension = 1,
                               int states = 2, int symbols = 2) {
  std::map<std::string, TableEntry> entries;
  for (const auto& [key, value] : bits) entries[key] = TableEntry{std::nullopt, quantize_bits(value)};
  SourceInfo source{RuleSpace{states, symbols, dimension}, 6, 2, std::nullopt};
  return CtmTable(source, 1.0, std::move(entries));
}

// Every binary j x j matrix (j = 1..d) gets a value that grows with its
// number of ones and with its side; all-zero and all-one blocks are cheapest.
// A deterministic stand-in for 2D tables larger than enumeration can fill.
inline CtmTable synthetic_square_table(std::size_t d) {
  std::map<std::string, double> bits;
  for (std::size_t j = 1; j <= d; ++j) {
    for (const SymbolArray& m : all_matrices(j, j, 2)) {
      std::size_t ones = 0;
      for (Symbol s : m.cells()) ones += s;
      const std::size_t minority = std::min(ones, m.size() - ones);
      std::size_t changes = 0;
      for (std::size_t i = 1; i < m.size(); ++i) changes += m[i] != m[i - 1];
      bits[m.key()] = 2.0 * static_cast<double>(j * j) + static_cast<double>(minority) +
                      0.25 * static_cast<double>(changes) + (ones > m.size() / 2 ? 0.125 : 0.0);
    }
  }
  return injected_table(bits, 2);
}

inline SymbolArray random_string(std::size_t n, std::mt19937_64& rng) {
  std::vector<Symbol> cells(n);
  for (Symbol& c : cells) c = static_cast<Symbol>(rng() & 1U);
  return SymbolArray({n}, std::move(cells));
}

inline SymbolArray random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  SymbolArray m = SymbolArray::matrix(rows, cols, 0);
  for (Symbol& c : m.cells()) c = static_cast<Symbol>(rng() & 1U);
  return m;
}

inline SymbolArray thue_morse(std::size_t n) {
  std::vector<Symbol> cells(n);
  for (std::size_t i = 0; i < n; ++i) cells[i] = static_cast<Symbol>(std::popcount(i) & 1U);
  return SymbolArray({n}, std::move(cells));
}

// Eq. 6 for strings written out directly: distinct windows of length l at
// offset m, summed as value + log2(multiplicity).
inline double oracle_string_bdm(const std::string& s, std::size_t l, std::size_t m,
                                const std::map<std::string, double>& table) {
  std::map<std::string, int> seen;
  for (std::size_t i = 0; i + l <= s.size(); i += m) ++seen[s.substr(i, l)];
  double total = 0.0;
  for (const auto& [block, n] : seen) total += table.at(block) + std::log2(static_cast<double>(n));
  return total;
}

// Naive Busy Beaver machine simulation for 1D spaces: decodes the index
// itself and keeps the tape in a std::map.
struct OracleRun {
  bool halted = false;
  std::string output;
};

inline OracleRun oracle_run(int t, int k, std::uint64_t index, std::uint64_t cutoff) {
  struct R {
    int write, move, next;
  };
  const int per_cell = 2 * k * (t + 1);
  std::vector<R> rules(static_cast<std::size_t>(t * k));
  // Cell (state 1, symbol 0) is the most significant digit.
  for (int cell = t * k - 1; cell >= 0; --cell) {
    int digit = static_cast<int>(index % static_cast<std::uint64_t>(per_cell));
    index /= static_cast<std::uint64_t>(per_cell);
    const int next_digit = digit % (t + 1);
    digit /= t + 1;
    rules[static_cast<std::size_t>(cell)] = {digit / 2, digit % 2, next_digit == t ? 0 : next_digit + 1};
  }
  std::map<long, int> tape;
  long head = 0, lo = 0, hi = 0;
  int state = 1;
  for (std::uint64_t step = 0; step < cutoff; ++step) {
    lo = std::min(lo, head);
    hi = std::max(hi, head);
    const int read = tape.contains(head) ? tape[head] : 0;
    const R& r = rules[static_cast<std::size_t>((state - 1) * k + read)];
    tape[head] = r.write;
    head += r.move == 0 ? -1 : 1;
    state = r.next;
    if (state == 0) {
      OracleRun run{true, ""};
      for (long p = lo; p <= hi; ++p) run.output += static_cast<char>('0' + (tape.contains(p) ? tape[p] : 0));
      return run;
    }
  }
  return {};
}

inline std::string complement_digits(std::string s) {
  for (char& c : s) c = c == '0' ? '1' : '0';
  return s;
}

// Coefficients of det(xI - A), highest degree first, by Leibniz expansion.
inline std::vector<long long> oracle_char_poly(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<long long> low_first(n + 1, 0);  // index = power of x
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    // product over i of (x*delta - a[i][perm i])
    std::vector<long long> prod{1};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<long long> next(prod.size() + 1, 0);
      const long long c = -a[i][perm[i]];
      const bool diag = perm[i] == i;
      for (std::size_t p = 0; p < prod.size(); ++p) {
        next[p] += prod[p] * c;
        if (diag) next[p + 1] += prod[p];
      }
      prod = std::move(next);
    }
    const long long sign = inversions % 2 ? -1 : 1;
    for (std::size_t p = 0; p < prod.size() && p <= n; ++p) low_first[p] += sign * prod[p];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {low_first.rbegin(), low_first.rend()};
}

// Textbook Spearman for tie-free data.
inline double oracle_spearman_no_ties(const std::vector<double>& x, const std::vector<double>& y) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      r[i] = 1.0;
      for (double w : v) r[i] += w < v[i];
    }
    return r;
  };
  const auto rx = ranks(x), ry = ranks(y);
  double d2 = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
  const auto n = static_cast<double>(x.size());
  return 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
}

}  // namespace aic::test
