#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aic {

using Symbol = std::uint8_t;

// Largest alphabet the text encodings can carry (one digit per symbol).
inline constexpr int kMaxSymbols = 10;

// Dense row-major array of symbols of any rank. Strings are rank 1,
// matrices rank 2, tensors rank >= 3. Blocks produced by decomposition
// are SymbolArrays as well.
class SymbolArray {
 public:
  SymbolArray() = default;
  SymbolArray(std::vector<std::size_t> dims, std::vector<Symbol> cells);
  SymbolArray(std::vector<std::size_t> dims, Symbol fill);

  static SymbolArray from_string(std::string_view digits);
  static SymbolArray matrix(std::size_t rows, std::size_t cols, Symbol fill = 0);

  std::size_t rank() const { return dims_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t axis) const { return dims_.at(axis); }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  std::span<const Symbol> cells() const { return cells_; }
  std::span<Symbol> cells() { return cells_; }

  Symbol operator[](std::size_t flat) const { return cells_[flat]; }
  Symbol& operator[](std::size_t flat) { return cells_[flat]; }

  // Matrix access; requires rank 2.
  Symbol at(std::size_t row, std::size_t col) const {
    return cells_[row * dims_[1] + col];
  }
  Symbol& at(std::size_t row, std::size_t col) {
    return cells_[row * dims_[1] + col];
  }

  std::size_t rows() const { return rank() >= 2 ? dims_[rank() - 2] : 1; }
  std::size_t cols() const { return dims_.empty() ? 0 : dims_.back(); }

  // Drops leading unit axes until rank <= max_rank (or no unit axis leads).
  SymbolArray squeezed(std::size_t max_rank) const;

  // Symbol digits in row-major order, no shape information.
  std::string digits() const;

  // Canonical text key: rank 1 -> "0110"; rank 2 -> "RxC:" + digits.
  std::string key() const;
  static SymbolArray from_key(std::string_view key);

  Symbol max_symbol() const;

  friend bool operator==(const SymbolArray&, const SymbolArray&) = default;
  friend auto operator<=>(const SymbolArray&, const SymbolArray&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Symbol> cells_;
};

// s -> (k-1-s) on every cell.
SymbolArray complement(const SymbolArray& a, int symbols);

// Reverses the order of cells along the last axis (a string reversal for
// rank 1, a horizontal mirror for matrices).
SymbolArray reversed(const SymbolArray& a);

// Copies the sub-array [row0, row0+rows) x [col0, col0+cols) of a matrix.
SymbolArray submatrix(const SymbolArray& m, std::size_t row0, std::size_t col0,
                      std::size_t rows, std::size_t cols);

// All k^n strings of length n in lexicographic order.
std::vector<SymbolArray> all_strings(std::size_t length, int symbols);

// All k^(rows*cols) matrices of a shape in lexicographic row-major order.
std::vector<SymbolArray> all_matrices(std::size_t rows, std::size_t cols, int symbols);

}  // namespace aic
