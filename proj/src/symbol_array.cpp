#include "aic/symbol_array.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace aic {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

std::size_t parse_extent(std::string_view text, std::string_view key) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw std::invalid_argument("malformed block key '" + std::string(key) + "'");
  }
  return value;
}

}  // namespace

SymbolArray::SymbolArray(std::vector<std::size_t> dims, std::vector<Symbol> cells)
    : dims_(std::move(dims)), cells_(std::move(cells)) {
  if (dims_.empty()) throw std::invalid_argument("array rank must be at least 1");
  if (product(dims_) != cells_.size()) {
    throw std::invalid_argument("array dimensions do not match cell count");
  }
}

SymbolArray::SymbolArray(std::vector<std::size_t> dims, Symbol fill)
    : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("array rank must be at least 1");
  cells_.assign(product(dims_), fill);
}

SymbolArray SymbolArray::from_string(std::string_view digits) {
  std::vector<Symbol> cells;
  cells.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument(std::string("invalid symbol '") + c + "'");
    }
    cells.push_back(static_cast<Symbol>(c - '0'));
  }
  const std::size_t length = cells.size();
  return SymbolArray({length}, std::move(cells));
}

SymbolArray SymbolArray::matrix(std::size_t rows, std::size_t cols, Symbol fill) {
  return SymbolArray({rows, cols}, fill);
}

SymbolArray SymbolArray::squeezed(std::size_t max_rank) const {
  std::vector<std::size_t> dims = dims_;
  while (dims.size() > max_rank && dims.front() == 1) dims.erase(dims.begin());
  return SymbolArray(std::move(dims), cells_);
}

std::string SymbolArray::digits() const {
  std::string out;
  out.reserve(cells_.size());
  for (Symbol s : cells_) out.push_back(static_cast<char>('0' + s));
  return out;
}

std::string SymbolArray::key() const {
  if (rank() == 1) return digits();
  if (rank() == 2) {
    return std::to_string(dims_[0]) + "x" + std::to_string(dims_[1]) + ":" + digits();
  }
  throw std::invalid_argument("only rank 1 and rank 2 arrays have table keys");
}

SymbolArray SymbolArray::from_key(std::string_view key) {
  auto colon = key.find(':');
  if (colon == std::string_view::npos) return from_string(key);
  auto shape = key.substr(0, colon);
  auto x = shape.find('x');
  if (x == std::string_view::npos) {
    throw std::invalid_argument("malformed block key '" + std::string(key) + "'");
  }
  std::size_t rows = parse_extent(shape.substr(0, x), key);
  std::size_t cols = parse_extent(shape.substr(x + 1), key);
  SymbolArray flat = from_string(key.substr(colon + 1));
  if (flat.size() != rows * cols) {
    throw std::invalid_argument("block key '" + std::string(key) +
                                "' has wrong number of symbols");
  }
  return SymbolArray({rows, cols}, std::move(flat.cells_));
}

Symbol SymbolArray::max_symbol() const {
  return cells_.empty() ? Symbol{0} : *std::max_element(cells_.begin(), cells_.end());
}

SymbolArray complement(const SymbolArray& a, int symbols) {
  SymbolArray out = a;
  for (Symbol& s : out.cells()) s = static_cast<Symbol>(symbols - 1 - s);
  return out;
}

SymbolArray reversed(const SymbolArray& a) {
  SymbolArray out = a;
  const std::size_t width = a.cols();
  auto cells = out.cells();
  for (std::size_t start = 0; start < cells.size(); start += width) {
    std::reverse(cells.begin() + static_cast<std::ptrdiff_t>(start),
                 cells.begin() + static_cast<std::ptrdiff_t>(start + width));
  }
  return out;
}

SymbolArray submatrix(const SymbolArray& m, std::size_t row0, std::size_t col0,
                      std::size_t rows, std::size_t cols) {
  SymbolArray out = SymbolArray::matrix(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out.at(r, c) = m.at(row0 + r, col0 + c);
  }
  return out;
}

namespace {

std::vector<std::vector<Symbol>> all_words(std::size_t length, int symbols) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < length; ++i) count *= static_cast<std::size_t>(symbols);
  std::vector<std::vector<Symbol>> words;
  words.reserve(count);
  std::vector<Symbol> word(length, 0);
  for (std::size_t n = 0; n < count; ++n) {
    words.push_back(word);
    for (std::size_t pos = length; pos-- > 0;) {
      if (++word[pos] < symbols) break;
      word[pos] = 0;
    }
  }
  return words;
}

}  // namespace

std::vector<SymbolArray> all_strings(std::size_t length, int symbols) {
  std::vector<SymbolArray> out;
  for (auto& w : all_words(length, symbols)) out.emplace_back(std::vector{length}, std::move(w));
  return out;
}

std::vector<SymbolArray> all_matrices(std::size_t rows, std::size_t cols, int symbols) {
  std::vector<SymbolArray> out;
  for (auto& w : all_words(rows * cols, symbols)) {
    out.emplace_back(std::vector{rows, cols}, std::move(w));
  }
  return out;
}

}  // namespace aic
