#include "cdg/minors.hpp"

#include <algorithm>
#include <bit>

#include "cdg/errors.hpp"

namespace cdg {

SymbolicMatrix::SymbolicMatrix(int rows, int cols, std::vector<std::optional<Variable>> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ < 0 || cols_ < 0 || entries_.size() != static_cast<std::size_t>(rows_ * cols_)) {
    throw ShapeMismatch("symbolic matrix entry count does not match its shape");
  }
  if (rows_ > 32 || cols_ > 32) throw GridTooLarge("symbolic matrix too large");
}

SymbolicMatrix SymbolicMatrix::generic(int rows, int cols) { return zeroed(rows, cols, {}); }

SymbolicMatrix SymbolicMatrix::zeroed(int rows, int cols, const std::vector<Cell>& zeros) {
  if (rows > kMaxGrid || cols > kMaxGrid) {
    throw GridTooLarge("matrices of indeterminates are limited to " + std::to_string(kMaxGrid) +
                       "x" + std::to_string(kMaxGrid));
  }
  std::vector<std::optional<Variable>> entries;
  entries.reserve(static_cast<std::size_t>(rows * cols));
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      const bool zero = std::find(zeros.begin(), zeros.end(), Cell{i, j}) != zeros.end();
      entries.push_back(zero ? std::nullopt : std::optional<Variable>(Variable{i, j}));
    }
  }
  return SymbolicMatrix(rows, cols, std::move(entries));
}

MinorCache::MinorCache(const SymbolicMatrix& m) : m_(m) {}

const Polynomial& MinorCache::minor(const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.empty() || rows.size() != cols.size()) {
    throw ShapeMismatch("minor needs equally many rows and columns, at least one");
  }
  auto mask_of = [](const std::vector<int>& idx, int limit, const char* what) {
    std::uint32_t mask = 0;
    int prev = 0;
    for (int v : idx) {
      if (v <= prev || v > limit) {
        throw ShapeMismatch(std::string("minor ") + what + " indices must increase within 1.." +
                            std::to_string(limit));
      }
      mask |= std::uint32_t{1} << (v - 1);
      prev = v;
    }
    return mask;
  };
  return det(mask_of(rows, m_.rows(), "row"), mask_of(cols, m_.cols(), "column"));
}

const Polynomial& MinorCache::det(std::uint32_t row_mask, std::uint32_t col_mask) {
  const std::uint64_t key = (std::uint64_t{row_mask} << 32) | col_mask;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Polynomial result;
  const int top = std::countr_zero(row_mask) + 1;
  if (std::popcount(row_mask) == 1) {
    if (const auto& v = m_.at(top, std::countr_zero(col_mask) + 1)) result = Polynomial::variable(*v);
  } else {
    const std::uint32_t rest_rows = row_mask & (row_mask - 1);
    int sign = 1;
    for (std::uint32_t bits = col_mask; bits != 0; bits &= bits - 1) {
      const int c = std::countr_zero(bits);
      if (const auto& v = m_.at(top, c + 1)) {
        const Polynomial& sub = det(rest_rows, col_mask & ~(std::uint32_t{1} << c));
        if (!sub.is_zero()) {
          result += sub.scaled(sign, Monomial(*v));
        }
      }
      sign = -sign;
    }
  }
  return memo_.emplace(key, std::move(result)).first->second;
}

Polynomial minor(const SymbolicMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  MinorCache cache(m);
  return cache.minor(rows, cols);
}

std::vector<std::vector<int>> index_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace cdg
