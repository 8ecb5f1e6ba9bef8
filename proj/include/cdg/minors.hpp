#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cdg/permutation.hpp"
#include "cdg/polynomial.hpp"

namespace cdg {

/// A rows x cols matrix whose entries are distinct grid variables or
/// structural zeros. Rows and columns are 1-indexed.
class SymbolicMatrix {
 public:
  /// Entry (i,j) is x[i,j].
  static SymbolicMatrix generic(int rows, int cols);
  /// Generic matrix with the given cells replaced by 0.
  static SymbolicMatrix zeroed(int rows, int cols, const std::vector<Cell>& zeros);

  SymbolicMatrix(int rows, int cols, std::vector<std::optional<Variable>> entries);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const std::optional<Variable>& at(int i, int j) const {
    return entries_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))];
  }

 private:
  int rows_;
  int cols_;
  std::vector<std::optional<Variable>> entries_;
};

/// Determinants of square submatrices by cofactor expansion along the first
/// selected row, memoized on the (row set, column set) bitmasks. One cache
/// per matrix; reuse it to share subdeterminants across many minors.
class MinorCache {
 public:
  explicit MinorCache(const SymbolicMatrix& m);

  /// rows and cols strictly increasing, equal length k >= 1, inside the
  /// matrix. Throws ShapeMismatch otherwise.
  const Polynomial& minor(const std::vector<int>& rows, const std::vector<int>& cols);

 private:
  const Polynomial& det(std::uint32_t row_mask, std::uint32_t col_mask);

  const SymbolicMatrix& m_;
  std::unordered_map<std::uint64_t, Polynomial> memo_;
};

Polynomial minor(const SymbolicMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

/// All k-element subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> index_subsets(int n, int k);

}  // namespace cdg
