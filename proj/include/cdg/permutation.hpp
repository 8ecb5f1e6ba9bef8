#pragma once

// Core combinatorial value types: permutations in one-line notation, grid
// cells, diagrams (cell sets) and rank matrices. All coordinates are
// 1-indexed, rows first.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cdg {

struct Cell {
  int row = 0;
  int col = 0;

  auto operator<=>(const Cell&) const = default;

  /// True when `other` lies strictly southeast (larger row and larger column).
  bool strictly_northwest_of(const Cell& other) const {
    return other.row > row && other.col > col;
  }

  Cell transposed() const { return {col, row}; }

  std::string to_string() const;
};

/// A bijection of {1..n}; images()[i-1] = w(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  /// Accepts a digit string ("315642") or comma-separated values
  /// ("3,1,5,6,4,2,10,7,8,9"). Surrounding whitespace is ignored.
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const noexcept { return images_; }

  /// Position of value j, i.e. w^{-1}(j).
  int position_of(int value) const;

  Permutation inverse() const;
  bool is_identity() const;

  /// Digit string for n <= 9, comma-separated otherwise.
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& w);

/// All permutations of S_n in lexicographic order of their one-line notation.
std::vector<Permutation> all_permutations(int n);

/// A finite, duplicate-free set of cells inside an n x n grid, kept sorted
/// in (row, col) order.
class Diagram {
 public:
  Diagram() = default;
  Diagram(int n, std::vector<Cell> cells);

  int grid_size() const noexcept { return n_; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }
  bool contains(const Cell& c) const;

  Diagram transposed() const;

  auto begin() const { return cells_.begin(); }
  auto end() const { return cells_.end(); }

  std::string to_string() const;

  bool operator==(const Diagram&) const = default;

 private:
  int n_ = 0;
  std::vector<Cell> cells_;
};

/// A rows x cols grid of nonnegative integers, weakly increasing along rows
/// and columns with unit steps. Entries are 1-indexed through at().
class RankMatrix {
 public:
  RankMatrix() = default;
  /// Throws MalformedRankMatrix if the invariants fail.
  RankMatrix(int rows, int cols, std::vector<int> entries);

  /// Parses one row per line, whitespace-separated nonnegative integers.
  /// Blank lines and lines starting with '#' are skipped.
  static RankMatrix parse(std::istream& in);
  static RankMatrix load(const std::string& path);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int at(int i, int j) const {
    return entries_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))];
  }

  std::string to_string() const;

  bool operator==(const RankMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> entries_;
};

}  // namespace cdg
