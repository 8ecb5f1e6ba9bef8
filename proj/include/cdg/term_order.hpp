#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdg/monomial.hpp"

namespace cdg {

/// A term order on monomials in the grid variables.
///
/// Comparison runs in three stages: the y-degrees of the y-compatible
/// refinements (outermost first), then an optional weight vector, then a
/// lexicographic order given by a variable priority sequence.
///
///   rowlex    x[1,1] > x[1,2] > ... > x[1,n] > x[2,1] > ...
///   collex    x[1,1] > x[2,1] > ... > x[n,1] > x[1,2] > ...
///   antidiag  rows top to bottom, columns right to left (not diagonal)
///   weighted  weight vector with rowlex tie-break
class TermOrder {
 public:
  enum class Kind { RowLex, ColLex, AntiDiagonalLex, Weighted, YCompatible };

  static TermOrder row_lex();
  static TermOrder col_lex();
  static TermOrder anti_diagonal_lex();
  /// weights[(i-1)*kMaxGrid + (j-1)] is the weight of x[i,j]; must be >= 0.
  static TermOrder weighted(const std::array<int, kMaxVars>& weights, std::string label = "custom");
  /// A random supermodular weight order on the n x n grid, reproducible from
  /// the seed. Supermodular weights make the main diagonal the heaviest term
  /// of every minor, so these orders are diagonal.
  static TermOrder random_diagonal_weighted(std::uint64_t seed, int n = kMaxGrid);
  /// Compares the y-degree first, then falls back to `base`.
  static TermOrder y_compatible(Variable y, const TermOrder& base);

  /// Accepts "rowlex", "collex", "antidiag", "weighted:<seed>", and
  /// "ycompat(<i>,<j>):<base>".
  static TermOrder parse(std::string_view spec);

  Kind kind() const noexcept { return kind_; }
  /// The innermost y of a y-compatible order.
  std::optional<Variable> y() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
    for (int idx : y_priority_) {
      const int ea = a.exponent(idx);
      const int eb = b.exponent(idx);
      if (ea != eb) return ea <=> eb;
    }
    if (has_weights_) {
      const long wa = weigh(a);
      const long wb = weigh(b);
      if (wa != wb) return wa <=> wb;
    }
    if (row_major_) {
      const int c = a.lex_compare(b);
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    const std::uint64_t diff = a.support() | b.support();
    for (std::uint8_t idx : sequence_) {
      if ((diff >> idx & 1U) == 0) continue;
      const int ea = a.exponent(idx);
      const int eb = b.exponent(idx);
      if (ea != eb) return ea <=> eb;
    }
    return std::strong_ordering::equal;
  }

  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  /// Round-trips through parse() except for custom weight vectors, which
  /// keep only their label.
  std::string spec() const { return spec_; }

  bool operator==(const TermOrder& other) const { return spec_ == other.spec_; }

 private:
  TermOrder() = default;

  long weigh(const Monomial& m) const noexcept {
    long total = 0;
    for (std::uint64_t bits = m.support(); bits != 0; bits &= bits - 1) {
      const int i = std::countr_zero(bits);
      total += static_cast<long>(weights_[static_cast<std::size_t>(i)]) * m.exponent(i);
    }
    return total;
  }

  Kind kind_ = Kind::RowLex;
  std::string spec_;
  std::vector<int> y_priority_;
  bool has_weights_ = false;
  std::array<int, kMaxVars> weights_{};
  bool row_major_ = true;
  std::array<std::uint8_t, kMaxVars> sequence_{};
};

}  // namespace cdg
