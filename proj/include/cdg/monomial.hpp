#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>
#include <string_view>

namespace cdg {

/// Largest grid supported by the polynomial layer. Variables live in a fixed
/// kMaxGrid x kMaxGrid embedding so that every order compares monomials of
/// different grid sizes consistently.
inline constexpr int kMaxGrid = 8;
inline constexpr int kMaxVars = kMaxGrid * kMaxGrid;

/// The indeterminate x_{row,col}.
struct Variable {
  int row = 1;
  int col = 1;

  /// Row-major slot in the kMaxGrid x kMaxGrid embedding.
  int index() const noexcept { return (row - 1) * kMaxGrid + (col - 1); }
  static Variable from_index(int idx) noexcept { return {idx / kMaxGrid + 1, idx % kMaxGrid + 1}; }

  auto operator<=>(const Variable&) const = default;

  std::string to_string() const;
};

/// Exponent vector over the fixed variable embedding. Keeps its total degree
/// and support bitmask alongside the exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Variable v, int exponent = 1);

  int degree() const noexcept { return degree_; }
  std::uint64_t support() const noexcept { return support_; }
  bool is_one() const noexcept { return degree_ == 0; }
  int exponent(int index) const noexcept { return exps_[static_cast<std::size_t>(index)]; }
  int exponent(Variable v) const noexcept { return exponent(v.index()); }
  const std::uint8_t* data() const noexcept { return exps_.data(); }

  bool is_squarefree() const noexcept { return std::popcount(support_) == degree_; }

  /// this | other
  bool divides(const Monomial& other) const noexcept {
    if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
    for (std::uint64_t bits = support_; bits != 0; bits &= bits - 1) {
      const int i = std::countr_zero(bits);
      if (exps_[static_cast<std::size_t>(i)] > other.exps_[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  }

  bool coprime_with(const Monomial& other) const noexcept { return (support_ & other.support_) == 0; }

  Monomial operator*(const Monomial& other) const noexcept;
  /// Exact quotient; the caller guarantees other | *this.
  Monomial operator/(const Monomial& other) const noexcept;
  Monomial lcm(const Monomial& other) const noexcept;
  Monomial without(Variable v) const noexcept;

  /// Byte comparison of the row-major exponent vectors: the row lex order.
  int lex_compare(const Monomial& other) const noexcept {
    return std::memcmp(exps_.data(), other.exps_.data(), exps_.size());
  }

  bool operator==(const Monomial& other) const noexcept {
    return support_ == other.support_ && lex_compare(other) == 0;
  }

  std::size_t hash() const noexcept {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(exps_.data()), exps_.size()));
  }

  /// x[1,1]*x[2,2]^2 style; "1" for the unit monomial.
  std::string to_string() const;

 private:
  void refresh() noexcept;

  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint64_t support_ = 0;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace cdg
