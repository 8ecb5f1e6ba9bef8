#pragma once

// Generating sets of Schubert determinantal ideals: naive (every cell),
// Fulton (essential cells), CDG (dominant part zeroed, plus its variables)
// and the CDG-style construction for an arbitrary rank matrix.

#include <compare>
#include <string>
#include <vector>

#include "cdg/permutation.hpp"
#include "cdg/polynomial.hpp"
#include "cdg/term_order.hpp"

namespace cdg {

/// Provenance of a generator: either a variable x[source], a minor built for
/// the rank condition at `source` (size, row and column index sets), or a
/// polynomial produced by a computation (`note`).
struct GeneratorLabel {
  enum class Kind { Variable, Minor, Derived };

  Kind kind = Kind::Derived;
  Cell source;
  int size = 0;
  std::vector<int> rows;
  std::vector<int> cols;
  std::string note;

  static GeneratorLabel variable(Cell c);
  static GeneratorLabel minor(Cell source, std::vector<int> rows, std::vector<int> cols);
  static GeneratorLabel derived(std::string note);

  /// "x(1,1)", "m(4,4):3[1,2,3|1,2,4]", or the derived note.
  std::string to_string() const;

  auto operator<=>(const GeneratorLabel&) const = default;
};

struct Generator {
  Polynomial poly;
  GeneratorLabel label;
};

enum class GeneratorStyle { Naive, Fulton, CDG, GeneralizedRank, Derived };

std::string_view to_string(GeneratorStyle style);

class GeneratorSet {
 public:
  GeneratorSet() = default;
  GeneratorSet(GeneratorStyle style, std::vector<Generator> gens) : style_(style), gens_(std::move(gens)) {}

  GeneratorStyle style() const noexcept { return style_; }
  const std::vector<Generator>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }

  std::vector<Polynomial> polynomials() const;

  /// Drops zero polynomials and merges generators equal up to sign (keeping
  /// the one with the smallest label), then sorts by total degree ascending,
  /// lead monomial descending under `order`, label.
  void canonicalize(const TermOrder& order);

  /// Same generators sorted for a different order.
  GeneratorSet canonicalized(const TermOrder& order) const;

 private:
  GeneratorStyle style_ = GeneratorStyle::Derived;
  std::vector<Generator> gens_;
};

/// For each cell (i,j) of Ess(w), all (rank_w(i,j)+1)-minors of X_{[i],[j]}.
GeneratorSet fulton_generators(const Permutation& w, const TermOrder& order = TermOrder::row_lex());

/// x[i,j] for (i,j) in Dom(w), plus for each (i,j) in Ess(w) \ Dom(w) all
/// (rank_w(i,j)+1)-minors of X'_{[i],[j]}, where X' zeroes Dom(w).
GeneratorSet cdg_generators(const Permutation& w, const TermOrder& order = TermOrder::row_lex());

/// All (rank_w(i,j)+1)-minors of X_{[i],[j]} over every cell of the grid.
GeneratorSet naive_generators(const Permutation& w, const TermOrder& order = TermOrder::row_lex());

/// Cells with entry 0 form the dominant part and contribute their variables;
/// every cell (i,j) contributes the (R(i,j)+1)-minors of the northwest
/// submatrix with the dominant part zeroed.
GeneratorSet rank_matrix_generators(const RankMatrix& r, const TermOrder& order = TermOrder::row_lex());

}  // namespace cdg
