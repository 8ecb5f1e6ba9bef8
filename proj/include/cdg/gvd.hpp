#pragma once

// Geometric vertex decomposition bookkeeping at a lower outside corner
// y = x[i,j]: the split of the CDG generators into y*q + r and y-free h,
// the ideals N = (h) and C = (q, h), the permutation whose Schubert ideal is
// N, the auxiliary ideal Q, and the checkable hypotheses of the liaison
// criterion (Gröbner bases for C and N, 2-minors of [q; r] inside N, heights,
// y-compatibility).

#include <string>
#include <vector>

#include "cdg/division.hpp"
#include "cdg/generators.hpp"
#include "cdg/permutation.hpp"
#include "cdg/term_order.hpp"

namespace cdg {

struct SplitPair {
  Polynomial q;
  Polynomial r;
  GeneratorLabel label;
};

struct Split {
  Cell corner;
  Variable y;
  std::vector<SplitPair> pairs;
  std::vector<Generator> h_list;

  /// (h_1, ..., h_l).
  GeneratorSet n_generators() const;
  /// (q_1, ..., q_k, h_1, ..., h_l).
  GeneratorSet c_generators() const;
};

/// Splits any generating set at y. Throws YDegreeTooHigh if y^2 divides a term.
Split split_generators(const GeneratorSet& g, Cell corner);

/// Splits cdg_generators(w) at the corner. Throws NotLowerOutsideCorner.
Split split_on_corner(const Permutation& w, Cell corner, const TermOrder& order = TermOrder::row_lex());

/// w' with w'(i) = j, w'(w^{-1}(j)) = w(i), other values unchanged; its
/// diagram is D_w minus the corner. Throws NotLowerOutsideCorner.
Permutation delete_corner_permutation(const Permutation& w, Cell corner);

struct QIdeal {
  int m1 = 0;
  int m2 = 0;
  int rank = 0;
  /// rank + 1 == min(m1, m2): Q is generated by the q's alone.
  bool maximal_minors = false;
  GeneratorSet generators;
};

/// m1 = i - (deepest dominant row of column j), or i if column j meets no
/// dominant cell; m2 likewise along row i. When rank+1 != min(m1, m2) the
/// y-free generators coming from the other essential cells of row i and
/// column j are added. Throws NotLowerOutsideCorner.
QIdeal q_ideal(const Permutation& w, Cell corner, const TermOrder& order = TermOrder::row_lex());

/// q_a r_b - q_b r_a for a < b.
std::vector<Polynomial> two_minor_polys(const Split& s);

struct KRReport {
  std::string permutation;
  Cell corner;
  std::string order;  // effective y-compatible order
  bool degenerate = false;
  bool c_groebner = false;
  bool n_groebner = false;
  bool two_minors_in_N = false;
  bool heights_ok = false;
  bool order_y_compatible = false;
  int height_I = 0;
  int height_C = 0;
  int height_N = 0;
  std::size_t pairs = 0;
  std::size_t h_count = 0;
  std::size_t two_minor_count = 0;
  /// First 2-minor not in N, as text, when two_minors_in_N fails.
  std::string two_minor_witness;
  std::string c_failure;
  std::string n_failure;

  bool all_pass() const noexcept {
    return c_groebner && n_groebner && two_minors_in_N && heights_ok && order_y_compatible;
  }
};

/// Runs every check under ycompat(y):base. A corner in the dominant part is
/// degenerate (the generator is y itself, so C is the unit ideal) and passes
/// with the flag set.
KRReport check_kr_hypotheses(const Permutation& w, Cell corner, const TermOrder& base = TermOrder::row_lex(),
                             std::size_t budget = kDefaultBudget);

}  // namespace cdg
