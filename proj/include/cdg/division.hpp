#pragma once

#include <cstddef>
#include <vector>

#include "cdg/polynomial.hpp"
#include "cdg/term_order.hpp"

namespace cdg {

/// Reduction steps allowed per verification task unless a caller says otherwise.
inline constexpr std::size_t kDefaultBudget = 1'000'000;

/// (L/LT(f)) f - (L/LT(g)) g with L the lcm of the lead monomials, both lead
/// terms normalized to coefficient 1 so that they cancel.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

struct Reduction {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;  // one per divisor
  std::size_t steps = 0;
};

/// f = sum cofactors[i] * divisors[i] + remainder, no term of the remainder
/// divisible by any divisor's lead monomial. Uses the first applicable divisor
/// against the current lead term at each step. Throws ZeroPolynomial for a
/// zero divisor and BudgetExceeded past `budget` steps.
Reduction reduce(const Polynomial& f, const std::vector<Polynomial>& divisors, const TermOrder& order,
                 std::size_t budget = kDefaultBudget);

/// True iff every square submatrix of the generic n x n matrix of size at
/// most kmax has its main-diagonal product as lead term.
bool is_diagonal_order(const TermOrder& order, int n, int kmax);

}  // namespace cdg
