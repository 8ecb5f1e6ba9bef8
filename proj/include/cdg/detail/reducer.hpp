#pragma once

// Division machinery shared by the polynomial and Gröbner layers. Works on
// term lists kept sorted descending under one fixed TermOrder.

#include <cstddef>
#include <vector>

#include "cdg/polynomial.hpp"
#include "cdg/term_order.hpp"

namespace cdg::detail {

using TermList = std::vector<Term>;

TermList sorted_under(const Polynomial& p, const TermOrder& order);

/// p - c * m * g for descending lists p and g.
TermList sub_scaled(const TermList& p, std::size_t p_begin, const Coefficient& c, const Monomial& m,
                    const TermList& g, const TermOrder& order);

/// Multiplies every coefficient so the lead coefficient becomes 1.
void make_monic(TermList& p);

/// Deterministic division: at every step the current lead term of the
/// working polynomial is divided by the first divisor (in list order) whose
/// lead monomial divides it; otherwise the lead term moves to the remainder.
class Reducer {
 public:
  Reducer(const TermOrder& order, std::size_t budget) : order_(order), budget_(budget) {}

  const TermOrder& order() const noexcept { return order_; }

  /// Divisors must be nonempty, sorted under order(), and outlive the reducer.
  void add_divisor(const TermList* g);
  std::size_t divisor_count() const noexcept { return divisors_.size(); }

  /// Index of the first divisor whose lead monomial divides m, or -1.
  int find_divisor(const Monomial& m) const noexcept;

  /// Full reduction. When `cofactors` is given it is resized to the divisor
  /// count and receives the quotient terms (unsorted, possibly repeated).
  TermList remainder(TermList p, std::vector<TermList>* cofactors = nullptr);

  /// Top reduction only: true when p reduces to zero.
  bool reduces_to_zero(TermList p);

  std::size_t steps() const noexcept { return steps_; }
  std::size_t budget() const noexcept { return budget_; }
  /// Progress figure reported with BudgetExceeded.
  void set_progress(std::size_t progress) noexcept { progress_ = progress; }

 private:
  void charge_step();

  struct Divisor {
    const TermList* poly;
    Monomial lead;
  };

  const TermOrder& order_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  std::size_t progress_ = 0;
  std::vector<Divisor> divisors_;
};

}  // namespace cdg::detail
