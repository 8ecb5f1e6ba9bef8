#pragma once

// Buchberger machinery: S-pair verification of a given generating set,
// completion to a reduced Gröbner basis, ideal membership and equality,
// initial ideals, and the Krull dimension of a monomial ideal.

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cdg/division.hpp"
#include "cdg/generators.hpp"
#include "cdg/monomial.hpp"
#include "cdg/polynomial.hpp"
#include "cdg/term_order.hpp"

namespace cdg {

enum class SkipReason { ProductCriterion };

struct SPairVerdict {
  std::size_t first_index = 0;
  std::size_t second_index = 0;
  GeneratorLabel first;
  GeneratorLabel second;
  std::optional<SkipReason> skipped_by;
  Polynomial s_polynomial;
  /// Zero iff the pair passes.
  Polynomial remainder;
};

struct GroebnerOptions {
  bool product_criterion = true;
  std::size_t budget = kDefaultBudget;
  /// Worker threads for the pair loop. Each worker gets its own budget.
  unsigned jobs = 1;
};

struct GroebnerReport {
  bool is_groebner = true;
  std::string order;
  /// The first failing pair in (a, b) lexicographic pair order.
  std::optional<SPairVerdict> failing_pair;
  /// Pairs up to and including the failing pair (all pairs on success).
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped = 0;
  std::size_t reduction_steps = 0;
  std::chrono::duration<double, std::milli> elapsed{0};
};

/// Checks Buchberger's criterion on G as given (G is re-sorted canonically
/// for `order` first so that the failing pair is reproducible).
GroebnerReport is_groebner(const GeneratorSet& g, const TermOrder& order, const GroebnerOptions& options = {});

struct CompletionOptions {
  std::size_t budget = kDefaultBudget;
  bool chain_criterion = true;
};

/// Reduced (monic, inter-reduced) Gröbner basis of the ideal generated by G.
/// Pairs are processed smallest lcm degree first, ties by index. Throws
/// BudgetExceeded with the number of pairs processed.
GeneratorSet buchberger_complete(const GeneratorSet& g, const TermOrder& order,
                                 const CompletionOptions& options = {});

bool ideal_member(const Polynomial& f, const GeneratorSet& g, const TermOrder& order,
                  std::size_t budget = kDefaultBudget);

/// Mutual membership of every generator, through completed bases of both.
bool ideals_equal(const GeneratorSet& a, const GeneratorSet& b, const TermOrder& order,
                  std::size_t budget = kDefaultBudget);

enum class InitialIdealMode { RequireGroebner, CompleteIfNeeded };

/// Minimal monomial generators of the lead-term ideal, sorted descending in
/// `order`. Throws NotGroebner in RequireGroebner mode when G fails the check.
std::vector<Monomial> initial_ideal(const GeneratorSet& g, const TermOrder& order,
                                    InitialIdealMode mode = InitialIdealMode::CompleteIfNeeded,
                                    std::size_t budget = kDefaultBudget);

/// Krull dimension of k[vars]/M for a monomial ideal M in `n_vars`
/// variables: n_vars minus the size of a minimum set of variables meeting
/// every generator's support (exponents dropped). Returns -1 for the unit
/// ideal. Exact branch and bound.
int dimension_of_monomial_ideal(const std::vector<Monomial>& gens, int n_vars);

/// Krull dimension of the quotient by the ideal generated by G, through its
/// initial ideal.
int quotient_dimension(const GeneratorSet& g, const TermOrder& order, int n_vars,
                       std::size_t budget = kDefaultBudget);

}  // namespace cdg
