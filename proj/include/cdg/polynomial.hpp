#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "cdg/monomial.hpp"
#include "cdg/term_order.hpp"

namespace cdg {

using Coefficient = mpq_class;

struct Term {
  Monomial monomial;
  Coefficient coefficient;
};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are stored once each, with nonzero coefficients, sorted descending
/// in row lex order. That storage order is an implementation detail: use
/// lead_term() / sorted_terms() with an explicit TermOrder.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial variable(Variable v);
  static Polynomial constant(const Coefficient& c);
  static Polynomial monomial(const Monomial& m, const Coefficient& c = 1);
  /// Combines like terms and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// Maximal term under `order`. Throws ZeroPolynomial for 0.
  const Term& lead_term(const TermOrder& order) const;
  const Monomial& lead_monomial(const TermOrder& order) const { return lead_term(order).monomial; }

  std::vector<Term> sorted_terms(const TermOrder& order) const;

  /// Total degree of the largest term; -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  int max_degree_in(Variable v) const noexcept;
  bool involves(Variable v) const noexcept { return max_degree_in(v) > 0; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }

  Polynomial scaled(const Coefficient& c, const Monomial& m) const;

  bool operator==(const Polynomial& other) const;

  /// Terms descending under `order`, e.g. "x[1,1]*x[2,2] - x[1,2]*x[2,1]".
  std::string to_string(const TermOrder& order = TermOrder::row_lex()) const;

 private:
  explicit Polynomial(std::vector<Term> sorted) : terms_(std::move(sorted)) {}

  std::vector<Term> terms_;
};

std::string coefficient_to_string(const Coefficient& c);

/// Renders terms in the given sequence order.
std::string format_terms(const std::vector<Term>& terms);

}  // namespace cdg
