#include "cdg/polynomial.hpp"

#include <algorithm>

#include "cdg/errors.hpp"

namespace cdg {

namespace {

bool rowlex_desc(const Term& a, const Term& b) { return a.monomial.lex_compare(b.monomial) > 0; }

// Merge two rowlex-descending term lists into a + sign * b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int c = 0;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = a[i].monomial.lex_compare(b[j].monomial);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = b[j++];
      if (sign < 0) t.coefficient = -t.coefficient;
      out.push_back(std::move(t));
    } else {
      Coefficient sum = sign < 0 ? Coefficient(a[i].coefficient - b[j].coefficient)
                                 : Coefficient(a[i].coefficient + b[j].coefficient);
      if (sum != 0) out.push_back({a[i].monomial, std::move(sum)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::variable(Variable v) { return monomial(Monomial(v), 1); }

Polynomial Polynomial::constant(const Coefficient& c) { return monomial(Monomial(), c); }

Polynomial Polynomial::monomial(const Monomial& m, const Coefficient& c) {
  if (c == 0) return {};
  return Polynomial(std::vector<Term>{{m, c}});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), rowlex_desc);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient == 0) out.pop_back();
  return Polynomial(std::move(out));
}

const Term& Polynomial::lead_term(const TermOrder& order) const {
  if (terms_.empty()) throw ZeroPolynomial("lead term of the zero polynomial");
  const Term* best = &terms_.front();
  for (const Term& t : terms_) {
    if (order.greater(t.monomial, best->monomial)) best = &t;
  }
  return *best;
}

std::vector<Term> Polynomial::sorted_terms(const TermOrder& order) const {
  std::vector<Term> out = terms_;
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  return out;
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.monomial.degree() == terms_.front().monomial.degree();
  });
}

int Polynomial::max_degree_in(Variable v) const noexcept {
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.exponent(v));
  return d;
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coefficient = -t.coefficient;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  return Polynomial(merge(terms_, other.terms_, 1));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return Polynomial(merge(terms_, other.terms_, -1));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  std::vector<Term> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : other.terms_) {
      products.push_back({a.monomial * b.monomial, a.coefficient * b.coefficient});
    }
  }
  return from_terms(std::move(products));
}

Polynomial Polynomial::scaled(const Coefficient& c, const Monomial& m) const {
  if (c == 0) return {};
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplying by a monomial preserves the row lex order.
  for (const Term& t : terms_) out.push_back({t.monomial * m, t.coefficient * c});
  return Polynomial(std::move(out));
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == other.terms_[i].monomial) ||
        terms_[i].coefficient != other.terms_[i].coefficient) {
      return false;
    }
  }
  return true;
}

std::string coefficient_to_string(const Coefficient& c) { return c.get_str(); }

std::string format_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const Term& t = terms[k];
    const bool negative = sgn(t.coefficient) < 0;
    const Coefficient magnitude = negative ? Coefficient(-t.coefficient) : t.coefficient;
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      out += coefficient_to_string(magnitude);
    } else {
      if (magnitude != 1) out += coefficient_to_string(magnitude) + "*";
      out += t.monomial.to_string();
    }
  }
  return out;
}

std::string Polynomial::to_string(const TermOrder& order) const {
  return format_terms(sorted_terms(order));
}

}  // namespace cdg
