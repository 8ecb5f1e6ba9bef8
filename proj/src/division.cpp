#include "cdg/division.hpp"

#include <algorithm>

#include "cdg/detail/reducer.hpp"
#include "cdg/errors.hpp"
#include "cdg/minors.hpp"

namespace cdg {

namespace detail {

TermList sorted_under(const Polynomial& p, const TermOrder& order) { return p.sorted_terms(order); }

TermList sub_scaled(const TermList& p, std::size_t p_begin, const Coefficient& c, const Monomial& m,
                    const TermList& g, const TermOrder& order) {
  TermList out;
  out.reserve(p.size() - p_begin + g.size());
  std::size_t i = p_begin;
  std::size_t j = 0;
  Monomial gm;
  bool have_gm = false;
  while (i < p.size() || j < g.size()) {
    if (j < g.size() && !have_gm) {
      gm = g[j].monomial * m;
      have_gm = true;
    }
    std::strong_ordering cmp = std::strong_ordering::equal;
    if (i == p.size()) {
      cmp = std::strong_ordering::less;
    } else if (j == g.size()) {
      cmp = std::strong_ordering::greater;
    } else {
      cmp = order.compare(p[i].monomial, gm);
    }
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, -c * g[j].coefficient});
      ++j;
      have_gm = false;
    } else {
      Coefficient v = p[i].coefficient - c * g[j].coefficient;
      if (v != 0) out.push_back({p[i].monomial, std::move(v)});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  return out;
}

void make_monic(TermList& p) {
  if (p.empty() || p.front().coefficient == 1) return;
  const Coefficient inv = 1 / p.front().coefficient;
  for (Term& t : p) t.coefficient *= inv;
}

void Reducer::add_divisor(const TermList* g) {
  if (g->empty()) throw ZeroPolynomial("zero polynomial used as a divisor");
  divisors_.push_back({g, g->front().monomial});
}

int Reducer::find_divisor(const Monomial& m) const noexcept {
  for (std::size_t k = 0; k < divisors_.size(); ++k) {
    if (divisors_[k].lead.divides(m)) return static_cast<int>(k);
  }
  return -1;
}

void Reducer::charge_step() {
  if (++steps_ > budget_) {
    throw BudgetExceeded("reduction budget of " + std::to_string(budget_) + " steps exceeded",
                         steps_, progress_);
  }
}

TermList Reducer::remainder(TermList p, std::vector<TermList>* cofactors) {
  if (cofactors != nullptr) cofactors->assign(divisors_.size(), {});
  TermList rem;
  std::size_t start = 0;
  while (start < p.size()) {
    const Term& lt = p[start];
    const int k = find_divisor(lt.monomial);
    if (k < 0) {
      rem.push_back(std::move(p[start]));
      ++start;
      continue;
    }
    charge_step();
    const Divisor& d = divisors_[static_cast<std::size_t>(k)];
    const Coefficient c = lt.coefficient / d.poly->front().coefficient;
    const Monomial m = lt.monomial / d.lead;
    if (cofactors != nullptr) (*cofactors)[static_cast<std::size_t>(k)].push_back({m, c});
    p = sub_scaled(p, start, c, m, *d.poly, order_);
    start = 0;
  }
  return rem;
}

bool Reducer::reduces_to_zero(TermList p) {
  while (!p.empty()) {
    const int k = find_divisor(p.front().monomial);
    if (k < 0) return false;
    charge_step();
    const Divisor& d = divisors_[static_cast<std::size_t>(k)];
    const Coefficient c = p.front().coefficient / d.poly->front().coefficient;
    p = sub_scaled(p, 0, c, p.front().monomial / d.lead, *d.poly, order_);
  }
  return true;
}

}  // namespace detail

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("s-polynomial of a zero polynomial");
  const Term& lf = f.lead_term(order);
  const Term& lg = g.lead_term(order);
  const Monomial l = lf.monomial.lcm(lg.monomial);
  const Coefficient cf = 1 / lf.coefficient;
  const Coefficient cg = 1 / lg.coefficient;
  return f.scaled(cf, l / lf.monomial) - g.scaled(cg, l / lg.monomial);
}

Reduction reduce(const Polynomial& f, const std::vector<Polynomial>& divisors, const TermOrder& order,
                 std::size_t budget) {
  std::vector<detail::TermList> sorted;
  sorted.reserve(divisors.size());
  for (const Polynomial& g : divisors) {
    if (g.is_zero()) throw ZeroPolynomial("zero polynomial used as a divisor");
    sorted.push_back(detail::sorted_under(g, order));
  }
  detail::Reducer reducer(order, budget);
  for (const auto& g : sorted) reducer.add_divisor(&g);

  std::vector<detail::TermList> quotient_terms;
  detail::TermList rem = reducer.remainder(detail::sorted_under(f, order), &quotient_terms);

  Reduction out;
  out.remainder = Polynomial::from_terms(std::move(rem));
  out.cofactors.reserve(divisors.size());
  for (auto& q : quotient_terms) out.cofactors.push_back(Polynomial::from_terms(std::move(q)));
  out.steps = reducer.steps();
  return out;
}

bool is_diagonal_order(const TermOrder& order, int n, int kmax) {
  const SymbolicMatrix x = SymbolicMatrix::generic(n, n);
  MinorCache cache(x);
  for (int k = 1; k <= std::min(kmax, n); ++k) {
    const auto subsets = index_subsets(n, k);
    for (const auto& rows : subsets) {
      for (const auto& cols : subsets) {
        const Polynomial& det = cache.minor(rows, cols);
        Monomial diagonal;
        for (int t = 0; t < k; ++t) {
          diagonal = diagonal * Monomial(Variable{rows[static_cast<std::size_t>(t)],
                                                  cols[static_cast<std::size_t>(t)]});
        }
        const Term& lead = det.lead_term(order);
        if (!(lead.monomial == diagonal) || lead.coefficient != 1) return false;
      }
    }
  }
  return true;
}

}  // namespace cdg
