#include "cdg/gvd.hpp"

#include <algorithm>

#include "cdg/combinatorics.hpp"
#include "cdg/detail/reducer.hpp"
#include "cdg/errors.hpp"
#include "cdg/groebner.hpp"

namespace cdg {

namespace {

void require_corner(const Permutation& w, Cell corner) {
  if (!is_lower_outside_corner(w, corner)) {
    throw NotLowerOutsideCorner(corner.to_string() + " is not a lower outside corner of " + w.to_string());
  }
}

int height(const GeneratorSet& g, const TermOrder& order, int n_vars, std::size_t budget) {
  return n_vars - quotient_dimension(g, order, n_vars, budget);
}

std::string describe_failure(const GroebnerReport& rep) {
  if (!rep.failing_pair) return {};
  const SPairVerdict& v = *rep.failing_pair;
  return "S(" + v.first.to_string() + ", " + v.second.to_string() + ") -> " + v.remainder.to_string();
}

}  // namespace

GeneratorSet Split::n_generators() const { return {GeneratorStyle::Derived, h_list}; }

GeneratorSet Split::c_generators() const {
  std::vector<Generator> gens;
  gens.reserve(pairs.size() + h_list.size());
  for (const SplitPair& p : pairs) gens.push_back({p.q, p.label});
  gens.insert(gens.end(), h_list.begin(), h_list.end());
  return {GeneratorStyle::Derived, std::move(gens)};
}

Split split_generators(const GeneratorSet& g, Cell corner) {
  Split s;
  s.corner = corner;
  s.y = Variable{corner.row, corner.col};
  const Monomial y(s.y);
  for (const Generator& gen : g.generators()) {
    const int deg = gen.poly.max_degree_in(s.y);
    if (deg > 1) {
      throw YDegreeTooHigh("generator " + gen.label.to_string() + " has degree " + std::to_string(deg) + " in " +
                           s.y.to_string());
    }
    if (deg == 0) {
      s.h_list.push_back(gen);
      continue;
    }
    std::vector<Term> q;
    std::vector<Term> r;
    for (const Term& t : gen.poly.terms()) {
      if (t.monomial.exponent(s.y) > 0) {
        q.push_back({t.monomial / y, t.coefficient});
      } else {
        r.push_back(t);
      }
    }
    s.pairs.push_back({Polynomial::from_terms(std::move(q)), Polynomial::from_terms(std::move(r)), gen.label});
  }
  return s;
}

Split split_on_corner(const Permutation& w, Cell corner, const TermOrder& order) {
  require_corner(w, corner);
  return split_generators(cdg_generators(w, order), corner);
}

Permutation delete_corner_permutation(const Permutation& w, Cell corner) {
  require_corner(w, corner);
  std::vector<int> images(w.images().begin(), w.images().end());
  const int k = w.position_of(corner.col);
  images[static_cast<std::size_t>(k - 1)] = w(corner.row);
  images[static_cast<std::size_t>(corner.row - 1)] = corner.col;
  return Permutation(std::move(images));
}

QIdeal q_ideal(const Permutation& w, Cell corner, const TermOrder& order) {
  require_corner(w, corner);
  const Diagram dom = dominant_part(w);
  const Diagram ess = essential_set(w);
  const int i = corner.row;
  const int j = corner.col;

  QIdeal out;
  out.rank = rank_matrix(w).at(i, j);
  int deepest_row = 0;
  int deepest_col = 0;
  for (const Cell& c : dom) {
    if (c.col == j) deepest_row = std::max(deepest_row, c.row);
    if (c.row == i) deepest_col = std::max(deepest_col, c.col);
  }
  out.m1 = i - deepest_row;
  out.m2 = j - deepest_col;
  out.maximal_minors = out.rank + 1 == std::min(out.m1, out.m2);

  const Split s = split_on_corner(w, corner, order);
  std::vector<Generator> gens;
  for (const SplitPair& p : s.pairs) gens.push_back({p.q, p.label});
  if (!out.maximal_minors) {
    std::vector<Cell> sources;
    for (const Cell& e : ess) {
      if (e != corner && (e.row == i || e.col == j)) sources.push_back(e);
    }
    for (const Generator& h : s.h_list) {
      const Cell src = h.label.source;
      const bool from_source = std::any_of(sources.begin(), sources.end(), [&](const Cell& e) {
        if (h.label.kind == GeneratorLabel::Kind::Minor) return src == e;
        // Dominant variables belong to a dominant essential cell southeast of them.
        return h.label.kind == GeneratorLabel::Kind::Variable && dom.contains(e) && src.row <= e.row &&
               src.col <= e.col;
      });
      if (from_source) gens.push_back(h);
    }
  }
  out.generators = GeneratorSet(GeneratorStyle::Derived, std::move(gens));
  out.generators.canonicalize(order);
  return out;
}

std::vector<Polynomial> two_minor_polys(const Split& s) {
  std::vector<Polynomial> out;
  for (std::size_t a = 0; a < s.pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < s.pairs.size(); ++b) {
      out.push_back(s.pairs[a].q * s.pairs[b].r - s.pairs[b].q * s.pairs[a].r);
    }
  }
  return out;
}

KRReport check_kr_hypotheses(const Permutation& w, Cell corner, const TermOrder& base, std::size_t budget) {
  require_corner(w, corner);
  const Variable y{corner.row, corner.col};
  const TermOrder order = TermOrder::y_compatible(y, base);

  KRReport rep;
  rep.permutation = w.to_string();
  rep.corner = corner;
  rep.order = order.spec();

  const GeneratorSet gens = cdg_generators(w, order);
  const Split s = split_generators(gens, corner);
  rep.pairs = s.pairs.size();
  rep.h_count = s.h_list.size();

  rep.order_y_compatible = order.kind() == TermOrder::Kind::YCompatible && order.y() == y;
  for (const Generator& g : gens.generators()) {
    if (g.poly.involves(y)) {
      rep.order_y_compatible =
          rep.order_y_compatible && g.poly.lead_monomial(order).exponent(y) == g.poly.max_degree_in(y);
    }
  }

  if (dominant_part(w).contains(corner)) {
    rep.degenerate = true;
    rep.c_groebner = rep.n_groebner = rep.two_minors_in_N = rep.heights_ok = true;
    return rep;
  }

  GroebnerOptions opts;
  opts.budget = budget;
  const GeneratorSet c = s.c_generators();
  const GeneratorSet n = s.n_generators();
  const GroebnerReport c_rep = is_groebner(c, order, opts);
  const GroebnerReport n_rep = is_groebner(n, order, opts);
  rep.c_groebner = c_rep.is_groebner;
  rep.n_groebner = n_rep.is_groebner;
  rep.c_failure = describe_failure(c_rep);
  rep.n_failure = describe_failure(n_rep);

  const std::vector<Polynomial> minors = two_minor_polys(s);
  rep.two_minor_count = minors.size();
  rep.two_minors_in_N = true;
  {
    const GeneratorSet n_gb = buchberger_complete(n, order, {budget, true});
    std::vector<detail::TermList> lists;
    lists.reserve(n_gb.size());
    for (const Generator& g : n_gb.generators()) lists.push_back(detail::sorted_under(g.poly, order));
    detail::Reducer reducer(order, budget);
    for (const auto& l : lists) reducer.add_divisor(&l);
    for (const Polynomial& f : minors) {
      if (f.is_zero()) continue;
      if (!reducer.reduces_to_zero(detail::sorted_under(f, order))) {
        rep.two_minors_in_N = false;
        rep.two_minor_witness = f.to_string(order);
        break;
      }
    }
  }

  const int n_vars = w.size() * w.size();
  rep.height_I = height(gens, order, n_vars, budget);
  rep.height_C = height(c, order, n_vars, budget);
  rep.height_N = height(n, order, n_vars, budget);
  rep.heights_ok = rep.height_I > rep.height_N && rep.height_C > rep.height_N;
  return rep;
}

}  // namespace cdg
