#include "cdg/groebner.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <deque>
#include <limits>
#include <mutex>
#include <thread>

#include "cdg/detail/reducer.hpp"
#include "cdg/errors.hpp"

namespace cdg {

namespace {

using detail::TermList;
using Clock = std::chrono::steady_clock;

struct PairIndex {
  std::size_t a;
  std::size_t b;
};

std::vector<PairIndex> all_pairs(std::size_t m) {
  std::vector<PairIndex> out;
  out.reserve(m * (m > 0 ? m - 1 : 0) / 2);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) out.push_back({a, b});
  }
  return out;
}

// Remainder of one S-pair; `skipped` when the product criterion applies.
struct PairOutcome {
  bool skipped = false;
  TermList s;
  TermList remainder;
};

TermList s_pair(const TermList& f, const TermList& g, const TermOrder& order) {
  const Monomial l = f.front().monomial.lcm(g.front().monomial);
  const Coefficient cf = Coefficient(1) / f.front().coefficient;
  const Coefficient cg = Coefficient(1) / g.front().coefficient;
  TermList scaled_f;
  scaled_f.reserve(f.size());
  const Monomial mf = l / f.front().monomial;
  for (const Term& t : f) scaled_f.push_back({t.monomial * mf, t.coefficient * cf});
  // Lead terms cancel exactly; start past them.
  return detail::sub_scaled(scaled_f, 0, cg, l / g.front().monomial, g, order);
}

class PairChecker {
 public:
  PairChecker(const std::vector<TermList>& basis, const TermOrder& order, std::size_t budget,
              bool product_criterion)
      : basis_(basis), order_(order), reducer_(order, budget), product_(product_criterion) {
    for (const TermList& g : basis_) reducer_.add_divisor(&g);
  }

  PairOutcome check(PairIndex p) {
    const TermList& f = basis_[p.a];
    const TermList& g = basis_[p.b];
    PairOutcome out;
    if (product_ && f.front().monomial.coprime_with(g.front().monomial)) {
      out.skipped = true;
      return out;
    }
    out.s = s_pair(f, g, order_);
    out.remainder = reducer_.remainder(out.s);
    return out;
  }

  std::size_t steps() const noexcept { return reducer_.steps(); }
  void set_progress(std::size_t p) noexcept { reducer_.set_progress(p); }

 private:
  const std::vector<TermList>& basis_;
  const TermOrder& order_;
  detail::Reducer reducer_;
  bool product_;
};

}  // namespace

GroebnerReport is_groebner(const GeneratorSet& g, const TermOrder& order, const GroebnerOptions& options) {
  const auto start = Clock::now();
  const GeneratorSet canon = g.canonicalized(order);
  std::vector<TermList> basis;
  basis.reserve(canon.size());
  for (const Generator& gen : canon.generators()) basis.push_back(detail::sorted_under(gen.poly, order));

  GroebnerReport report;
  report.order = order.spec();
  const std::vector<PairIndex> pairs = all_pairs(basis.size());

  std::size_t fail_at = pairs.size();
  PairOutcome failure;
  std::vector<char> skipped(pairs.size(), 0);

  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(pairs.size())));
  if (jobs <= 1) {
    PairChecker checker(basis, order, options.budget, options.product_criterion);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      checker.set_progress(k);
      PairOutcome o = checker.check(pairs[k]);
      skipped[k] = o.skipped ? 1 : 0;
      if (!o.skipped && !o.remainder.empty()) {
        fail_at = k;
        failure = std::move(o);
        break;
      }
    }
    report.reduction_steps = checker.steps();
  } else {
    // Workers pull pair indices in order; the smallest failing index wins so
    // the verdict matches the sequential loop.
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{pairs.size()};
    std::atomic<std::size_t> steps{0};
    std::mutex mu;
    std::exception_ptr error;
    std::size_t error_at = pairs.size();
    {
      std::vector<std::jthread> workers;
      workers.reserve(jobs);
      for (unsigned t = 0; t < jobs; ++t) {
        workers.emplace_back([&] {
          PairChecker checker(basis, order, options.budget, options.product_criterion);
          for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= pairs.size() || k > best.load()) break;
            try {
              checker.set_progress(k);
              PairOutcome o = checker.check(pairs[k]);
              skipped[k] = o.skipped ? 1 : 0;
              if (!o.skipped && !o.remainder.empty()) {
                std::lock_guard lock(mu);
                if (k < best.load()) {
                  best.store(k);
                  failure = std::move(o);
                }
              }
            } catch (...) {
              std::lock_guard lock(mu);
              if (k < error_at) {
                error_at = k;
                error = std::current_exception();
              }
              break;
            }
          }
          steps.fetch_add(checker.steps());
        });
      }
    }
    fail_at = best.load();
    if (error && error_at < fail_at) std::rethrow_exception(error);
    report.reduction_steps = steps.load();
  }

  const std::size_t upto = std::min(fail_at + 1, pairs.size());
  for (std::size_t k = 0; k < upto; ++k) {
    if (skipped[k] != 0) {
      ++report.pairs_skipped;
    } else {
      ++report.pairs_checked;
    }
  }
  if (fail_at < pairs.size()) {
    const PairIndex p = pairs[fail_at];
    SPairVerdict v;
    v.first_index = p.a;
    v.second_index = p.b;
    v.first = canon[p.a].label;
    v.second = canon[p.b].label;
    v.s_polynomial = Polynomial::from_terms(std::move(failure.s));
    v.remainder = Polynomial::from_terms(std::move(failure.remainder));
    report.is_groebner = false;
    report.failing_pair = std::move(v);
  }
  report.elapsed = Clock::now() - start;
  return report;
}

GeneratorSet buchberger_complete(const GeneratorSet& g, const TermOrder& order, const CompletionOptions& options) {
  // Stable storage: the reducer keeps pointers into the basis.
  std::deque<TermList> basis;
  detail::Reducer reducer(order, options.budget);

  struct Pending {
    std::size_t i;
    std::size_t j;
    int degree;
  };
  std::vector<Pending> queue;
  std::vector<std::vector<char>> pending;  // pending[j][i] for i < j

  auto add = [&](TermList p) {
    detail::make_monic(p);
    const std::size_t j = basis.size();
    basis.push_back(std::move(p));
    reducer.add_divisor(&basis.back());
    pending.emplace_back(j, 0);
    for (std::size_t i = 0; i < j; ++i) {
      const int deg = basis[i].front().monomial.lcm(basis[j].front().monomial).degree();
      queue.push_back({i, j, deg});
      pending[j][i] = 1;
    }
  };
  auto is_pending = [&](std::size_t x, std::size_t y) {
    return x < y ? pending[y][x] != 0 : pending[x][y] != 0;
  };

  const GeneratorSet input = g.canonicalized(order);
  for (const Generator& gen : input.generators()) {
    TermList p = reducer.remainder(detail::sorted_under(gen.poly, order));
    if (!p.empty()) add(std::move(p));
  }

  std::size_t processed = 0;
  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), [](const Pending& a, const Pending& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    const Pending p = *it;
    *it = queue.back();
    queue.pop_back();
    pending[p.j][p.i] = 0;
    reducer.set_progress(++processed);

    const Monomial& li = basis[p.i].front().monomial;
    const Monomial& lj = basis[p.j].front().monomial;
    if (li.coprime_with(lj)) continue;
    if (options.chain_criterion) {
      const Monomial l = li.lcm(lj);
      bool chained = false;
      for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
        if (k == p.i || k == p.j) continue;
        chained = basis[k].front().monomial.divides(l) && !is_pending(p.i, k) && !is_pending(p.j, k);
      }
      if (chained) continue;
    }
    TermList h = reducer.remainder(s_pair(basis[p.i], basis[p.j], order));
    if (!h.empty()) add(std::move(h));
  }

  // Minimalize, then tail-reduce each survivor by the others.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      const Monomial& lk = basis[k].front().monomial;
      const Monomial& li = basis[i].front().monomial;
      if (lk.divides(li)) redundant = !(lk == li) || k < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Generator> out;
  out.reserve(keep.size());
  for (std::size_t idx = 0; idx < keep.size(); ++idx) {
    detail::Reducer tail(order, options.budget);
    for (std::size_t k : keep) {
      if (k != keep[idx]) tail.add_divisor(&basis[k]);
    }
    const TermList& gi = basis[keep[idx]];
    TermList rest(gi.begin() + 1, gi.end());
    TermList reduced = tail.remainder(std::move(rest));
    reduced.insert(reduced.begin(), gi.front());
    out.push_back({Polynomial::from_terms(std::move(reduced)), GeneratorLabel::derived("")});
  }
  GeneratorSet result(GeneratorStyle::Derived, std::move(out));
  result.canonicalize(order);
  std::vector<Generator> labeled = result.generators();
  for (std::size_t k = 0; k < labeled.size(); ++k) labeled[k].label = GeneratorLabel::derived("gb" + std::to_string(k + 1));
  return {GeneratorStyle::Derived, std::move(labeled)};
}

bool ideal_member(const Polynomial& f, const GeneratorSet& g, const TermOrder& order, std::size_t budget) {
  if (f.is_zero()) return true;
  const GeneratorSet gb = buchberger_complete(g, order, {budget, true});
  std::vector<TermList> lists;
  lists.reserve(gb.size());
  for (const Generator& gen : gb.generators()) lists.push_back(detail::sorted_under(gen.poly, order));
  detail::Reducer reducer(order, budget);
  for (const TermList& l : lists) reducer.add_divisor(&l);
  return reducer.reduces_to_zero(detail::sorted_under(f, order));
}

bool ideals_equal(const GeneratorSet& a, const GeneratorSet& b, const TermOrder& order, std::size_t budget) {
  auto contained = [&](const GeneratorSet& small, const GeneratorSet& big) {
    const GeneratorSet gb = buchberger_complete(big, order, {budget, true});
    std::vector<TermList> lists;
    for (const Generator& gen : gb.generators()) lists.push_back(detail::sorted_under(gen.poly, order));
    detail::Reducer reducer(order, budget);
    for (const TermList& l : lists) reducer.add_divisor(&l);
    for (const Generator& gen : small.generators()) {
      if (gen.poly.is_zero()) continue;
      if (!reducer.reduces_to_zero(detail::sorted_under(gen.poly, order))) return false;
    }
    return true;
  };
  return contained(a, b) && contained(b, a);
}

std::vector<Monomial> initial_ideal(const GeneratorSet& g, const TermOrder& order, InitialIdealMode mode,
                                    std::size_t budget) {
  GeneratorSet basis;
  if (mode == InitialIdealMode::RequireGroebner) {
    GroebnerOptions opts;
    opts.budget = budget;
    if (!is_groebner(g, order, opts).is_groebner) {
      throw NotGroebner("generating set is not a Gröbner basis under " + order.spec());
    }
    basis = g;
  } else {
    basis = buchberger_complete(g, order, {budget, true});
  }
  std::vector<Monomial> leads;
  for (const Generator& gen : basis.generators()) {
    if (!gen.poly.is_zero()) leads.push_back(gen.poly.lead_monomial(order));
  }
  std::sort(leads.begin(), leads.end(), [](const Monomial& a, const Monomial& b) { return a.lex_compare(b) > 0; });
  leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
  std::vector<Monomial> minimal;
  for (const Monomial& m : leads) {
    const bool redundant = std::any_of(leads.begin(), leads.end(),
                                       [&](const Monomial& o) { return !(o == m) && o.divides(m); });
    if (!redundant) minimal.push_back(m);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
  return minimal;
}

namespace {

class HittingSet {
 public:
  explicit HittingSet(std::vector<std::uint64_t> sets) : sets_(std::move(sets)) {}

  int solve() {
    best_ = greedy();
    search(0, 0, 0);
    return best_;
  }

 private:
  int greedy() const {
    std::uint64_t chosen = 0;
    int count = 0;
    for (;;) {
      std::array<int, 64> freq{};
      bool open = false;
      for (std::uint64_t s : sets_) {
        if ((s & chosen) != 0) continue;
        open = true;
        for (std::uint64_t r = s; r != 0; r &= r - 1) ++freq[static_cast<std::size_t>(std::countr_zero(r))];
      }
      if (!open) return count;
      const auto pick = std::max_element(freq.begin(), freq.end()) - freq.begin();
      chosen |= std::uint64_t{1} << pick;
      ++count;
    }
  }

  // Disjoint unhit sets each need their own variable.
  int packing_bound(std::uint64_t chosen) const {
    std::uint64_t used = 0;
    int bound = 0;
    for (std::uint64_t s : sets_) {
      if ((s & chosen) != 0 || (s & used) != 0) continue;
      used |= s;
      ++bound;
    }
    return bound;
  }

  void search(std::uint64_t chosen, std::uint64_t excluded, int count) {
    if (count >= best_) return;
    const std::uint64_t* target = nullptr;
    int target_size = std::numeric_limits<int>::max();
    for (const std::uint64_t& s : sets_) {
      if ((s & chosen) != 0) continue;
      const int free = std::popcount(s & ~excluded);
      if (free == 0) return;
      if (free < target_size) {
        target_size = free;
        target = &s;
      }
    }
    if (target == nullptr) {
      best_ = count;
      return;
    }
    if (count + packing_bound(chosen) >= best_) return;
    std::uint64_t branch_excluded = excluded;
    for (std::uint64_t r = *target & ~excluded; r != 0; r &= r - 1) {
      const std::uint64_t bit = r & (~r + 1);
      search(chosen | bit, branch_excluded, count + 1);
      branch_excluded |= bit;
    }
  }

  std::vector<std::uint64_t> sets_;
  int best_ = 0;
};

}  // namespace

int dimension_of_monomial_ideal(const std::vector<Monomial>& gens, int n_vars) {
  std::vector<std::uint64_t> supports;
  for (const Monomial& m : gens) {
    if (m.is_one()) return -1;
    supports.push_back(m.support());
  }
  std::sort(supports.begin(), supports.end(),
            [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t s : supports) {
    const bool covered = std::any_of(minimal.begin(), minimal.end(), [&](std::uint64_t t) { return (t & s) == t; });
    if (!covered) minimal.push_back(s);
  }
  if (minimal.empty()) return n_vars;
  return n_vars - HittingSet(std::move(minimal)).solve();
}

int quotient_dimension(const GeneratorSet& g, const TermOrder& order, int n_vars, std::size_t budget) {
  return dimension_of_monomial_ideal(initial_ideal(g, order, InitialIdealMode::CompleteIfNeeded, budget), n_vars);
}

}  // namespace cdg
