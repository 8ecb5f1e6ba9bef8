#include <doctest.h>

#include <random>

#include "cdg/combinatorics.hpp"
#include "cdg/errors.hpp"
#include "cdg/generators.hpp"
#include "cdg/groebner.hpp"
#include "oracles.hpp"

using namespace cdg;

namespace {

Polynomial x(int i, int j) { return Polynomial::variable({i, j}); }
Monomial m(int i, int j) { return Monomial(Variable{i, j}); }
Permutation P(const char* s) { return Permutation::parse(s); }

GeneratorSet set_of(std::vector<Polynomial> polys) {
  std::vector<Generator> gens;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    gens.push_back({std::move(polys[k]), GeneratorLabel::derived("f" + std::to_string(k + 1))});
  }
  return {GeneratorStyle::Derived, std::move(gens)};
}

const TermOrder kRowLex = TermOrder::row_lex();

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("verification fixtures") {
  CHECK(is_groebner(set_of({}), kRowLex).is_groebner);
  CHECK(is_groebner(set_of({x(1, 1), x(1, 2)}), kRowLex).is_groebner);
  CHECK(is_groebner(cdg_generators(P("315642")), kRowLex).is_groebner);

  const GroebnerReport bad = is_groebner(cdg_generators(P("13254")), kRowLex);
  CHECK_FALSE(bad.is_groebner);
  REQUIRE(bad.failing_pair.has_value());
  CHECK_FALSE(bad.failing_pair->remainder.is_zero());
  CHECK_FALSE(bad.failing_pair->skipped_by.has_value());
  CHECK(bad.order == "rowlex");
  CHECK(bad.pairs_checked >= 1);
}

TEST_CASE("failing remainder is a genuine normal form") {
  const GeneratorSet g = cdg_generators(P("21543")).canonicalized(kRowLex);
  const GroebnerReport rep = is_groebner(g, kRowLex);
  REQUIRE(rep.failing_pair.has_value());
  const auto& v = *rep.failing_pair;
  const Polynomial s = s_polynomial(g[v.first_index].poly, g[v.second_index].poly, kRowLex);
  CHECK(s == v.s_polynomial);
  CHECK(reduce(s, g.polynomials(), kRowLex).remainder == v.remainder);
  CHECK(ideal_member(v.remainder, g, kRowLex));
}

TEST_CASE("parallel pair checking reports the same first failure") {
  for (const char* w : {"13254", "21543", "214635"}) {
    const GeneratorSet g = cdg_generators(P(w));
    const GroebnerReport serial = is_groebner(g, kRowLex);
    GroebnerOptions par;
    par.jobs = 4;
    const GroebnerReport parallel = is_groebner(g, kRowLex, par);
    CHECK(serial.is_groebner == parallel.is_groebner);
    REQUIRE(serial.failing_pair.has_value());
    REQUIRE(parallel.failing_pair.has_value());
    CHECK(serial.failing_pair->first_index == parallel.failing_pair->first_index);
    CHECK(serial.failing_pair->second_index == parallel.failing_pair->second_index);
    CHECK(serial.failing_pair->remainder == parallel.failing_pair->remainder);
    CHECK(serial.pairs_checked == parallel.pairs_checked);
    CHECK(serial.pairs_skipped == parallel.pairs_skipped);
  }
}

TEST_CASE("completion fixtures") {
  const Polynomial minor2 = x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1);
  const GeneratorSet gb = buchberger_complete(set_of({minor2, x(1, 1)}), kRowLex);
  REQUIRE(gb.size() == 2);
  CHECK(gb[0].poly == x(1, 1));
  CHECK(gb[1].poly == x(1, 2) * x(2, 1));

  // Already Gröbner: completion returns the inter-reduced input.
  const GeneratorSet same = buchberger_complete(set_of({minor2}), kRowLex);
  REQUIRE(same.size() == 1);
  CHECK(same[0].poly == minor2);

  // 2143 is not vexillary: its Fulton generators are not a Gröbner basis and
  // the reduced basis replaces the 3-minor by its x[1,1]-free part.
  const GeneratorSet f2143 = fulton_generators(P("2143"));
  CHECK_FALSE(is_groebner(f2143, kRowLex).is_groebner);
  const GeneratorSet c2143 = buchberger_complete(f2143, kRowLex);
  CHECK(is_groebner(c2143, kRowLex).is_groebner);
  CHECK(ideals_equal(c2143, f2143, kRowLex));
  std::vector<Polynomial> in_polys = f2143.polynomials();
  std::vector<Polynomial> out_polys = c2143.polynomials();
  CHECK(in_polys != out_polys);

  CHECK_THROWS_AS(buchberger_complete(fulton_generators(P("21543")), kRowLex, {5, true}), BudgetExceeded);
}

TEST_CASE("membership and equality") {
  const GeneratorSet g = fulton_generators(P("315642"));
  for (const Generator& gen : g.generators()) CHECK(ideal_member(gen.poly, g, kRowLex));
  CHECK_FALSE(ideal_member(Polynomial::constant(1), g, kRowLex));
  CHECK(ideal_member(Polynomial(), g, kRowLex));
  CHECK(ideals_equal(g, g, kRowLex));
  CHECK_FALSE(ideals_equal(g, set_of({x(1, 1)}), kRowLex));
}

TEST_CASE("Fulton and CDG generate the same ideal, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      CHECK(ideals_equal(fulton_generators(w), cdg_generators(w), kRowLex));
      CHECK(ideals_equal(fulton_generators(w), rank_matrix_generators(rank_matrix(w)), kRowLex));
    }
  }
}

TEST_CASE("completion is Gröbner and criteria do not change verdicts") {
  GroebnerOptions no_product;
  no_product.product_criterion = false;
  for (int n = 3; n <= 4; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      const GeneratorSet f = fulton_generators(w);
      const GeneratorSet gb = buchberger_complete(f, kRowLex);
      CHECK(is_groebner(gb, kRowLex).is_groebner);
      CHECK(buchberger_complete(f, kRowLex, {kDefaultBudget, false}).polynomials() == gb.polynomials());
      CHECK(is_groebner(f, kRowLex).is_groebner == is_groebner(f, kRowLex, no_product).is_groebner);
    }
  }
  for (const char* w : {"13254", "21543", "31524", "25314", "42153"}) {
    const GeneratorSet c = cdg_generators(P(w));
    CHECK(is_groebner(c, kRowLex).is_groebner == is_groebner(c, kRowLex, no_product).is_groebner);
  }
}

TEST_CASE("initial ideals") {
  CHECK(initial_ideal(set_of({x(1, 1)}), kRowLex) == std::vector<Monomial>{m(1, 1)});
  const Polynomial minor2 = x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1);
  CHECK(initial_ideal(set_of({minor2}), kRowLex, InitialIdealMode::RequireGroebner) ==
        std::vector<Monomial>{m(1, 1) * m(2, 2)});
  CHECK_THROWS_AS(initial_ideal(cdg_generators(P("13254")), kRowLex, InitialIdealMode::RequireGroebner),
                  NotGroebner);
  for (const Monomial& lead : initial_ideal(cdg_generators(P("315642")), kRowLex)) CHECK(lead.is_squarefree());

  // Same ideal, different bases: same initial ideal.
  for (const Permutation& w : all_permutations(4)) {
    CHECK(initial_ideal(fulton_generators(w), kRowLex) == initial_ideal(cdg_generators(w), kRowLex));
  }
}

TEST_CASE("dimension of monomial ideals") {
  CHECK(dimension_of_monomial_ideal({}, 4) == 4);
  CHECK(dimension_of_monomial_ideal({m(1, 1)}, 4) == 3);
  CHECK(dimension_of_monomial_ideal({Monomial()}, 4) == -1);
  CHECK(dimension_of_monomial_ideal({m(1, 1) * m(1, 1), m(1, 1) * m(2, 2)}, 4) == 3);
  CHECK(quotient_dimension(cdg_generators(P("315642")), kRowLex, 36) == 29);

  std::mt19937 rng(31);
  std::uniform_int_distribution<int> cell(1, 4);
  std::uniform_int_distribution<int> count(0, 8);
  std::uniform_int_distribution<int> deg(1, 3);
  std::uint64_t universe = 0;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) universe |= std::uint64_t{1} << Variable{i, j}.index();
  }
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Monomial> gens;
    std::vector<std::uint64_t> supports;
    for (int k = count(rng); k > 0; --k) {
      Monomial mono;
      for (int d = deg(rng); d > 0; --d) mono = mono * m(cell(rng), cell(rng));
      gens.push_back(mono);
      supports.push_back(mono.support());
    }
    CHECK(dimension_of_monomial_ideal(gens, 16) == oracle::independent_dimension(supports, universe));
  }
}

TEST_CASE("height equals length, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      CHECK(n * n - quotient_dimension(fulton_generators(w), kRowLex, n * n) == coxeter_length(w));
    }
  }
}

}  // TEST_SUITE
