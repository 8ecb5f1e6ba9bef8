#include <doctest.h>

#include <set>

#include "cdg/combinatorics.hpp"
#include "cdg/errors.hpp"
#include "cdg/generators.hpp"
#include "cdg/minors.hpp"

using namespace cdg;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

// Polynomials up to sign, as normalized strings.
std::set<std::string> poly_keys(const GeneratorSet& g) {
  std::set<std::string> out;
  for (const Generator& gen : g.generators()) {
    const Polynomial& p = gen.poly;
    out.insert(sgn(p.terms().front().coefficient) < 0 ? (-p).to_string() : p.to_string());
  }
  return out;
}

std::set<std::string> labels(const GeneratorSet& g) {
  std::set<std::string> out;
  for (const Generator& gen : g.generators()) out.insert(gen.label.to_string());
  return out;
}

}  // namespace

TEST_SUITE("idealgen") {

TEST_CASE("Fulton generators of 315642") {
  const GeneratorSet f = fulton_generators(P("315642"));
  // x11, x12, the ten 2-minors of the 5x2 block, the sixteen 3-minors of the 4x4 block.
  CHECK(f.size() == 2 + 10 + 16);
  CHECK(labels(f).contains("x(1,1)") == false);  // Fulton labels are 1-minors at (1,2)
  CHECK(labels(f).contains("m(1,2):1[1|1]"));
  CHECK(labels(f).contains("m(1,2):1[1|2]"));
  CHECK(labels(f).contains("m(5,2):2[1,2|1,2]"));
  CHECK(labels(f).contains("m(4,4):3[2,3,4|1,2,4]"));
  for (const Generator& g : f.generators()) CHECK(g.poly.degree() == g.label.size);
}

TEST_CASE("CDG generators of 315642") {
  const GeneratorSet c = cdg_generators(P("315642"));
  CHECK(c.size() == 24);
  int deg1 = 0;
  int deg2 = 0;
  int deg3 = 0;
  for (const Generator& g : c.generators()) {
    CHECK(g.poly.is_homogeneous());
    deg1 += g.poly.degree() == 1 ? 1 : 0;
    deg2 += g.poly.degree() == 2 ? 1 : 0;
    deg3 += g.poly.degree() == 3 ? 1 : 0;
  }
  CHECK(deg1 == 2);
  CHECK(deg2 == 6);
  CHECK(deg3 == 16);
  CHECK(labels(c).contains("x(1,1)"));
  CHECK(labels(c).contains("x(1,2)"));
  // Canonical order: degree ascending.
  for (std::size_t k = 1; k < c.size(); ++k) CHECK(c[k - 1].poly.degree() <= c[k].poly.degree());
}

TEST_CASE("identity and small cases") {
  CHECK(fulton_generators(Permutation::identity(5)).empty());
  CHECK(cdg_generators(Permutation::identity(5)).empty());
  CHECK(naive_generators(Permutation::identity(5)).empty());
  const GeneratorSet n21 = naive_generators(P("21"));
  REQUIRE(n21.size() == 1);
  CHECK(n21[0].poly == Polynomial::variable({1, 1}));
  CHECK_THROWS_AS(cdg_generators(P("123456789")), GridTooLarge);
}

TEST_CASE("naive generators contain Fulton generators") {
  for (const char* w : {"315642", "21543", "2143"}) {
    const auto naive = poly_keys(naive_generators(P(w)));
    for (const std::string& k : poly_keys(fulton_generators(P(w)))) CHECK(naive.contains(k));
  }
}

TEST_CASE("Dom empty iff w(1) = 1 iff CDG equals Fulton") {
  for (int n = 1; n <= 5; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      const GeneratorSet f = fulton_generators(w);
      const GeneratorSet c = cdg_generators(w);
      const bool same = labels(f) == labels(c) && poly_keys(f) == poly_keys(c);
      CHECK(dominant_part(w).empty() == (w(1) == 1));
      CHECK(same == (w(1) == 1));
    }
  }
}

TEST_CASE("degrees follow the rank conditions") {
  for (int n = 2; n <= 5; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      const RankMatrix r = rank_matrix(w);
      const Diagram dom = dominant_part(w);
      const GeneratorSet c = cdg_generators(w);
      for (const Generator& g : c.generators()) {
        if (g.label.kind == GeneratorLabel::Kind::Variable) {
          CHECK(dom.contains(g.label.source));
          CHECK(g.poly.degree() == 1);
        } else {
          CHECK(g.poly.is_homogeneous());
          CHECK(g.poly.degree() == r.at(g.label.source.row, g.label.source.col) + 1);
        }
      }
    }
  }
}

TEST_CASE("rank matrix generators") {
  const RankMatrix n1(4, 3, {0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2});
  const GeneratorSet g1 = rank_matrix_generators(n1);
  CHECK(labels(g1).contains("x(1,1)"));
  bool has_two_minor = false;
  for (const Generator& g : g1.generators()) has_two_minor = has_two_minor || g.poly.degree() == 2;
  CHECK(has_two_minor);

  const RankMatrix n2(3, 3, {1, 1, 2, 1, 1, 2, 2, 2, 2});
  const GeneratorSet g2 = rank_matrix_generators(n2);
  std::set<int> degrees;
  for (const Generator& g : g2.generators()) degrees.insert(g.poly.degree());
  CHECK(degrees == std::set<int>{2, 3});
  CHECK(g2.size() == 2);

  const RankMatrix saturated = rank_matrix(Permutation::identity(4));
  CHECK(rank_matrix_generators(saturated).empty());
  CHECK(poly_keys(rank_matrix_generators(rank_matrix(P("21")))) == std::set<std::string>{"x[1,1]"});
}

TEST_CASE("duplicates merge up to sign") {
  const Polynomial p = Polynomial::variable({1, 1}) * Polynomial::variable({2, 2});
  GeneratorSet g(GeneratorStyle::Derived,
                 {{p, GeneratorLabel::derived("b")}, {-p, GeneratorLabel::derived("a")}, {Polynomial(), GeneratorLabel::derived("z")}});
  g.canonicalize(TermOrder::row_lex());
  REQUIRE(g.size() == 1);
  CHECK(g[0].label.to_string() == "a");
}

}  // TEST_SUITE
