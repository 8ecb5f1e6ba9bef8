#include <doctest.h>

#include <set>
#include <sstream>

#include "cdg/combinatorics.hpp"
#include "cdg/errors.hpp"
#include "cdg/permutation.hpp"
#include "oracles.hpp"

using namespace cdg;

namespace {

std::set<Cell> as_set(const Diagram& d) { return {d.begin(), d.end()}; }
std::set<Cell> as_set(const std::vector<Cell>& v) { return {v.begin(), v.end()}; }

Permutation P(const char* s) { return Permutation::parse(s); }

}  // namespace

TEST_SUITE("permcomb") {

TEST_CASE("parse and print") {
  const Permutation w = P("315642");
  CHECK(w.size() == 6);
  CHECK(w(1) == 3);
  CHECK(w(6) == 2);
  CHECK(w.to_string() == "315642");
  CHECK(w.inverse().to_string() == "261534");
  CHECK(P("1, 2 ,3").is_identity());
  CHECK(P("10,9,8,7,6,5,4,3,2,1").to_string() == "10,9,8,7,6,5,4,3,2,1");
  CHECK_THROWS_AS(P("1123"), InvalidPermutation);
  CHECK_THROWS_AS(P("124"), InvalidPermutation);
  CHECK_THROWS_AS(P(""), InvalidPermutation);
  CHECK_THROWS_AS(P("1a2"), InvalidPermutation);
  CHECK(all_permutations(4).size() == 24);
  CHECK(all_permutations(4).front().is_identity());
  CHECK(all_permutations(3).back().to_string() == "321");
}

TEST_CASE("golden 315642") {
  const Permutation w = P("315642");
  CHECK(as_set(rothe_diagram(w)) ==
        std::set<Cell>{{1, 1}, {1, 2}, {3, 2}, {3, 4}, {4, 2}, {4, 4}, {5, 2}});
  CHECK(coxeter_length(w) == 7);
  CHECK(as_set(essential_set(w)) == std::set<Cell>{{1, 2}, {4, 4}, {5, 2}});
  CHECK(as_set(dominant_part(w)) == std::set<Cell>{{1, 1}, {1, 2}});
  CHECK(as_set(lower_outside_corners(w)) == std::set<Cell>{{4, 4}, {5, 2}});
  CHECK(is_lower_outside_corner(w, {4, 4}));
  CHECK_FALSE(is_lower_outside_corner(w, {1, 2}));

  const RankMatrix expected(6, 6, {0, 0, 1, 1, 1, 1,  //
                                   1, 1, 2, 2, 2, 2,  //
                                   1, 1, 2, 2, 3, 3,  //
                                   1, 1, 2, 2, 3, 4,  //
                                   1, 1, 2, 3, 4, 5,  //
                                   1, 2, 3, 4, 5, 6});
  CHECK(rank_matrix(w) == expected);
}

TEST_CASE("small fixtures") {
  CHECK(rothe_diagram(P("21")).cells() == std::vector<Cell>{{1, 1}});
  CHECK(rothe_diagram(P("12345")).empty());
  CHECK(coxeter_length(P("4321")) == 6);
  CHECK(as_set(essential_set(P("21543"))) == std::set<Cell>{{1, 1}, {3, 4}, {4, 3}});
  const RankMatrix r21543(5, 5, {0, 1, 1, 1, 1,  //
                                 1, 2, 2, 2, 2,  //
                                 1, 2, 2, 2, 3,  //
                                 1, 2, 2, 3, 4,  //
                                 1, 2, 3, 4, 5});
  CHECK(rank_matrix(P("21543")) == r21543);
  const RankMatrix id = rank_matrix(Permutation::identity(5));
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) CHECK(id.at(i, j) == std::min(i, j));
  }
  CHECK(dominant_part(P("13254")).empty());
  CHECK(lower_outside_corners(Permutation::identity(4)).empty());
}

TEST_CASE("pattern containment") {
  const auto hit = contains_pattern(P("13254"), P("2143"));
  REQUIRE(hit.has_value());
  CHECK(*hit == std::vector<int>{2, 3, 4, 5});
  const Permutation w = P("13254");
  std::vector<int> values;
  for (int p : *hit) values.push_back(w(p));
  CHECK(values == std::vector<int>{3, 2, 5, 4});
  CHECK_FALSE(contains_pattern(P("13254"), P("3214")).has_value());
  CHECK(*contains_pattern(w, w) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK_THROWS_AS(contains_pattern(P("123"), P("1234")), PatternTooLong);

  for (const Permutation& v : all_permutations(4)) CHECK(avoids_all_eight(v).avoids_all);
  const PatternScan scan = avoids_all_eight(P("13254"));
  CHECK_FALSE(scan.avoids_all);
  CHECK(scan.contained == std::vector<Permutation>{P("13254")});
  CHECK(avoids_all_eight(P("315642")).avoids_all);
  CHECK(forbidden_patterns().size() == 8);
}

TEST_CASE("obstruction fixtures") {
  const auto t1 = obstruction(P("21543"), ObstructionKind::Type1);
  REQUIRE(t1.has_value());
  CHECK(t1->cells == std::vector<Cell>{{1, 1}, {3, 4}, {4, 3}});
  const auto t3 = obstruction(P("13254"), ObstructionKind::Type3);
  REQUIRE(t3.has_value());
  CHECK(t3->cells == std::vector<Cell>{{2, 2}, {4, 4}});
  for (auto kind : {ObstructionKind::Type1, ObstructionKind::Type2, ObstructionKind::Type3}) {
    CHECK_FALSE(obstruction(Permutation::identity(6), kind).has_value());
  }
  CHECK(rothe_diagram(P("315264")).transposed() == rothe_diagram(P("241635")));
}

TEST_CASE("rank matrix parsing") {
  std::istringstream ok("# N1\n0 1 1\n1 1 1\n\n2 2 2\n2 2 2\n");
  const RankMatrix n1 = RankMatrix::parse(ok);
  CHECK(n1.rows() == 4);
  CHECK(n1.cols() == 3);
  CHECK(n1.at(1, 1) == 0);
  std::istringstream ragged("0 1\n1 1 1\n");
  CHECK_THROWS_AS(RankMatrix::parse(ragged), MalformedRankMatrix);
  std::istringstream jump("0 2\n1 2\n");
  CHECK_THROWS_AS(RankMatrix::parse(jump), MalformedRankMatrix);
  CHECK_THROWS_AS(RankMatrix::load("/nonexistent/rank.txt"), Error);
}

TEST_CASE("properties against definitional oracles, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      const Diagram d = rothe_diagram(w);
      REQUIRE(as_set(d) == oracle::diagram(w));
      CHECK(coxeter_length(w) == oracle::inversions(w));
      CHECK(static_cast<int>(d.size()) == coxeter_length(w));
      CHECK(as_set(essential_set(w)) == oracle::essential(w));
      const Diagram dom = dominant_part(w);
      CHECK(as_set(dom) == oracle::dominant(w));
      CHECK(is_young_shape(dom));
      CHECK(dom.empty() == (w(1) == 1));
      const RankMatrix r = rank_matrix(w);
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) CHECK(r.at(i, j) == oracle::rank(w, i, j));
      }
      // Every lower outside corner is a maximal essential cell.
      for (const Cell& c : lower_outside_corners(w)) CHECK(oracle::essential(w).contains(c));
      CHECK(lower_outside_corners(w).empty() == d.empty());
    }
  }
}

TEST_CASE("pattern search agrees with subset enumeration") {
  const auto s4 = all_permutations(4);
  for (int n = 4; n <= 6; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      for (const Permutation& v : s4) {
        const auto hit = contains_pattern(w, v);
        REQUIRE(hit.has_value() == oracle::contains(w, v));
        if (hit) {
          std::vector<int> vals;
          for (int p : *hit) vals.push_back(w(p));
          for (std::size_t a = 0; a < vals.size(); ++a) {
            for (std::size_t b = 0; b < vals.size(); ++b) {
              CHECK((vals[a] < vals[b]) == (v(static_cast<int>(a) + 1) < v(static_cast<int>(b) + 1)));
            }
          }
        }
      }
      for (const Permutation& p : forbidden_patterns()) {
        if (p.size() <= n) CHECK(contains_pattern(w, p).has_value() == oracle::contains(w, p));
      }
    }
  }
}

}  // TEST_SUITE
