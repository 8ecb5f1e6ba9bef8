#pragma once

// Classification of permutations and the exhaustive verification harness:
// sweeps comparing CDG-Gröbner verdicts with pattern avoidance, the
// diagram-level and decomposition-level property suites, and the bundled
// rank-matrix fixtures.

#include <array>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cdg/combinatorics.hpp"
#include "cdg/division.hpp"
#include "cdg/groebner.hpp"
#include "cdg/term_order.hpp"

namespace cdg {

struct OrderVerdict {
  std::string order;
  /// Empty when the check did not finish (see error).
  std::optional<bool> is_groebner;
  std::optional<std::string> error;
  std::string failing_pair;  // "label | label", empty on success
  std::string remainder;
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped = 0;
  double elapsed_ms = 0;
};

struct ClassificationRecord {
  Permutation w;
  std::vector<Permutation> patterns_contained;
  bool avoids_all = true;
  std::array<std::optional<ObstructionWitness>, 3> obstructions;
  std::vector<OrderVerdict> verdicts;
  /// Every finished verdict equals avoids_all.
  bool agreement = true;
  bool has_error = false;
  double elapsed_ms = 0;

  /// True when every order finished and found a Gröbner basis.
  bool cdg() const;
};

ClassificationRecord classify(const Permutation& w, const std::vector<TermOrder>& orders,
                              std::size_t budget = kDefaultBudget);

enum class SweepFilter { All, ContainsPattern, AvoidsAll };

struct SweepConfig {
  int n = 4;
  std::vector<std::string> orders{"rowlex"};
  unsigned jobs = 1;
  std::size_t budget = kDefaultBudget;
  SweepFilter filter = SweepFilter::All;
  /// Explicit permutations; overrides the enumeration of S_n.
  std::vector<Permutation> permutations;
  /// Required to enumerate all of S_n for n >= 6.
  bool allow_full = false;
  bool timing = true;
};

struct SweepSummary {
  std::size_t total = 0;
  std::size_t cdg = 0;
  std::size_t non_cdg = 0;
  std::size_t disagreements = 0;
  std::size_t errors = 0;
  std::vector<std::string> non_cdg_list;
  std::vector<std::string> disagreement_list;
  double elapsed_ms = 0;

  bool ok() const noexcept { return disagreements == 0 && errors == 0; }
};

/// Direct sums id_a + p + id_b of each forbidden pattern p filling S_7,
/// plus 4261735, sorted.
std::vector<Permutation> default_s7_list();

/// The permutations a sweep visits, in output order. Throws Error when the
/// configuration asks for a gated enumeration.
std::vector<Permutation> sweep_permutations(const SweepConfig& cfg);

/// Classifies in parallel; records are written to `out` (if given) as one
/// JSON object per line, in permutation order, between a header line and a
/// summary line.
SweepSummary sweep(const SweepConfig& cfg, std::ostream* out = nullptr);

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<std::string> witnesses;  // first few violations
  std::vector<std::string> notes;

  bool ok() const noexcept { return violations == 0; }
};

struct LemmaOptions {
  /// Largest n for the decomposition suites (ideal computations).
  int gvd_max_n = 5;
  std::vector<std::string> base_orders{"rowlex", "collex"};
  std::size_t budget = kDefaultBudget;
  unsigned jobs = 1;
};

/// Diagram-level suites for every S_m, m <= n:
///   obstruction-type1 / -type2 / -type3: each obstruction forces one of
///     its pattern list; avoidance-excludes-obstructions.
/// Decomposition suites for m <= min(n, gvd_max_n), every lower outside
/// corner of every nonempty diagram:
///   deletion-ideal: N equals the Schubert ideal of w' (and D_w' = D_w - y),
///   new-essential-cells: Ess(w') - Ess(w) within {(i-1,j), (i,j-1)},
///   deletion-preserves-avoidance, link-hypotheses (CDG w only),
///   q-ideal (some corner of each CDG w has Q Gröbner),
///   height-equals-length (CDG w).
std::vector<SuiteResult> verify_lemmas(int n, const LemmaOptions& options = {});

struct FixtureResult {
  std::string name;
  RankMatrix matrix;
  std::size_t generator_count = 0;
  GroebnerReport report;
};

/// Loads N1.txt and N2.txt from `dir` and checks their generators under
/// rowlex. Throws Error if a file is missing.
std::vector<FixtureResult> verify_rank_fixtures(const std::filesystem::path& dir);

}  // namespace cdg
