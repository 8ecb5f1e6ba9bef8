#pragma once

// Diagram-level combinatorics of permutations: Rothe diagrams, rank
// functions, essential and dominant cells, lower outside corners, pattern
// containment, and the three diagram obstructions to the CDG property.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdg/permutation.hpp"

namespace cdg {

/// {(i,j) : w(i) > j and w^{-1}(j) > i}.
Diagram rothe_diagram(const Permutation& w);

/// Inversion count.
int coxeter_length(const Permutation& w);

/// entry(i,j) = |{k <= i : w(k) <= j}|.
RankMatrix rank_matrix(const Permutation& w);

/// Cells of D_w whose south and east neighbours are both outside D_w.
Diagram essential_set(const Permutation& w);

/// Cells of D_w with rank zero. Always a Young diagram anchored at (1,1).
Diagram dominant_part(const Permutation& w);

/// Essential cells that are maximal in the componentwise (southeast) order:
/// no other essential cell (i',j') has i' >= i and j' >= j. This is the
/// reading under which deleting the corner from D_w yields the diagram of
/// another permutation (see delete_corner_permutation).
std::vector<Cell> lower_outside_corners(const Permutation& w);

/// Essential cells with no essential cell strictly southeast. Kept for
/// comparison; this literal reading admits corners whose deletion does not
/// produce a Rothe diagram.
std::vector<Cell> strict_lower_outside_corners(const Permutation& w);

bool is_lower_outside_corner(const Permutation& w, const Cell& c);

/// Lexicographically least increasing position sequence (1-indexed) of w
/// whose values are order-isomorphic to v, or nullopt if w avoids v.
/// Throws PatternTooLong if |v| > |w|.
std::optional<std::vector<int>> contains_pattern(const Permutation& w, const Permutation& v);

/// 13254, 21543, 214635, 215364, 215634, 241635, 315264, 4261735.
const std::array<Permutation, 8>& forbidden_patterns();

struct PatternScan {
  bool avoids_all = true;
  std::vector<Permutation> contained;  // in forbidden_patterns() order
};

/// Patterns longer than w are skipped (w cannot contain them).
PatternScan avoids_all_eight(const Permutation& w);

enum class ObstructionKind { Type1 = 1, Type2 = 2, Type3 = 3 };

std::string_view to_string(ObstructionKind kind);

struct ObstructionWitness {
  ObstructionKind kind = ObstructionKind::Type1;
  /// Type1: (r,s), (i,j), (i',j').  Type2: (r,s) followed by the two
  /// essential cells sharing a row or a column.  Type3: (i,j), (i',j').
  std::vector<Cell> cells;

  bool operator==(const ObstructionWitness&) const = default;
};

/// First witness in lexicographic search order, or nullopt.
///
/// Type 2 treats "the deepest dominant cell of column j" as 0 when column j
/// holds no dominant cell (likewise for rows), so two such columns compare
/// equal. Type 3 looks for two cells of Ess(w) \ Dom(w), the second strictly
/// southeast of the first.
std::optional<ObstructionWitness> obstruction(const Permutation& w, ObstructionKind kind);

/// True when every cell of the diagram has all of its northwest cells present.
bool is_young_shape(const Diagram& d);

}  // namespace cdg
