#include "cdg/combinatorics.hpp"

#include <algorithm>

#include "cdg/errors.hpp"

namespace cdg {

Diagram rothe_diagram(const Permutation& w) {
  const int n = w.size();
  const Permutation inv = w.inverse();
  std::vector<Cell> cells;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < w(i); ++j) {
      if (inv(j) > i) cells.push_back({i, j});
    }
  }
  return Diagram(n, std::move(cells));
}

int coxeter_length(const Permutation& w) {
  int count = 0;
  const auto v = w.images();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) ++count;
    }
  }
  return count;
}

RankMatrix rank_matrix(const Permutation& w) {
  const int n = w.size();
  std::vector<int> entries(static_cast<std::size_t>(n * n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int above = i > 1 ? entries[static_cast<std::size_t>((i - 2) * n + (j - 1))] : 0;
      entries[static_cast<std::size_t>((i - 1) * n + (j - 1))] = above + (w(i) <= j ? 1 : 0);
    }
  }
  return RankMatrix(n, n, std::move(entries));
}

Diagram essential_set(const Permutation& w) {
  const Diagram d = rothe_diagram(w);
  std::vector<Cell> ess;
  for (const Cell& c : d) {
    if (!d.contains({c.row + 1, c.col}) && !d.contains({c.row, c.col + 1})) ess.push_back(c);
  }
  return Diagram(w.size(), std::move(ess));
}

Diagram dominant_part(const Permutation& w) {
  const Diagram d = rothe_diagram(w);
  const RankMatrix r = rank_matrix(w);
  std::vector<Cell> dom;
  for (const Cell& c : d) {
    if (r.at(c.row, c.col) == 0) dom.push_back(c);
  }
  return Diagram(w.size(), std::move(dom));
}

std::vector<Cell> lower_outside_corners(const Permutation& w) {
  const Diagram ess = essential_set(w);
  std::vector<Cell> out;
  for (const Cell& c : ess) {
    const bool dominated = std::any_of(ess.begin(), ess.end(), [&](const Cell& e) {
      return e != c && e.row >= c.row && e.col >= c.col;
    });
    if (!dominated) out.push_back(c);
  }
  return out;
}

std::vector<Cell> strict_lower_outside_corners(const Permutation& w) {
  const Diagram ess = essential_set(w);
  std::vector<Cell> out;
  for (const Cell& c : ess) {
    const bool dominated =
        std::any_of(ess.begin(), ess.end(), [&](const Cell& e) { return c.strictly_northwest_of(e); });
    if (!dominated) out.push_back(c);
  }
  return out;
}

bool is_lower_outside_corner(const Permutation& w, const Cell& c) {
  const auto corners = lower_outside_corners(w);
  return std::find(corners.begin(), corners.end(), c) != corners.end();
}

namespace {

bool match_from(std::span<const int> w, std::span<const int> v, std::size_t depth, int start,
                std::vector<int>& chosen) {
  const std::size_t k = v.size();
  if (depth == k) return true;
  const int n = static_cast<int>(w.size());
  const int last_start = n - static_cast<int>(k - depth);
  for (int p = start; p <= last_start; ++p) {
    const int x = w[static_cast<std::size_t>(p)];
    bool ok = true;
    for (std::size_t t = 0; t < depth; ++t) {
      const bool w_less = w[static_cast<std::size_t>(chosen[t])] < x;
      const bool v_less = v[t] < v[depth];
      if (w_less != v_less) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(p);
    if (match_from(w, v, depth + 1, p + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> contains_pattern(const Permutation& w, const Permutation& v) {
  if (v.size() > w.size()) {
    throw PatternTooLong("pattern " + v.to_string() + " is longer than " + w.to_string());
  }
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(v.size()));
  if (!match_from(w.images(), v.images(), 0, 0, chosen)) return std::nullopt;
  for (int& p : chosen) ++p;
  return chosen;
}

const std::array<Permutation, 8>& forbidden_patterns() {
  static const std::array<Permutation, 8> patterns = {
      Permutation::parse("13254"),  Permutation::parse("21543"),  Permutation::parse("214635"),
      Permutation::parse("215364"), Permutation::parse("215634"), Permutation::parse("241635"),
      Permutation::parse("315264"), Permutation::parse("4261735"),
  };
  return patterns;
}

PatternScan avoids_all_eight(const Permutation& w) {
  PatternScan scan;
  for (const Permutation& p : forbidden_patterns()) {
    if (p.size() > w.size()) continue;
    if (contains_pattern(w, p)) {
      scan.avoids_all = false;
      scan.contained.push_back(p);
    }
  }
  return scan;
}

std::string_view to_string(ObstructionKind kind) {
  switch (kind) {
    case ObstructionKind::Type1:
      return "type1";
    case ObstructionKind::Type2:
      return "type2";
    case ObstructionKind::Type3:
      return "type3";
  }
  return "?";
}

namespace {

// Deepest dominant row in column j, 0 when the column has none.
int deepest_dominant_row(const Diagram& dom, int col) {
  int best = 0;
  for (const Cell& c : dom) {
    if (c.col == col) best = std::max(best, c.row);
  }
  return best;
}

int deepest_dominant_col(const Diagram& dom, int row) {
  int best = 0;
  for (const Cell& c : dom) {
    if (c.row == row) best = std::max(best, c.col);
  }
  return best;
}

std::vector<Cell> strictly_southeast(const std::vector<Cell>& cells, const Cell& anchor) {
  std::vector<Cell> out;
  for (const Cell& c : cells) {
    if (anchor.strictly_northwest_of(c)) out.push_back(c);
  }
  return out;
}

std::vector<Cell> intersect(const Diagram& a, const Diagram& b) {
  std::vector<Cell> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::optional<ObstructionWitness> obstruction(const Permutation& w, ObstructionKind kind) {
  const Diagram d = rothe_diagram(w);
  const Diagram ess = essential_set(w);
  const Diagram dom = dominant_part(w);

  switch (kind) {
    case ObstructionKind::Type1: {
      for (const Cell& anchor : intersect(dom, ess)) {
        const auto se = strictly_southeast(d.cells(), anchor);
        for (std::size_t a = 0; a < se.size(); ++a) {
          for (std::size_t b = a + 1; b < se.size(); ++b) {
            if (se[a].row != se[b].row && se[a].col != se[b].col) {
              return ObstructionWitness{kind, {anchor, se[a], se[b]}};
            }
          }
        }
      }
      return std::nullopt;
    }
    case ObstructionKind::Type2: {
      for (const Cell& anchor : intersect(dom, ess)) {
        const auto se = strictly_southeast(ess.cells(), anchor);
        for (std::size_t a = 0; a < se.size(); ++a) {
          for (std::size_t b = a + 1; b < se.size(); ++b) {
            const Cell& p = se[a];
            const Cell& q = se[b];
            if (p.row == q.row &&
                deepest_dominant_row(dom, p.col) == deepest_dominant_row(dom, q.col)) {
              return ObstructionWitness{kind, {anchor, p, q}};
            }
            if (p.col == q.col &&
                deepest_dominant_col(dom, p.row) == deepest_dominant_col(dom, q.row)) {
              return ObstructionWitness{kind, {anchor, p, q}};
            }
          }
        }
      }
      return std::nullopt;
    }
    case ObstructionKind::Type3: {
      std::vector<Cell> free_ess;
      std::set_difference(ess.begin(), ess.end(), dom.begin(), dom.end(),
                          std::back_inserter(free_ess));
      for (const Cell& p : free_ess) {
        for (const Cell& q : free_ess) {
          if (p.strictly_northwest_of(q)) return ObstructionWitness{kind, {p, q}};
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool is_young_shape(const Diagram& d) {
  for (const Cell& c : d) {
    if (c.row > 1 && !d.contains({c.row - 1, c.col})) return false;
    if (c.col > 1 && !d.contains({c.row, c.col - 1})) return false;
  }
  return true;
}

}  // namespace cdg
