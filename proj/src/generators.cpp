#include "cdg/generators.hpp"

#include <algorithm>
#include <unordered_map>

#include "cdg/combinatorics.hpp"
#include "cdg/errors.hpp"
#include "cdg/minors.hpp"

namespace cdg {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

void check_grid(int n) {
  if (n > kMaxGrid) {
    throw GridTooLarge("ideal generators are limited to grids of size " + std::to_string(kMaxGrid));
  }
}

// All k-minors of the northwest i x j block of m, labeled by `source`.
void append_block_minors(MinorCache& cache, Cell source, int i, int j, int k,
                         std::vector<Generator>& out) {
  if (k < 1 || k > std::min(i, j)) return;
  const auto row_sets = index_subsets(i, k);
  const auto col_sets = index_subsets(j, k);
  for (const auto& rows : row_sets) {
    for (const auto& cols : col_sets) {
      const Polynomial& det = cache.minor(rows, cols);
      if (det.is_zero()) continue;
      out.push_back({det, GeneratorLabel::minor(source, rows, cols)});
    }
  }
}

GeneratorSet finish(GeneratorStyle style, std::vector<Generator> gens, const TermOrder& order) {
  GeneratorSet set(style, std::move(gens));
  set.canonicalize(order);
  return set;
}

}  // namespace

GeneratorLabel GeneratorLabel::variable(Cell c) {
  GeneratorLabel l;
  l.kind = Kind::Variable;
  l.source = c;
  l.size = 1;
  l.rows = {c.row};
  l.cols = {c.col};
  return l;
}

GeneratorLabel GeneratorLabel::minor(Cell source, std::vector<int> rows, std::vector<int> cols) {
  GeneratorLabel l;
  l.kind = Kind::Minor;
  l.source = source;
  l.size = static_cast<int>(rows.size());
  l.rows = std::move(rows);
  l.cols = std::move(cols);
  return l;
}

GeneratorLabel GeneratorLabel::derived(std::string note) {
  GeneratorLabel l;
  l.kind = Kind::Derived;
  l.note = std::move(note);
  return l;
}

std::string GeneratorLabel::to_string() const {
  switch (kind) {
    case Kind::Variable:
      return "x" + source.to_string();
    case Kind::Minor:
      return "m" + source.to_string() + ":" + std::to_string(size) + "[" + join(rows) + "|" +
             join(cols) + "]";
    case Kind::Derived:
      return note;
  }
  return note;
}

std::string_view to_string(GeneratorStyle style) {
  switch (style) {
    case GeneratorStyle::Naive:
      return "naive";
    case GeneratorStyle::Fulton:
      return "fulton";
    case GeneratorStyle::CDG:
      return "cdg";
    case GeneratorStyle::GeneralizedRank:
      return "rank";
    case GeneratorStyle::Derived:
      return "derived";
  }
  return "?";
}

std::vector<Polynomial> GeneratorSet::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(gens_.size());
  for (const Generator& g : gens_) out.push_back(g.poly);
  return out;
}

void GeneratorSet::canonicalize(const TermOrder& order) {
  std::erase_if(gens_, [](const Generator& g) { return g.poly.is_zero(); });

  // Merge duplicates up to sign, keeping the smallest label.
  std::sort(gens_.begin(), gens_.end(),
            [](const Generator& a, const Generator& b) { return a.label < b.label; });
  std::unordered_map<std::string, std::size_t> seen;
  std::vector<Generator> unique;
  unique.reserve(gens_.size());
  for (Generator& g : gens_) {
    const Polynomial& p = g.poly;
    const bool flip = sgn(p.terms().front().coefficient) < 0;
    const std::string key = flip ? (-p).to_string() : p.to_string();
    if (seen.emplace(key, unique.size()).second) unique.push_back(std::move(g));
  }
  gens_ = std::move(unique);

  struct Keyed {
    int degree;
    Monomial lead;
    std::size_t index;
  };
  std::vector<Keyed> keys;
  keys.reserve(gens_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    keys.push_back({gens_[i].poly.degree(), gens_[i].poly.lead_monomial(order), i});
  }
  std::sort(keys.begin(), keys.end(), [&](const Keyed& a, const Keyed& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    const auto c = order.compare(a.lead, b.lead);
    if (c != 0) return c > 0;
    return gens_[a.index].label < gens_[b.index].label;
  });
  std::vector<Generator> sorted;
  sorted.reserve(gens_.size());
  for (const Keyed& k : keys) sorted.push_back(std::move(gens_[k.index]));
  gens_ = std::move(sorted);
}

GeneratorSet GeneratorSet::canonicalized(const TermOrder& order) const {
  GeneratorSet copy = *this;
  copy.canonicalize(order);
  return copy;
}

GeneratorSet fulton_generators(const Permutation& w, const TermOrder& order) {
  check_grid(w.size());
  const RankMatrix rank = rank_matrix(w);
  const SymbolicMatrix x = SymbolicMatrix::generic(w.size(), w.size());
  MinorCache cache(x);
  std::vector<Generator> gens;
  for (const Cell& e : essential_set(w)) {
    append_block_minors(cache, e, e.row, e.col, rank.at(e.row, e.col) + 1, gens);
  }
  return finish(GeneratorStyle::Fulton, std::move(gens), order);
}

GeneratorSet cdg_generators(const Permutation& w, const TermOrder& order) {
  check_grid(w.size());
  const RankMatrix rank = rank_matrix(w);
  const Diagram dom = dominant_part(w);
  const SymbolicMatrix x = SymbolicMatrix::zeroed(w.size(), w.size(), dom.cells());
  MinorCache cache(x);
  std::vector<Generator> gens;
  for (const Cell& c : dom) {
    gens.push_back({Polynomial::variable({c.row, c.col}), GeneratorLabel::variable(c)});
  }
  for (const Cell& e : essential_set(w)) {
    if (dom.contains(e)) continue;
    append_block_minors(cache, e, e.row, e.col, rank.at(e.row, e.col) + 1, gens);
  }
  return finish(GeneratorStyle::CDG, std::move(gens), order);
}

GeneratorSet naive_generators(const Permutation& w, const TermOrder& order) {
  check_grid(w.size());
  const int n = w.size();
  const RankMatrix rank = rank_matrix(w);
  const SymbolicMatrix x = SymbolicMatrix::generic(n, n);
  MinorCache cache(x);
  std::vector<Generator> gens;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) append_block_minors(cache, {i, j}, i, j, rank.at(i, j) + 1, gens);
  }
  return finish(GeneratorStyle::Naive, std::move(gens), order);
}

GeneratorSet rank_matrix_generators(const RankMatrix& r, const TermOrder& order) {
  if (r.rows() > kMaxGrid || r.cols() > kMaxGrid) {
    throw GridTooLarge("rank matrix larger than the supported grid");
  }
  // Re-validate: a default-constructed or hand-built matrix may be empty.
  if (r.rows() < 1 || r.cols() < 1) throw MalformedRankMatrix("empty rank matrix");
  std::vector<Cell> dom;
  for (int i = 1; i <= r.rows(); ++i) {
    for (int j = 1; j <= r.cols(); ++j) {
      if (r.at(i, j) == 0) dom.push_back({i, j});
    }
  }
  const SymbolicMatrix x = SymbolicMatrix::zeroed(r.rows(), r.cols(), dom);
  MinorCache cache(x);
  std::vector<Generator> gens;
  for (const Cell& c : dom) {
    gens.push_back({Polynomial::variable({c.row, c.col}), GeneratorLabel::variable(c)});
  }
  for (int i = 1; i <= r.rows(); ++i) {
    for (int j = 1; j <= r.cols(); ++j) append_block_minors(cache, {i, j}, i, j, r.at(i, j) + 1, gens);
  }
  return finish(GeneratorStyle::GeneralizedRank, std::move(gens), order);
}

}  // namespace cdg
