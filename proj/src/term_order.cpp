#include "cdg/term_order.hpp"

#include <charconv>
#include <random>

#include "cdg/errors.hpp"

namespace cdg {

namespace {

std::array<std::uint8_t, kMaxVars> sequence_from(int (*slot)(int row, int col)) {
  std::array<std::uint8_t, kMaxVars> seq{};
  std::size_t k = 0;
  for (int a = 1; a <= kMaxGrid; ++a) {
    for (int b = 1; b <= kMaxGrid; ++b) seq[k++] = static_cast<std::uint8_t>(slot(a, b));
  }
  return seq;
}

}  // namespace

TermOrder TermOrder::row_lex() {
  TermOrder o;
  o.kind_ = Kind::RowLex;
  o.spec_ = "rowlex";
  o.row_major_ = true;
  o.sequence_ = sequence_from([](int a, int b) { return Variable{a, b}.index(); });
  return o;
}

TermOrder TermOrder::col_lex() {
  TermOrder o;
  o.kind_ = Kind::ColLex;
  o.spec_ = "collex";
  o.row_major_ = false;
  o.sequence_ = sequence_from([](int a, int b) { return Variable{b, a}.index(); });
  return o;
}

TermOrder TermOrder::anti_diagonal_lex() {
  TermOrder o;
  o.kind_ = Kind::AntiDiagonalLex;
  o.spec_ = "antidiag";
  o.row_major_ = false;
  o.sequence_ = sequence_from([](int a, int b) { return Variable{a, kMaxGrid + 1 - b}.index(); });
  return o;
}

TermOrder TermOrder::weighted(const std::array<int, kMaxVars>& weights, std::string label) {
  for (int w : weights) {
    if (w < 0) throw Error("weighted order requires nonnegative weights");
  }
  TermOrder o = row_lex();
  o.kind_ = Kind::Weighted;
  o.spec_ = "weighted:" + std::move(label);
  o.has_weights_ = true;
  o.weights_ = weights;
  return o;
}

TermOrder TermOrder::random_diagonal_weighted(std::uint64_t seed, int n) {
  if (n < 1 || n > kMaxGrid) throw GridTooLarge("weighted order grid size out of range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> step(1, 4);
  std::uniform_int_distribution<int> shift(0, 9);
  // f and g strictly decreasing, so f(i)g(j) is strictly supermodular.
  std::array<int, kMaxGrid + 1> f{};
  std::array<int, kMaxGrid + 1> g{};
  for (int i = n; i >= 1; --i) {
    f[static_cast<std::size_t>(i)] = (i == n ? 0 : f[static_cast<std::size_t>(i + 1)]) + step(rng);
    g[static_cast<std::size_t>(i)] = (i == n ? 0 : g[static_cast<std::size_t>(i + 1)]) + step(rng);
  }
  std::array<int, kMaxGrid + 1> row_shift{};
  std::array<int, kMaxGrid + 1> col_shift{};
  for (int i = 1; i <= n; ++i) {
    row_shift[static_cast<std::size_t>(i)] = shift(rng);
    col_shift[static_cast<std::size_t>(i)] = shift(rng);
  }
  std::array<int, kMaxVars> weights{};
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      weights[static_cast<std::size_t>(Variable{i, j}.index())] =
          f[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)] +
          row_shift[static_cast<std::size_t>(i)] + col_shift[static_cast<std::size_t>(j)];
    }
  }
  TermOrder o = weighted(weights, std::to_string(seed));
  if (n != kMaxGrid) o.spec_ += "/" + std::to_string(n);
  return o;
}

TermOrder TermOrder::y_compatible(Variable y, const TermOrder& base) {
  if (y.row < 1 || y.col < 1 || y.row > kMaxGrid || y.col > kMaxGrid) {
    throw GridTooLarge("y variable outside the supported grid");
  }
  TermOrder o = base;
  o.kind_ = Kind::YCompatible;
  o.spec_ = "ycompat(" + std::to_string(y.row) + "," + std::to_string(y.col) + "):" + base.spec_;
  o.y_priority_.insert(o.y_priority_.begin(), y.index());
  return o;
}

std::optional<Variable> TermOrder::y() const {
  if (y_priority_.empty()) return std::nullopt;
  return Variable::from_index(y_priority_.back());
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error("bad " + std::string(what) + " '" + std::string(s) + "' in term order spec");
  }
  return v;
}

}  // namespace

TermOrder TermOrder::parse(std::string_view spec) {
  if (spec == "rowlex") return row_lex();
  if (spec == "collex") return col_lex();
  if (spec == "antidiag") return anti_diagonal_lex();
  if (spec.starts_with("weighted:")) {
    std::string_view rest = spec.substr(9);
    int n = kMaxGrid;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
      n = parse_int(rest.substr(slash + 1), "grid size");
      rest = rest.substr(0, slash);
    }
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), seed);
    if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size()) {
      throw Error("weighted order spec needs a numeric seed: '" + std::string(spec) + "'");
    }
    return random_diagonal_weighted(seed, n);
  }
  if (spec.starts_with("ycompat(")) {
    const auto close = spec.find(')');
    if (close == std::string_view::npos || close + 1 >= spec.size() || spec[close + 1] != ':') {
      throw Error("malformed y-compatible order spec '" + std::string(spec) + "'");
    }
    const std::string_view inner = spec.substr(8, close - 8);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw Error("y-compatible order needs i,j");
    const Variable y{parse_int(inner.substr(0, comma), "row"),
                     parse_int(inner.substr(comma + 1), "column")};
    return y_compatible(y, parse(spec.substr(close + 2)));
  }
  throw Error("unknown term order '" + std::string(spec) + "'");
}

}  // namespace cdg
