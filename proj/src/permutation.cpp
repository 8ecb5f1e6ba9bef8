#include "cdg/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cdg/errors.hpp"

namespace cdg {

std::string Cell::to_string() const {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  if (n == 0) throw InvalidPermutation("permutation must have at least one entry");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n) {
      throw InvalidPermutation("value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw InvalidPermutation("value " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty()) throw InvalidPermutation("empty permutation text");

  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw InvalidPermutation("unexpected character '" + std::string(1, c) +
                                 "' in digit-string permutation");
      }
      values.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string_view field = text.substr(pos, next - pos);
      while (!field.empty() && is_space(field.front())) field.remove_prefix(1);
      while (!field.empty() && is_space(field.back())) field.remove_suffix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
        throw InvalidPermutation("bad entry '" + std::string(field) + "'");
      }
      values.push_back(value);
      pos = next + 1;
    }
  }
  return Permutation(std::move(values));
}

int Permutation::position_of(int value) const {
  auto it = std::find(images_.begin(), images_.end(), value);
  if (it == images_.end()) throw InvalidPermutation("value not in permutation");
  return static_cast<int>(it - images_.begin()) + 1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  const bool digits = size() <= 9;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << w.to_string(); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Diagram::Diagram(int n, std::vector<Cell> cells) : n_(n), cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  for (const Cell& c : cells_) {
    if (c.row < 1 || c.col < 1 || c.row > n_ || c.col > n_) {
      throw ShapeMismatch("cell " + c.to_string() + " outside the " + std::to_string(n_) + "x" +
                          std::to_string(n_) + " grid");
    }
  }
}

bool Diagram::contains(const Cell& c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

Diagram Diagram::transposed() const {
  std::vector<Cell> t;
  t.reserve(cells_.size());
  for (const Cell& c : cells_) t.push_back(c.transposed());
  return Diagram(n_, std::move(t));
}

std::string Diagram::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i > 0) out += ",";
    out += cells_[i].to_string();
  }
  return out + "}";
}

RankMatrix::RankMatrix(int rows, int cols, std::vector<int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ < 1 || cols_ < 1) throw MalformedRankMatrix("rank matrix must be nonempty");
  if (entries_.size() != static_cast<std::size_t>(rows_ * cols_)) {
    throw MalformedRankMatrix("entry count does not match shape");
  }
  for (int i = 1; i <= rows_; ++i) {
    for (int j = 1; j <= cols_; ++j) {
      const int v = at(i, j);
      if (v < 0) throw MalformedRankMatrix("negative entry at " + Cell{i, j}.to_string());
      if (j > 1) {
        const int d = v - at(i, j - 1);
        if (d < 0 || d > 1) {
          throw MalformedRankMatrix("row step at " + Cell{i, j}.to_string() + " is not 0 or 1");
        }
      }
      if (i > 1) {
        const int d = v - at(i - 1, j);
        if (d < 0 || d > 1) {
          throw MalformedRankMatrix("column step at " + Cell{i, j}.to_string() +
                                    " is not 0 or 1");
        }
      }
    }
  }
}

RankMatrix RankMatrix::parse(std::istream& in) {
  std::vector<int> entries;
  int rows = 0;
  int cols = -1;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw MalformedRankMatrix("bad token '" + tok + "'");
      }
      row.push_back(v);
    }
    if (cols < 0) cols = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols) throw MalformedRankMatrix("ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
    ++rows;
  }
  if (rows == 0) throw MalformedRankMatrix("no rows");
  return RankMatrix(rows, cols, std::move(entries));
}

RankMatrix RankMatrix::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open rank matrix file '" + path + "'");
  return parse(in);
}

std::string RankMatrix::to_string() const {
  std::string out;
  for (int i = 1; i <= rows_; ++i) {
    for (int j = 1; j <= cols_; ++j) {
      if (j > 1) out += ' ';
      out += std::to_string(at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace cdg
