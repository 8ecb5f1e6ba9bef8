#include "cdg/monomial.hpp"

#include <algorithm>

#include "cdg/errors.hpp"

namespace cdg {

std::string Variable::to_string() const {
  return "x[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

Monomial::Monomial(Variable v, int exponent) {
  if (v.row < 1 || v.col < 1 || v.row > kMaxGrid || v.col > kMaxGrid) {
    throw GridTooLarge("variable " + v.to_string() + " outside the supported " +
                       std::to_string(kMaxGrid) + "x" + std::to_string(kMaxGrid) + " grid");
  }
  if (exponent > 0) {
    exps_[static_cast<std::size_t>(v.index())] = static_cast<std::uint8_t>(exponent);
    support_ = std::uint64_t{1} << v.index();
    degree_ = exponent;
  }
}

void Monomial::refresh() noexcept {
  support_ = 0;
  degree_ = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    const int e = exps_[static_cast<std::size_t>(i)];
    if (e != 0) {
      support_ |= std::uint64_t{1} << i;
      degree_ += e;
    }
  }
}

Monomial Monomial::operator*(const Monomial& other) const noexcept {
  Monomial out = *this;
  for (std::uint64_t bits = other.support_; bits != 0; bits &= bits - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(bits));
    out.exps_[i] = static_cast<std::uint8_t>(out.exps_[i] + other.exps_[i]);
  }
  out.support_ |= other.support_;
  out.degree_ += other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const noexcept {
  Monomial out = *this;
  for (std::uint64_t bits = other.support_; bits != 0; bits &= bits - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(bits));
    out.exps_[i] = static_cast<std::uint8_t>(out.exps_[i] - other.exps_[i]);
    if (out.exps_[i] == 0) out.support_ &= ~(std::uint64_t{1} << i);
  }
  out.degree_ -= other.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const noexcept {
  Monomial out = *this;
  for (std::uint64_t bits = other.support_; bits != 0; bits &= bits - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(bits));
    if (other.exps_[i] > out.exps_[i]) {
      out.degree_ += other.exps_[i] - out.exps_[i];
      out.exps_[i] = other.exps_[i];
    }
  }
  out.support_ |= other.support_;
  return out;
}

Monomial Monomial::without(Variable v) const noexcept {
  Monomial out = *this;
  const auto i = static_cast<std::size_t>(v.index());
  out.degree_ -= out.exps_[i];
  out.exps_[i] = 0;
  out.support_ &= ~(std::uint64_t{1} << i);
  return out;
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  for (std::uint64_t bits = support_; bits != 0; bits &= bits - 1) {
    const int i = std::countr_zero(bits);
    if (!out.empty()) out += '*';
    out += Variable::from_index(i).to_string();
    const int e = exps_[static_cast<std::size_t>(i)];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace cdg
