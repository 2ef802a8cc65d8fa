#include "chernob/monomial.hpp"

#include <cassert>
#include <numeric>

namespace chernob {

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exponents_(std::move(exponents)),
      total_degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0u)) {}

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents)
    : Monomial(std::vector<std::uint32_t>(exponents)) {}

Monomial Monomial::one(int variable_count) {
  return Monomial(std::vector<std::uint32_t>(static_cast<std::size_t>(variable_count), 0u));
}

Monomial Monomial::variable(int variable_count, int index, std::uint32_t power) {
  std::vector<std::uint32_t> e(static_cast<std::size_t>(variable_count), 0u);
  e[static_cast<std::size_t>(index)] = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  assert(variable_count() == other.variable_count());
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  assert(variable_count() == other.variable_count());
  std::vector<std::uint32_t> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponents_[i] + other.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::divide_by(const Monomial& other) const {
  assert(other.divides(*this));
  std::vector<std::uint32_t> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponents_[i] - other.exponents_[i];
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  assert(a.variable_count() == b.variable_count());
  std::vector<std::uint32_t> e(a.exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponents_[i], b.exponents_[i]);
  return Monomial(std::move(e));
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent vector.
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t e : exponents_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace chernob
