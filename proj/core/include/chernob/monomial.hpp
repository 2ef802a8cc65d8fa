#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace chernob {

// A power product x_0^{e_0} * ... * x_{N-1}^{e_{N-1}} with the total
// degree cached. Immutable after construction.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);
  Monomial(std::initializer_list<std::uint32_t> exponents);

  static Monomial one(int variable_count);
  static Monomial variable(int variable_count, int index, std::uint32_t power = 1);

  int variable_count() const { return static_cast<int>(exponents_.size()); }
  std::uint32_t exponent(int index) const { return exponents_[static_cast<std::size_t>(index)]; }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  std::uint32_t total_degree() const { return total_degree_; }
  bool is_one() const { return total_degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Quotient this / other; requires other.divides(*this).
  Monomial divide_by(const Monomial& other) const;
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const = default;

  std::size_t hash() const;

 private:
  std::vector<std::uint32_t> exponents_;
  std::uint32_t total_degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace chernob
