#pragma once

#include <span>
#include <string>
#include <vector>

#include "chernob/polynomial.hpp"

namespace chernob {

// A polynomial 1-form sum_m a_m dx_m, stored as its N coefficient
// polynomials (all sharing the same variable count).
class OneForm {
 public:
  explicit OneForm(std::vector<Polynomial> coefficients);

  static OneForm zero(int variable_count);
  // dx_{index}.
  static OneForm coordinate_differential(int variable_count, int index);

  int variable_count() const { return static_cast<int>(coefficients_.size()); }
  const Polynomial& coefficient(int index) const {
    return coefficients_[static_cast<std::size_t>(index)];
  }
  const std::vector<Polynomial>& coefficients() const { return coefficients_; }

  bool is_zero() const;
  // True when every coefficient is a constant (a 1-form with constant
  // coefficients, i.e. a linear function's differential).
  bool is_constant() const;

  OneForm operator+(const OneForm& other) const;
  OneForm operator*(const Rational& scalar) const;

  bool operator==(const OneForm& other) const = default;

 private:
  std::vector<Polynomial> coefficients_;
};

// The differential d p = sum_m (dp/dx_m) dx_m.
OneForm differential(const Polynomial& p);

// Scales a 1-form by a polynomial factor: (h * w)_m = h * w_m.
OneForm scale(const Polynomial& h, const OneForm& w);

std::string to_string(const OneForm& w, std::span<const std::string> variables);

}  // namespace chernob
