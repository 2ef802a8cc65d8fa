#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "chernob/monomial.hpp"
#include "chernob/order.hpp"
#include "chernob/rational.hpp"

namespace chernob {

struct Term {
  Rational coefficient;
  Monomial monomial;
  bool operator==(const Term&) const = default;
};

// Multivariate polynomial with exact rational coefficients.
//
// Canonical form: no zero coefficients, pairwise distinct monomials,
// terms sorted strictly decreasing under GlobalDegRevLex. Equality is
// structural equality of the canonical form. Values are immutable after
// construction; every operation returns a fresh polynomial.
class Polynomial {
 public:
  explicit Polynomial(int variable_count = 0) : variable_count_(variable_count) {}

  static Polynomial zero(int variable_count) { return Polynomial(variable_count); }
  static Polynomial constant(int variable_count, Rational value);
  static Polynomial variable(int variable_count, int index);
  static Polynomial from_term(Rational coefficient, Monomial monomial);
  // Canonicalizes: merges duplicate monomials, drops zeros, sorts.
  static Polynomial from_terms(int variable_count, std::vector<Term> terms);

  int variable_count() const { return variable_count_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Max total degree over all monomials; -1 for the zero polynomial.
  int total_degree() const;

  // Leading term with respect to an arbitrary order view. The canonical
  // storage order makes the global case O(1); local orders scan.
  const Term& leading_term(MonomialOrder order) const;

  bool operator==(const Polynomial& other) const = default;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;

  friend Polynomial operator*(const Rational& scalar, const Polynomial& p) { return p * scalar; }

 private:
  int variable_count_;
  std::vector<Term> terms_;
};

// d p / d x_{variable_index}.
Polynomial differentiate(const Polynomial& p, int variable_index);

// Evaluation over complex doubles; exact on inputs whose intermediate
// values are representable without rounding.
std::complex<double> evaluate_complex(const Polynomial& p,
                                      std::span<const std::complex<double>> point);

// Substitutes x_i -> sum_j matrix[i][j] * y_j (an N x N rational matrix).
Polynomial compose_linear(const Polynomial& p,
                          const std::vector<std::vector<Rational>>& matrix);

// Re-homes p into a ring with more variables; existing variables keep
// their indices.
Polynomial extend_variables(const Polynomial& p, int new_variable_count);

// Canonical textual form; re-parses to an equal polynomial.
std::string to_string(const Polynomial& p, std::span<const std::string> variables);

}  // namespace chernob
