#include "chernob/oneform.hpp"

#include <sstream>
#include <stdexcept>

namespace chernob {

OneForm::OneForm(std::vector<Polynomial> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw std::invalid_argument("one-form needs at least one variable");
  for (const Polynomial& c : coefficients_) {
    if (c.variable_count() != variable_count()) {
      throw std::invalid_argument("one-form coefficients disagree on variable count");
    }
  }
}

OneForm OneForm::zero(int variable_count) {
  return OneForm(std::vector<Polynomial>(static_cast<std::size_t>(variable_count),
                                         Polynomial::zero(variable_count)));
}

OneForm OneForm::coordinate_differential(int variable_count, int index) {
  auto coeffs = std::vector<Polynomial>(static_cast<std::size_t>(variable_count),
                                        Polynomial::zero(variable_count));
  coeffs[static_cast<std::size_t>(index)] = Polynomial::constant(variable_count, 1);
  return OneForm(std::move(coeffs));
}

bool OneForm::is_zero() const {
  for (const Polynomial& c : coefficients_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool OneForm::is_constant() const {
  for (const Polynomial& c : coefficients_) {
    if (c.total_degree() > 0) return false;
  }
  return true;
}

OneForm OneForm::operator+(const OneForm& other) const {
  if (variable_count() != other.variable_count()) {
    throw std::invalid_argument("one-form addition across different rings");
  }
  std::vector<Polynomial> coeffs;
  coeffs.reserve(coefficients_.size());
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    coeffs.push_back(coefficients_[i] + other.coefficients_[i]);
  }
  return OneForm(std::move(coeffs));
}

OneForm OneForm::operator*(const Rational& scalar) const {
  std::vector<Polynomial> coeffs;
  coeffs.reserve(coefficients_.size());
  for (const Polynomial& c : coefficients_) coeffs.push_back(c * scalar);
  return OneForm(std::move(coeffs));
}

OneForm differential(const Polynomial& p) {
  std::vector<Polynomial> coeffs;
  coeffs.reserve(static_cast<std::size_t>(p.variable_count()));
  for (int m = 0; m < p.variable_count(); ++m) coeffs.push_back(differentiate(p, m));
  return OneForm(std::move(coeffs));
}

OneForm scale(const Polynomial& h, const OneForm& w) {
  std::vector<Polynomial> coeffs;
  coeffs.reserve(w.coefficients().size());
  for (const Polynomial& c : w.coefficients()) coeffs.push_back(h * c);
  return OneForm(std::move(coeffs));
}

std::string to_string(const OneForm& w, std::span<const std::string> variables) {
  if (w.is_zero()) {
    // A zero form still needs a grammatical rendering; 0*d<first var>.
    return "0*d" + std::string(variables.front());
  }
  std::ostringstream out;
  bool first = true;
  for (int m = 0; m < w.variable_count(); ++m) {
    const Polynomial& c = w.coefficient(m);
    if (c.is_zero()) continue;
    const std::string dvar = "d" + std::string(variables[static_cast<std::size_t>(m)]);
    if (c.term_count() == 1) {
      const Term& t = c.terms().front();
      const bool negative = t.coefficient < 0;
      if (first) {
        if (negative) out << "-";
      } else {
        out << (negative ? " - " : " + ");
      }
      const Rational mag = negative ? Rational(-t.coefficient) : t.coefficient;
      if (!(mag == 1)) out << to_string(mag) << "*";
      if (!t.monomial.is_one()) {
        out << to_string(Polynomial::from_term(Rational(1), t.monomial), variables) << "*";
      }
      out << dvar;
    } else {
      if (!first) out << " + ";
      out << "(" << to_string(c, variables) << ")*" << dvar;
    }
    first = false;
  }
  return out.str();
}

}  // namespace chernob
